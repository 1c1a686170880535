#include "braids/word.hpp"

#include <cctype>

namespace braids {

namespace {

void check_word(int strands, const Letters& ls) {
  if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
  if (strands > kMaxStrands)
    throw std::invalid_argument("strand count must be <= " + std::to_string(kMaxStrands));
  for (char c : ls) {
    const int i = static_cast<unsigned char>(c);
    if (i < 1 || i > strands - 1)
      throw std::invalid_argument("generator index " + std::to_string(i) + " out of range [1," +
                                  std::to_string(strands - 1) + "]");
  }
}

}  // namespace

BraidWord::BraidWord(int n, Letters ls) : strands(n), letters(std::move(ls)) {
  check_word(strands, letters);
}

BraidWord::BraidWord(int n, std::initializer_list<int> ls) : strands(n) {
  letters.reserve(ls.size());
  for (int i : ls) letters.push_back(static_cast<char>(i));
  check_word(strands, letters);
}

std::vector<bool> letter_set(const BraidWord& w) {
  std::vector<bool> present(static_cast<std::size_t>(w.strands), false);
  for (char c : w.letters) present[static_cast<unsigned char>(c)] = true;
  return present;
}

BraidWord parse_word(std::string_view text) {
  std::size_t pos = 0;
  const auto at = [&] { return pos + 1; };  // 1-based position for messages
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto parse_uint = [&](const char* what) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw WordSyntaxError(at(), std::string("expected ") + what);
    long value = 0;
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > kMaxStrands)
        throw WordSyntaxError(start + 1, std::string(what) + " too large");
      ++pos;
    }
    return static_cast<int>(value);
  };

  skip_ws();
  const std::size_t n_pos = at();
  const int strands = parse_uint("strand count");
  if (strands < 1) throw WordSyntaxError(n_pos, "strand count must be >= 1");
  skip_ws();
  if (pos >= text.size() || text[pos] != ':')
    throw WordSyntaxError(at(), "expected ':' after strand count");
  ++pos;

  Letters ls;
  for (;;) {
    skip_ws();
    if (pos >= text.size()) break;
    const std::size_t l_pos = at();
    const int i = parse_uint("generator index");
    if (i < 1 || i > strands - 1)
      throw WordSyntaxError(l_pos, "generator index " + std::to_string(i) + " out of range [1," +
                                       std::to_string(strands - 1) + "]");
    ls.push_back(static_cast<char>(i));
  }
  return BraidWord(strands, std::move(ls));
}

std::string to_text(const BraidWord& w) {
  std::string out = std::to_string(w.strands) + ":";
  for (std::size_t p = 0; p < w.length(); ++p) {
    out += ' ';
    out += std::to_string(w.letter(p));
  }
  return out;
}

nlohmann::json word_to_json(const BraidWord& w) {
  nlohmann::json letters = nlohmann::json::array();
  for (std::size_t p = 0; p < w.length(); ++p) letters.push_back(w.letter(p));
  return nlohmann::json{{"strands", w.strands}, {"letters", std::move(letters)}};
}

BraidWord word_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("strands") || !j.contains("letters"))
    throw std::invalid_argument("word JSON must be {\"strands\": n, \"letters\": [...]}");
  const auto& jl = j.at("letters");
  if (!j.at("strands").is_number_integer() || !jl.is_array())
    throw std::invalid_argument("word JSON must be {\"strands\": n, \"letters\": [...]}");
  Letters ls;
  ls.reserve(jl.size());
  for (const auto& v : jl) {
    if (!v.is_number_integer()) throw std::invalid_argument("word letters must be integers");
    const long i = v.get<long>();
    if (i < 1 || i >= kMaxStrands)
      throw std::invalid_argument("generator index " + std::to_string(i) + " out of byte range");
    ls.push_back(static_cast<char>(i));
  }
  return BraidWord(j.at("strands").get<int>(), std::move(ls));
}

BraidWord multiply(const BraidWord& u, const BraidWord& v) {
  if (u.strands != v.strands) throw StrandMismatchError(u.strands, v.strands);
  return BraidWord(u.strands, u.letters + v.letters);
}

BraidWord embed(const BraidWord& w, int strands) {
  if (strands < w.strands)
    throw std::invalid_argument("cannot embed MB_" + std::to_string(w.strands) + " into MB_" +
                                std::to_string(strands));
  return BraidWord(strands, w.letters);
}

}  // namespace braids
