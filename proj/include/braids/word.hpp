#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace braids {

// Letter sequence of a word, one generator index per byte (1-based values).
// Lexicographic order on words is plain string order.
using Letters = std::string;

// Letters are stored in single bytes, so generator indices top out at 255.
inline constexpr int kMaxStrands = 256;

struct WordSyntaxError : std::runtime_error {
  std::size_t position;  // 1-based character offset into the input text
  WordSyntaxError(std::size_t pos, const std::string& what)
      : std::runtime_error("word syntax error at position " + std::to_string(pos) + ": " + what),
        position(pos) {}
};

struct StrandMismatchError : std::runtime_error {
  StrandMismatchError(int lhs, int rhs)
      : std::runtime_error("strand counts differ: " + std::to_string(lhs) + " vs " +
                           std::to_string(rhs)) {}
};

// A word over the Artin generators x_1 .. x_{strands-1}. The empty word is
// the identity e. The strand count is part of the word's identity; nothing
// embeds automatically. A BraidWord is raw syntax -- equality of the monoid
// elements it denotes is braid_eq() in rewriting.hpp.
struct BraidWord {
  int strands = 1;
  Letters letters;

  BraidWord() = default;
  BraidWord(int n, Letters ls);
  BraidWord(int n, std::initializer_list<int> ls);

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  int letter(std::size_t pos) const { return static_cast<unsigned char>(letters[pos]); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Letter membership table indexed by generator (size strands, slot 0 unused).
// The letter set is invariant under both rewriting moves.
std::vector<bool> letter_set(const BraidWord& w);

// Text format: "n: i1 i2 ... ik"; an empty letter list denotes e.
BraidWord parse_word(std::string_view text);
std::string to_text(const BraidWord& w);

// JSON format: {"strands": n, "letters": [i1, ...]}.
nlohmann::json word_to_json(const BraidWord& w);
BraidWord word_from_json(const nlohmann::json& j);

// Concatenation in the free monoid; |uv| = |u| + |v|.
BraidWord multiply(const BraidWord& u, const BraidWord& v);

// The same letters read in MB_strands for strands >= w.strands.
BraidWord embed(const BraidWord& w, int strands);

}  // namespace braids
