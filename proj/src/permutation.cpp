#include "braids/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace braids {

namespace {

void check_size(int n) {
  if (n < 1) throw std::invalid_argument("permutation size must be >= 1");
}

void check_compatible(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("permutation sizes differ: " + std::to_string(p.size()) + " vs " +
                                std::to_string(q.size()));
}

}  // namespace

Permutation Permutation::identity(int n) {
  check_size(n);
  Permutation p;
  p.image.resize(static_cast<std::size_t>(n));
  std::iota(p.image.begin(), p.image.end(), 1);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (apply(i) != i) return false;
  return true;
}

bool operator<(const Permutation& a, const Permutation& b) { return a.image < b.image; }

Permutation transposition(int i, int n) {
  if (i < 1 || i > n - 1)
    throw std::invalid_argument("transposition index " + std::to_string(i) + " out of range [1," +
                                std::to_string(n - 1) + "]");
  Permutation p = Permutation::identity(n);
  std::swap(p.image[i - 1], p.image[i]);
  return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  check_compatible(p, q);
  Permutation r;
  r.image.resize(p.image.size());
  for (std::size_t i = 0; i < p.image.size(); ++i) r.image[i] = q.apply(p.image[i]);
  return r;
}

Permutation project(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands);
  for (std::size_t pos = 0; pos < w.length(); ++pos) {
    // Post-compose with s_i: swap the values i and i+1 wherever they occur.
    const int i = w.letter(pos);
    for (int& v : p.image) {
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
  }
  return p;
}

Permutation extend(const Permutation& p, int n) {
  if (n < p.size())
    throw std::invalid_argument("cannot extend a permutation of " + std::to_string(p.size()) +
                                " points to " + std::to_string(n));
  Permutation r = p;
  for (int v = p.size() + 1; v <= n; ++v) r.image.push_back(v);
  return r;
}

std::vector<Permutation> enum_sym(int n, int max_n) {
  check_size(n);
  if (n > max_n)
    throw ResourceCapError("enum_sym(" + std::to_string(n) + ") exceeds the cap n <= " +
                           std::to_string(max_n));
  std::vector<Permutation> out;
  Permutation p = Permutation::identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.image.begin(), p.image.end()));
  return out;
}

std::vector<Permutation> enum_simple_perms(int n, int max_n) {
  std::set<Permutation> images;
  for (const SimpleBraid& b : enum_simple(n, max_n)) images.insert(project(b.word()));
  return {images.begin(), images.end()};
}

bool perm_commute(const Permutation& p, const Permutation& q) {
  check_compatible(p, q);
  for (int i = 1; i <= p.size(); ++i)
    if (q.apply(p.apply(i)) != p.apply(q.apply(i))) return false;
  return true;
}

std::string to_text(const Permutation& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.image.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.image[i]);
  }
  out += ']';
  return out;
}

nlohmann::json perm_to_json(const Permutation& p) { return nlohmann::json(p.image); }

Permutation perm_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("permutation JSON must be a non-empty array");
  Permutation p;
  p.image.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("permutation entries must be integers");
    p.image.push_back(v.get<int>());
  }
  std::vector<bool> seen(p.image.size() + 1, false);
  for (int v : p.image) {
    if (v < 1 || v > p.size() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation JSON is not a bijection of {1.." +
                                  std::to_string(p.size()) + "}");
    seen[static_cast<std::size_t>(v)] = true;
  }
  return p;
}

}  // namespace braids
