#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "braids/simple.hpp"

namespace braids {

inline constexpr int kDefaultSymEnumCap = 7;

// A bijection of {1..n} in one-line notation: image[i-1] is where i goes.
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int n);
  int size() const { return static_cast<int>(image.size()); }
  int apply(int point) const { return image[static_cast<std::size_t>(point) - 1]; }
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
};
bool operator<(const Permutation& a, const Permutation& b);

// The adjacent transposition s_i = (i, i+1) in Sigma_n.
Permutation transposition(int i, int n);

// Apply p first, then q.
Permutation compose(const Permutation& p, const Permutation& q);

// The projection x_i -> s_i, letters applied left to right. A monoid
// homomorphism; equivalent words project to the same permutation.
Permutation project(const BraidWord& w);

// The same permutation in Sigma_n, fixing the added points.
Permutation extend(const Permutation& p, int n);

// All n! permutations, sorted.
std::vector<Permutation> enum_sym(int n, int max_n = kDefaultSymEnumCap);

// Images of the simple braids under project(); as many as fib(2n-1).
std::vector<Permutation> enum_simple_perms(int n, int max_n = kDefaultSimpleEnumCap);

bool perm_commute(const Permutation& p, const Permutation& q);

std::string to_text(const Permutation& p);  // "[4,1,3,2,5]"
nlohmann::json perm_to_json(const Permutation& p);
Permutation perm_from_json(const nlohmann::json& j);

}  // namespace braids
