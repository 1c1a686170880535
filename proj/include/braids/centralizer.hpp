#pragma once

#include <cstdint>
#include <vector>

#include "braids/simple.hpp"

namespace braids {

// C_n(beta): the simple braids of MB_n commuting with beta. Always contains
// e and beta itself.
struct CentralizerResult {
  SimpleBraid base;
  int strands = 0;
  std::vector<SimpleBraid> members;  // sorted

  std::size_t count() const { return members.size(); }
};

// Brute force: filters enum_simple(n) by canonical-form equality of the two
// products. beta must be given in MB_n.
CentralizerResult simple_centralizer(const SimpleBraid& beta, int n,
                                     int max_n = kDefaultSimpleEnumCap,
                                     std::size_t cap = kDefaultClassCap);

// The centralizer of x_i as predicted by structure alone: the simple braids
// whose letters avoid i-1 and i+1. No commutation testing -- the brute-force
// route above is the oracle it is checked against.
std::vector<SimpleBraid> centralizer_of_generator(int i, int n,
                                                  int max_n = kDefaultSimpleEnumCap);

// E_n inside MB_{n+m}: simple braids over the letters {n+1, .., n+m-1};
// fib(2m-1) of them.
struct TailSet {
  int n = 0;
  int m = 0;
  std::vector<SimpleBraid> members;  // sorted, includes e
};
TailSet tail_set(int n, int m, int max_n = kDefaultSimpleEnumCap);

// Checks the product decomposition of the extended centralizer: C_{n+m}(beta)
// must equal { canonical(g1 g2) : g1 in C_n(beta), g2 in tail_set(n,m) } with
// (g1, g2) -> g1 g2 injective. beta must contain the letter n-1.
bool verify_struc_decomposition(const SimpleBraid& beta, int n, int m,
                                int max_n = kDefaultSimpleEnumCap,
                                std::size_t cap = kDefaultClassCap);

// c_n(beta) * F_{2m-1} with c_n(beta) from brute force; the predicted value
// of c_{n+m}(beta) when beta contains the letter n-1.
std::uint64_t predicted_count(const SimpleBraid& beta, int n, int m,
                              int max_n = kDefaultSimpleEnumCap,
                              std::size_t cap = kDefaultClassCap);

}  // namespace braids
