#include "braids/centralizer.hpp"

#include <algorithm>
#include <set>

namespace braids {

namespace {

bool commutes(const BraidWord& a, const BraidWord& b, std::size_t cap) {
  return braid_eq(multiply(a, b), multiply(b, a), cap);
}

}  // namespace

CentralizerResult simple_centralizer(const SimpleBraid& beta, int n, int max_n, std::size_t cap) {
  if (beta.strands() != n)
    throw std::invalid_argument("beta has " + std::to_string(beta.strands()) +
                                " strands, expected " + std::to_string(n));
  CentralizerResult result;
  result.base = beta;
  result.strands = n;
  for (const SimpleBraid& g : enum_simple(n, max_n)) {
    if (commutes(beta.word(), g.word(), cap)) result.members.push_back(g);
  }
  return result;
}

std::vector<SimpleBraid> centralizer_of_generator(int i, int n, int max_n) {
  if (i < 1 || i > n - 1)
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range [1," +
                                std::to_string(n - 1) + "]");
  std::vector<SimpleBraid> out;
  for (const SimpleBraid& g : enum_simple(n, max_n)) {
    if (!g.has_letter(i - 1) && !g.has_letter(i + 1)) out.push_back(g);
  }
  return out;
}

TailSet tail_set(int n, int m, int max_n) {
  if (n < 1 || m < 1) throw std::invalid_argument("tail_set requires n >= 1 and m >= 1");
  TailSet t;
  t.n = n;
  t.m = m;
  for (const SimpleBraid& g : enum_simple(n + m, max_n)) {
    bool low = false;
    for (int j = 1; j <= n && !low; ++j) low = g.has_letter(j);
    if (!low) t.members.push_back(g);
  }
  return t;
}

bool verify_struc_decomposition(const SimpleBraid& beta, int n, int m, int max_n,
                                std::size_t cap) {
  if (!beta.has_letter(n - 1))
    throw std::invalid_argument("beta must contain the letter " + std::to_string(n - 1));
  const auto direct = simple_centralizer(embed_simple(beta, n + m), n + m, max_n, cap);
  const auto heads = simple_centralizer(beta, n, max_n, cap);
  const auto tails = tail_set(n, m, max_n);

  std::set<Letters> products;
  for (const SimpleBraid& g1 : heads.members) {
    const BraidWord g1_ext = embed(g1.word(), n + m);
    for (const SimpleBraid& g2 : tails.members) {
      const Letters prod = canonical(multiply(g1_ext, g2.word()), cap).word.letters;
      if (!products.insert(prod).second) return false;  // (g1, g2) -> g1 g2 not injective
    }
  }
  if (products.size() != direct.members.size()) return false;
  for (const SimpleBraid& g : direct.members)
    if (products.find(g.word().letters) == products.end()) return false;
  return true;
}

std::uint64_t predicted_count(const SimpleBraid& beta, int n, int m, int max_n, std::size_t cap) {
  if (!beta.has_letter(n - 1))
    throw std::invalid_argument("beta must contain the letter " + std::to_string(n - 1));
  if (m < 1) throw std::invalid_argument("predicted_count requires m >= 1");
  const std::uint64_t base = simple_centralizer(beta, n, max_n, cap).count();
  const std::uint64_t factor = fib(2 * static_cast<unsigned>(m) - 1);
  std::uint64_t out;
  if (__builtin_mul_overflow(base, factor, &out))
    throw std::overflow_error("predicted centralizer count exceeds 64 bits");
  return out;
}

}  // namespace braids
