#pragma once

#include <cstdint>
#include <vector>

#include "braids/rewriting.hpp"

namespace braids {

inline constexpr int kDefaultSimpleEnumCap = 10;
inline constexpr int kDefaultDeltaDivisorsCap = 5;

// F_0 = 0, F_1 = 1, F_2 = 1, ... Throws std::overflow_error past 64 bits
// rather than wrapping.
std::uint64_t fib(unsigned k);

// True iff every generator index occurs at most once in w. Class-invariant:
// both moves preserve the length and the letter set, so a word with a
// repeated letter can never reach one without.
bool is_simple(const BraidWord& w);

// A simple braid, held in canonical form.
struct SimpleBraid {
  CanonicalBraid canon;

  const BraidWord& word() const { return canon.word; }
  int strands() const { return canon.word.strands; }
  bool has_letter(int i) const;

  friend bool operator==(const SimpleBraid&, const SimpleBraid&) = default;
};
bool operator<(const SimpleBraid& a, const SimpleBraid& b);

// Canonicalizes a distinct-letter word; throws std::invalid_argument if the
// word is not simple.
SimpleBraid make_simple(const BraidWord& w, std::size_t cap = kDefaultClassCap);
SimpleBraid embed_simple(const SimpleBraid& b, int strands);

// All simple braids of MB_n including e, sorted; |result| = fib(2n-1).
// Enumerates every injective letter sequence over {1..n-1} and dedupes by
// canonical form.
std::vector<SimpleBraid> enum_simple(int n, int max_n = kDefaultSimpleEnumCap);

// Garside braid x_1 (x_2 x_1) ... (x_{n-1} x_{n-2} ... x_1); length n(n-1)/2.
BraidWord delta(int n);

// Div(delta_n): canonical forms of every contiguous subword of every member
// of delta_n's class. |result| = n!. The class of delta_n grows fast, hence
// the small default cap on n.
std::vector<CanonicalBraid> enum_divisors_delta(int n, int max_n = kDefaultDeltaDivisorsCap,
                                                std::size_t cap = kDefaultClassCap);

}  // namespace braids
