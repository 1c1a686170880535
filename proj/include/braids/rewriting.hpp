#pragma once

#include <cstddef>
#include <vector>

#include "braids/word.hpp"

namespace braids {

inline constexpr std::size_t kDefaultClassCap = 1'000'000;

// Base type for every "desk scale exceeded" failure; the CLI maps it to a
// dedicated exit code.
struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ClassCapError : ResourceCapError {
  std::size_t cap;
  explicit ClassCapError(std::size_t c)
      : ResourceCapError("equivalence class exceeds the cap of " + std::to_string(c) + " words"),
        cap(c) {}
};

// The lexicographically least word of an equivalence class (indices compared
// position by position, smaller index first). Two monoid elements are equal
// iff their canonical words are identical.
struct CanonicalBraid {
  BraidWord word;
  friend bool operator==(const CanonicalBraid&, const CanonicalBraid&) = default;
};

// Order by (strands, letters); gives enumerations a stable layout.
bool operator<(const CanonicalBraid& a, const CanonicalBraid& b);

// Every word reachable from w by the two length-preserving moves
//   x_{i+1} x_i x_{i+1} <-> x_i x_{i+1} x_i
//   x_i x_j <-> x_j x_i              for |i-j| >= 2
// applied in either direction anywhere in the word. Sorted. Throws
// ClassCapError once the closure exceeds cap.
std::vector<BraidWord> equivalence_class(const BraidWord& w, std::size_t cap = kDefaultClassCap);

// Least member of equivalence_class(w); idempotent. Memoized by letter
// sequence (the moves never consult the strand count), so the cap only
// applies when a class actually gets explored.
CanonicalBraid canonical(const BraidWord& w, std::size_t cap = kDefaultClassCap);

// Word problem: canonical forms equal. Requires equal strand counts.
bool braid_eq(const BraidWord& u, const BraidWord& v, std::size_t cap = kDefaultClassCap);

// g | b: some member of b's class contains a contiguous subword of length
// |g| equivalent to g.
bool divides(const BraidWord& g, const BraidWord& b, std::size_t cap = kDefaultClassCap);
// g |_L b / g |_R b: as above with prefix / suffix in place of subword.
bool left_divides(const BraidWord& g, const BraidWord& b, std::size_t cap = kDefaultClassCap);
bool right_divides(const BraidWord& g, const BraidWord& b, std::size_t cap = kDefaultClassCap);

// x_i | b. Equals divides() on the one-letter word, but decided by letter
// membership, which both moves preserve.
bool letter_divides(int i, const BraidWord& b);

// The canonical-form memo table. Safe for concurrent readers and writers.
void clear_canonical_cache();
std::size_t canonical_cache_size();

}  // namespace braids
