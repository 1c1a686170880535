#include "braids/simple.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace braids {

std::uint64_t fib(unsigned k) {
  std::uint64_t a = 0, b = 1;  // F_0, F_1
  for (unsigned i = 0; i < k; ++i) {
    std::uint64_t next;
    if (__builtin_add_overflow(a, b, &next)) throw std::overflow_error("fib(" + std::to_string(k) + ") exceeds 64 bits");
    a = b;
    b = next;
  }
  return a;
}

bool is_simple(const BraidWord& w) {
  bool seen[kMaxStrands] = {};
  for (std::size_t p = 0; p < w.length(); ++p) {
    const int i = w.letter(p);
    if (seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

bool SimpleBraid::has_letter(int i) const {
  return i >= 1 && i < strands() && letter_divides(i, canon.word);
}

bool operator<(const SimpleBraid& a, const SimpleBraid& b) { return a.canon < b.canon; }

SimpleBraid make_simple(const BraidWord& w, std::size_t cap) {
  if (!is_simple(w))
    throw std::invalid_argument("word repeats a generator and is not simple: " + to_text(w));
  return SimpleBraid{canonical(w, cap)};
}

SimpleBraid embed_simple(const SimpleBraid& b, int strands) {
  // The moves never consult the strand count, so the canonical letters
  // survive the embedding unchanged.
  return SimpleBraid{CanonicalBraid{embed(b.word(), strands)}};
}

std::vector<SimpleBraid> enum_simple(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("strand count must be >= 1");
  if (n > max_n)
    throw ResourceCapError("enum_simple(" + std::to_string(n) + ") exceeds the cap n <= " +
                           std::to_string(max_n));
  const int gens = n - 1;
  std::set<Letters> canon_set;
  canon_set.insert(Letters{});
  for (int k = 1; k <= gens; ++k) {
    // k-subsets of {1..gens} by index vector, then all orders of each.
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 1);
    for (;;) {
      std::vector<int> perm = idx;
      do {
        Letters ls;
        ls.reserve(k);
        for (int v : perm) ls.push_back(static_cast<char>(v));
        canon_set.insert(canonical(BraidWord(n, std::move(ls))).word.letters);
      } while (std::next_permutation(perm.begin(), perm.end()));
      int i = k - 1;
      while (i >= 0 && idx[i] == gens - k + i + 1) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  std::vector<SimpleBraid> out;
  out.reserve(canon_set.size());
  for (const Letters& ls : canon_set) out.push_back(SimpleBraid{CanonicalBraid{BraidWord(n, ls)}});
  return out;
}

BraidWord delta(int n) {
  if (n < 2) throw std::invalid_argument("delta requires n >= 2");
  Letters ls;
  ls.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int block = 1; block <= n - 1; ++block)
    for (int i = block; i >= 1; --i) ls.push_back(static_cast<char>(i));
  return BraidWord(n, std::move(ls));
}

std::vector<CanonicalBraid> enum_divisors_delta(int n, int max_n, std::size_t cap) {
  if (n < 2) throw std::invalid_argument("delta requires n >= 2");
  if (n > max_n)
    throw ResourceCapError("enum_divisors_delta(" + std::to_string(n) +
                           ") exceeds the cap n <= " + std::to_string(max_n));
  const auto cls = equivalence_class(delta(n), cap);
  std::unordered_set<Letters> raw;  // distinct subwords, before canonicalizing
  for (const BraidWord& member : cls) {
    const Letters& ls = member.letters;
    for (std::size_t len = 1; len <= ls.size(); ++len)
      for (std::size_t start = 0; start + len <= ls.size(); ++start)
        raw.insert(ls.substr(start, len));
  }
  std::set<Letters> canon_set;
  canon_set.insert(Letters{});
  for (const Letters& ls : raw) canon_set.insert(canonical(BraidWord(n, ls), cap).word.letters);
  std::vector<CanonicalBraid> out;
  out.reserve(canon_set.size());
  for (const Letters& ls : canon_set) out.push_back(CanonicalBraid{BraidWord(n, ls)});
  return out;
}

}  // namespace braids
