#include "braids/rewriting.hpp"

#include <algorithm>
#include <optional>
#include <cstring>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

namespace braids {

namespace {

inline int abs_diff(char a, char b) {
  const int x = static_cast<unsigned char>(a);
  const int y = static_cast<unsigned char>(b);
  return x > y ? x - y : y - x;
}

// BFS closure over the two rewriting moves. The visited set doubles as the
// result; the frontier is an index into it. With a target given, stops as
// soon as the target turns up and leaves `order` partial.
bool bfs_class(const Letters& start, std::size_t cap, const Letters* target,
               std::vector<Letters>& order) {
  if (target && start == *target) return true;
  std::unordered_set<Letters> seen{start};
  order.assign(1, start);
  bool found = false;
  const auto emit = [&](const Letters& w) {
    if (seen.insert(w).second) {
      if (seen.size() > cap) throw ClassCapError(cap);
      order.push_back(w);
      if (target && w == *target) found = true;
    }
  };
  for (std::size_t head = 0; head < order.size() && !found; ++head) {
    Letters w = order[head];  // copy: order may reallocate while we mutate w
    const std::size_t len = w.size();
    for (std::size_t p = 0; p + 1 < len; ++p) {
      if (abs_diff(w[p], w[p + 1]) >= 2) {
        std::swap(w[p], w[p + 1]);
        emit(w);
        std::swap(w[p], w[p + 1]);
      }
    }
    for (std::size_t p = 0; p + 2 < len; ++p) {
      const char a = w[p];
      const char b = w[p + 1];
      if (w[p + 2] == a && abs_diff(a, b) == 1) {
        w[p] = b;
        w[p + 1] = a;
        w[p + 2] = b;
        emit(w);
        w[p] = a;
        w[p + 1] = b;
        w[p + 2] = a;
      }
    }
  }
  return found;
}

std::vector<Letters> close_class(const Letters& start, std::size_t cap) {
  std::vector<Letters> order;
  bfs_class(start, cap, nullptr, order);
  return order;
}

std::shared_mutex cache_mutex;
std::unordered_map<Letters, Letters> canon_cache;

Letters canonical_letters(const Letters& ls, std::size_t cap) {
  if (ls.size() < 2) return ls;
  {
    std::shared_lock lock(cache_mutex);
    auto it = canon_cache.find(ls);
    if (it != canon_cache.end()) return it->second;
  }
  const auto cls = close_class(ls, cap);
  Letters best = *std::min_element(cls.begin(), cls.end());
  {
    // Classes are cached member-by-member so every equivalent query hits and
    // each class gets explored once; only outsized classes are exempted to
    // keep a single query from swamping the table.
    std::unique_lock lock(cache_mutex);
    if (cls.size() <= 262144) {
      for (const Letters& member : cls) canon_cache.emplace(member, best);
    } else {
      canon_cache.emplace(ls, best);
    }
  }
  return best;
}

// Cache peek without computing.
std::optional<Letters> cached_canonical(const Letters& ls) {
  std::shared_lock lock(cache_mutex);
  const auto it = canon_cache.find(ls);
  if (it == canon_cache.end()) return std::nullopt;
  return it->second;
}

void check_same_strands(const BraidWord& u, const BraidWord& v) {
  if (u.strands != v.strands) throw StrandMismatchError(u.strands, v.strands);
}

}  // namespace

bool operator<(const CanonicalBraid& a, const CanonicalBraid& b) {
  if (a.word.strands != b.word.strands) return a.word.strands < b.word.strands;
  return a.word.letters < b.word.letters;
}

std::vector<BraidWord> equivalence_class(const BraidWord& w, std::size_t cap) {
  auto members = close_class(w.letters, cap);
  std::sort(members.begin(), members.end());
  std::vector<BraidWord> out;
  out.reserve(members.size());
  for (Letters& ls : members) out.emplace_back(w.strands, std::move(ls));
  return out;
}

CanonicalBraid canonical(const BraidWord& w, std::size_t cap) {
  return CanonicalBraid{BraidWord(w.strands, canonical_letters(w.letters, cap))};
}

bool braid_eq(const BraidWord& u, const BraidWord& v, std::size_t cap) {
  check_same_strands(u, v);
  if (u.letters == v.letters) return true;
  if (u.length() != v.length()) return false;
  if (letter_set(u) != letter_set(v)) return false;  // the letter set is class-invariant
  const auto cu = cached_canonical(u.letters);
  if (cu) {
    const auto cv = cached_canonical(v.letters);
    if (cv) return *cu == *cv;
  }
  // One membership search instead of two canonicalizations.
  std::vector<Letters> scratch;
  return bfs_class(u.letters, cap, &v.letters, scratch);
}

bool divides(const BraidWord& g, const BraidWord& b, std::size_t cap) {
  check_same_strands(g, b);
  const std::size_t k = g.length();
  if (k > b.length()) return false;
  if (k == 0) return true;
  const Letters target = canonical_letters(g.letters, cap);
  for (const Letters& member : close_class(b.letters, cap)) {
    for (std::size_t start = 0; start + k <= member.size(); ++start) {
      if (canonical_letters(member.substr(start, k), cap) == target) return true;
    }
  }
  return false;
}

bool left_divides(const BraidWord& g, const BraidWord& b, std::size_t cap) {
  check_same_strands(g, b);
  const std::size_t k = g.length();
  if (k > b.length()) return false;
  if (k == 0) return true;
  const Letters target = canonical_letters(g.letters, cap);
  for (const Letters& member : close_class(b.letters, cap)) {
    if (canonical_letters(member.substr(0, k), cap) == target) return true;
  }
  return false;
}

bool right_divides(const BraidWord& g, const BraidWord& b, std::size_t cap) {
  check_same_strands(g, b);
  const std::size_t k = g.length();
  if (k > b.length()) return false;
  if (k == 0) return true;
  const Letters target = canonical_letters(g.letters, cap);
  for (const Letters& member : close_class(b.letters, cap)) {
    if (canonical_letters(member.substr(member.size() - k, k), cap) == target) return true;
  }
  return false;
}

bool letter_divides(int i, const BraidWord& b) {
  if (i < 1 || i > b.strands - 1)
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range [1," +
                                std::to_string(b.strands - 1) + "]");
  return std::memchr(b.letters.data(), i, b.letters.size()) != nullptr;
}

void clear_canonical_cache() {
  std::unique_lock lock(cache_mutex);
  canon_cache.clear();
}

std::size_t canonical_cache_size() {
  std::shared_lock lock(cache_mutex);
  return canon_cache.size();
}

}  // namespace braids
