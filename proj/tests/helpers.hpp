#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "braids/word.hpp"

namespace testutil {

using Rng = std::mt19937;

inline int ri(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline braids::BraidWord random_word(Rng& rng, int strands, int max_len) {
  braids::Letters ls;
  if (strands >= 2) {
    const int len = ri(rng, 0, max_len);
    for (int p = 0; p < len; ++p) ls.push_back(static_cast<char>(ri(rng, 1, strands - 1)));
  }
  return braids::BraidWord(strands, std::move(ls));
}

// A random injective letter sequence over {1..n-1}.
inline braids::BraidWord random_simple_word(Rng& rng, int n) {
  std::vector<int> pool;
  for (int i = 1; i <= n - 1; ++i)
    if (ri(rng, 0, 1)) pool.push_back(i);
  std::shuffle(pool.begin(), pool.end(), rng);
  braids::Letters ls;
  for (int i : pool) ls.push_back(static_cast<char>(i));
  return braids::BraidWord(n, std::move(ls));
}

// Random walk inside the equivalence class: up to `moves` single rewrites.
inline braids::BraidWord random_equivalent(Rng& rng, const braids::BraidWord& w, int moves) {
  braids::Letters cur = w.letters;
  for (int step = 0; step < moves; ++step) {
    std::vector<braids::Letters> nbrs;
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      const int a = static_cast<unsigned char>(cur[p]);
      const int b = static_cast<unsigned char>(cur[p + 1]);
      if (std::abs(a - b) >= 2) {
        braids::Letters next = cur;
        std::swap(next[p], next[p + 1]);
        nbrs.push_back(std::move(next));
      }
    }
    for (std::size_t p = 0; p + 2 < cur.size(); ++p) {
      const int a = static_cast<unsigned char>(cur[p]);
      const int b = static_cast<unsigned char>(cur[p + 1]);
      if (cur[p + 2] == cur[p] && std::abs(a - b) == 1) {
        braids::Letters next = cur;
        next[p] = static_cast<char>(b);
        next[p + 1] = static_cast<char>(a);
        next[p + 2] = static_cast<char>(b);
        nbrs.push_back(std::move(next));
      }
    }
    if (nbrs.empty()) break;
    cur = nbrs[static_cast<std::size_t>(ri(rng, 0, static_cast<int>(nbrs.size()) - 1))];
  }
  return braids::BraidWord(w.strands, std::move(cur));
}

inline std::set<std::string> letters_of(const std::vector<braids::BraidWord>& words) {
  std::set<std::string> out;
  for (const auto& w : words) out.insert(w.letters);
  return out;
}

}  // namespace testutil
