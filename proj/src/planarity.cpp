#include "braids/planarity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace braids {

namespace {

std::vector<std::pair<int, int>> normalize_edges(int n,
                                                 const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loops are not allowed");
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Left-right planarity test. Phase one orients the graph into a DFS forest
// annotated with lowpoints and nesting depths; phase two replays the DFS,
// maintaining a stack of conflict pairs of back-edge intervals, and fails
// exactly when two return edges are forced onto the same side.
class LRTest {
 public:
  LRTest(int n, const std::vector<std::pair<int, int>>& edges)
      : n_(n), m_(static_cast<int>(edges.size())) {
    nbrs_.resize(n_);
    src_.assign(m_, -1);
    dst_.assign(m_, -1);
    oriented_.assign(m_, 0);
    lowpt_.assign(m_, 0);
    lowpt2_.assign(m_, 0);
    nesting_.assign(m_, 0);
    ref_.assign(m_, kNone);
    side_.assign(m_, 1);
    lowpt_edge_.assign(m_, kNone);
    stack_bottom_.assign(m_, 0);
    height_.assign(n_, kNone);
    parent_edge_.assign(n_, kNone);
    for (int id = 0; id < m_; ++id) {
      nbrs_[edges[id].first].emplace_back(edges[id].second, id);
      nbrs_[edges[id].second].emplace_back(edges[id].first, id);
    }
  }

  bool run() {
    std::vector<int> roots;
    for (int v = 0; v < n_; ++v) {
      if (height_[v] == kNone) {
        height_[v] = 0;
        roots.push_back(v);
        dfs_orient(v);
      }
    }
    ordered_adj_.resize(n_);
    for (int id = 0; id < m_; ++id)
      if (oriented_[id]) ordered_adj_[src_[id]].push_back(id);
    for (auto& out : ordered_adj_) {
      std::sort(out.begin(), out.end(), [&](int a, int b) {
        if (nesting_[a] != nesting_[b]) return nesting_[a] < nesting_[b];
        return a < b;
      });
    }
    for (int r : roots)
      if (!dfs_test(r)) return false;
    return true;
  }

 private:
  static constexpr int kNone = -1;

  struct Interval {
    int low = kNone;
    int high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
  };

  struct ConflictPair {
    Interval left, right;
    void swap_sides() { std::swap(left, right); }
  };

  bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[b];
  }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  void dfs_orient(int v) {
    const int pe = parent_edge_[v];
    for (auto [w, id] : nbrs_[v]) {
      if (oriented_[id]) continue;
      oriented_[id] = 1;
      src_[id] = v;
      dst_[id] = w;
      lowpt_[id] = height_[v];
      lowpt2_[id] = height_[v];
      if (height_[w] == kNone) {  // tree edge
        parent_edge_[w] = id;
        height_[w] = height_[v] + 1;
        dfs_orient(w);
      } else {  // back edge
        lowpt_[id] = height_[w];
      }
      nesting_[id] = 2 * lowpt_[id] + (lowpt2_[id] < height_[v] ? 1 : 0);
      if (pe != kNone) {
        if (lowpt_[id] < lowpt_[pe]) {
          lowpt2_[pe] = std::min(lowpt_[pe], lowpt2_[id]);
          lowpt_[pe] = lowpt_[id];
        } else if (lowpt_[id] > lowpt_[pe]) {
          lowpt2_[pe] = std::min(lowpt2_[pe], lowpt_[id]);
        } else {
          lowpt2_[pe] = std::min(lowpt2_[pe], lowpt2_[id]);
        }
      }
    }
  }

  bool dfs_test(int v) {
    const int pe = parent_edge_[v];
    bool first = true;
    for (int ei : ordered_adj_[v]) {
      stack_bottom_[ei] = static_cast<int>(stack_.size());
      if (ei == parent_edge_[dst_[ei]]) {  // tree edge
        if (!dfs_test(dst_[ei])) return false;
      } else {  // back edge
        lowpt_edge_[ei] = ei;
        stack_.push_back(ConflictPair{Interval{}, Interval{ei, ei}});
      }
      if (lowpt_[ei] < height_[v]) {  // ei has a return edge below v
        if (first) {
          lowpt_edge_[pe] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, pe)) {
          return false;
        }
      }
      first = false;
    }
    if (pe != kNone) {
      const int u = src_[pe];
      trim_back_edges(u);
      if (lowpt_[pe] < height_[u] && !stack_.empty()) {  // pe has a return edge itself
        const int hl = stack_.back().left.high;
        const int hr = stack_.back().right.high;
        if (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr]))
          ref_[pe] = hl;
        else
          ref_[pe] = hr;
      }
    }
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    // Merge the return edges of ei into p.right.
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.swap_sides();
      if (!q.left.empty()) return false;  // interval on both sides: not planar
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty())
          p.right.high = q.right.high;
        else
          ref_[p.right.low] = q.right.high;
        p.right.low = q.right.low;
      } else {  // the interval returns below e already: align
        ref_[q.right.low] = lowpt_edge_[e];
      }
    } while (static_cast<int>(stack_.size()) > stack_bottom_[ei]);
    // Merge the conflicting return edges of earlier siblings into p.left.
    while (!stack_.empty() &&
           (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) q.swap_sides();
      if (conflicting(q.right, ei)) return false;  // both sides conflict: not planar
      if (p.right.low != kNone) ref_[p.right.low] = q.right.high;
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty())
        p.left.high = q.left.high;
      else
        ref_[p.left.low] = q.left.high;
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void trim_back_edges(int u) {
    // Whole conflict pairs returning exactly to u are done with.
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      if (p.left.low != kNone) side_[p.left.low] = -1;
    }
    if (stack_.empty()) return;
    // The topmost remaining pair may still hold back edges ending at u.
    ConflictPair p = stack_.back();
    stack_.pop_back();
    while (p.left.high != kNone && dst_[p.left.high] == u) p.left.high = ref_[p.left.high];
    if (p.left.high == kNone && p.left.low != kNone) {
      ref_[p.left.low] = p.right.low;
      side_[p.left.low] = -1;
      p.left.low = kNone;
    }
    while (p.right.high != kNone && dst_[p.right.high] == u) p.right.high = ref_[p.right.high];
    if (p.right.high == kNone && p.right.low != kNone) {
      ref_[p.right.low] = p.left.low;
      side_[p.right.low] = -1;
      p.right.low = kNone;
    }
    stack_.push_back(p);
  }

  int n_;
  int m_;
  std::vector<std::vector<std::pair<int, int>>> nbrs_;
  std::vector<int> src_, dst_;
  std::vector<char> oriented_;
  std::vector<int> lowpt_, lowpt2_, nesting_;
  std::vector<int> ref_, side_, lowpt_edge_, stack_bottom_;
  std::vector<int> height_, parent_edge_;
  std::vector<std::vector<int>> ordered_adj_;
  std::vector<ConflictPair> stack_;
};

// Reads a K5/K33 subdivision off an edge set that is expected to be exactly
// one: branch vertices have degree >= 3, subdivision vertices degree 2, and
// the contracted graph must come out as K5 or K33.
std::optional<Subdivision> classify_subdivision(const std::vector<std::pair<int, int>>& edges) {
  if (edges.empty()) return std::nullopt;
  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> branch;
  for (const auto& [v, nb] : adj) {
    if (nb.size() >= 3) branch.push_back(v);
    if (nb.size() < 2) return std::nullopt;
  }

  const bool k5_shape = branch.size() == 5;
  const bool k33_shape = branch.size() == 6;
  if (!k5_shape && !k33_shape) return std::nullopt;
  for (int b : branch) {
    const std::size_t want = k5_shape ? 4 : 3;
    if (adj[b].size() != want) return std::nullopt;
  }

  // Walk each chain of degree-two vertices between branch vertices.
  std::set<std::pair<int, int>> used;
  const auto take = [&](int a, int b) {
    return used.insert({std::min(a, b), std::max(a, b)}).second;
  };
  std::vector<std::vector<int>> paths;
  std::map<int, int> internal_uses;
  for (int b : branch) {
    for (int next : adj[b]) {
      if (!take(b, next)) continue;
      std::vector<int> path{b};
      int prev = b, cur = next;
      while (adj[cur].size() == 2) {
        path.push_back(cur);
        ++internal_uses[cur];
        const int step = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        if (!take(cur, step)) return std::nullopt;
        prev = cur;
        cur = step;
      }
      path.push_back(cur);
      if (cur == b) return std::nullopt;  // chain loops back: not a subdivision
      paths.push_back(std::move(path));
    }
  }
  if (used.size() != edges.size()) return std::nullopt;
  for (const auto& [v, uses] : internal_uses)
    if (uses != 1) return std::nullopt;

  // Contracted multigraph on the branch vertices.
  std::map<std::pair<int, int>, int> pair_count;
  for (const auto& path : paths) {
    const int a = std::min(path.front(), path.back());
    const int b = std::max(path.front(), path.back());
    ++pair_count[{a, b}];
  }
  for (const auto& [pr, cnt] : pair_count)
    if (cnt != 1) return std::nullopt;

  Subdivision s;
  s.paths = std::move(paths);
  s.edges = edges;
  if (k5_shape) {
    if (pair_count.size() != 10) return std::nullopt;  // all pairs, each once
    s.kind = Subdivision::Kind::K5;
    s.branch = branch;
    return s;
  }
  // K33: two-color the contracted graph from branch[0].
  if (pair_count.size() != 9) return std::nullopt;
  const auto linked = [&](int a, int b) {
    return pair_count.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  std::vector<int> part_a{branch[0]}, part_b;
  for (std::size_t i = 1; i < branch.size(); ++i)
    (linked(branch[0], branch[i]) ? part_b : part_a).push_back(branch[i]);
  if (part_a.size() != 3 || part_b.size() != 3) return std::nullopt;
  for (int a : part_a)
    for (int b : part_b)
      if (!linked(a, b)) return std::nullopt;
  s.kind = Subdivision::Kind::K33;
  s.branch = part_a;
  s.branch.insert(s.branch.end(), part_b.begin(), part_b.end());
  return s;
}

}  // namespace

bool lr_planar(int n, const std::vector<std::pair<int, int>>& edges) {
  const auto simple = normalize_edges(n, edges);
  if (n >= 3 && simple.size() > 3 * static_cast<std::size_t>(n) - 6) return false;
  return LRTest(n, simple).run();
}

std::optional<Subdivision> find_kuratowski(int n, const std::vector<std::pair<int, int>>& edges) {
  auto work = normalize_edges(n, edges);
  if (lr_planar(n, work)) return std::nullopt;
  // One deletion pass suffices: an edge kept because its removal made the
  // graph planar stays critical as the graph only shrinks afterwards.
  std::vector<char> keep(work.size(), 1);
  std::vector<std::pair<int, int>> trial;
  for (std::size_t i = 0; i < work.size(); ++i) {
    trial.clear();
    for (std::size_t j = 0; j < work.size(); ++j)
      if (keep[j] && j != i) trial.push_back(work[j]);
    if (!lr_planar(n, trial)) keep[i] = 0;
  }
  std::vector<std::pair<int, int>> core;
  for (std::size_t i = 0; i < work.size(); ++i)
    if (keep[i]) core.push_back(work[i]);
  return classify_subdivision(core);
}

bool validate_subdivision(int n, const std::vector<std::pair<int, int>>& host_edges,
                          const Subdivision& s) {
  const auto host = normalize_edges(n, host_edges);
  const std::set<std::pair<int, int>> host_set(host.begin(), host.end());
  auto sub = s.edges;
  for (auto& [a, b] : sub)
    if (a > b) std::swap(a, b);
  std::sort(sub.begin(), sub.end());
  if (std::unique(sub.begin(), sub.end()) != sub.end()) return false;
  for (const auto& e : sub)
    if (!host_set.count(e)) return false;
  const auto reread = classify_subdivision(sub);
  if (!reread || reread->kind != s.kind) return false;
  std::vector<int> got = reread->branch, want = s.branch;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  return got == want;
}

}  // namespace braids
