#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "braids/planarity.hpp"
#include "braids/rewriting.hpp"

namespace braids {

inline constexpr int kDefaultBraidGraphCap = 7;
inline constexpr int kDefaultSymGraphCap = 6;

// Commuting graph: vertices are canonical labels of the non-identity
// elements, with an edge between two distinct elements iff they commute.
// No loops, no duplicate edges.
struct CommutingGraph {
  std::vector<std::string> vertices;        // sorted, unique
  std::vector<std::pair<int, int>> edges;   // i < j, sorted

  int index_of(const std::string& label) const;  // -1 if absent
  bool has_edge(int a, int b) const;
  std::vector<std::vector<int>> adjacency() const;
};

// labels must be pairwise distinct (the identity excluded by the caller);
// commute(i, j) is consulted on indices into the labels argument.
CommutingGraph build_graph(const std::vector<std::string>& labels,
                           const std::function<bool(std::size_t, std::size_t)>& commute);

// The three graph families. Labels are word text "n: i1 i2 ..." for braids
// and one-line text "[2,1,3]" for permutations.
CommutingGraph graph_simple_braids(int n, int max_n = kDefaultBraidGraphCap,
                                   std::size_t cap = kDefaultClassCap);
CommutingGraph graph_simple_perms(int n, int max_n = kDefaultBraidGraphCap);
CommutingGraph graph_sym(int n, int max_n = kDefaultSymGraphCap);

std::vector<int> degrees(const CommutingGraph& g);

// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<int>> components(const CommutingGraph& g);

struct KuratowskiWitness {
  Subdivision::Kind kind;
  std::vector<std::string> branch;
  std::vector<std::vector<std::string>> paths;
  std::vector<std::pair<std::string, std::string>> edges;
};

struct PlanarityVerdict {
  bool planar = false;
  std::optional<KuratowskiWitness> witness;  // best effort, non-planar only
};

PlanarityVerdict is_planar(const CommutingGraph& g, bool want_witness = true);

// All pairwise edges present among vs / across the two parts.
bool contains_clique(const CommutingGraph& g, const std::vector<std::string>& vs);
bool contains_complete_bipartite(const CommutingGraph& g, const std::vector<std::string>& part_a,
                                 const std::vector<std::string>& part_b);

// Smallest-label-first backtracking search for a k-clique.
std::optional<std::vector<std::string>> find_clique(const CommutingGraph& g, int k);

enum class GraphFormat { dot, json };
std::string export_graph(const CommutingGraph& g, GraphFormat format);
CommutingGraph graph_from_json_text(const std::string& text);

}  // namespace braids
