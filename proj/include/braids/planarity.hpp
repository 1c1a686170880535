#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace braids {

// Exact planarity of a simple undirected graph on vertices 0..n-1, by the
// left-right (edge orientation) criterion. Total: any vertex count, any
// number of components. Duplicate edges and both orientations are tolerated;
// self-loops are rejected.
bool lr_planar(int n, const std::vector<std::pair<int, int>>& edges);

// A subdivision of K_5 or K_{3,3}: branch vertices joined by internally
// disjoint paths through degree-two vertices.
struct Subdivision {
  enum class Kind { K5, K33 };
  Kind kind;
  std::vector<int> branch;                 // 5 vertices, or 6 with parts {0,1,2} / {3,4,5}
  std::vector<std::vector<int>> paths;     // 10 or 9, branch .. internal .. branch
  std::vector<std::pair<int, int>> edges;  // exactly the subdivision's edge set
};

// Witness extraction for a non-planar graph: deletes edges one by one while
// non-planarity persists; what survives is an edge-minimal non-planar graph,
// i.e. a Kuratowski subdivision. Returns nullopt on planar input.
std::optional<Subdivision> find_kuratowski(int n, const std::vector<std::pair<int, int>>& edges);

// Re-checks a subdivision from scratch: every edge lies in the host graph
// and the edge set really is a K_5 or K_{3,3} subdivision of the stated
// kind. Independent of how the witness was produced.
bool validate_subdivision(int n, const std::vector<std::pair<int, int>>& host_edges,
                          const Subdivision& s);

}  // namespace braids
