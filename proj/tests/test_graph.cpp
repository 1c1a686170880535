#include <doctest.h>

#include <algorithm>
#include <set>

#include "braids/centralizer.hpp"
#include "braids/graph.hpp"
#include "braids/permutation.hpp"

using braids::BraidWord;
using braids::CommutingGraph;

namespace {

CommutingGraph triangle_plus_isolated() {
  return braids::build_graph({"a", "b", "c", "d"}, [](std::size_t i, std::size_t j) {
    return i < 3 && j < 3;  // a, b, c pairwise joined; d isolated
  });
}

// A vertex lies on a cycle iff one of its edges is not a bridge.
std::vector<bool> on_cycle_oracle(const CommutingGraph& g) {
  const auto adj = g.adjacency();
  const int n = static_cast<int>(g.vertices.size());
  std::vector<int> disc(n, -1), low(n, 0);
  std::set<std::pair<int, int>> bridges;
  int timer = 0;
  const auto dfs = [&](auto&& self, int v, int parent) -> void {
    disc[v] = low[v] = timer++;
    for (int w : adj[v]) {
      if (w == parent) {
        parent = -2;  // skip the tree edge once; parallel edges cannot occur
        continue;
      }
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
      } else {
        self(self, w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) bridges.insert({std::min(v, w), std::max(v, w)});
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(dfs, v, -1);
  std::vector<bool> out(static_cast<std::size_t>(n), false);
  for (auto [a, b] : g.edges)
    if (!bridges.count({a, b})) out[static_cast<std::size_t>(a)] = out[static_cast<std::size_t>(b)] = true;
  return out;
}

}  // namespace

TEST_CASE("build_graph sorts vertices and rejects duplicates") {
  const auto g = triangle_plus_isolated();
  CHECK(g.vertices == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.index_of("c") == 2);
  CHECK(g.index_of("zz") == -1);
  CHECK_THROWS_AS(braids::build_graph({"a", "a"}, [](std::size_t, std::size_t) { return true; }),
                  std::invalid_argument);
}

TEST_CASE("tiny braid graphs") {
  const auto g2 = braids::graph_simple_braids(2);
  CHECK(g2.vertices == std::vector<std::string>{"2: 1"});
  CHECK(g2.edges.empty());
  CHECK(braids::degrees(g2) == std::vector<int>{0});

  const auto g1 = braids::graph_simple_braids(1);
  CHECK(g1.vertices.empty());
  CHECK(braids::is_planar(g1).planar);
}

TEST_CASE("the full symmetric graph on three points, by hand") {
  const auto g = braids::graph_sym(3);
  CHECK(g.vertices.size() == 5);
  // Only the two rotations commute.
  CHECK(g.edges.size() == 1);
  const int a = g.index_of("[2,3,1]");
  const int b = g.index_of("[3,1,2]");
  REQUIRE(a >= 0);
  REQUIRE(b >= 0);
  CHECK(g.has_edge(a, b));
  const auto comps = braids::components(g);
  std::multiset<std::size_t> sizes;
  for (const auto& c : comps) sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 1, 1, 2});
}

TEST_CASE("graph caps") {
  CHECK_THROWS_AS(braids::graph_simple_braids(8), braids::ResourceCapError);
  CHECK_THROWS_AS(braids::graph_sym(7), braids::ResourceCapError);
}

TEST_CASE("components of an edgeless graph are singletons") {
  const auto g = braids::build_graph({"x", "y", "z"},
                                     [](std::size_t, std::size_t) { return false; });
  CHECK(braids::components(g).size() == 3);
}

TEST_CASE("degrees in the five-strand graph match the centralizer counts") {
  const auto g = braids::graph_simple_braids(5);
  const auto deg = braids::degrees(g);
  const int x4 = g.index_of("5: 4");
  REQUIRE(x4 >= 0);
  CHECK(deg[static_cast<std::size_t>(x4)] == 8);  // c_5(x4) - 2 = 10 - 2
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto beta = braids::make_simple(braids::parse_word(g.vertices[v]));
    const auto c = braids::simple_centralizer(beta, 5).count();
    CHECK(static_cast<std::size_t>(deg[v]) + 2 == c);
  }
}

TEST_CASE("the five-strand graph: one 15-vertex component, the rest isolated") {
  const auto g = braids::graph_simple_braids(5);
  CHECK(g.vertices.size() == 33);
  CHECK(g.edges.size() == 21);
  const auto comps = braids::components(g);
  std::size_t isolated = 0;
  std::size_t big = 0;
  for (const auto& comp : comps) {
    if (comp.size() == 1) ++isolated;
    if (comp.size() >= 2) {
      ++big;
      CHECK(comp.size() == 15);
    }
  }
  CHECK(big == 1);
  CHECK(isolated == 18);
  // A few members of the non-trivial component, checked by hand: x1 -- x3,
  // x2 -- x4, x1x2 -- x4.
  const auto in_big = [&](const char* label) {
    const int id = g.index_of(label);
    REQUIRE(id >= 0);
    for (const auto& comp : comps)
      if (comp.size() == 15)
        return std::find(comp.begin(), comp.end(), id) != comp.end();
    return false;
  };
  CHECK(in_big("5: 1"));
  CHECK(in_big("5: 2 1 4"));
  CHECK_FALSE(in_big("5: 1 2 3"));
}

TEST_CASE("embedding maps each braid graph into the next") {
  for (int n = 3; n <= 5; ++n) {
    const auto small = braids::graph_simple_braids(n - 1);
    const auto big = braids::graph_simple_braids(n);
    const auto lift = [&](int v) {
      const auto w = braids::embed(braids::parse_word(small.vertices[static_cast<std::size_t>(v)]), n);
      return big.index_of(braids::to_text(w));
    };
    for (std::size_t v = 0; v < small.vertices.size(); ++v)
      CHECK(lift(static_cast<int>(v)) >= 0);
    for (auto [a, b] : small.edges) CHECK(big.has_edge(lift(a), lift(b)));
  }
}

TEST_CASE("embedding maps each permutation graph into the next") {
  for (int n = 4; n <= 5; ++n) {
    const auto small_ss = braids::graph_simple_perms(n - 1);
    const auto big_ss = braids::graph_simple_perms(n);
    const auto small_s = braids::graph_sym(n - 1);
    const auto big_s = braids::graph_sym(n);
    const auto check_pair = [&](const CommutingGraph& small, const CommutingGraph& big) {
      const auto lift = [&](int v) {
        const auto p = braids::perm_from_json(
            nlohmann::json::parse(small.vertices[static_cast<std::size_t>(v)]));
        return big.index_of(braids::to_text(braids::extend(p, n)));
      };
      for (std::size_t v = 0; v < small.vertices.size(); ++v)
        CHECK(lift(static_cast<int>(v)) >= 0);
      for (auto [a, b] : small.edges) CHECK(big.has_edge(lift(a), lift(b)));
    };
    check_pair(small_ss, big_ss);
    check_pair(small_s, big_s);
  }
}

TEST_CASE("clique and bipartite membership") {
  const auto g = triangle_plus_isolated();
  CHECK(braids::contains_clique(g, {"a", "b", "c"}));
  CHECK(braids::contains_clique(g, {"d"}));
  CHECK_FALSE(braids::contains_clique(g, {"a", "d"}));
  CHECK_THROWS_AS(braids::contains_clique(g, {"nope"}), std::invalid_argument);
  CHECK(braids::contains_complete_bipartite(g, {"a"}, {"b", "c"}));
  CHECK_FALSE(braids::contains_complete_bipartite(g, {"a", "d"}, {"b"}));

  const auto found = braids::find_clique(g, 3);
  REQUIRE(found.has_value());
  CHECK(*found == std::vector<std::string>{"a", "b", "c"});
  CHECK_FALSE(braids::find_clique(g, 4).has_value());
}

TEST_CASE("dot export lists every vertex and edge") {
  const auto g = braids::build_graph({"u", "v", "w"}, [](std::size_t i, std::size_t j) {
    return i == 0 && j == 1;
  });
  CHECK(braids::export_graph(g, braids::GraphFormat::dot) ==
        "graph G {\n  \"u\";\n  \"v\";\n  \"w\";\n  \"u\" -- \"v\";\n}\n");
  const auto single = braids::build_graph({"only"}, [](std::size_t, std::size_t) { return true; });
  CHECK(braids::export_graph(single, braids::GraphFormat::dot) == "graph G {\n  \"only\";\n}\n");
}

TEST_CASE("a complete bipartite commuting pattern is one component with nine edge lines") {
  const std::vector<std::string> labels{"a1", "a2", "a3", "b1", "b2", "b3"};
  const auto g = braids::build_graph(labels, [&](std::size_t i, std::size_t j) {
    return labels[i][0] != labels[j][0];
  });
  CHECK(g.edges.size() == 9);
  CHECK(braids::components(g).size() == 1);
  const auto dot = braids::export_graph(g, braids::GraphFormat::dot);
  std::size_t edge_lines = 0;
  for (std::size_t pos = dot.find(" -- "); pos != std::string::npos;
       pos = dot.find(" -- ", pos + 1))
    ++edge_lines;
  CHECK(edge_lines == 9);
  CHECK_FALSE(braids::is_planar(g).planar);
}

TEST_CASE("json export round trips") {
  const auto g = braids::graph_simple_braids(4);
  const auto text = braids::export_graph(g, braids::GraphFormat::json);
  const auto back = braids::graph_from_json_text(text);
  CHECK(back.vertices == g.vertices);
  CHECK(back.edges == g.edges);
  CHECK_THROWS_AS(braids::graph_from_json_text(R"({"vertices":["a"],"edges":[["a","a"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(braids::graph_from_json_text(R"({"vertices":["a"],"edges":[["a","b"]]})"),
                  std::invalid_argument);
}

TEST_CASE("planarity verdicts with witnesses on commuting graphs") {
  const auto g = braids::graph_sym(5);
  const auto verdict = braids::is_planar(g);
  CHECK_FALSE(verdict.planar);
  REQUIRE(verdict.witness.has_value());
  // Re-check the witness as index edges against the graph.
  std::vector<std::pair<int, int>> host = g.edges;
  std::vector<std::pair<int, int>> sub;
  for (const auto& [a, b] : verdict.witness->edges) {
    const int ia = g.index_of(a), ib = g.index_of(b);
    REQUIRE(ia >= 0);
    REQUIRE(ib >= 0);
    sub.emplace_back(ia, ib);
  }
  braids::Subdivision s;
  s.kind = verdict.witness->kind;
  for (const auto& v : verdict.witness->branch) s.branch.push_back(g.index_of(v));
  for (const auto& path : verdict.witness->paths) {
    std::vector<int> ids;
    for (const auto& v : path) ids.push_back(g.index_of(v));
    s.paths.push_back(std::move(ids));
  }
  s.edges = sub;
  CHECK(braids::validate_subdivision(static_cast<int>(g.vertices.size()), host, s));
}

TEST_CASE("the symmetric graph on four points: a planar two-core fringed by leaves") {
  const auto g = braids::graph_sym(4);
  CHECK(g.vertices.size() == 23);
  CHECK(braids::is_planar(g, false).planar);

  // Strip degree <= 1 vertices to a fixpoint.
  auto deg = braids::degrees(g);
  const auto adj = g.adjacency();
  std::vector<bool> in_core(g.vertices.size(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      if (in_core[v] && deg[v] <= 1) {
        in_core[v] = false;
        changed = true;
        for (int w : adj[v])
          if (in_core[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
      }
    }
  }
  std::size_t core_size = 0;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) core_size += in_core[v];
  CHECK(core_size == 15);

  // Everything outside the core already had degree <= 1 in the full graph.
  const auto full_deg = braids::degrees(g);
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (!in_core[v]) CHECK(full_deg[v] <= 1);

  // Every core vertex lies on a cycle.
  const auto cyclic = on_cycle_oracle(g);
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (in_core[v]) CHECK(cyclic[v]);

  // One 15-vertex component (exactly the core) plus the four inverse pairs
  // of rotations.
  const auto comps = braids::components(g);
  std::multiset<std::size_t> sizes;
  for (const auto& comp : comps) sizes.insert(comp.size());
  CHECK(sizes == std::multiset<std::size_t>{2, 2, 2, 2, 15});
  for (const auto& comp : comps) {
    if (comp.size() != 15) continue;
    for (int v : comp) CHECK(in_core[static_cast<std::size_t>(v)]);
  }
}
