#include "braids/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <json.hpp>

#include "braids/permutation.hpp"
#include "braids/simple.hpp"

namespace braids {

int CommutingGraph::index_of(const std::string& label) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), label);
  if (it == vertices.end() || *it != label) return -1;
  return static_cast<int>(it - vertices.begin());
}

bool CommutingGraph::has_edge(int a, int b) const {
  if (a == b) return false;
  const std::pair<int, int> e{std::min(a, b), std::max(a, b)};
  return std::binary_search(edges.begin(), edges.end(), e);
}

std::vector<std::vector<int>> CommutingGraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertices.size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

CommutingGraph build_graph(const std::vector<std::string>& labels,
                           const std::function<bool(std::size_t, std::size_t)>& commute) {
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  CommutingGraph g;
  g.vertices.reserve(labels.size());
  for (std::size_t i : order) g.vertices.push_back(labels[i]);
  for (std::size_t i = 1; i < g.vertices.size(); ++i)
    if (g.vertices[i] == g.vertices[i - 1])
      throw std::invalid_argument("duplicate vertex label: " + g.vertices[i]);
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b)
      if (commute(order[a], order[b]))
        g.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return g;
}

CommutingGraph graph_simple_braids(int n, int max_n, std::size_t cap) {
  if (n < 1) throw std::invalid_argument("strand count must be >= 1");
  if (n > max_n)
    throw ResourceCapError("graph_simple_braids(" + std::to_string(n) + ") exceeds the cap n <= " +
                           std::to_string(max_n));
  std::vector<std::string> labels;
  std::vector<BraidWord> words;
  for (const SimpleBraid& b : enum_simple(n, n)) {
    if (b.word().empty()) continue;
    labels.push_back(to_text(b.word()));
    words.push_back(b.word());
  }
  return build_graph(labels, [&](std::size_t i, std::size_t j) {
    return braid_eq(multiply(words[i], words[j]), multiply(words[j], words[i]), cap);
  });
}

CommutingGraph graph_simple_perms(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("strand count must be >= 1");
  if (n > max_n)
    throw ResourceCapError("graph_simple_perms(" + std::to_string(n) + ") exceeds the cap n <= " +
                           std::to_string(max_n));
  std::vector<std::string> labels;
  std::vector<Permutation> perms;
  for (const Permutation& p : enum_simple_perms(n, n)) {
    if (p.is_identity()) continue;
    labels.push_back(to_text(p));
    perms.push_back(p);
  }
  return build_graph(labels, [&](std::size_t i, std::size_t j) {
    return perm_commute(perms[i], perms[j]);
  });
}

CommutingGraph graph_sym(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("size must be >= 1");
  if (n > max_n)
    throw ResourceCapError("graph_sym(" + std::to_string(n) + ") exceeds the cap n <= " +
                           std::to_string(max_n));
  std::vector<std::string> labels;
  std::vector<Permutation> perms;
  for (const Permutation& p : enum_sym(n, n)) {
    if (p.is_identity()) continue;
    labels.push_back(to_text(p));
    perms.push_back(p);
  }
  return build_graph(labels, [&](std::size_t i, std::size_t j) {
    return perm_commute(perms[i], perms[j]);
  });
}

std::vector<int> degrees(const CommutingGraph& g) {
  std::vector<int> deg(g.vertices.size(), 0);
  for (auto [a, b] : g.edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

std::vector<std::vector<int>> components(const CommutingGraph& g) {
  const auto adj = g.adjacency();
  std::vector<char> seen(g.vertices.size(), 0);
  std::vector<std::vector<int>> comps;
  for (std::size_t start = 0; start < g.vertices.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> comp{static_cast<int>(start)};
    seen[start] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (int next : adj[comp[head]]) {
        if (!seen[next]) {
          seen[next] = 1;
          comp.push_back(next);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

PlanarityVerdict is_planar(const CommutingGraph& g, bool want_witness) {
  const int n = static_cast<int>(g.vertices.size());
  PlanarityVerdict verdict;
  verdict.planar = lr_planar(n, g.edges);
  if (verdict.planar || !want_witness) return verdict;
  const auto sub = find_kuratowski(n, g.edges);
  if (!sub) return verdict;
  KuratowskiWitness w;
  w.kind = sub->kind;
  for (int v : sub->branch) w.branch.push_back(g.vertices[v]);
  for (const auto& path : sub->paths) {
    std::vector<std::string> labels;
    for (int v : path) labels.push_back(g.vertices[v]);
    w.paths.push_back(std::move(labels));
  }
  for (auto [a, b] : sub->edges) w.edges.emplace_back(g.vertices[a], g.vertices[b]);
  verdict.witness = std::move(w);
  return verdict;
}

namespace {

std::vector<int> resolve(const CommutingGraph& g, const std::vector<std::string>& labels) {
  std::vector<int> ids;
  ids.reserve(labels.size());
  for (const auto& label : labels) {
    const int id = g.index_of(label);
    if (id < 0) throw std::invalid_argument("vertex not in graph: " + label);
    ids.push_back(id);
  }
  return ids;
}

}  // namespace

bool contains_clique(const CommutingGraph& g, const std::vector<std::string>& vs) {
  const auto ids = resolve(g, vs);
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (!g.has_edge(ids[i], ids[j])) return false;
  return true;
}

bool contains_complete_bipartite(const CommutingGraph& g, const std::vector<std::string>& part_a,
                                 const std::vector<std::string>& part_b) {
  const auto a = resolve(g, part_a);
  const auto b = resolve(g, part_b);
  for (int va : a)
    for (int vb : b)
      if (!g.has_edge(va, vb)) return false;
  return true;
}

std::optional<std::vector<std::string>> find_clique(const CommutingGraph& g, int k) {
  if (k <= 0) return std::vector<std::string>{};
  const int n = static_cast<int>(g.vertices.size());
  std::vector<int> current;
  std::vector<int> found;
  const auto extend_clique = [&](auto&& self, int from) -> bool {
    if (static_cast<int>(current.size()) == k) {
      found = current;
      return true;
    }
    for (int v = from; v < n; ++v) {
      if (n - v < k - static_cast<int>(current.size())) return false;
      bool ok = true;
      for (int u : current)
        if (!g.has_edge(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(v);
      if (self(self, v + 1)) return true;
      current.pop_back();
    }
    return false;
  };
  if (!extend_clique(extend_clique, 0)) return std::nullopt;
  std::vector<std::string> labels;
  for (int v : found) labels.push_back(g.vertices[v]);
  return labels;
}

namespace {

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_graph(const CommutingGraph& g, GraphFormat format) {
  if (format == GraphFormat::dot) {
    std::string out = "graph G {\n";
    for (const auto& v : g.vertices) out += "  " + quote_dot(v) + ";\n";
    for (auto [a, b] : g.edges)
      out += "  " + quote_dot(g.vertices[a]) + " -- " + quote_dot(g.vertices[b]) + ";\n";
    out += "}\n";
    return out;
  }
  nlohmann::json j;
  j["vertices"] = g.vertices;
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : g.edges) edges.push_back({g.vertices[a], g.vertices[b]});
  j["edges"] = std::move(edges);
  return j.dump();
}

CommutingGraph graph_from_json_text(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON must be {\"vertices\": [...], \"edges\": [...]}");
  CommutingGraph g;
  for (const auto& v : j.at("vertices")) g.vertices.push_back(v.get<std::string>());
  std::sort(g.vertices.begin(), g.vertices.end());
  for (std::size_t i = 1; i < g.vertices.size(); ++i)
    if (g.vertices[i] == g.vertices[i - 1])
      throw std::invalid_argument("duplicate vertex label: " + g.vertices[i]);
  std::set<std::pair<int, int>> edge_set;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a label pair");
    const int a = g.index_of(e.at(0).get<std::string>());
    const int b = g.index_of(e.at(1).get<std::string>());
    if (a < 0 || b < 0) throw std::invalid_argument("edge endpoint is not a listed vertex");
    if (a == b) throw std::invalid_argument("loops are not allowed");
    edge_set.insert({std::min(a, b), std::max(a, b)});
  }
  g.edges.assign(edge_set.begin(), edge_set.end());
  return g;
}

}  // namespace braids
