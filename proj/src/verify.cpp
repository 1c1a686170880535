#include "braids/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "braids/centralizer.hpp"
#include "braids/graph.hpp"
#include "braids/permutation.hpp"
#include "braids/simple.hpp"

namespace braids {

std::size_t VerificationReport::passed() const {
  std::size_t k = 0;
  for (const Claim& c : claims) k += c.pass;
  return k;
}

std::size_t VerificationReport::failed() const { return claims.size() - passed(); }

namespace {

using Rng = std::mt19937;

int ri(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Uniform letters over [lo, hi], any length in [0, max_len].
BraidWord random_word(Rng& rng, int strands, int lo, int hi, int max_len) {
  Letters ls;
  if (lo <= hi) {
    const int len = ri(rng, 0, max_len);
    for (int p = 0; p < len; ++p) ls.push_back(static_cast<char>(ri(rng, lo, hi)));
  }
  return BraidWord(strands, std::move(ls));
}

// A random distinct-letter word over {1..n-1} forced to contain `must`.
BraidWord random_simple_with(Rng& rng, int n, int must) {
  std::vector<int> pool;
  for (int i = 1; i <= n - 1; ++i)
    if (i == must || ri(rng, 0, 1)) pool.push_back(i);
  std::shuffle(pool.begin(), pool.end(), rng);
  Letters ls;
  for (int i : pool) ls.push_back(static_cast<char>(i));
  return BraidWord(n, std::move(ls));
}

// A random walk through the equivalence class: up to `moves` single rewrites.
BraidWord random_equivalent(Rng& rng, const BraidWord& w, int moves) {
  Letters cur = w.letters;
  for (int step = 0; step < moves; ++step) {
    std::vector<Letters> nbrs;
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      const int a = static_cast<unsigned char>(cur[p]);
      const int b = static_cast<unsigned char>(cur[p + 1]);
      if (std::abs(a - b) >= 2) {
        Letters next = cur;
        std::swap(next[p], next[p + 1]);
        nbrs.push_back(std::move(next));
      }
    }
    for (std::size_t p = 0; p + 2 < cur.size(); ++p) {
      const int a = static_cast<unsigned char>(cur[p]);
      const int b = static_cast<unsigned char>(cur[p + 1]);
      if (cur[p + 2] == cur[p] && std::abs(a - b) == 1) {
        Letters next = cur;
        next[p] = static_cast<char>(b);
        next[p + 1] = static_cast<char>(a);
        next[p + 2] = static_cast<char>(b);
        nbrs.push_back(std::move(next));
      }
    }
    if (nbrs.empty()) break;
    cur = nbrs[static_cast<std::size_t>(ri(rng, 0, static_cast<int>(nbrs.size()) - 1))];
  }
  return BraidWord(w.strands, std::move(cur));
}

bool commutes(const BraidWord& a, const BraidWord& b, std::size_t cap) {
  return braid_eq(multiply(a, b), multiply(b, a), cap);
}

struct Builder {
  std::vector<Claim> claims;

  void add(std::string id, std::string statement, nlohmann::json computed,
           nlohmann::json expected) {
    const bool pass = computed == expected;
    claims.push_back(
        Claim{std::move(id), std::move(statement), std::move(computed), std::move(expected), pass});
  }
  void add_bool(std::string id, std::string statement, bool computed) {
    add(std::move(id), std::move(statement), computed, true);
  }
};

}  // namespace

VerificationReport verify_all(const VerifyOptions& opts) {
  Builder b;
  const auto fib_ref = opts.fib_override ? opts.fib_override
                                         : std::function<std::uint64_t(unsigned)>(
                                               [](unsigned k) { return fib(k); });
  const std::size_t cap = opts.class_cap;
  const int nb = opts.max_n_braids;
  const int np = opts.max_n_perms;

  // Graphs reused across claims.
  std::map<int, CommutingGraph> sb_graphs, ssigma_graphs, sigma_graphs;
  const auto sb_graph = [&](int n) -> const CommutingGraph& {
    auto it = sb_graphs.find(n);
    if (it == sb_graphs.end()) it = sb_graphs.emplace(n, graph_simple_braids(n, n, cap)).first;
    return it->second;
  };
  const auto ssigma_graph = [&](int n) -> const CommutingGraph& {
    auto it = ssigma_graphs.find(n);
    if (it == ssigma_graphs.end()) it = ssigma_graphs.emplace(n, graph_simple_perms(n, n)).first;
    return it->second;
  };
  const auto sigma_graph = [&](int n) -> const CommutingGraph& {
    auto it = sigma_graphs.find(n);
    if (it == sigma_graphs.end()) it = sigma_graphs.emplace(n, graph_sym(n, n)).first;
    return it->second;
  };

  // 01 -- simple-braid counts follow the odd-indexed Fibonacci numbers.
  for (int n = 1; n <= std::min(7, nb); ++n) {
    b.add("01.simple-count.n" + std::to_string(n),
          "|SB_" + std::to_string(n) + "| = F_" + std::to_string(2 * n - 1),
          enum_simple(n, nb).size(), fib_ref(2 * static_cast<unsigned>(n) - 1));
  }

  // 02 -- the worked equivalence: x4 x3^2 x2 x3 = x2 x4 x3 x2^2 in MB_5.
  b.add_bool("02.word-problem.example", "x4 x3 x3 x2 x3 = x2 x4 x3 x2 x2 in MB_5",
             braid_eq(BraidWord(5, {4, 3, 3, 2, 3}), BraidWord(5, {2, 4, 3, 2, 2}), cap));

  // 03 -- canonical forms of the two products of x1x3x2 and x2x3.
  {
    const BraidWord alpha(5, {1, 3, 2});
    const BraidWord beta(5, {2, 3});
    const auto ab = canonical(multiply(alpha, beta), cap);
    const auto ba = canonical(multiply(beta, alpha), cap);
    b.add("03.canonical.product-ab", "canonical(x1x3x2 . x2x3) = x1 x3 x2 x2 x3",
          to_text(ab.word), to_text(BraidWord(5, {1, 3, 2, 2, 3})));
    b.add("03.canonical.product-ba", "canonical(x2x3 . x1x3x2) = x2 x1 x3 x3 x2",
          to_text(ba.word), to_text(BraidWord(5, {2, 1, 3, 3, 2})));
    b.add_bool("03.canonical.distinct", "the two canonical forms differ", !(ab == ba));
  }

  // 04 -- the worked projection value.
  b.add("04.projection.example", "project(x1 x3 x2 x3) = [4,1,3,2,5]",
        to_text(project(BraidWord(5, {1, 3, 2, 3}))), "[4,1,3,2,5]");

  // 05 -- Garside divisors: n! of them, projecting bijectively onto Sigma_n,
  // containing every simple braid and (from n=3) more.
  for (int n = 2; n <= std::min(5, nb); ++n) {
    const auto divisors = enum_divisors_delta(n, n, cap);
    std::uint64_t factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= static_cast<std::uint64_t>(k);
    b.add("05.garside.count.n" + std::to_string(n),
          "|Div(delta_" + std::to_string(n) + ")| = " + std::to_string(n) + "!", divisors.size(),
          factorial);

    std::set<Permutation> images;
    for (const auto& d : divisors) images.insert(project(d.word));
    b.add_bool("05.garside.bijection.n" + std::to_string(n),
               "projection restricted to Div(delta_" + std::to_string(n) +
                   ") is a bijection onto Sigma_" + std::to_string(n),
               images.size() == divisors.size() &&
                   images.size() == enum_sym(n, n).size());

    const auto simples = enum_simple(n, nb);
    std::set<Letters> divisor_set;
    for (const auto& d : divisors) divisor_set.insert(d.word.letters);
    bool subset = true;
    for (const auto& s : simples)
      if (!divisor_set.count(s.word().letters)) subset = false;
    b.add_bool("05.garside.simple-subset.n" + std::to_string(n),
               "SB_" + std::to_string(n) + " is contained in Div(delta_" + std::to_string(n) + ")",
               subset);
    if (n >= 3) {
      b.add_bool("05.garside.proper.n" + std::to_string(n),
                 "the containment SB_" + std::to_string(n) + " in Div(delta_" + std::to_string(n) +
                     ") is strict",
                 subset && divisors.size() > simples.size());
    }
    if (n == 5) {
      const auto w = canonical(BraidWord(5, {1, 3, 2, 3}), cap);
      b.add_bool("05.garside.nonsimple-member",
                 "x1 x3 x2 x3 is a non-simple member of Div(delta_5)",
                 divisor_set.count(w.word.letters) > 0 && !is_simple(w.word));
    }
  }

  // 06 -- generator centralizers: brute force equals the letter-avoidance set.
  for (int n = 2; n <= std::min(6, nb); ++n) {
    int mismatches = 0;
    for (int i = 1; i <= n - 1; ++i) {
      const auto brute = simple_centralizer(make_simple(BraidWord(n, {i}), cap), n, nb, cap);
      if (brute.members != centralizer_of_generator(i, n, nb)) ++mismatches;
    }
    b.add("06.generator-centralizer.n" + std::to_string(n),
          "C_" + std::to_string(n) + "(x_i) = simple braids avoiding x_{i-1}, x_{i+1}, all i",
          mismatches, 0);
  }

  // 07 -- extension counts c_{n+m}(beta) = c_n(beta) F_{2m-1} for every
  // simple beta containing the top letter.
  for (int n = 2; n <= 4; ++n) {
    for (int m = 1; m <= 2; ++m) {
      if (n + m > nb) continue;
      int mismatches = 0;
      for (const SimpleBraid& beta : enum_simple(n, nb)) {
        if (!beta.has_letter(n - 1)) continue;
        const std::uint64_t direct =
            simple_centralizer(embed_simple(beta, n + m), n + m, nb, cap).count();
        const std::uint64_t predicted =
            simple_centralizer(beta, n, nb, cap).count() *
            fib_ref(2 * static_cast<unsigned>(m) - 1);
        if (direct != predicted) ++mismatches;
      }
      b.add("07.extension-count.n" + std::to_string(n) + ".m" + std::to_string(m),
            "c_{n+m}(beta) = c_n(beta) F_{2m-1} over SB_" + std::to_string(n) +
                " with letter " + std::to_string(n - 1) + ", m=" + std::to_string(m),
            mismatches, 0);
    }
  }

  // 08 -- closed-form centralizer sizes for single generators.
  {
    const auto c_of = [&](int i, int n) -> std::uint64_t {
      return simple_centralizer(make_simple(BraidWord(n, {i}), cap), n, nb, cap).count();
    };
    if (2 <= nb) b.add("08.generator-base", "c_2(x1) = 2", c_of(1, 2), 2);
    for (int m = 1; m <= 3; ++m) {
      if (2 + m > nb) continue;
      b.add("08.first-generator.m" + std::to_string(m),
            "c_" + std::to_string(2 + m) + "(x1) = 2 F_" + std::to_string(2 * m - 1), c_of(1, 2 + m),
            2 * fib_ref(2 * static_cast<unsigned>(m) - 1));
    }
    for (int n = 3; n <= 5; ++n) {
      for (int m = 1; m <= 2; ++m) {
        if (n + m > nb) continue;
        b.add("08.top-generator.n" + std::to_string(n) + ".m" + std::to_string(m),
              "c_" + std::to_string(n + m) + "(x" + std::to_string(n - 1) + ") = 2 F_" +
                  std::to_string(2 * n - 5) + " F_" + std::to_string(2 * m - 1),
              c_of(n - 1, n + m),
              2 * fib_ref(2 * static_cast<unsigned>(n) - 5) *
                  fib_ref(2 * static_cast<unsigned>(m) - 1));
      }
    }
  }

  // 09 -- the product decomposition of extended centralizers.
  for (int n = 2; n <= 3; ++n) {
    for (int m = 1; m <= 2; ++m) {
      if (n + m > nb) continue;
      int failures = 0;
      for (const SimpleBraid& beta : enum_simple(n, nb)) {
        if (!beta.has_letter(n - 1)) continue;
        if (!verify_struc_decomposition(beta, n, m, nb, cap)) ++failures;
      }
      b.add("09.struc-decomposition.n" + std::to_string(n) + ".m" + std::to_string(m),
            "C_{n+m}(beta) = C_n(beta) . E_n with unique factorization, n=" + std::to_string(n) +
                ", m=" + std::to_string(m),
            failures, 0);
    }
  }

  // 10 -- randomized lemma suites, 600 cases each, fixed seeds.
  {
    const int kCases = 600;

    {  // A simple braid containing the top letter has it as a left or right divisor.
      Rng rng(101);
      int bad = 0;
      for (int t = 0; t < kCases; ++t) {
        const int n = 2 + t % 4;
        const BraidWord beta = random_simple_with(rng, n, n - 1);
        const BraidWord top(n, {n - 1});
        if (!left_divides(top, beta, cap) && !right_divides(top, beta, cap)) ++bad;
      }
      b.add("10.lemma-left-right-divisor",
            "x_{n-1} | beta simple implies x_{n-1} |_L beta or x_{n-1} |_R beta", bad, 0);
    }

    {  // Simple braids holding consecutive top letters never commute.
      Rng rng(102);
      int bad = 0;
      for (int t = 0; t < kCases; ++t) {
        const int n = 2 + t % 3;
        const BraidWord beta = embed(random_simple_with(rng, n, n - 1), n + 1);
        const BraidWord alpha = random_simple_with(rng, n + 1, n);
        if (commutes(beta, alpha, cap)) ++bad;
      }
      b.add("10.lemma-consecutive-noncommute",
            "beta in SB_n with x_{n-1}, alpha in SB_{n+1} with x_n never commute", bad, 0);
    }

    {  // Left/right divisibility by x_{n-1} propagates across a factor avoiding it.
      Rng rng(103);
      int bad = 0;
      int hits = 0;
      for (int t = 0; t < kCases; ++t) {
        const int n = 3 + t % 3;
        const BraidWord beta = random_word(rng, n, 1, n - 2, 5);
        BraidWord gamma = random_word(rng, n, 1, n - 1, 4);
        if (ri(rng, 0, 1)) {
          Letters ls;
          ls.push_back(static_cast<char>(n - 1));
          ls += gamma.letters;
          gamma = BraidWord(n, std::move(ls));
        }
        const BraidWord top(n, {n - 1});
        if (left_divides(top, multiply(beta, gamma), cap)) {
          ++hits;
          if (!left_divides(top, gamma, cap)) ++bad;
        }
        if (right_divides(top, multiply(gamma, beta), cap)) {
          ++hits;
          if (!right_divides(top, gamma, cap)) ++bad;
        }
      }
      b.add("10.lemma-divisor-propagation",
            "x_{n-1} |_L beta gamma and x_{n-1} not dividing beta imply x_{n-1} |_L gamma "
            "(and the mirrored form); counterexamples, or -1 if no antecedent fired",
            hits > 0 ? bad : -1, 0);
    }

    {  // Cancellation: beta gamma = beta delta iff gamma = delta, ditto on the right.
      Rng rng(104);
      int bad = 0;
      for (int t = 0; t < kCases; ++t) {
        const int n = 2 + t % 4;
        const BraidWord beta = random_word(rng, n, 1, n - 1, 4);
        const BraidWord gamma = random_word(rng, n, 1, n - 1, 5);
        const BraidWord delta = ri(rng, 0, 1) ? random_equivalent(rng, gamma, ri(rng, 0, 4))
                                              : random_word(rng, n, 1, n - 1, 5);
        const bool same = braid_eq(gamma, delta, cap);
        if (braid_eq(multiply(beta, gamma), multiply(beta, delta), cap) != same) ++bad;
        if (braid_eq(multiply(gamma, beta), multiply(delta, beta), cap) != same) ++bad;
      }
      b.add("10.cancellation-laws",
            "beta gamma = beta delta iff gamma = delta, and gamma beta = delta beta iff "
            "gamma = delta",
            bad, 0);
    }

    {  // Commuting with a product and one factor forces the other factor.
      Rng rng(105);
      int bad = 0;
      int hits = 0;
      for (int t = 0; t < kCases; ++t) {
        const int n = 3 + t % 3;
        const int split = ri(rng, 1, n - 2);
        const BraidWord beta = random_word(rng, n, 1, split - 1, 4);
        const BraidWord gamma1 = random_word(rng, n, split + 1, n - 1, 4);
        const BraidWord gamma2 = ri(rng, 0, 1) ? random_word(rng, n, split + 1, n - 1, 4)
                                               : random_word(rng, n, 1, n - 1, 4);
        const BraidWord product = multiply(gamma1, gamma2);
        if (!commutes(beta, product, cap)) continue;
        if (commutes(beta, gamma1, cap)) {
          ++hits;
          if (!commutes(beta, gamma2, cap)) ++bad;
        }
        if (commutes(beta, gamma2, cap)) {
          ++hits;
          if (!commutes(beta, gamma1, cap)) ++bad;
        }
      }
      b.add("10.lemma-product-commutation",
            "commuting with gamma1 gamma2 and either factor forces the other factor; "
            "counterexamples, or -1 if no antecedent fired",
            hits > 0 ? bad : -1, 0);
    }
  }

  // 11 -- the simple-braid graph on five strands.
  if (5 <= nb) {
    const auto& g = sb_graph(5);
    b.add("11.sb5.vertex-count", "Gamma(SB_5) has 33 vertices", g.vertices.size(), 33);
    const auto comps = components(g);
    int nontrivial = 0;
    for (const auto& comp : comps) nontrivial += comp.size() >= 2;
    b.add("11.sb5.component-structure",
          "Gamma(SB_5): one component of size >= 2, all other vertices isolated", nontrivial, 1);
    const auto deg = degrees(g);
    int mismatches = 0;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      const auto beta = make_simple(parse_word(g.vertices[v]), cap);
      const auto c = simple_centralizer(beta, 5, nb, cap).count();
      if (static_cast<std::size_t>(deg[v]) + 2 != c) ++mismatches;
    }
    b.add("11.sb5.degree-formula", "deg(beta) = c_5(beta) - 2 for every vertex of Gamma(SB_5)",
          mismatches, 0);
  }

  // 12 -- the non-planarity witnesses.
  if (6 <= nb) {
    const auto& g = sb_graph(6);
    const std::vector<std::string> left{to_text(BraidWord(6, {1})), to_text(BraidWord(6, {1, 2})),
                                        to_text(BraidWord(6, {2, 1}))};
    const std::vector<std::string> right{to_text(BraidWord(6, {4})), to_text(BraidWord(6, {4, 5})),
                                         to_text(BraidWord(6, {5, 4}))};
    b.add_bool("12.k33-in-sb6",
               "Gamma(SB_6) holds the K_{3,3} on {x1, x1x2, x2x1} x {x4, x4x5, x5x4}",
               contains_complete_bipartite(g, left, right));
  }
  if (5 <= nb) {
    const auto& g = ssigma_graph(5);
    const auto clique = find_clique(g, 5);
    const std::vector<std::string> derived{
        to_text(project(BraidWord(5, {1, 2}))), to_text(project(BraidWord(5, {2, 1}))),
        to_text(project(BraidWord(5, {4}))), to_text(project(BraidWord(5, {1, 2, 4}))),
        to_text(project(BraidWord(5, {2, 1, 4})))};
    b.add_bool("12.k5-in-ssigma5", "Gamma(SSigma_5) holds a K_5",
               clique.has_value() && contains_clique(g, derived));
  }

  // 13 -- planarity milestones plus sanity checks on the classical graphs.
  for (int n = 3; n <= std::min(6, nb); ++n) {
    b.add("13.planarity.sb.n" + std::to_string(n),
          "Gamma(SB_" + std::to_string(n) + ") planar iff n <= 5",
          is_planar(sb_graph(n), false).planar, n <= 5);
  }
  for (int n = 3; n <= std::min(5, nb); ++n) {
    b.add("13.planarity.ssigma.n" + std::to_string(n),
          "Gamma(SSigma_" + std::to_string(n) + ") planar iff n <= 4",
          is_planar(ssigma_graph(n), false).planar, n <= 4);
  }
  for (int n = 3; n <= std::min(5, np); ++n) {
    b.add("13.planarity.sigma.n" + std::to_string(n),
          "Gamma(Sigma_" + std::to_string(n) + ") planar iff n <= 4",
          is_planar(sigma_graph(n), false).planar, n <= 4);
  }
  {
    std::vector<std::pair<int, int>> k5;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) k5.emplace_back(i, j);
    b.add_bool("13.sanity.k5", "K_5 is non-planar", !lr_planar(5, k5));
    std::vector<std::pair<int, int>> k33;
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) k33.emplace_back(i, j);
    b.add_bool("13.sanity.k33", "K_{3,3} is non-planar", !lr_planar(6, k33));
    int bad = 0;
    for (int mask = 0; mask < 64; ++mask) {
      std::vector<std::pair<int, int>> edges;
      int bit = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j, ++bit)
          if (mask & (1 << bit)) edges.emplace_back(i, j);
      if (!lr_planar(4, edges)) ++bad;
    }
    b.add("13.sanity.small-graphs", "every graph on four vertices is planar", bad, 0);
  }

  // 14 -- the braid graph refines into the simple-permutation graph.
  for (int n = 3; n <= std::min(5, nb); ++n) {
    const auto& gb = sb_graph(n);
    const auto& gp = ssigma_graph(n);
    int unmapped = 0;
    for (auto [a, c] : gb.edges) {
      const int pa = gp.index_of(to_text(project(parse_word(gb.vertices[a]))));
      const int pc = gp.index_of(to_text(project(parse_word(gb.vertices[c]))));
      if (pa < 0 || pc < 0 || !gp.has_edge(pa, pc)) ++unmapped;
    }
    b.add("14.projection-preserves-edges.n" + std::to_string(n),
          "every edge of Gamma(SB_" + std::to_string(n) + ") projects to an edge of Gamma(SSigma_" +
              std::to_string(n) + ")",
          unmapped, 0);

    const int qa = gp.index_of(to_text(project(BraidWord(n, {1, 2}))));
    const int qc = gp.index_of(to_text(project(BraidWord(n, {2, 1}))));
    const int wa = gb.index_of(to_text(BraidWord(n, {1, 2})));
    const int wc = gb.index_of(to_text(BraidWord(n, {2, 1})));
    b.add_bool("14.proper-refinement.n" + std::to_string(n),
               "the images of x1x2 and x2x1 commute while the braids do not",
               qa >= 0 && qc >= 0 && gp.has_edge(qa, qc) && wa >= 0 && wc >= 0 &&
                   !gb.has_edge(wa, wc));
  }

  VerificationReport report;
  report.claims = std::move(b.claims);
  std::sort(report.claims.begin(), report.claims.end(),
            [](const Claim& x, const Claim& y) { return x.id < y.id; });
  return report;
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json claims = nlohmann::json::array();
  for (const Claim& c : report.claims) {
    claims.push_back({{"id", c.id},
                      {"statement", c.statement},
                      {"computed", c.computed},
                      {"expected", c.expected},
                      {"pass", c.pass}});
  }
  return nlohmann::json{{"claims", std::move(claims)},
                        {"summary",
                         {{"total", report.claims.size()},
                          {"passed", report.passed()},
                          {"failed", report.failed()},
                          {"all_pass", report.all_pass()}}}};
}

std::string report_to_text(const VerificationReport& report) {
  std::string out;
  for (const Claim& c : report.claims) {
    out += c.pass ? "PASS " : "FAIL ";
    out += c.id + "  " + c.statement + "  [computed " + c.computed.dump() + ", expected " +
           c.expected.dump() + "]\n";
  }
  out += "summary: " + std::to_string(report.passed()) + "/" + std::to_string(report.claims.size()) +
         " claims pass\n";
  return out;
}

}  // namespace braids
