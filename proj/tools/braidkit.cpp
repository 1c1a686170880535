#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "braids/centralizer.hpp"
#include "braids/graph.hpp"
#include "braids/permutation.hpp"
#include "braids/rewriting.hpp"
#include "braids/simple.hpp"
#include "braids/verify.hpp"
#include "braids/word.hpp"

namespace {

using nlohmann::json;

struct Output {
  bool pretty = false;
  std::string out_file;

  void emit(const std::string& text) const {
    if (out_file.empty()) {
      std::cout << text << "\n";
      return;
    }
    std::ofstream f(out_file);
    if (!f) throw std::runtime_error("cannot open output file: " + out_file);
    f << text << "\n";
  }
  void emit(const json& j) const { emit(pretty ? j.dump(2) : j.dump()); }
};

json witness_json(const braids::KuratowskiWitness& w) {
  json paths = json::array();
  for (const auto& p : w.paths) paths.push_back(p);
  json edges = json::array();
  for (const auto& [a, b] : w.edges) edges.push_back({a, b});
  return json{{"kind", w.kind == braids::Subdivision::Kind::K5 ? "K5" : "K33"},
              {"branch", w.branch},
              {"paths", std::move(paths)},
              {"edges", std::move(edges)}};
}

braids::CommutingGraph build_family(const std::string& family, int n, int max_n_opt,
                                    std::size_t cap) {
  if (family == "sb") {
    const int max_n = max_n_opt > 0 ? max_n_opt : braids::kDefaultBraidGraphCap;
    return braids::graph_simple_braids(n, max_n, cap);
  }
  if (family == "ssigma") {
    const int max_n = max_n_opt > 0 ? max_n_opt : braids::kDefaultBraidGraphCap;
    return braids::graph_simple_perms(n, max_n);
  }
  const int max_n = max_n_opt > 0 ? max_n_opt : braids::kDefaultSymGraphCap;
  return braids::graph_sym(n, max_n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positive braid monoids: canonical forms, simple braids, centralizers,\n"
               "commuting graphs, and exact planarity"};
  app.require_subcommand(1);

  Output out;
  std::size_t class_cap = braids::kDefaultClassCap;
  app.add_flag("--pretty", out.pretty, "human-readable output instead of compact JSON");
  app.add_option("--out", out.out_file, "write the result to a file instead of stdout");
  app.add_option("--max-class-size", class_cap,
                 "abort once an equivalence class exceeds this many words");

  std::string word_a, word_b;
  auto* canon = app.add_subcommand("canon", "canonical form of a word");
  canon->add_option("word", word_a, "word as \"n: i1 i2 ...\"")->required();

  auto* eq = app.add_subcommand("eq", "decide whether two words are the same braid");
  eq->add_option("u", word_a)->required();
  eq->add_option("v", word_b)->required();

  bool left_only = false, right_only = false;
  auto* div = app.add_subcommand("divides", "decide whether the first word divides the second");
  div->add_option("g", word_a)->required();
  div->add_option("b", word_b)->required();
  div->add_flag("--left", left_only, "restrict to left divisibility");
  div->add_flag("--right", right_only, "restrict to right divisibility");

  int n_arg = 0;
  int max_n_opt = 0;
  bool count_only = false;
  auto* enum_sb = app.add_subcommand("enum-simple", "list the simple braids of MB_n");
  enum_sb->add_option("n", n_arg, "strand count")->required();
  enum_sb->add_flag("--count", count_only, "print only the count");
  enum_sb->add_option("--max-n", max_n_opt, "raise the enumeration cap");

  auto* deltadiv = app.add_subcommand("delta-divisors", "list Div(delta_n)");
  deltadiv->add_option("n", n_arg, "strand count")->required();
  deltadiv->add_flag("--count", count_only, "print only the count");
  deltadiv->add_option("--max-n", max_n_opt, "raise the enumeration cap");

  auto* proj = app.add_subcommand("project", "image of a word in the symmetric group");
  proj->add_option("word", word_a)->required();

  std::string beta_text;
  int strands_arg = 0, extend_arg = 0;
  auto* cent = app.add_subcommand("centralizer", "simple centralizer of a simple braid");
  cent->add_option("--beta", beta_text, "simple braid as \"n: i1 i2 ...\"")->required();
  cent->add_option("--strands", strands_arg, "ambient strand count n")->required();
  cent->add_option("--extend", extend_arg, "compute in MB_{n+m} for this m");
  cent->add_option("--max-n", max_n_opt, "raise the enumeration cap");

  std::string family = "sb";
  bool dot_format = false;
  auto* graph_cmd = app.add_subcommand("graph", "commuting graph of a family");
  graph_cmd->add_option("--family", family, "sb | ssigma | sigma")
      ->check(CLI::IsMember({"sb", "ssigma", "sigma"}))
      ->required();
  graph_cmd->add_option("--n", n_arg, "strand count / degree")->required();
  graph_cmd->add_flag("--dot", dot_format, "DOT output instead of JSON");
  graph_cmd->add_option("--max-n", max_n_opt, "raise the family cap");

  bool no_witness = false;
  auto* planar_cmd = app.add_subcommand("planar", "planarity of a family graph; exit 0 iff planar");
  planar_cmd->add_option("--family", family, "sb | ssigma | sigma")
      ->check(CLI::IsMember({"sb", "ssigma", "sigma"}))
      ->required();
  planar_cmd->add_option("--n", n_arg, "strand count / degree")->required();
  planar_cmd->add_flag("--no-witness", no_witness, "skip witness extraction");
  planar_cmd->add_option("--max-n", max_n_opt, "raise the family cap");

  braids::VerifyOptions vopts;
  auto* verify_cmd = app.add_subcommand("verify", "run the built-in claim suite");
  verify_cmd->add_option("--max-n-braids", vopts.max_n_braids, "cap for braid enumerations");
  verify_cmd->add_option("--max-n-perms", vopts.max_n_perms, "cap for symmetric-group graphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*canon) {
      const auto c = braids::canonical(braids::parse_word(word_a), class_cap);
      if (out.pretty)
        out.emit(braids::to_text(c.word));
      else
        out.emit(json{{"canonical", braids::to_text(c.word)}});
      return 0;
    }
    if (*eq) {
      const bool equal =
          braids::braid_eq(braids::parse_word(word_a), braids::parse_word(word_b), class_cap);
      if (out.pretty)
        out.emit(std::string(equal ? "true" : "false"));
      else
        out.emit(json{{"equal", equal}});
      return equal ? 0 : 1;
    }
    if (*div) {
      if (left_only && right_only)
        throw CLI::ValidationError("divides", "--left and --right are mutually exclusive");
      const auto g = braids::parse_word(word_a);
      const auto b = braids::parse_word(word_b);
      const bool result = left_only    ? braids::left_divides(g, b, class_cap)
                          : right_only ? braids::right_divides(g, b, class_cap)
                                       : braids::divides(g, b, class_cap);
      const char* mode = left_only ? "left" : right_only ? "right" : "any";
      if (out.pretty)
        out.emit(std::string(result ? "true" : "false"));
      else
        out.emit(json{{"divides", result}, {"mode", mode}});
      return result ? 0 : 1;
    }
    if (*enum_sb) {
      const int max_n = max_n_opt > 0 ? max_n_opt : braids::kDefaultSimpleEnumCap;
      const auto simples = braids::enum_simple(n_arg, max_n);
      if (count_only) {
        out.emit(json(simples.size()));
        return 0;
      }
      json members = json::array();
      for (const auto& s : simples) members.push_back(braids::to_text(s.word()));
      if (out.pretty) {
        std::string text;
        for (const auto& m : members) text += m.get<std::string>() + "\n";
        text += "count: " + std::to_string(simples.size());
        out.emit(text);
      } else {
        out.emit(json{{"n", n_arg}, {"count", simples.size()}, {"members", std::move(members)}});
      }
      return 0;
    }
    if (*deltadiv) {
      const int max_n = max_n_opt > 0 ? max_n_opt : braids::kDefaultDeltaDivisorsCap;
      const auto divisors = braids::enum_divisors_delta(n_arg, max_n, class_cap);
      if (count_only) {
        out.emit(json(divisors.size()));
        return 0;
      }
      json members = json::array();
      for (const auto& d : divisors) members.push_back(braids::to_text(d.word));
      if (out.pretty) {
        std::string text;
        for (const auto& m : members) text += m.get<std::string>() + "\n";
        text += "count: " + std::to_string(divisors.size());
        out.emit(text);
      } else {
        out.emit(json{{"n", n_arg}, {"count", divisors.size()}, {"members", std::move(members)}});
      }
      return 0;
    }
    if (*proj) {
      const auto p = braids::project(braids::parse_word(word_a));
      if (out.pretty)
        out.emit(braids::to_text(p));
      else
        out.emit(json{{"permutation", p.image}});
      return 0;
    }
    if (*cent) {
      const int max_n = max_n_opt > 0 ? max_n_opt : braids::kDefaultSimpleEnumCap;
      auto beta = braids::make_simple(braids::parse_word(beta_text), class_cap);
      if (beta.strands() != strands_arg)
        throw std::invalid_argument("--strands disagrees with the word's strand count");
      const int total = strands_arg + extend_arg;
      const auto result = braids::simple_centralizer(braids::embed_simple(beta, total), total,
                                                     max_n, class_cap);
      json members = json::array();
      for (const auto& m : result.members) members.push_back(braids::to_text(m.word()));
      json j{{"beta", braids::to_text(beta.word())},
             {"strands", strands_arg},
             {"extend", extend_arg},
             {"count", result.count()},
             {"members", std::move(members)}};
      if (extend_arg > 0 && beta.has_letter(strands_arg - 1))
        j["predicted_count"] =
            braids::predicted_count(beta, strands_arg, extend_arg, max_n, class_cap);
      if (out.pretty) {
        std::string text = "count: " + std::to_string(result.count());
        for (const auto& m : result.members) text += "\n" + braids::to_text(m.word());
        out.emit(text);
      } else {
        out.emit(j);
      }
      return 0;
    }
    if (*graph_cmd) {
      const auto g = build_family(family, n_arg, max_n_opt, class_cap);
      out.emit(braids::export_graph(g, dot_format ? braids::GraphFormat::dot
                                                  : braids::GraphFormat::json));
      return 0;
    }
    if (*planar_cmd) {
      const auto g = build_family(family, n_arg, max_n_opt, class_cap);
      const auto verdict = braids::is_planar(g, !no_witness);
      json j{{"family", family}, {"n", n_arg}, {"planar", verdict.planar}};
      if (verdict.witness) j["witness"] = witness_json(*verdict.witness);
      if (out.pretty) {
        std::string text = verdict.planar ? "planar" : "non-planar";
        if (verdict.witness) {
          text += std::string(": contains a ") +
                  (verdict.witness->kind == braids::Subdivision::Kind::K5 ? "K5" : "K33") +
                  " subdivision on";
          for (const auto& v : verdict.witness->branch) text += " \"" + v + "\"";
        }
        out.emit(text);
      } else {
        out.emit(j);
      }
      return verdict.planar ? 0 : 1;
    }
    if (*verify_cmd) {
      vopts.class_cap = class_cap;
      const auto report = braids::verify_all(vopts);
      if (out.pretty)
        out.emit(braids::report_to_text(report));
      else
        out.emit(braids::report_to_json(report));
      return report.all_pass() ? 0 : 1;
    }
  } catch (const braids::ResourceCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
