#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = "cli_test_output.txt";
  const std::string cmd = std::string(BRAIDKIT_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
#ifdef _WIN32
  r.exit_code = status;
#else
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#endif
  std::ifstream f(out_path);
  std::stringstream ss;
  ss << f.rdbuf();
  r.output = ss.str();
  std::remove(out_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("eq exit codes follow the verdict") {
  CHECK(run_cli("eq \"5: 4 3 3 2 3\" \"5: 2 4 3 2 2\"").exit_code == 0);
  CHECK(run_cli("eq \"3: 1 2\" \"3: 2 1\"").exit_code == 1);
}

TEST_CASE("canon prints the canonical word") {
  const auto r = run_cli("canon \"5: 2 3 1 3 2\"");
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.output).at("canonical") == "5: 2 1 3 3 2");
  const auto pretty = run_cli("--pretty canon \"5: 2 3 1 3 2\"");
  CHECK(pretty.output == "5: 2 1 3 3 2\n");
}

TEST_CASE("malformed words exit 2 with a position") {
  const auto r = run_cli("canon \"5: 1 9\"");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("position 6") != std::string::npos);
  CHECK(run_cli("nonsense-subcommand").exit_code == 2);
  CHECK(run_cli("eq \"3: 1\"").exit_code == 2);  // missing argument
}

TEST_CASE("resource caps exit 3") {
  CHECK(run_cli("--max-class-size 10 canon \"5: 1 2 1 3 2 1 4 3 2 1\"").exit_code == 3);
  CHECK(run_cli("enum-simple 11").exit_code == 3);
  CHECK(run_cli("delta-divisors 6").exit_code == 3);
}

TEST_CASE("enum-simple counts") {
  const auto r = run_cli("enum-simple 5 --count");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "34\n");
  const auto full = run_cli("enum-simple 3");
  const auto j = nlohmann::json::parse(full.output);
  CHECK(j.at("count") == 5);
  CHECK(j.at("members").size() == 5);
}

TEST_CASE("divides variants") {
  CHECK(run_cli("divides \"5: 3\" \"5: 1 3 2 3\"").exit_code == 0);
  CHECK(run_cli("divides --left \"5: 3\" \"5: 1 3 2 4\"").exit_code == 0);
  CHECK(run_cli("divides --left \"3: 2\" \"3: 1 2\"").exit_code == 1);
  CHECK(run_cli("divides --left --right \"3: 2\" \"3: 1 2\"").exit_code == 2);
}

TEST_CASE("project prints one-line images") {
  const auto r = run_cli("project \"5: 1 3 2 3\"");
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.output).at("permutation") ==
        nlohmann::json::parse("[4,1,3,2,5]"));
  CHECK(run_cli("--pretty project \"5: 1 3 2 3\"").output == "[4,1,3,2,5]\n");
}

TEST_CASE("centralizer command") {
  const auto r = run_cli("centralizer --beta \"4: 1\" --strands 4");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("count") == 4);
  const auto ext = run_cli("centralizer --beta \"2: 1\" --strands 2 --extend 3");
  const auto je = nlohmann::json::parse(ext.output);
  CHECK(je.at("count") == 10);
  CHECK(je.at("predicted_count") == 10);
  CHECK(run_cli("centralizer --beta \"4: 1 2 1\" --strands 4").exit_code == 2);  // not simple
}

TEST_CASE("graph export and planarity verdicts") {
  const auto dot = run_cli("graph --family sigma --n 3 --dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.output.find("graph G {") == 0);
  CHECK(dot.output.find("\"[2,3,1]\" -- \"[3,1,2]\";") != std::string::npos);

  const auto j = nlohmann::json::parse(run_cli("graph --family sb --n 3").output);
  CHECK(j.at("vertices").size() == 4);

  CHECK(run_cli("planar --family sb --n 5 --no-witness").exit_code == 0);
  const auto np = run_cli("planar --family ssigma --n 5");
  CHECK(np.exit_code == 1);
  const auto jw = nlohmann::json::parse(np.output);
  CHECK(jw.at("planar") == false);
  CHECK(jw.contains("witness"));
}

TEST_CASE("verify runs its suite and is byte-deterministic") {
  const auto a = run_cli("verify --max-n-braids 3 --max-n-perms 3");
  CHECK(a.exit_code == 0);
  const auto b = run_cli("verify --max-n-braids 3 --max-n-perms 3");
  CHECK(a.output == b.output);
  const auto j = nlohmann::json::parse(a.output);
  CHECK(j.at("summary").at("all_pass") == true);
}

TEST_CASE("pretty verify prints one line per claim") {
  const auto r = run_cli("--pretty verify --max-n-braids 2 --max-n-perms 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS 01.simple-count.n1") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);
  CHECK(r.output.find("summary:") != std::string::npos);
}

TEST_CASE("output goes to a file with --out") {
  const auto r = run_cli("--out cli_out_file.json enum-simple 4 --count");
  CHECK(r.exit_code == 0);
  std::ifstream f("cli_out_file.json");
  std::string content;
  std::getline(f, content);
  CHECK(content == "13");
  std::remove("cli_out_file.json");
}
