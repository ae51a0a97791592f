#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI with the given arguments, capturing stdout (and stderr when
// merge_stderr). The binary path is injected by the build.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(EWL_CLI_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string temp_path(const char* name) {
  return "/tmp/ewl_cli_test_" + std::to_string(getpid()) + "_" + name;
}

}  // namespace

TEST_CASE("usage surface") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("play --help").exit_code == 0);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("play --no-such-flag").exit_code == 2);
}

TEST_CASE("play evaluates rounds") {
  RunResult r = run_cli("play");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.output);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["command"] == "play");
  CHECK(doc["payoffs"]["alice"].get<double>() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(doc["payoffs"]["bob"].get<double>() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(doc["probabilities"]["pp"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));

  RunResult defect = run_cli("play --alice 3.141592653589793,0,0");
  REQUIRE(defect.exit_code == 0);
  json ddoc = json::parse(defect.output);
  CHECK(ddoc["payoffs"]["alice"].get<double>() == doctest::Approx(5.0).epsilon(1e-10));
  CHECK(ddoc["payoffs"]["bob"].get<double>() == doctest::Approx(0.0).epsilon(1e-10));

  RunResult raw = run_cli("play --bob-raw 0,0,1,0");
  REQUIRE(raw.exit_code == 0);
  json rdoc = json::parse(raw.output);
  CHECK(rdoc["payoffs"]["bob"].get<double>() == doctest::Approx(5.0).epsilon(1e-10));
}

TEST_CASE("play output is deterministic") {
  RunResult a = run_cli("play --alice 1.0,0.5,0.25 --bob 0.3,0.2,0.1 --gamma 1.2");
  RunResult b = run_cli("play --alice 1.0,0.5,0.25 --bob 0.3,0.2,0.1 --gamma 1.2");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("play csv") {
  RunResult r = run_cli("play --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.rfind("gamma,re_a_pp,im_a_pp,", 0) == 0);
  CHECK(r.output.find("\r") == std::string::npos);
  CHECK(r.output.back() == '\n');
}

TEST_CASE("play flag diagnostics") {
  RunResult both = run_cli("play --alice 1,2,3 --alice-raw 1,0,0,0", true);
  CHECK(both.exit_code == 2);

  RunResult bad_norm = run_cli("play --alice-raw 1,1,1,1", true);
  CHECK(bad_norm.exit_code == 2);
  CHECK(bad_norm.output.find("--alice-raw") != std::string::npos);

  RunResult bad_angles = run_cli("play --alice 1,2", true);
  CHECK(bad_angles.exit_code == 2);
  CHECK(bad_angles.output.find("--alice") != std::string::npos);

  RunResult bad_gamma = run_cli("play --gamma 3.0", true);
  CHECK(bad_gamma.exit_code == 2);
  CHECK(bad_gamma.output.find("--gamma") != std::string::npos);

  RunResult bad_payoffs = run_cli("play --payoffs 1,2,3", true);
  CHECK(bad_payoffs.exit_code == 2);
  CHECK(bad_payoffs.output.find("--payoffs") != std::string::npos);

  CHECK(run_cli("play --require-dilemma").exit_code == 0);
  RunResult not_dilemma = run_cli("play --require-dilemma --payoffs 1,2,3,4", true);
  CHECK(not_dilemma.exit_code == 2);
  CHECK(not_dilemma.output.find("dilemma") != std::string::npos);
}

TEST_CASE("counter computes the matching reply") {
  RunResult r = run_cli("counter --alice 3.141592653589793,0,0");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.output);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["match_residual"].get<double>() <= 1e-10);
  CHECK(doc["payoffs"]["alice"].get<double>() == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(doc["payoffs"]["bob"].get<double>() == doctest::Approx(3.0).epsilon(1e-10));

  // The theorem behind the reply needs maximal entanglement.
  RunResult partial = run_cli("counter --gamma 0.5 --alice 1,0,0", true);
  CHECK(partial.exit_code == 3);
  CHECK(partial.output.find("gamma") != std::string::npos);
}

TEST_CASE("scan emits the plotting table") {
  RunResult r = run_cli("scan --gamma-count 3 --samples 20 --seed 5");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "gamma,max_imag,jacobian_rank,samples");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK_FALSE(line.empty());
    CHECK(line.back() != ' ');
  }
  CHECK(rows == 3);
  CHECK(r.output.find("1.5707963267948966") != std::string::npos);
  CHECK(r.output.find("\r") == std::string::npos);

  RunResult again = run_cli("scan --gamma-count 3 --samples 20 --seed 5");
  CHECK(again.output == r.output);

  RunResult other_seed = run_cli("scan --gamma-count 3 --samples 20 --seed 6");
  CHECK(other_seed.output != r.output);

  CHECK(run_cli("scan --gamma-count 1", true).exit_code == 2);
  CHECK(run_cli("scan --samples 0", true).exit_code == 2);

  RunResult as_json = run_cli("scan --gamma-count 2 --samples 10 --format json");
  REQUIRE(as_json.exit_code == 0);
  json doc = json::parse(as_json.output);
  CHECK(doc["rows"].size() == 2);
  CHECK(doc["rows"][1]["jacobian_rank"] == 3);
}

TEST_CASE("nash search report") {
  RunResult r = run_cli("nash --gamma 0 --grid 5 --epsilon 0");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.output);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["certification"] == "grid-certified");
  CHECK(doc["vacuous"] == false);
  CHECK(doc["candidate_count"] == 625);
  CHECK(doc["truncated"] == false);
  REQUIRE(doc["candidates"].size() == 625);
  bool found = false;
  for (const auto& c : doc["candidates"]) {
    CHECK(c["max_gain"].get<double>() <= 0.0);
    if (c["alice"][0].get<double>() == doctest::Approx(3.141592653589793) &&
        c["alice"][1].get<double>() == 0.0 && c["alice"][2].get<double>() == 0.0 &&
        c["bob"][0].get<double>() == doctest::Approx(3.141592653589793) &&
        c["bob"][1].get<double>() == 0.0 && c["bob"][2].get<double>() == 0.0) {
      found = true;
      CHECK(c["payoff_alice"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  CHECK(found);

  RunResult capped = run_cli("nash --gamma 0 --grid 5 --epsilon 0 --max-candidates 10");
  REQUIRE(capped.exit_code == 0);
  json cdoc = json::parse(capped.output);
  CHECK(cdoc["truncated"] == true);
  CHECK(cdoc["candidate_count"] == 625);
  CHECK(cdoc["candidates"].size() == 10);

  RunResult empty = run_cli("nash --grid 8 --epsilon 1");
  REQUIRE(empty.exit_code == 0);
  json edoc = json::parse(empty.output);
  CHECK(edoc["certification"] == "counterstrategy-certified");
  CHECK(edoc["candidate_count"] == 0);

  CHECK(run_cli("nash --format csv", true).exit_code == 2);
  CHECK(run_cli("nash --grid 8 --budget 1000", true).exit_code == 2);
  CHECK(run_cli("nash --grid 3", true).exit_code == 2);
}

TEST_CASE("verify command and negative control") {
  RunResult r = run_cli("verify");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[PASS]") != std::string::npos);
  CHECK(r.output.find("[FAIL]") == std::string::npos);
  CHECK(r.output.find(" 0 failed") != std::string::npos);

  RunResult suite = run_cli("verify stability");
  CHECK(suite.exit_code == 0);
  CHECK(suite.output.find("stability/") != std::string::npos);
  CHECK(suite.output.find("so4/") == std::string::npos);

  RunResult faulty = run_cli("verify --inject-frame-fault");
  CHECK(faulty.exit_code == 1);
  CHECK(faulty.output.find("[FAIL]") != std::string::npos);

  CHECK(run_cli("verify bogus", true).exit_code == 2);

  RunResult as_json = run_cli("verify --format json");
  REQUIRE(as_json.exit_code == 0);
  json doc = json::parse(as_json.output);
  CHECK(doc["all_passed"] == true);
  CHECK(doc["checks"].size() >= 30);
}

TEST_CASE("output redirection") {
  std::string path = temp_path("scan.csv");
  RunResult direct = run_cli("scan --gamma-count 2 --samples 10 --seed 3");
  RunResult filed = run_cli("scan --gamma-count 2 --samples 10 --seed 3 --out " + path);
  CHECK(filed.exit_code == 0);
  CHECK(filed.output.empty());
  std::ifstream file(path, std::ios::binary);
  std::stringstream content;
  content << file.rdbuf();
  CHECK(content.str() == direct.output);
  std::remove(path.c_str());

  RunResult bad = run_cli("play --out /nonexistent-dir/x.json", true);
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("--out") != std::string::npos);
}
