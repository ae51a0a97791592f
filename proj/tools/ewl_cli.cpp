// Command-line front end for the entangled-game engine; links only the
// public C interface.
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ewl/ewl.h"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = kPi / 2.0;

int exit_for(ewl_status status) {
  switch (status) {
    case EWL_OK:
      return 0;
    case EWL_ERR_VERIFY_FAILED:
      return 1;
    case EWL_ERR_THEOREM_SCOPE:
      return 3;
    default:
      return 2;
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

bool parse_doubles(const std::string& text, std::size_t count,
                   std::vector<double>& out) {
  out.clear();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      double v = std::stod(item, &pos);
      while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos])))
        ++pos;
      if (pos != item.size()) return false;
      out.push_back(v);
    } catch (const std::exception&) {
      return false;
    }
  }
  return out.size() == count;
}

// Common run configuration shared by the subcommands.
struct Config {
  double gamma = kHalfPi;
  std::string payoffs;  // "r,s,t,p"
  double r = 3.0, s = 0.0, t = 5.0, p = 1.0;
  std::uint64_t seed = 1;
  std::string format;  // "", "csv" or "json"
  std::string out_path;
  bool require_dilemma = false;
};

void add_common_flags(CLI::App* cmd, Config& cfg, bool with_gamma = true) {
  if (with_gamma) {
    cmd->add_option("--gamma", cfg.gamma,
                    "Entangling parameter in radians, in [0, pi/2]")
        ->capture_default_str();
  }
  cmd->add_option("--payoffs", cfg.payoffs,
                  "Payoff table as r,s,t,p (default 3,0,5,1)");
  cmd->add_option("--seed", cfg.seed, "Seed for all random draws")
      ->capture_default_str();
  cmd->add_option("--format", cfg.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
  cmd->add_flag("--require-dilemma", cfg.require_dilemma,
                "Reject payoff tables violating t > r > p > s");
}

// Returns 0 on success, 2 on a bad flag value (diagnostic already printed).
int finish_config(Config& cfg) {
  if (!cfg.payoffs.empty()) {
    std::vector<double> v;
    if (!parse_doubles(cfg.payoffs, 4, v)) {
      std::cerr << "error: --payoffs: expected four comma-separated numbers r,s,t,p\n";
      return 2;
    }
    cfg.r = v[0];
    cfg.s = v[1];
    cfg.t = v[2];
    cfg.p = v[3];
  }
  if (cfg.require_dilemma && !(cfg.t > cfg.r && cfg.r > cfg.p && cfg.p > cfg.s)) {
    std::cerr << "error: --payoffs: table violates the dilemma ordering t > r > p > s\n";
    return 2;
  }
  return 0;
}

int emit(const Config& cfg, const std::string& content) {
  if (cfg.out_path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: --out: cannot open '" << cfg.out_path << "' for writing\n";
    return 2;
  }
  file << content;
  if (!file.good()) {
    std::cerr << "error: --out: write to '" << cfg.out_path << "' failed\n";
    return 2;
  }
  return 0;
}

// Strategy input: either three angles theta,phi,psi or four raw components
// re(alpha),im(alpha),re(beta),im(beta).
struct StrategySpec {
  std::string angles;
  std::string raw;
};

void add_strategy_flags(CLI::App* cmd, const std::string& name, StrategySpec& spec,
                        const std::string& role) {
  auto* a = cmd->add_option("--" + name, spec.angles,
                            role + " as angles theta,phi,psi");
  auto* r = cmd->add_option("--" + name + "-raw", spec.raw,
                            role + " as components re_a,im_a,re_b,im_b");
  a->excludes(r);
  r->excludes(a);
}

// Returns 0 and fills `out`, or 2 after printing a diagnostic naming the flag.
int resolve_strategy(const StrategySpec& spec, const std::string& name,
                     ewl_strategy& out) {
  std::vector<double> v;
  if (!spec.raw.empty()) {
    if (!parse_doubles(spec.raw, 4, v)) {
      std::cerr << "error: --" << name
                << "-raw: expected four comma-separated numbers\n";
      return 2;
    }
    ewl_status st = ewl_strategy_from_components(v[0], v[1], v[2], v[3], &out);
    if (st != EWL_OK) {
      std::cerr << "error: --" << name << "-raw: " << ewl_status_message(st) << "\n";
      return 2;
    }
    return 0;
  }
  if (!spec.angles.empty()) {
    if (!parse_doubles(spec.angles, 3, v)) {
      std::cerr << "error: --" << name
                << ": expected three comma-separated angles theta,phi,psi\n";
      return 2;
    }
    ewl_status st = ewl_strategy_from_angles(v[0], v[1], v[2], &out);
    if (st != EWL_OK) {
      std::cerr << "error: --" << name << ": " << ewl_status_message(st) << "\n";
      return 2;
    }
    return 0;
  }
  ewl_strategy_identity(&out);
  return 0;
}

json strategy_json(const ewl_strategy& s) {
  double theta = 0.0, phi = 0.0, psi = 0.0;
  ewl_strategy_to_angles(&s, &theta, &phi, &psi);
  return {{"re_alpha", s.re_alpha},
          {"im_alpha", s.im_alpha},
          {"re_beta", s.re_beta},
          {"im_beta", s.im_beta},
          {"angles", {theta, phi, psi}}};
}

json table_json(const Config& cfg) {
  return {{"r", cfg.r}, {"s", cfg.s}, {"t", cfg.t}, {"p", cfg.p}};
}

json amplitudes_json(const ewl_amplitudes& a) {
  const char* names[4] = {"pp", "mp", "pm", "mm"};
  json out;
  for (int k = 0; k < 4; ++k) out[names[k]] = {a.re[k], a.im[k]};
  return out;
}

json probabilities_json(const double pr[4]) {
  return {{"pp", pr[0]}, {"mp", pr[1]}, {"pm", pr[2]}, {"mm", pr[3]}};
}

struct GameHandle {
  ewl_game* game = nullptr;
  ~GameHandle() { ewl_game_destroy(game); }
};

int make_game(const Config& cfg, GameHandle& handle) {
  ewl_status st =
      ewl_game_create(cfg.gamma, cfg.r, cfg.s, cfg.t, cfg.p, &handle.game);
  if (st != EWL_OK) {
    std::cerr << "error: --gamma: " << ewl_status_message(st) << "\n";
    return exit_for(st);
  }
  return 0;
}

int cmd_play(Config& cfg, const StrategySpec& alice_spec,
             const StrategySpec& bob_spec) {
  if (int rc = finish_config(cfg)) return rc;
  ewl_strategy alice, bob;
  if (int rc = resolve_strategy(alice_spec, "alice", alice)) return rc;
  if (int rc = resolve_strategy(bob_spec, "bob", bob)) return rc;

  GameHandle handle;
  if (int rc = make_game(cfg, handle)) return rc;

  ewl_amplitudes amps;
  double pr[4];
  ewl_payoffs pay;
  ewl_status st = ewl_game_eval(handle.game, &alice, &bob, &amps, pr, &pay);
  if (st != EWL_OK) {
    std::cerr << "error: " << ewl_status_message(st) << "\n";
    return exit_for(st);
  }

  std::string content;
  if (cfg.format == "csv") {
    std::string row = fmt(cfg.gamma);
    for (int k = 0; k < 4; ++k) row += "," + fmt(amps.re[k]) + "," + fmt(amps.im[k]);
    for (int k = 0; k < 4; ++k) row += "," + fmt(pr[k]);
    row += "," + fmt(pay.alice) + "," + fmt(pay.bob);
    content =
        "gamma,re_a_pp,im_a_pp,re_a_mp,im_a_mp,re_a_pm,im_a_pm,re_a_mm,im_a_mm,"
        "p_pp,p_mp,p_pm,p_mm,payoff_alice,payoff_bob\n" +
        row + "\n";
  } else {
    json doc = {{"schema_version", 1},
                {"command", "play"},
                {"gamma", cfg.gamma},
                {"payoff_table", table_json(cfg)},
                {"alice", strategy_json(alice)},
                {"bob", strategy_json(bob)},
                {"amplitudes", amplitudes_json(amps)},
                {"probabilities", probabilities_json(pr)},
                {"payoffs", {{"alice", pay.alice}, {"bob", pay.bob}}}};
    content = doc.dump(2) + "\n";
  }
  return emit(cfg, content);
}

int cmd_counter(Config& cfg, const StrategySpec& target_alice_spec,
                const StrategySpec& target_bob_spec,
                const StrategySpec& alice_spec) {
  if (int rc = finish_config(cfg)) return rc;
  ewl_strategy target_alice, target_bob, alice;
  if (int rc = resolve_strategy(target_alice_spec, "target-alice", target_alice))
    return rc;
  if (int rc = resolve_strategy(target_bob_spec, "target-bob", target_bob)) return rc;
  if (int rc = resolve_strategy(alice_spec, "alice", alice)) return rc;

  GameHandle handle;
  if (int rc = make_game(cfg, handle)) return rc;

  ewl_strategy reply;
  ewl_status st = ewl_game_counterstrategy(handle.game, &target_alice, &target_bob,
                                           &alice, &reply);
  if (st == EWL_ERR_THEOREM_SCOPE) {
    std::cerr << "error: --gamma: the counterstrategy identity holds only at "
                 "maximal entanglement (gamma = pi/2)\n";
    return 3;
  }
  if (st != EWL_OK) {
    std::cerr << "error: " << ewl_status_message(st) << "\n";
    return exit_for(st);
  }

  ewl_amplitudes target_amps, played_amps;
  double pr[4];
  ewl_payoffs pay;
  if (ewl_status est = ewl_game_eval(handle.game, &target_alice, &target_bob,
                                     &target_amps, nullptr, nullptr);
      est != EWL_OK) {
    std::cerr << "error: " << ewl_status_message(est) << "\n";
    return exit_for(est);
  }
  if (ewl_status est =
          ewl_game_eval(handle.game, &alice, &reply, &played_amps, pr, &pay);
      est != EWL_OK) {
    std::cerr << "error: " << ewl_status_message(est) << "\n";
    return exit_for(est);
  }
  double residual = 0.0;
  for (int k = 0; k < 4; ++k) {
    residual = std::max({residual, std::abs(played_amps.re[k] - target_amps.re[k]),
                         std::abs(played_amps.im[k] - target_amps.im[k])});
  }

  std::string content;
  if (cfg.format == "csv") {
    content =
        "gamma,reply_re_alpha,reply_im_alpha,reply_re_beta,reply_im_beta,"
        "match_residual,payoff_alice,payoff_bob\n" +
        fmt(cfg.gamma) + "," + fmt(reply.re_alpha) + "," + fmt(reply.im_alpha) + "," +
        fmt(reply.re_beta) + "," + fmt(reply.im_beta) + "," + fmt(residual) + "," +
        fmt(pay.alice) + "," + fmt(pay.bob) + "\n";
  } else {
    json doc = {{"schema_version", 1},
                {"command", "counter"},
                {"gamma", cfg.gamma},
                {"payoff_table", table_json(cfg)},
                {"target",
                 {{"alice", strategy_json(target_alice)},
                  {"bob", strategy_json(target_bob)}}},
                {"alice_move", strategy_json(alice)},
                {"reply", strategy_json(reply)},
                {"amplitudes", amplitudes_json(played_amps)},
                {"probabilities", probabilities_json(pr)},
                {"payoffs", {{"alice", pay.alice}, {"bob", pay.bob}}},
                {"match_residual", residual}};
    content = doc.dump(2) + "\n";
  }
  return emit(cfg, content);
}

struct CheckRow {
  std::string suite;
  std::string name;
  double residual;
  double bound;
  bool passed;
  bool require_floor;
};

struct VerifyCollector {
  std::vector<CheckRow> rows;
};

void verify_callback(const ewl_check_result* result, void* user) {
  auto* collector = static_cast<VerifyCollector*>(user);
  collector->rows.push_back({result->suite, result->name, result->residual,
                             result->bound, result->passed != 0,
                             result->require_floor != 0});
}

int cmd_verify(Config& cfg, const std::string& suite, bool inject_fault) {
  if (int rc = finish_config(cfg)) return rc;
  VerifyCollector collector;
  ewl_status st = ewl_verify_run(suite.c_str(), cfg.seed, inject_fault ? 1 : 0,
                                 verify_callback, &collector);
  if (st != EWL_OK && st != EWL_ERR_VERIFY_FAILED) {
    std::cerr << "error: " << ewl_status_message(st) << "\n";
    return exit_for(st);
  }

  std::string content;
  if (cfg.format == "json") {
    json checks = json::array();
    for (const auto& row : collector.rows) {
      checks.push_back({{"suite", row.suite},
                        {"name", row.name},
                        {"residual", row.residual},
                        {"bound", row.bound},
                        {"relation", row.require_floor ? "at-least" : "at-most"},
                        {"passed", row.passed != 0}});
    }
    json doc = {{"schema_version", 1},
                {"command", "verify"},
                {"suite", suite},
                {"seed", cfg.seed},
                {"checks", checks},
                {"all_passed", st == EWL_OK}};
    content = doc.dump(2) + "\n";
  } else if (cfg.format == "csv") {
    content = "suite,check,residual,bound,relation,passed\n";
    for (const auto& row : collector.rows) {
      content += std::string(row.suite) + "," + row.name + "," + fmt(row.residual) +
                 "," + fmt(row.bound) + "," +
                 (row.require_floor ? "at-least" : "at-most") + "," +
                 (row.passed ? "true" : "false") + "\n";
    }
  } else {
    std::size_t failed = 0;
    for (const auto& row : collector.rows) {
      if (!row.passed) ++failed;
      content += std::string(row.passed ? "[PASS] " : "[FAIL] ") + row.suite + "/" +
                 row.name + "  residual=" + fmt_short(row.residual) +
                 (row.require_floor ? "  (required >= " : "  (required <= ") +
                 fmt_short(row.bound) + ")\n";
    }
    content += std::to_string(collector.rows.size()) + " checks, " +
               std::to_string(failed) + " failed\n";
  }
  if (int rc = emit(cfg, content)) return rc;
  return st == EWL_OK ? 0 : 1;
}

int cmd_scan(Config& cfg, int gamma_count, int samples) {
  if (int rc = finish_config(cfg)) return rc;
  if (gamma_count < 2) {
    std::cerr << "error: --gamma-count: must be at least 2\n";
    return 2;
  }
  if (samples < 1) {
    std::cerr << "error: --samples: must be at least 1\n";
    return 2;
  }
  std::vector<double> gammas(static_cast<std::size_t>(gamma_count));
  for (int i = 0; i < gamma_count; ++i) {
    gammas[static_cast<std::size_t>(i)] = kHalfPi * i / (gamma_count - 1);
  }
  std::vector<ewl_scan_row> rows(gammas.size());
  ewl_status st = ewl_reality_scan(gammas.data(), gammas.size(),
                                   static_cast<int32_t>(samples), cfg.seed,
                                   rows.data());
  if (st != EWL_OK) {
    std::cerr << "error: " << ewl_status_message(st) << "\n";
    return exit_for(st);
  }

  std::string content;
  if (cfg.format == "json") {
    json jrows = json::array();
    for (const auto& row : rows) {
      jrows.push_back({{"gamma", row.gamma},
                       {"max_imag", row.max_imag},
                       {"jacobian_rank", row.jacobian_rank},
                       {"samples", row.sample_count}});
    }
    json doc = {{"schema_version", 1},
                {"command", "scan"},
                {"seed", cfg.seed},
                {"rows", jrows}};
    content = doc.dump(2) + "\n";
  } else {
    content = "gamma,max_imag,jacobian_rank,samples\n";
    for (const auto& row : rows) {
      content += fmt(row.gamma) + "," + fmt(row.max_imag) + "," +
                 std::to_string(row.jacobian_rank) + "," +
                 std::to_string(row.sample_count) + "\n";
    }
  }
  return emit(cfg, content);
}

int cmd_nash(Config& cfg, int grid, double epsilon, std::uint64_t budget,
             int max_candidates) {
  if (int rc = finish_config(cfg)) return rc;
  if (cfg.format == "csv") {
    std::cerr << "error: --format: the nash report is JSON only\n";
    return 2;
  }
  GameHandle handle;
  if (int rc = make_game(cfg, handle)) return rc;

  ewl_nash_report* report = nullptr;
  ewl_status st = ewl_nash_search(handle.game, grid, epsilon, budget, &report);
  if (st != EWL_OK) {
    std::cerr << "error: " << ewl_status_message(st) << "\n";
    return exit_for(st);
  }

  size_t count = 0;
  const char* certification = "";
  int vacuous = 0;
  ewl_nash_report_size(report, &count);
  ewl_nash_report_certification(report, &certification);
  ewl_nash_report_vacuous(report, &vacuous);

  std::size_t shown =
      std::min(count, static_cast<std::size_t>(max_candidates < 0 ? 0 : max_candidates));
  json candidates = json::array();
  for (std::size_t i = 0; i < shown; ++i) {
    ewl_nash_candidate c;
    ewl_nash_report_candidate(report, i, &c);
    candidates.push_back(
        {{"alice", {c.alice_angles[0], c.alice_angles[1], c.alice_angles[2]}},
         {"bob", {c.bob_angles[0], c.bob_angles[1], c.bob_angles[2]}},
         {"payoff_alice", c.payoff_alice},
         {"payoff_bob", c.payoff_bob},
         {"max_gain", c.max_gain}});
  }
  json doc = {{"schema_version", 1},
              {"command", "nash"},
              {"gamma", cfg.gamma},
              {"payoff_table", table_json(cfg)},
              {"grid_per_axis", grid},
              {"epsilon", epsilon},
              {"certification", certification},
              {"vacuous", vacuous != 0},
              {"candidate_count", count},
              {"truncated", shown < count},
              {"max_candidates", max_candidates},
              {"candidates", candidates}};
  ewl_nash_report_destroy(report);
  return emit(cfg, doc.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entangled two-player game engine (strategies, counterstrategies, "
               "verification suites, reality scans, equilibrium search)"};
  app.require_subcommand(1);

  Config play_cfg, counter_cfg, verify_cfg, scan_cfg, nash_cfg;

  auto* play = app.add_subcommand("play", "Evaluate one round for a strategy pair");
  StrategySpec play_alice, play_bob;
  add_common_flags(play, play_cfg);
  add_strategy_flags(play, "alice", play_alice, "First player's move");
  add_strategy_flags(play, "bob", play_bob, "Second player's move");

  auto* counter = app.add_subcommand(
      "counter", "Second-player reply reproducing a target profile's amplitudes");
  StrategySpec counter_target_alice, counter_target_bob, counter_alice;
  add_common_flags(counter, counter_cfg);
  add_strategy_flags(counter, "target-alice", counter_target_alice,
                     "Target profile, first player");
  add_strategy_flags(counter, "target-bob", counter_target_bob,
                     "Target profile, second player");
  add_strategy_flags(counter, "alice", counter_alice, "First player's actual move");

  auto* verify = app.add_subcommand("verify", "Run a self-verification suite");
  std::string suite = "all";
  bool inject_fault = false;
  add_common_flags(verify, verify_cfg, /*with_gamma=*/false);
  verify->add_option("suite", suite, "reality, so4, quaternion, stability or all")
      ->check(CLI::IsMember({"reality", "so4", "quaternion", "stability", "all"}));
  verify->add_flag("--inject-frame-fault", inject_fault,
                   "Corrupt the isomorphism frame first (negative control)")
      ->group("");

  auto* scan = app.add_subcommand(
      "scan", "Largest imaginary amplitude and manifold rank over a gamma grid");
  int gamma_count = 9;
  int samples = 200;
  add_common_flags(scan, scan_cfg, /*with_gamma=*/false);
  scan->add_option("--gamma-count", gamma_count,
                   "Number of gamma grid points over [0, pi/2]")
      ->capture_default_str();
  scan->add_option("--samples", samples, "Strategy pairs sampled per gamma")
      ->capture_default_str();

  auto* nash = app.add_subcommand(
      "nash", "Exhaustive epsilon-equilibrium search over the angle grid");
  int grid = 8;
  double epsilon = 1.0;
  std::uint64_t budget = 0;
  int max_candidates = 4096;
  add_common_flags(nash, nash_cfg);
  nash->add_option("--grid", grid, "Grid points per angle axis (>= 4)")
      ->capture_default_str();
  nash->add_option("--epsilon", epsilon, "Allowed unilateral improvement")
      ->capture_default_str();
  nash->add_option("--budget", budget,
                   "Profile-evaluation cap (0 = library default of 2e7)");
  nash->add_option("--max-candidates", max_candidates,
                   "Cap on candidates embedded in the JSON report")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (play->parsed()) return cmd_play(play_cfg, play_alice, play_bob);
  if (counter->parsed())
    return cmd_counter(counter_cfg, counter_target_alice, counter_target_bob,
                       counter_alice);
  if (verify->parsed()) return cmd_verify(verify_cfg, suite, inject_fault);
  if (scan->parsed()) return cmd_scan(scan_cfg, gamma_count, samples);
  if (nash->parsed()) return cmd_nash(nash_cfg, grid, epsilon, budget, max_candidates);
  return 2;
}
