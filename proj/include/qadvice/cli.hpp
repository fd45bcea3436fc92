// Copyright 2026 The qadvice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QADVICE_CLI_HPP_
#define QADVICE_CLI_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qadvice/catalog.hpp"
#include "qadvice/classical.hpp"
#include "qadvice/equilibrium.hpp"
#include "qadvice/game_model.hpp"
#include "qadvice/io.hpp"
#include "qadvice/npa.hpp"
#include "qadvice/quantum.hpp"
#include "qadvice/seesaw.hpp"

namespace qadvice::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kInvalid = 2, kSolverFailure = 3 };

struct CommandResult {
  Json report;
  int exit_code = kOk;
};

struct CommonOptions {
  int restarts = 50;
  std::uint64_t seed = 0;
};

// A catalog name or a path to a game file.
inline Game load_game(const std::string& source) {
  for (const auto& entry : catalog()) {
    if (entry.name == source) return entry.game;
  }
  if (!std::filesystem::exists(source)) {
    throw ValidationError("\"" + source + "\" is neither a catalog game nor a readable file");
  }
  return parse_game_file(source);
}

struct LoadedStrategy {
  QuantumStrategy strategy;
  Json provenance;
  bool numerical = false;  // came from an optimizer
};

// "ghz", "svetlichny", "seesaw" or a strategy file path.
inline LoadedStrategy load_strategy(const Game& game, const std::string& source, const CommonOptions& common) {
  if (source == "ghz") return {ghz_game_strategy(), Json{{"source", "ghz"}}, false};
  if (source == "svetlichny") return {svetlichny_strategy(), Json{{"source", "svetlichny"}}, false};
  if (source == "seesaw") {
    SeesawOptions options;
    options.restarts = common.restarts;
    options.seed = common.seed;
    const SeesawResult result = seesaw_optimize(game, options);
    Json provenance{{"source", "seesaw"},
                    {"restarts", common.restarts},
                    {"seed", common.seed},
                    {"best_restart", result.best_restart},
                    {"total", result.total},
                    {"sweeps", result.restarts[result.best_restart].sweeps}};
    return {result.strategy, provenance, true};
  }
  if (!std::filesystem::exists(source)) {
    throw ValidationError("strategy \"" + source + "\" is not ghz, svetlichny, seesaw or a readable file");
  }
  return {parse_strategy_file(source), Json{{"source", "file"}, {"path", source}}, false};
}

inline Json game_header(const Game& game) {
  return Json{{"name", game.name()}, {"hash", game_hash(game)}};
}

inline Json rationals(const ExactPayoffs& payoffs) {
  Json out = Json::array();
  for (const auto& v : payoffs.values) out.push_back(format_rational(v));
  return out;
}

inline Json reals(const std::vector<double>& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(v);
  return out;
}

inline CommandResult cmd_catalog() {
  Json games = Json::array();
  for (const auto& entry : catalog()) {
    Json names = Json::array();
    for (const auto& p : entry.game.players()) names.push_back(p.name);
    games.push_back(Json{{"name", entry.name},
                         {"description", entry.description},
                         {"hash", game_hash(entry.game)},
                         {"players", names},
                         {"support", entry.game.support().size()}});
  }
  return {Json{{"command", "catalog"}, {"games", games}}, kOk};
}

inline CommandResult cmd_analyze_classical(const Game& game) {
  const auto optimum = classical_social_optimum(game);
  Json maximizers = Json::array();
  for (const auto& profile : optimum.maximizers) maximizers.push_back(describe_profile(game, profile));
  Json equilibria = Json::array();
  for (const auto& eq : pure_nash_equilibria(game)) {
    equilibria.push_back(Json{{"profile", describe_profile(game, eq.profile)},
                              {"payoffs", rationals(eq.payoffs)},
                              {"total", format_rational(eq.payoffs.total())}});
  }
  Json vertices = Json::array();
  for (const auto& v : payoff_polytope_vertices(game)) vertices.push_back(rationals(v));
  Json extreme = Json::array();
  for (const auto& v : extreme_payoff_points(game)) extreme.push_back(rationals(v));
  Json report{{"command", "analyze-classical"},
              {"game", game_header(game)},
              {"pure_profiles", ProfileSpace(game).size()},
              {"social_optimum", Json{{"value", format_rational(optimum.value)}, {"profiles", maximizers}}},
              {"pure_nash_equilibria", equilibria},
              {"payoff_polytope_vertices", vertices},
              {"extreme_points", extreme}};
  return {report, kOk};
}

inline Json behavior_json(const Game& game, const RealBehavior& behavior) {
  Json outputs = Json::array();
  for (std::size_t y = 0; y < game.outputs().size(); ++y) outputs.push_back(game.output_label(y));
  Json rows = Json::array();
  for (std::size_t x : game.support()) {
    Json column = Json::array();
    for (std::size_t y = 0; y < game.outputs().size(); ++y) column.push_back(behavior(x, y));
    rows.push_back(Json{{"x", game.input_label(x)}, {"p", column}});
  }
  return Json{{"outputs", outputs}, {"rows", rows}};
}

inline CommandResult cmd_eval_quantum(const Game& game, const std::string& strategy_source,
                                      const CommonOptions& common) {
  const LoadedStrategy loaded = load_strategy(game, strategy_source, common);
  require_compatible(game, loaded.strategy);
  const RealBehavior behavior = behavior_of_quantum(loaded.strategy);
  const RealPayoffs payoffs = average_payoffs(game, behavior);
  Json report{{"command", "eval-quantum"}, {"game", game_header(game)}, {"strategy", loaded.provenance}};
  report["strategy"]["definition"] = strategy_to_json(loaded.strategy);
  report["payoffs"] = reals(payoffs.values);
  report["total"] = payoffs.total();
  if (game.player_count() == 3 && game.all_binary()) {
    report["svetlichny_value"] = svetlichny_value(behavior);
    report["ghz_winning_probability"] = ghz_winning_probability(behavior);
  }
  report["behavior"] = behavior_json(game, behavior);
  return {report, kOk};
}

inline BoundMethod parse_method(const std::string& name) {
  if (name == "exact" || name == "exact_povm") return BoundMethod::kExactPovm;
  if (name == "bound" || name == "outcome_correlation") return BoundMethod::kOutcomeCorrelation;
  if (name == "npa" || name == "npa_sdp") return BoundMethod::kNpaSdp;
  throw ValidationError("unknown method \"" + name + "\" (expected exact, bound or npa)");
}

// 1e-9 for analytic strategies, 1e-6 for optimizer output or when the bound
// comes from the interior-point solver.
inline double default_tolerance(BoundMethod method, bool numerical) {
  return method == BoundMethod::kNpaSdp || numerical ? 1e-6 : 1e-9;
}

inline CommandResult cmd_verify_equilibrium(const Game& game, const std::string& strategy_source,
                                            const std::string& method_name, std::optional<double> tol,
                                            const CommonOptions& common,
                                            const std::string& dump_dir = "") {
  const BoundMethod method = parse_method(method_name);
  const LoadedStrategy loaded = load_strategy(game, strategy_source, common);
  const double tolerance = tol.value_or(default_tolerance(method, loaded.numerical));
  if (!dump_dir.empty() && method == BoundMethod::kNpaSdp) {
    std::filesystem::create_directories(dump_dir);
    for (int p = 0; p < game.player_count(); ++p) {
      std::ofstream out(std::filesystem::path(dump_dir) / ("sdp_" + game.player(p).name + ".txt"));
      write_sdp_text(out, build_deviation_sdp(game, loaded.strategy, p).problem);
    }
  }
  const EquilibriumVerdict verdict = verify_quantum_equilibrium(game, loaded.strategy, method, tolerance);
  Json players = Json::array();
  for (const auto& r : verdict.reports) {
    Json entry{{"player", game.player(r.player).name},
               {"current_payoff", r.current_payoff},
               {"bound", r.best_response_value},
               {"gain", r.gain()}};
    if (r.witness) {
      Json witness = Json::array();
      for (const auto& m : *r.witness) {
        witness.push_back(Json{{"M0", io_detail::operator_json(m.effect(0))}, {"M1", io_detail::operator_json(m.effect(1))}});
      }
      entry["witness"] = witness;
    }
    // Bounds are shown next to the exact POVM best response they relax.
    if (method != BoundMethod::kExactPovm) {
      entry["exact_povm_value"] = exact_best_response_value(game, loaded.strategy, r.player).best_response_value;
    }
    if (r.solver) {
      entry["solver"] = Json{{"iterations", r.solver->iterations}, {"gap", r.solver->gap}, {"optimum", r.solver->optimum}};
    }
    players.push_back(entry);
  }
  Json report{{"command", "verify-equilibrium"},
              {"game", game_header(game)},
              {"strategy", loaded.provenance},
              {"method", std::string(to_string(method))},
              {"tolerance", tolerance},
              {"equilibrium", verdict.is_equilibrium},
              {"players", players}};
  return {report, verdict.is_equilibrium ? kOk : kNegative};
}

namespace detail {

// Uniform double in [0, 1) from the top 53 bits; portable across standard
// libraries, unlike std::uniform_real_distribution.
inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::size_t draw(std::mt19937_64& rng, const std::vector<double>& cumulative) {
  const double u = unit(rng) * cumulative.back();
  // First entry whose cumulative mass exceeds u; it has positive mass.
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  if (it == cumulative.end()) {
    it = std::lower_bound(cumulative.begin(), cumulative.end(), cumulative.back());
  }
  return static_cast<std::size_t>(it - cumulative.begin());
}

}  // namespace detail

struct SimulationSummary {
  std::vector<double> mean;
  std::vector<double> standard_error;
  std::vector<Rational> exact_mean;  // empirical mean as an exact fraction
  std::vector<std::uint64_t> cell_counts;
};

// Plays `rounds` rounds: x from the prior, y from the behavior column.
// Payoffs are tallied per (x, y) cell, so the empirical moments are exact
// fractions of the game's rational payoffs.
inline SimulationSummary simulate_rounds(const Game& game, const RealBehavior& behavior, std::uint64_t rounds,
                                         std::uint64_t seed) {
  if (rounds < 1) throw DomainError("rounds must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<double> prior_cdf;
  double acc = 0.0;
  for (std::size_t x = 0; x < game.inputs().size(); ++x) prior_cdf.push_back(acc += to_double(game.prior(x)));
  const std::size_t ny = game.outputs().size();
  std::vector<std::vector<double>> column_cdf(game.inputs().size());
  for (std::size_t x : game.support()) {
    if (!behavior.defined(x)) {
      throw StructuralError("behavior has no entry for supported input x=" + game.input_label(x));
    }
    double c = 0.0;
    for (std::size_t y = 0; y < ny; ++y) column_cdf[x].push_back(c += std::max(0.0, behavior(x, y)));
  }
  SimulationSummary out;
  out.cell_counts.assign(game.inputs().size() * ny, 0);
  for (std::uint64_t k = 0; k < rounds; ++k) {
    const std::size_t x = detail::draw(rng, prior_cdf);
    const std::size_t y = detail::draw(rng, column_cdf[x]);
    ++out.cell_counts[x * ny + y];
  }
  const int n = game.player_count();
  for (int i = 0; i < n; ++i) {
    Rational sum = 0, sum_sq = 0;
    for (std::size_t cell = 0; cell < out.cell_counts.size(); ++cell) {
      if (out.cell_counts[cell] == 0) continue;
      const Rational& pay = game.payoff(cell / ny, cell % ny, i);
      sum += pay * out.cell_counts[cell];
      sum_sq += pay * pay * out.cell_counts[cell];
    }
    const Rational mean = sum / rounds;
    out.exact_mean.push_back(mean);
    out.mean.push_back(to_double(mean));
    // Sample variance with Bessel's correction.
    const double var = rounds > 1 ? to_double((sum_sq - mean * sum) / (rounds - 1)) : 0.0;
    out.standard_error.push_back(std::sqrt(std::max(0.0, var) / static_cast<double>(rounds)));
  }
  return out;
}

inline CommandResult cmd_simulate(const Game& game, const std::string& strategy_source,
                                  const std::string& behavior_path, std::uint64_t rounds,
                                  const CommonOptions& common) {
  RealBehavior behavior;
  Json source;
  if (!behavior_path.empty()) {
    behavior = parse_behavior_file(behavior_path, game);
    source = Json{{"source", "behavior-file"}, {"path", behavior_path}};
  } else {
    const LoadedStrategy loaded = load_strategy(game, strategy_source, common);
    require_compatible(game, loaded.strategy);
    behavior = behavior_of_quantum(loaded.strategy);
    source = loaded.provenance;
  }
  const SimulationSummary summary = simulate_rounds(game, behavior, rounds, common.seed);
  const RealPayoffs analytic = average_payoffs(game, behavior);
  Json players = Json::array();
  for (int i = 0; i < game.player_count(); ++i) {
    players.push_back(Json{{"player", game.player(i).name},
                           {"mean", summary.mean[i]},
                           {"standard_error", summary.standard_error[i]},
                           {"analytic", analytic[i]},
                           {"z_score", summary.standard_error[i] > 0
                                           ? (summary.mean[i] - analytic[i]) / summary.standard_error[i]
                                           : 0.0}});
  }
  Json report{{"command", "simulate"},  {"game", game_header(game)}, {"strategy", source},
              {"rounds", rounds},       {"seed", common.seed},       {"players", players}};
  return {report, kOk};
}

// ---- human-readable rendering ----

inline std::string format_real(double v) {
  std::ostringstream out;
  out << std::setprecision(6) << v;
  return out.str();
}

inline std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

// Strings pass through (rationals are already fractions); doubles get six
// significant digits.
inline std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_number_float()) return format_real(v.get<double>());
  return v.dump();
}

inline std::string row_of(const Json& values) {
  std::string out = "(";
  for (std::size_t k = 0; k < values.size(); ++k) out += (k ? ", " : "") + cell(values[k]);
  return out + ")";
}

inline std::string render_human(const Json& report) {
  std::ostringstream out;
  const std::string command = report.value("command", "");
  if (report.contains("game")) {
    out << "game " << report["game"]["name"].get<std::string>() << " [" << report["game"]["hash"].get<std::string>()
        << "]\n";
  }
  if (command == "catalog") {
    std::vector<std::vector<std::string>> rows{{"name", "hash", "inputs", "description"}};
    for (const auto& g : report["games"]) {
      rows.push_back({cell(g["name"]), cell(g["hash"]), cell(g["support"]), cell(g["description"])});
    }
    out << table(rows);
  } else if (command == "analyze-classical") {
    out << "social optimum " << cell(report["social_optimum"]["value"]) << " over "
        << report["pure_profiles"].get<std::size_t>() << " pure profiles, attained by:\n";
    for (const auto& p : report["social_optimum"]["profiles"]) out << "  " << p.get<std::string>() << "\n";
    out << "\npure Nash equilibria (" << report["pure_nash_equilibria"].size() << "):\n";
    std::vector<std::vector<std::string>> rows{{"profile", "payoffs", "total"}};
    for (const auto& eq : report["pure_nash_equilibria"]) rows.push_back({cell(eq["profile"]), row_of(eq["payoffs"]), cell(eq["total"])});
    out << table(rows);
    out << "\npayoff polytope vertices (" << report["payoff_polytope_vertices"].size() << "):\n";
    for (const auto& v : report["payoff_polytope_vertices"]) out << "  " << row_of(v) << "\n";
    out << "of which extreme (" << report["extreme_points"].size() << "):\n";
    for (const auto& v : report["extreme_points"]) out << "  " << row_of(v) << "\n";
  } else if (command == "eval-quantum") {
    out << "strategy " << report["strategy"]["source"].get<std::string>() << "\n";
    out << "payoffs " << row_of(report["payoffs"]) << "  total " << cell(report["total"]) << "\n";
    if (report.contains("svetlichny_value")) {
      out << "svetlichny value " << cell(report["svetlichny_value"]) << "  ghz winning probability "
          << cell(report["ghz_winning_probability"]) << "\n";
    }
    std::vector<std::vector<std::string>> rows{{"x"}};
    for (const auto& y : report["behavior"]["outputs"]) rows[0].push_back(cell(y));
    for (const auto& r : report["behavior"]["rows"]) {
      std::vector<std::string> line{cell(r["x"])};
      for (const auto& p : r["p"]) line.push_back(cell(p));
      rows.push_back(line);
    }
    out << "\nbehavior P(y|x):\n" << table(rows);
  } else if (command == "verify-equilibrium") {
    out << "method " << report["method"].get<std::string>() << "  tolerance " << cell(report["tolerance"]) << "\n";
    std::vector<std::vector<std::string>> rows{{"player", "payoff", "bound", "gain", "exact", "solver"}};
    for (const auto& p : report["players"]) {
      std::string solver = "-";
      if (p.contains("solver")) {
        solver = std::to_string(p["solver"]["iterations"].get<int>()) + " it, gap " + cell(p["solver"]["gap"]);
      }
      const std::string exact = p.contains("exact_povm_value") ? cell(p["exact_povm_value"]) : cell(p["bound"]);
      rows.push_back({cell(p["player"]), cell(p["current_payoff"]), cell(p["bound"]), cell(p["gain"]), exact, solver});
    }
    out << table(rows);
    out << (report["equilibrium"].get<bool>() ? "equilibrium\n" : "NOT an equilibrium\n");
  } else if (command == "simulate") {
    out << report["rounds"].get<std::uint64_t>() << " rounds, seed " << report["seed"].get<std::uint64_t>() << "\n";
    std::vector<std::vector<std::string>> rows{{"player", "mean", "std error", "analytic", "z"}};
    for (const auto& p : report["players"]) {
      rows.push_back({cell(p["player"]), cell(p["mean"]), cell(p["standard_error"]), cell(p["analytic"]), cell(p["z_score"])});
    }
    out << table(rows);
  } else {
    out << report.dump(2) << "\n";
  }
  return out.str();
}

}  // namespace qadvice::cli

#endif  // QADVICE_CLI_HPP_
