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

// Command-line front end. See README.md for the commands and file formats.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qadvice/cli.hpp"

namespace {

using qadvice::cli::CommandResult;

int emit(const CommandResult& result, const std::string& format) {
  if (format == "json") {
    std::cout << result.report.dump(2) << "\n";
  } else {
    std::cout << qadvice::cli::render_human(result.report);
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qadvice: games with classical and quantum advice"};
  app.require_subcommand(1);

  std::string format = "human";
  qadvice::cli::CommonOptions common;
  std::string game_source, strategy = "ghz", method = "exact", behavior_path, dump_dir, export_name;
  double tol = -1.0;
  std::uint64_t rounds = 100000;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"human", "json"}));
    cmd->add_option("--restarts", common.restarts, "seesaw restarts")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", common.seed, "seed for seesaw and simulation");
  };

  auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in games");
  catalog_cmd->add_option("--export", export_name, "print a built-in game as a game file");
  add_common(catalog_cmd);

  auto* classical_cmd = app.add_subcommand("analyze-classical", "pure equilibria and the classical optimum");
  classical_cmd->add_option("game", game_source, "catalog name or game file")->required();
  add_common(classical_cmd);

  auto* quantum_cmd = app.add_subcommand("eval-quantum", "payoffs of a quantum strategy");
  quantum_cmd->add_option("game", game_source, "catalog name or game file")->required();
  quantum_cmd->add_option("--strategy", strategy, "ghz, svetlichny, seesaw or a strategy file");
  add_common(quantum_cmd);

  auto* verify_cmd = app.add_subcommand("verify-equilibrium", "check unilateral deviations");
  verify_cmd->add_option("game", game_source, "catalog name or game file")->required();
  verify_cmd->add_option("--strategy", strategy, "ghz, svetlichny, seesaw or a strategy file");
  verify_cmd->add_option("--method", method, "exact, bound or npa")->check(CLI::IsMember({"exact", "bound", "npa"}));
  verify_cmd->add_option("--tol", tol, "allowed gain (default depends on method)");
  verify_cmd->add_option("--dump-sdp", dump_dir, "write the npa problems to this directory");
  add_common(verify_cmd);

  auto* simulate_cmd = app.add_subcommand("simulate", "play rounds and report empirical payoffs");
  simulate_cmd->add_option("game", game_source, "catalog name or game file")->required();
  simulate_cmd->add_option("--strategy", strategy, "ghz, svetlichny, seesaw or a strategy file");
  simulate_cmd->add_option("--behavior", behavior_path, "behavior file (overrides --strategy)");
  simulate_cmd->add_option("--rounds", rounds, "number of rounds")->check(CLI::PositiveNumber);
  add_common(simulate_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qadvice::cli::kInvalid;
  }

  namespace cli = qadvice::cli;
  try {
    if (*catalog_cmd) {
      if (!export_name.empty()) {
        std::cout << qadvice::serialize_game(qadvice::catalog_game(export_name));
        return cli::kOk;
      }
      return emit(cli::cmd_catalog(), format);
    }
    const qadvice::Game game = cli::load_game(game_source);
    if (*classical_cmd) return emit(cli::cmd_analyze_classical(game), format);
    if (*quantum_cmd) return emit(cli::cmd_eval_quantum(game, strategy, common), format);
    if (*verify_cmd) {
      const std::optional<double> t = tol >= 0 ? std::optional<double>(tol) : std::nullopt;
      return emit(cli::cmd_verify_equilibrium(game, strategy, method, t, common, dump_dir), format);
    }
    if (*simulate_cmd) return emit(cli::cmd_simulate(game, strategy, behavior_path, rounds, common), format);
  } catch (const qadvice::SolverError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return cli::kSolverFailure;
  } catch (const qadvice::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kInvalid;
  }
  return cli::kInvalid;
}
