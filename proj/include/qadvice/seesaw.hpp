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

#ifndef QADVICE_SEESAW_HPP_
#define QADVICE_SEESAW_HPP_

#include <Eigen/Eigenvalues>
#include <cstdint>
#include <optional>
#include <numbers>
#include <random>
#include <vector>

#include "qadvice/errors.hpp"
#include "qadvice/game.hpp"
#include "qadvice/game_model.hpp"
#include "qadvice/local_operators.hpp"
#include "qadvice/quantum.hpp"

namespace qadvice {

struct SeesawOptions {
  int restarts = 50;
  std::uint64_t seed = 0;
  // Stop a restart once a full sweep improves F_total by less than this.
  double tolerance = 1e-10;
  int max_sweeps = 20000;
  // Also re-optimize the shared state after each sweep (top eigenvector of
  // the payoff operator). Off by default: the state stays GHZ.
  bool optimize_state = false;
};

struct SeesawRestart {
  std::uint64_t seed = 0;
  double value = 0.0;
  int sweeps = 0;
  // F_total after initialization and after every sweep.
  std::vector<double> history;
};

struct SeesawResult {
  QuantumStrategy strategy;
  double total = 0.0;
  int best_restart = 0;
  std::vector<SeesawRestart> restarts;
};

namespace detail {

inline double strategy_total(const Game& game, const QuantumStrategy& qs) {
  return total_average_payoff(game, behavior_of_quantum(qs));
}

// Payoff operator W with F_total = <psi|W|psi> for the current measurements.
inline Eigen::MatrixXcd payoff_operator(const Game& game, const QuantumStrategy& qs) {
  const int n = game.player_count();
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t x : game.support()) {
    const double px = to_double(game.prior(x));
    for (std::size_t y = 0; y < game.outputs().size(); ++y) {
      const double pay = to_double(game.total_payoff(x, y));
      if (pay == 0.0) continue;
      for (Eigen::Index col = 0; col < dim; ++col) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Unit(dim, col);
        for (int p = 0; p < n; ++p) {
          v = apply_local(v, qs.measurement(p, game.inputs().digit(x, p)).effect(game.outputs().digit(y, p)), p, n);
        }
        w.col(col) += px * pay * v;
      }
    }
  }
  return 0.5 * (w + w.adjoint());
}

}  // namespace detail

// Alternating exact best responses to F_total, one player at a time, from
// random projective measurements. Each update can only raise F_total.
inline SeesawResult seesaw_optimize(const Game& game, const SeesawOptions& options = {}) {
  if (options.restarts < 1) throw DomainError("seesaw needs at least one restart");
  const int n = game.player_count();
  for (int p = 0; p < n; ++p) {
    if (game.player(p).outputs.size() != 2) {
      throw DomainError("seesaw needs binary outputs (player " + game.player(p).name + ")");
    }
  }
  const std::vector<double> all_players(n, 1.0);

  std::vector<SeesawRestart> restarts;
  std::optional<QuantumStrategy> best;
  double best_value = 0.0;
  int best_index = 0;

  for (int k = 0; k < options.restarts; ++k) {
    SeesawRestart run;
    run.seed = options.seed + static_cast<std::uint64_t>(k);
    std::mt19937_64 rng(run.seed);
    std::uniform_real_distribution<double> azimuth(0.0, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> polar(0.0, std::numbers::pi);
    std::vector<std::vector<BinaryMeasurement>> families;
    for (int p = 0; p < n; ++p) {
      std::vector<BinaryMeasurement> family;
      for (std::size_t xi = 0; xi < game.player(p).inputs.size(); ++xi) {
        const double a = azimuth(rng);
        const double b = polar(rng);
        family.push_back(bloch_measurement(a, b));
      }
      families.push_back(std::move(family));
    }
    QuantumStrategy qs(ghz_state(n), std::move(families));
    double value = detail::strategy_total(game, qs);
    run.history.push_back(value);

    for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
      for (int p = 0; p < n; ++p) {
        const auto response = best_response(weighted_local_operators(game, qs, p, all_players));
        qs = qs.with_player(p, response.measurements);
      }
      if (options.optimize_state) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(detail::payoff_operator(game, qs));
        const Eigen::Index top = solver.eigenvalues().size() - 1;
        qs = qs.with_state(StateVector(solver.eigenvectors().col(top).normalized()));
      }
      const double next = detail::strategy_total(game, qs);
      run.history.push_back(next);
      run.sweeps = sweep + 1;
      const double improvement = next - value;
      value = next;
      if (improvement < options.tolerance) break;
    }
    run.value = value;
    if (!best || value > best_value) {
      best = qs;
      best_value = value;
      best_index = k;
    }
    restarts.push_back(std::move(run));
  }
  return SeesawResult{*best, best_value, best_index, std::move(restarts)};
}

}  // namespace qadvice

#endif  // QADVICE_SEESAW_HPP_
