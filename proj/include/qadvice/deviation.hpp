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

#ifndef QADVICE_DEVIATION_HPP_
#define QADVICE_DEVIATION_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qadvice/errors.hpp"
#include "qadvice/game.hpp"
#include "qadvice/game_model.hpp"
#include "qadvice/local_operators.hpp"
#include "qadvice/quantum.hpp"

namespace qadvice {

enum class BoundMethod { kExactPovm, kOutcomeCorrelation, kNpaSdp };

inline std::string_view to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::kExactPovm:
      return "exact_povm";
    case BoundMethod::kOutcomeCorrelation:
      return "outcome_correlation";
    case BoundMethod::kNpaSdp:
      return "npa_sdp";
  }
  return "?";
}

struct SolverDiagnostics {
  int iterations = 0;
  double gap = 0.0;
  double optimum = 0.0;
};

// How much one player could earn by deviating alone, bounded with `method`.
struct DeviationReport {
  int player = 0;
  double current_payoff = 0.0;
  double best_response_value = 0.0;
  BoundMethod method = BoundMethod::kExactPovm;
  // Deviating measurements that reach the value (exact method only).
  std::optional<std::vector<BinaryMeasurement>> witness;
  std::optional<SolverDiagnostics> solver;

  double gain() const { return best_response_value - current_payoff; }
};

inline double player_payoff(const Game& game, const QuantumStrategy& qs, int player) {
  return average_payoffs(game, behavior_of_quantum(qs))[player];
}

// Best payoff over all POVM deviations of one player with the shared state
// and the other players' measurements fixed.
inline DeviationReport exact_best_response_value(const Game& game, const QuantumStrategy& qs,
                                                 int player) {
  const auto ops = local_payoff_operators(game, qs, player);
  auto response = best_response(ops);
  DeviationReport report;
  report.player = player;
  report.current_payoff = player_payoff(game, qs, player);
  report.method = BoundMethod::kExactPovm;
  // A deviation may keep the current measurements, so never report less.
  report.best_response_value = std::max(response.value, report.current_payoff);
  report.witness = std::move(response.measurements);
  return report;
}

// Upper bound that lets the deviator see the other players' outcomes:
//   sum_x P(x) sum_{y_-i} Pr(y_-i | x_-i) max_{y_i} $_i(x, y).
// The others' outcome distribution cannot depend on the deviator's choice
// (no-signalling), so no real deviation can beat it.
inline DeviationReport outcome_correlation_bound(const Game& game, const QuantumStrategy& qs,
                                                 int player) {
  require_compatible(game, qs);
  const int n = game.player_count();
  if (player < 0 || player >= n) throw StructuralError("no player " + std::to_string(player));
  const auto behavior = behavior_of_quantum(qs);
  const MixedRadix& out = game.outputs();
  double bound = 0.0;
  for (std::size_t x : game.support()) {
    const double px = to_double(game.prior(x));
    for (std::size_t y = 0; y < out.size(); ++y) {
      if (out.digit(y, player) != 0) continue;
      double marginal = 0.0;
      Rational best = game.payoff(x, y, player);
      for (int yi = 0; yi < out.radix(player); ++yi) {
        const std::size_t full = out.with_digit(y, player, yi);
        marginal += behavior(x, full);
        best = std::max(best, game.payoff(x, full, player));
      }
      bound += px * marginal * to_double(best);
    }
  }
  DeviationReport report;
  report.player = player;
  report.current_payoff = average_payoffs(game, behavior)[player];
  report.best_response_value = bound;
  report.method = BoundMethod::kOutcomeCorrelation;
  return report;
}

}  // namespace qadvice

#endif  // QADVICE_DEVIATION_HPP_
