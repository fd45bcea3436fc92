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

#ifndef QADVICE_EQUILIBRIUM_HPP_
#define QADVICE_EQUILIBRIUM_HPP_

#include <algorithm>
#include <vector>

#include "qadvice/deviation.hpp"
#include "qadvice/errors.hpp"
#include "qadvice/game.hpp"
#include "qadvice/npa.hpp"
#include "qadvice/quantum.hpp"

namespace qadvice {

struct EquilibriumVerdict {
  bool is_equilibrium = true;
  BoundMethod method = BoundMethod::kExactPovm;
  double tolerance = 0.0;
  std::vector<DeviationReport> reports;

  double max_gain() const {
    double g = 0.0;
    for (const auto& r : reports) g = std::max(g, r.gain());
    return g;
  }
};

inline DeviationReport deviation_report(const Game& game, const QuantumStrategy& qs, int player,
                                        BoundMethod method, const NpaOptions& npa = {}) {
  switch (method) {
    case BoundMethod::kExactPovm:
      return exact_best_response_value(game, qs, player);
    case BoundMethod::kOutcomeCorrelation:
      return outcome_correlation_bound(game, qs, player);
    case BoundMethod::kNpaSdp:
      return npa_deviation_bound(game, qs, player, npa);
  }
  throw DomainError("unknown bound method");
}

// Equilibrium iff no player's deviation bound exceeds their payoff by more
// than tol. Every player is reported, even after the first failure.
inline EquilibriumVerdict verify_quantum_equilibrium(const Game& game, const QuantumStrategy& qs,
                                                     BoundMethod method, double tol,
                                                     const NpaOptions& npa = {}) {
  require_compatible(game, qs);
  if (method == BoundMethod::kNpaSdp && game.player_count() != 3) {
    throw UnsupportedError("npa_sdp needs a 3-player game");
  }
  EquilibriumVerdict verdict;
  verdict.method = method;
  verdict.tolerance = tol;
  for (int p = 0; p < game.player_count(); ++p) {
    verdict.reports.push_back(deviation_report(game, qs, p, method, npa));
    if (verdict.reports.back().gain() > tol) verdict.is_equilibrium = false;
  }
  return verdict;
}

}  // namespace qadvice

#endif  // QADVICE_EQUILIBRIUM_HPP_
