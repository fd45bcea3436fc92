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

#ifndef QADVICE_LOCAL_OPERATORS_HPP_
#define QADVICE_LOCAL_OPERATORS_HPP_

#include <cstddef>
#include <vector>

#include "qadvice/errors.hpp"
#include "qadvice/game.hpp"
#include "qadvice/quantum.hpp"
#include "qadvice/rational.hpp"

namespace qadvice {

// ops[x_i][y_i] such that the weighted payoff equals
//   sum_{x_i, y_i} Tr(A_{x_i}^{y_i} ops[x_i][y_i])
// for any measurements A of the chosen player, others held fixed.
using LocalOperators = std::vector<std::vector<QubitOperator>>;

// Linearizes sum_j weights[j] * F_j in one player's measurement. Each term is
// the partial trace Tr_{-i}[(I (x) O) rho] of the state against the other
// players' effects O, weighted by P(x) and the payoff.
inline LocalOperators weighted_local_operators(const Game& game, const QuantumStrategy& qs,
                                               int player, const std::vector<double>& weights) {
  require_compatible(game, qs);
  const int n = game.player_count();
  if (player < 0 || player >= n) throw StructuralError("no player " + std::to_string(player));
  if (static_cast<int>(weights.size()) != n) throw StructuralError("need one weight per player");

  const Eigen::VectorXcd& psi = qs.state().amplitudes();
  const Eigen::Index bit = Eigen::Index{1} << (n - 1 - player);
  const MixedRadix& in = game.inputs();
  const MixedRadix& out = game.outputs();

  LocalOperators ops(game.player(player).inputs.size(),
                     std::vector<QubitOperator>(2, QubitOperator::Zero()));
  for (std::size_t x : game.support()) {
    const double px = to_double(game.prior(x));
    const int xi = in.digit(x, player);
    for (std::size_t y = 0; y < out.size(); ++y) {
      if (out.digit(y, player) != 0) continue;  // enumerate y_{-i} once
      double coeff[2];
      bool any = false;
      for (int yi = 0; yi < 2; ++yi) {
        const std::size_t full = out.with_digit(y, player, yi);
        double c = 0.0;
        for (int j = 0; j < n; ++j) c += weights[j] * to_double(game.payoff(x, full, j));
        coeff[yi] = px * c;
        any = any || c != 0.0;
      }
      if (!any) continue;
      Eigen::VectorXcd phi = psi;
      for (int j = 0; j < n; ++j) {
        if (j == player) continue;
        phi = apply_local(phi, qs.measurement(j, in.digit(x, j)).effect(out.digit(y, j)), j, n);
      }
      // reduced[b][a] = sum_r conj(psi[a, r]) phi[b, r]
      QubitOperator reduced = QubitOperator::Zero();
      for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
        if (idx & bit) continue;
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            reduced(b, a) += std::conj(psi(idx | (a ? bit : 0))) * phi(idx | (b ? bit : 0));
          }
        }
      }
      for (int yi = 0; yi < 2; ++yi) ops[xi][yi] += coeff[yi] * reduced;
    }
  }
  return ops;
}

inline LocalOperators local_payoff_operators(const Game& game, const QuantumStrategy& qs, int player) {
  std::vector<double> weights(game.player_count(), 0.0);
  if (player >= 0 && player < game.player_count()) weights[player] = 1.0;
  return weighted_local_operators(game, qs, player, weights);
}

// sum_{x_i, y_i} Re Tr(A_{x_i}^{y_i} ops[x_i][y_i]).
inline double evaluate_local(const LocalOperators& ops, const std::vector<BinaryMeasurement>& family) {
  double value = 0.0;
  for (std::size_t xi = 0; xi < ops.size(); ++xi) {
    for (int yi = 0; yi < 2; ++yi) value += (family[xi].effect(yi) * ops[xi][yi]).trace().real();
  }
  return value;
}

struct BestResponse {
  double value = 0.0;
  std::vector<BinaryMeasurement> measurements;
};

// Maximizes the linear functional over all two-outcome POVMs, input by
// input: Tr(A^0 M0) + Tr((I - A^0) M1) = Tr(M1) + Tr(A^0 (M0 - M1)), which is
// largest for A^0 the projector onto the positive eigenspace of M0 - M1.
inline BestResponse best_response(const LocalOperators& ops) {
  BestResponse out;
  for (const auto& pair : ops) {
    const QubitOperator diff = pair[0] - pair[1];
    const QubitOperator hermitian = 0.5 * (diff + diff.adjoint());
    const auto eig = eigen_hermitian_2x2(hermitian);
    QubitOperator projector = QubitOperator::Zero();
    double positive = 0.0;
    for (int k = 0; k < 2; ++k) {
      if (eig.values(k) > 0.0) {
        positive += eig.values(k);
        projector += eig.vectors.col(k) * eig.vectors.col(k).adjoint();
      }
    }
    out.value += positive + pair[1].trace().real();
    out.measurements.emplace_back(projector, QubitOperator::Identity() - projector);
  }
  return out;
}

}  // namespace qadvice

#endif  // QADVICE_LOCAL_OPERATORS_HPP_
