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

#ifndef QADVICE_QUANTUM_HPP_
#define QADVICE_QUANTUM_HPP_

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "qadvice/behavior.hpp"
#include "qadvice/errors.hpp"
#include "qadvice/game.hpp"

namespace qadvice {

using Complex = std::complex<double>;
using QubitOperator = Eigen::Matrix2cd;

inline constexpr double kQuantumTolerance = 1e-9;

// Eigen-decomposition of a 2x2 Hermitian matrix in closed form. Eigenvalues
// ascend; columns of `vectors` are the matching orthonormal eigenvectors.
struct HermitianEigen2 {
  Eigen::Vector2d values;
  QubitOperator vectors;
};

inline HermitianEigen2 eigen_hermitian_2x2(const QubitOperator& h) {
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const Complex b = 0.5 * (h(0, 1) + std::conj(h(1, 0)));
  const double mean = 0.5 * (a + d);
  const double half = 0.5 * (a - d);
  const double radius = std::hypot(half, std::abs(b));
  HermitianEigen2 out;
  out.values << mean - radius, mean + radius;
  const double top = mean + radius;
  Eigen::Vector2cd v;
  if (radius == 0.0) {
    v << 1.0, 0.0;
  } else {
    // Two algebraically equivalent eigenvectors; take the better conditioned.
    Eigen::Vector2cd v1(b, top - a);
    Eigen::Vector2cd v2(top - d, std::conj(b));
    v = v1.norm() >= v2.norm() ? v1 : v2;
    v.normalize();
  }
  out.vectors.col(1) = v;
  out.vectors.col(0) << -std::conj(v(1)), std::conj(v(0));
  return out;
}

class StateVector {
 public:
  explicit StateVector(Eigen::VectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
    const auto dim = amplitudes_.size();
    qubits_ = 0;
    while ((Eigen::Index{1} << qubits_) < dim) ++qubits_;
    if ((Eigen::Index{1} << qubits_) != dim || qubits_ < 2 || qubits_ > 3) {
      throw ValidationError("state dimension " + std::to_string(dim) + " is not 2^n for n in {2,3}");
    }
    const double norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - 1.0) > kQuantumTolerance) {
      throw ValidationError("state is not normalized (squared norm " + std::to_string(norm2) + ")");
    }
  }

  int qubits() const { return qubits_; }
  Eigen::Index dimension() const { return amplitudes_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex amplitude(Eigen::Index basis) const { return amplitudes_(basis); }

 private:
  Eigen::VectorXcd amplitudes_;
  int qubits_ = 0;
};

// (|0...0> + |1...1>) / sqrt(2) on n qubits.
inline StateVector ghz_state(int qubits = 3) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << qubits);
  amps(0) = amps(amps.size() - 1) = 1.0 / std::numbers::sqrt2;
  return StateVector(amps);
}

// Two-outcome POVM {M^0, M^1} on one qubit.
class BinaryMeasurement {
 public:
  BinaryMeasurement(QubitOperator effect0, QubitOperator effect1)
      : effects_{std::move(effect0), std::move(effect1)} {
    const double completeness = (effects_[0] + effects_[1] - QubitOperator::Identity()).norm();
    if (completeness > kQuantumTolerance) {
      throw ValidationError("measurement effects do not sum to the identity (residual " +
                            std::to_string(completeness) + ")");
    }
    double worst = 0.0;
    for (const auto& e : effects_) {
      if ((e - e.adjoint()).norm() > kQuantumTolerance) {
        throw ValidationError("measurement effect is not Hermitian");
      }
      worst = std::min(worst, eigen_hermitian_2x2(e).values(0));
    }
    if (worst < -kQuantumTolerance) {
      throw ValidationError("measurement effect is not positive semidefinite (eigenvalue " +
                            std::to_string(worst) + ")");
    }
  }

  // Outcome 0 is the projector onto `v`, outcome 1 its complement.
  static BinaryMeasurement projective(const Eigen::Vector2cd& v) {
    const Eigen::Vector2cd u = v.normalized();
    const QubitOperator p = u * u.adjoint();
    return BinaryMeasurement(p, QubitOperator::Identity() - p);
  }

  const QubitOperator& effect(int outcome) const { return effects_[outcome]; }

  bool is_projective(double tol = kQuantumTolerance) const {
    return (effects_[0] * effects_[0] - effects_[0]).norm() <= tol;
  }

 private:
  QubitOperator effects_[2];
};

// Projective measurement onto cos(polar/2)|0> + e^{i azimuth} sin(polar/2)|1>
// (outcome 0) and its orthogonal complement (outcome 1).
inline BinaryMeasurement bloch_measurement(double azimuth, double polar) {
  Eigen::Vector2cd v(std::cos(polar / 2), std::polar(std::sin(polar / 2), azimuth));
  return BinaryMeasurement::projective(v);
}

// Outcome 0 <-> (|0> + e^{i theta}|1>)/sqrt(2), outcome 1 <-> the "-" state.
// theta = 0 is the sigma_X eigenbasis, theta = pi/2 the sigma_Y one.
inline BinaryMeasurement equatorial_measurement(double theta) {
  QubitOperator plus;
  const Complex phase = std::polar(1.0, theta);
  plus << 0.5, 0.5 * std::conj(phase), 0.5 * phase, 0.5;
  return BinaryMeasurement(plus, QubitOperator::Identity() - plus);
}

inline BinaryMeasurement computational_measurement() {
  QubitOperator zero = QubitOperator::Zero();
  zero(0, 0) = 1.0;
  return BinaryMeasurement(zero, QubitOperator::Identity() - zero);
}

// Shared state plus one measurement per (player, input). Player i owns
// qubit i, the (n-1-i)-th bit of a basis index.
class QuantumStrategy {
 public:
  QuantumStrategy(StateVector state, std::vector<std::vector<BinaryMeasurement>> measurements)
      : state_(std::move(state)), measurements_(std::move(measurements)) {
    if (static_cast<int>(measurements_.size()) != state_.qubits()) {
      throw StructuralError("strategy has " + std::to_string(measurements_.size()) +
                            " players but the state has " + std::to_string(state_.qubits()) +
                            " qubits");
    }
    for (const auto& family : measurements_) {
      if (family.empty()) throw StructuralError("a player has no measurement");
    }
  }

  const StateVector& state() const { return state_; }
  int player_count() const { return static_cast<int>(measurements_.size()); }
  int input_count(int player) const { return static_cast<int>(measurements_[player].size()); }
  const BinaryMeasurement& measurement(int player, int input) const {
    return measurements_[player][input];
  }
  const std::vector<std::vector<BinaryMeasurement>>& measurements() const { return measurements_; }

  QuantumStrategy with_player(int player, std::vector<BinaryMeasurement> family) const {
    auto copy = measurements_;
    copy[player] = std::move(family);
    return QuantumStrategy(state_, std::move(copy));
  }
  QuantumStrategy with_state(StateVector state) const {
    return QuantumStrategy(std::move(state), measurements_);
  }

  MixedRadix input_radix() const {
    std::vector<int> sizes;
    for (const auto& family : measurements_) sizes.push_back(static_cast<int>(family.size()));
    return MixedRadix(sizes);
  }
  MixedRadix output_radix() const { return MixedRadix(std::vector<int>(measurements_.size(), 2)); }

 private:
  StateVector state_;
  std::vector<std::vector<BinaryMeasurement>> measurements_;
};

// Applies `op` to qubit `target` of an n-qubit vector.
inline Eigen::VectorXcd apply_local(const Eigen::VectorXcd& psi, const QubitOperator& op, int target,
                                    int qubits) {
  const Eigen::Index bit = Eigen::Index{1} << (qubits - 1 - target);
  Eigen::VectorXcd out(psi.size());
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    if (i & bit) continue;
    const Complex lo = psi(i), hi = psi(i | bit);
    out(i) = op(0, 0) * lo + op(0, 1) * hi;
    out(i | bit) = op(1, 0) * lo + op(1, 1) * hi;
  }
  return out;
}

// Pr(y|x) = <psi| M_{x_1}^{y_1} (x) ... (x) M_{x_n}^{y_n} |psi>.
inline RealBehavior behavior_of_quantum(const QuantumStrategy& qs) {
  const MixedRadix in = qs.input_radix();
  const MixedRadix out = qs.output_radix();
  const int n = qs.player_count();
  const Eigen::VectorXcd& psi = qs.state().amplitudes();
  RealBehavior behavior(in, out);
  for (std::size_t x = 0; x < in.size(); ++x) {
    for (std::size_t y = 0; y < out.size(); ++y) {
      Eigen::VectorXcd v = psi;
      for (int p = 0; p < n; ++p) {
        v = apply_local(v, qs.measurement(p, in.digit(x, p)).effect(out.digit(y, p)), p, n);
      }
      behavior.set(x, y, psi.dot(v).real());
    }
  }
  return behavior;
}

// GHZ state; input 0 measures sigma_X, input 1 measures sigma_Y.
inline QuantumStrategy ghz_game_strategy() {
  std::vector<std::vector<BinaryMeasurement>> m;
  for (int p = 0; p < 3; ++p) {
    m.push_back({equatorial_measurement(0.0), equatorial_measurement(std::numbers::pi / 2)});
  }
  return QuantumStrategy(ghz_state(3), std::move(m));
}

// GHZ state with equatorial settings at -pi/12 (input 0) and 5pi/12 (input
// 1) for every player. The correlator is cos of the summed angles, which
// gives +-1/sqrt(2) in each of the eight Svetlichny terms.
inline QuantumStrategy svetlichny_strategy() {
  std::vector<std::vector<BinaryMeasurement>> m;
  for (int p = 0; p < 3; ++p) {
    m.push_back({equatorial_measurement(-std::numbers::pi / 12),
                 equatorial_measurement(5 * std::numbers::pi / 12)});
  }
  return QuantumStrategy(ghz_state(3), std::move(m));
}

// Throws unless the strategy's alphabets match the game (binary outputs,
// one measurement per input symbol).
inline void require_compatible(const Game& game, const QuantumStrategy& qs) {
  if (game.player_count() != qs.player_count()) {
    throw StructuralError("strategy has " + std::to_string(qs.player_count()) +
                          " players, game has " + std::to_string(game.player_count()));
  }
  for (int p = 0; p < game.player_count(); ++p) {
    if (game.player(p).outputs.size() != 2) {
      throw DomainError("quantum strategies need binary outputs (player " + game.player(p).name + ")");
    }
    if (static_cast<int>(game.player(p).inputs.size()) != qs.input_count(p)) {
      throw StructuralError("player " + game.player(p).name + " has " +
                            std::to_string(game.player(p).inputs.size()) + " inputs but " +
                            std::to_string(qs.input_count(p)) + " measurements");
    }
  }
}

}  // namespace qadvice

#endif  // QADVICE_QUANTUM_HPP_
