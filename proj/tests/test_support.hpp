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

#ifndef QADVICE_TESTS_TEST_SUPPORT_HPP_
#define QADVICE_TESTS_TEST_SUPPORT_HPP_

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "qadvice/qadvice.hpp"

namespace qadvice::testing {

// Three binary players, uniform prior, payoff c everywhere.
inline Game constant_game(const Rational& c, int players = 3) {
  std::vector<Player> ps;
  for (int p = 0; p < players; ++p) ps.push_back(Player{std::string(1, static_cast<char>('A' + p)), {"0", "1"}, {"0", "1"}});
  const std::size_t nx = std::size_t{1} << players;
  std::vector<Rational> prior(nx, Rational(1, static_cast<long>(nx)));
  std::vector<Rational> pay(nx * nx * players, c);
  return Game("constant", ps, prior, pay);
}

// CHSH as a two-player common-interest game: win iff a xor b = x and y.
inline Game chsh_game() {
  std::vector<Player> ps{{"Alice", {"0", "1"}, {"0", "1"}}, {"Bob", {"0", "1"}, {"0", "1"}}};
  std::vector<Rational> prior(4, Rational(1, 4));
  std::vector<Rational> pay(4 * 4 * 2, Rational(0));
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      const int a = y >> 1, b = y & 1;
      if ((a ^ b) == ((x >> 1) & (x & 1))) pay[(x * 4 + y) * 2] = pay[(x * 4 + y) * 2 + 1] = 1;
    }
  }
  return Game("chsh", ps, prior, pay);
}

inline ExactBehavior random_exact_behavior(const Game& game, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> weight(0, 9);
  ExactBehavior b = ExactBehavior::for_game(game);
  for (std::size_t x = 0; x < game.inputs().size(); ++x) {
    std::vector<Rational> col(game.outputs().size());
    long sum = 0;
    std::vector<long> w(col.size());
    for (auto& v : w) sum += v = weight(rng);
    if (sum == 0) {
      w[0] = 1;
      sum = 1;
    }
    for (std::size_t y = 0; y < col.size(); ++y) col[y] = Rational(w[y], sum);
    b.set_column(x, col);
  }
  return b;
}

inline RealBehavior random_real_behavior(const Game& game, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  RealBehavior b = RealBehavior::for_game(game);
  for (std::size_t x = 0; x < game.inputs().size(); ++x) {
    std::vector<double> col(game.outputs().size());
    double sum = 0;
    for (auto& v : col) sum += v = e(rng);
    for (auto& v : col) v /= sum;
    b.set_column(x, col);
  }
  return b;
}

inline StateVector random_state(int qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(Eigen::Index{1} << qubits);
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = Complex(g(rng), g(rng));
  return StateVector(v / v.norm());
}

inline BinaryMeasurement random_projective(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return bloch_measurement(2 * M_PI * u(rng), std::acos(2 * u(rng) - 1));
}

// Unsharp measurement: a projective one mixed with a coin of bias q.
inline BinaryMeasurement random_povm(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const BinaryMeasurement m = random_projective(rng);
  const double s = u(rng), q = u(rng);
  const QubitOperator i = QubitOperator::Identity();
  const QubitOperator e0 = s * m.effect(0) + (1 - s) * q * i;
  return BinaryMeasurement(e0, i - e0);
}

inline QuantumStrategy random_strategy(std::mt19937_64& rng, bool povm = false, bool ghz = false) {
  std::vector<std::vector<BinaryMeasurement>> m(3);
  for (auto& family : m) {
    for (int x = 0; x < 2; ++x) family.push_back(povm ? random_povm(rng) : random_projective(rng));
  }
  return QuantumStrategy(ghz ? ghz_state() : random_state(3, rng), m);
}

inline Rational q(long n, long d = 1) { return Rational(n, d); }

}  // namespace qadvice::testing

#endif  // QADVICE_TESTS_TEST_SUPPORT_HPP_
