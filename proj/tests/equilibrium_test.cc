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

#include <gtest/gtest.h>

#include <random>

#include "qadvice/qadvice.hpp"
#include "test_support.hpp"

namespace qadvice {
namespace {

TEST(LocalOperatorTest, ReproducesPlayerPayoff) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto qs = testing::random_strategy(rng, trial % 2 == 0);
    for (const Game& g : {game_promised(), game_full()}) {
      const auto f = average_payoffs(g, behavior_of_quantum(qs));
      for (int p = 0; p < 3; ++p) {
        const auto ops = local_payoff_operators(g, qs, p);
        EXPECT_NEAR(evaluate_local(ops, qs.measurements()[p]), f[p], 1e-12);
      }
    }
  }
}

TEST(LocalOperatorTest, ConstantGameTrace) {
  const Game g = testing::constant_game(Rational(3, 4));
  const auto ops = local_payoff_operators(g, ghz_game_strategy(), 1);
  double total = 0;
  for (const auto& pair : ops) total += (pair[0] + pair[1]).trace().real() / 2;
  // Tr over both outcomes of each input, halved: the payoff spread over inputs.
  EXPECT_NEAR(total, 0.75, 1e-12);
  EXPECT_NEAR(best_response(ops).value, 0.75, 1e-12);
}

TEST(ExactDeviationTest, CatalogValues) {
  const auto ga = verify_quantum_equilibrium(game_promised(), ghz_game_strategy(), BoundMethod::kExactPovm, 1e-9);
  EXPECT_TRUE(ga.is_equilibrium);
  for (const auto& r : ga.reports) {
    EXPECT_NEAR(r.current_payoff, 4.0 / 3.0, 1e-9);
    EXPECT_NEAR(r.best_response_value, 4.0 / 3.0, 1e-9);
  }
  const auto gb = verify_quantum_equilibrium(game_full(), svetlichny_strategy(), BoundMethod::kExactPovm, 1e-9);
  EXPECT_TRUE(gb.is_equilibrium);
  for (const auto& r : gb.reports) EXPECT_NEAR(r.best_response_value, r.current_payoff, 1e-9);
}

TEST(ExactDeviationTest, WitnessReplays) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto qs = testing::random_strategy(rng, trial % 3 == 0);
    for (int p = 0; p < 3; ++p) {
      const auto r = exact_best_response_value(game_full(), qs, p);
      ASSERT_TRUE(r.witness.has_value());
      const double replay = player_payoff(game_full(), qs.with_player(p, *r.witness), p);
      EXPECT_NEAR(std::max(replay, r.current_payoff), r.best_response_value, 1e-8);
      EXPECT_GE(r.gain(), 0.0);
    }
  }
}

// Exact best response <= outcome-correlation bound, and random deviations
// never beat the exact value.
TEST(DeviationDominanceTest, RandomStrategies) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto qs = testing::random_strategy(rng, trial % 2 == 1);
    for (const Game& g : {game_promised(), game_full()}) {
      for (int p = 0; p < 3; ++p) {
        const auto exact = exact_best_response_value(g, qs, p);
        const auto bound = outcome_correlation_bound(g, qs, p);
        EXPECT_LE(exact.best_response_value, bound.best_response_value + 1e-9);
        EXPECT_NEAR(exact.current_payoff, bound.current_payoff, 1e-12);
        std::vector<BinaryMeasurement> alt{testing::random_povm(rng), testing::random_povm(rng)};
        EXPECT_LE(player_payoff(g, qs.with_player(p, alt), p), exact.best_response_value + 1e-9);
      }
    }
  }
}

TEST(EquilibriumTest, CorruptedAliceIsNotAnEquilibrium) {
  auto qs = svetlichny_strategy();
  qs = qs.with_player(0, {computational_measurement(), computational_measurement()});
  const auto v = verify_quantum_equilibrium(game_full(), qs, BoundMethod::kExactPovm, 1e-9);
  EXPECT_FALSE(v.is_equilibrium);
  EXPECT_EQ(v.reports.size(), 3u);
  EXPECT_GT(v.max_gain(), 1e-3);
}

TEST(EquilibriumTest, OutcomeBoundIsLooseOnGameB) {
  const auto v = verify_quantum_equilibrium(game_full(), svetlichny_strategy(),
                                            BoundMethod::kOutcomeCorrelation, 1e-6);
  EXPECT_FALSE(v.is_equilibrium);
  for (const auto& r : v.reports) EXPECT_GT(r.best_response_value, 1.139);
}

TEST(EquilibriumTest, NpaNeedsThreePlayers) {
  std::vector<std::vector<BinaryMeasurement>> m(2, {equatorial_measurement(0), equatorial_measurement(1)});
  const QuantumStrategy qs(ghz_state(2), m);
  EXPECT_THROW(verify_quantum_equilibrium(testing::chsh_game(), qs, BoundMethod::kNpaSdp, 1e-6),
               UnsupportedError);
  EXPECT_NO_THROW(verify_quantum_equilibrium(testing::chsh_game(), qs, BoundMethod::kExactPovm, 1e-6));
}

}  // namespace
}  // namespace qadvice
