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

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "qadvice/qadvice.hpp"
#include "test_support.hpp"

namespace qadvice {
namespace {

LmiBlock block2(const std::string& name, int vars) {
  LmiBlock b{name, Eigen::MatrixXcd::Zero(2, 2), std::vector<Eigen::MatrixXcd>(vars, Eigen::MatrixXcd::Zero(2, 2))};
  return b;
}

// max y  s.t.  [[1, y], [y, 1]] >= 0.
TEST(SdpTest, OffDiagonalBound) {
  SdpProblem p;
  p.add_variable("y");
  auto b = block2("g", 1);
  b.constant = Eigen::MatrixXcd::Identity(2, 2);
  b.coefficients[0](0, 1) = b.coefficients[0](1, 0) = 1.0;
  p.lmis.push_back(b);
  p.objective(0) = 1.0;
  const auto s = solve_sdp(p);
  EXPECT_NEAR(s.optimum, 1.0, 1e-6);
  EXPECT_NEAR(s.upper_bound, 1.0, 1e-6);
  EXPECT_GE(s.upper_bound, s.optimum - 1e-9);
}

// max y1  s.t.  [[1, y1], [y1, y2]] >= 0,  4 - y2 >= 0.  Optimum 2.
TEST(SdpTest, InequalityCouples) {
  SdpProblem p;
  p.add_variable("y1");
  p.add_variable("y2");
  auto b = block2("g", 2);
  b.constant(0, 0) = 1.0;
  b.coefficients[0](0, 1) = b.coefficients[0](1, 0) = 1.0;
  b.coefficients[1](1, 1) = 1.0;
  p.lmis.push_back(b);
  auto row = p.make_row("cap");
  row.coefficients(1) = -1.0;
  row.offset = 4.0;
  p.inequalities.push_back(row);
  p.objective(0) = 1.0;
  EXPECT_NEAR(solve_sdp(p).upper_bound, 2.0, 1e-6);
}

// Complex off-diagonal: [[1, i y], [-i y, 1]] >= 0 with objective y, plus a
// constant shift.
TEST(SdpTest, ComplexEntries) {
  SdpProblem p;
  p.add_variable("y");
  auto b = block2("g", 1);
  b.constant = Eigen::MatrixXcd::Identity(2, 2);
  b.coefficients[0](0, 1) = Complex(0, 1);
  b.coefficients[0](1, 0) = Complex(0, -1);
  p.lmis.push_back(b);
  p.objective(0) = 1.0;
  p.objective_constant = 0.5;
  EXPECT_NEAR(solve_sdp(p).upper_bound, 1.5, 1e-6);
}

// Objective on a variable pinned by an equality; the other variable is free
// inside a face with no interior point ([[0, y], [y, 1]] forces y = 0).
TEST(SdpTest, FixedEntryAndFacialReduction) {
  SdpProblem p;
  p.add_variable("fixed");
  p.add_variable("y");
  auto b = block2("g", 2);
  b.constant(1, 1) = 1.0;
  b.coefficients[1](0, 1) = b.coefficients[1](1, 0) = 1.0;
  p.lmis.push_back(b);
  auto eq = p.make_row("pin");
  eq.coefficients(0) = 1.0;
  eq.offset = 0.3;
  p.equalities.push_back(eq);
  p.objective(0) = 1.0;
  p.objective(1) = 1.0;
  const auto s = solve_sdp(p);
  EXPECT_NEAR(s.upper_bound, 0.3, 1e-6);
  EXPECT_NEAR(s.variables(1), 0.0, 1e-6);
}

TEST(SdpTest, InfeasibleProblems) {
  SdpProblem p;
  p.add_variable("y");
  auto one = p.make_row("one");
  one.coefficients(0) = 1.0;
  one.offset = 1.0;
  auto two = one;
  two.name = "two";
  two.offset = 2.0;
  p.equalities = {one, two};
  EXPECT_THROW(solve_sdp(p), InfeasibleError);

  SdpProblem q;
  q.add_variable("y");
  LmiBlock neg{"neg", -Eigen::MatrixXcd::Identity(1, 1), {Eigen::MatrixXcd::Zero(1, 1)}};
  q.lmis.push_back(neg);
  q.objective(0) = 1.0;
  auto pin = q.make_row("pin");
  pin.coefficients(0) = 1.0;
  q.equalities.push_back(pin);
  try {
    solve_sdp(q);
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError& e) {
    EXPECT_NE(std::string(e.what()).find("neg"), std::string::npos);
  }
}

TEST(SdpTest, DumpFormat) {
  SdpProblem p;
  p.add_variable("alpha");
  auto b = block2("g", 1);
  b.constant = Eigen::MatrixXcd::Identity(2, 2);
  b.coefficients[0](0, 1) = b.coefficients[0](1, 0) = 1.0;
  p.lmis.push_back(b);
  p.objective(0) = 0.1;
  std::ostringstream os;
  write_sdp_text(os, p);
  const std::string text = os.str();
  EXPECT_EQ(text.rfind("variables 1\nvar 0 alpha\nobjective 0\nobj 0 0.10000000000000001\nblock 0 2 g\n", 0), 0u)
      << text;
  EXPECT_NE(text.find("entry 0 -1 0 0 1 0\n"), std::string::npos);
  EXPECT_NE(text.find("entry 0 0 0 1 1 0\n"), std::string::npos);
  EXPECT_EQ(text.find("entry 0 0 1 0"), std::string::npos);  // upper triangle only
}

TEST(NpaTest, LabelsAndBorder) {
  const auto labels = default_operator_labels();
  ASSERT_EQ(labels.size(), 20u);
  EXPECT_EQ(labels[0].side, OperatorLabel::Side::kDeviator);
  EXPECT_EQ(labels[4].side, OperatorLabel::Side::kFixedPair);
  const auto built = build_deviation_sdp(game_full(), svetlichny_strategy(), 0);
  EXPECT_EQ(built.gamma.dimension(), 21);
  EXPECT_EQ(built.gamma.reported_block().size(), 20u);
  EXPECT_EQ(built.gamma.entry(0, 0).status(), AffineEntry::Status::kFixed);
  EXPECT_EQ(built.pair, (std::array<int, 2>{1, 2}));
}

// The strategy's own moments satisfy every constraint of the relaxation.
TEST(NpaTest, HonestAssignmentIsFeasible) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto qs = trial == 0 ? svetlichny_strategy() : testing::random_strategy(rng, trial % 2 == 0);
    for (int player = 0; player < 3; ++player) {
      const auto built = build_deviation_sdp(game_full(), qs, player);
      const Eigen::VectorXd y = honest_assignment(built, qs);
      for (std::size_t b = 0; b < built.problem.lmis.size(); ++b) {
        const Eigen::MatrixXcd m = built.problem.lmi_value(b, y);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(0.5 * (m + m.adjoint()));
        EXPECT_GE(eig.eigenvalues()(0), -1e-8) << built.problem.lmis[b].name;
      }
      for (const auto& row : built.problem.equalities) {
        EXPECT_NEAR(row.coefficients.dot(y), row.offset, 1e-10) << row.name;
      }
      for (const auto& row : built.problem.inequalities) {
        EXPECT_GE(row.coefficients.dot(y) + row.offset, -1e-10) << row.name;
      }
      // Gamma at the honest point is the Gram matrix of S|psi>.
      const auto vectors = npa_detail::honest_vectors(qs, player);
      const Eigen::MatrixXcd gamma = built.gamma.evaluate(y);
      for (int i = 0; i < 21; ++i) {
        for (int j = 0; j < 21; ++j) EXPECT_NEAR(std::abs(gamma(i, j) - vectors[i].dot(vectors[j])), 0.0, 1e-10);
      }
      // Objective at the honest point is the player's payoff.
      EXPECT_NEAR(built.problem.objective.dot(y) + built.problem.objective_constant,
                  player_payoff(game_full(), qs, player), 1e-10);
    }
  }
}

TEST(NpaTest, PairBlockDiagonalSumsToOne) {
  const auto built = build_deviation_sdp(game_full(), svetlichny_strategy(), 1);
  for (int z = 0; z < 4; ++z) {
    Complex sum = 0;
    for (int b = 0; b < 4; ++b) {
      const auto& e = built.gamma.entry(5 + 4 * z + b, 5 + 4 * z + b);
      EXPECT_EQ(e.status(), AffineEntry::Status::kFixed);
      sum += e.constant;
    }
    EXPECT_NEAR(std::abs(sum - 1.0), 0.0, 1e-12);
  }
}

TEST(NpaTest, CatalogBounds) {
  for (int p = 0; p < 3; ++p) {
    const auto a = npa_deviation_bound(game_promised(), ghz_game_strategy(), p);
    EXPECT_NEAR(a.best_response_value, 4.0 / 3.0, 1e-6);
    const auto b = npa_deviation_bound(game_full(), svetlichny_strategy(), p);
    EXPECT_GE(b.best_response_value, 1.136);
    EXPECT_LE(b.best_response_value, 1.141);
    ASSERT_TRUE(b.solver.has_value());
    EXPECT_LE(std::abs(b.solver->gap), 1e-6);
  }
}

// Without the pair-state constraint the level-1 relaxation is looser.
TEST(NpaTest, PlainLevelOneValues) {
  NpaOptions povm;
  povm.pair_state_constraint = false;
  EXPECT_NEAR(npa_deviation_bound(game_full(), svetlichny_strategy(), 0, povm).best_response_value, 4.0 / 3.0, 1e-5);
  NpaOptions projective = povm;
  projective.projective_deviator = true;
  EXPECT_NEAR(npa_deviation_bound(game_full(), svetlichny_strategy(), 0, projective).best_response_value, 1.144471,
              1e-5);
}

TEST(NpaTest, LabelOrderInvariance) {
  NpaOptions shuffled;
  shuffled.label_order.resize(20);
  std::iota(shuffled.label_order.begin(), shuffled.label_order.end(), 0);
  std::mt19937_64 rng(4);
  std::shuffle(shuffled.label_order.begin(), shuffled.label_order.end(), rng);
  for (int p = 0; p < 3; ++p) {
    const double base = npa_deviation_bound(game_full(), svetlichny_strategy(), p).best_response_value;
    const double perm = npa_deviation_bound(game_full(), svetlichny_strategy(), p, shuffled).best_response_value;
    EXPECT_NEAR(base, perm, 1e-6);
  }
  NpaOptions bad;
  bad.label_order = {0, 0, 1};
  EXPECT_THROW(build_deviation_sdp(game_full(), svetlichny_strategy(), 0, bad), DomainError);
}

TEST(NpaTest, ConstantGame) {
  const Game g = testing::constant_game(Rational(5, 4));
  EXPECT_NEAR(npa_deviation_bound(g, ghz_game_strategy(), 2).best_response_value, 1.25, 1e-6);
}

// The relaxation never undercuts the exact POVM best response.
TEST(NpaTest, DominatesExactBestResponse) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto qs = testing::random_strategy(rng, trial % 2 == 0, trial % 3 == 0);
    const int p = trial % 3;
    const Game& g = trial % 2 ? game_full() : game_promised();
    const double exact = exact_best_response_value(g, qs, p).best_response_value;
    const auto npa = npa_deviation_bound(g, qs, p);
    EXPECT_GE(npa.best_response_value, exact - 1e-6) << "trial " << trial;
    EXPECT_LE(npa.best_response_value, outcome_correlation_bound(g, qs, p).best_response_value + 1e-6);
  }
}

TEST(NpaTest, UnsupportedShapes) {
  std::vector<std::vector<BinaryMeasurement>> m(2, {equatorial_measurement(0), equatorial_measurement(1)});
  const QuantumStrategy qs(ghz_state(2), m);
  EXPECT_THROW(npa_deviation_bound(testing::chsh_game(), qs, 0), UnsupportedError);
}

}  // namespace
}  // namespace qadvice
