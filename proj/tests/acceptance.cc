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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Oracles here are independent of the library code they check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qadvice/cli.hpp"
#include "qadvice/qadvice.hpp"
#include "test_support.hpp"

namespace {

using namespace qadvice;
using testing::q;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

ExactPayoffs triple(Rational a, Rational b, Rational c) { return ExactPayoffs{{a, b, c}}; }

bool has_triple(const std::vector<NashEquilibrium>& eqs, const ExactPayoffs& t) {
  for (const auto& e : eqs) {
    if (e.payoffs == t) return true;
  }
  return false;
}

// No equilibrium is weakly preferred to every other one by all players.
bool conflicting(const std::vector<NashEquilibrium>& eqs) {
  for (const auto& e : eqs) {
    bool everyone_content = true;
    for (const auto& other : eqs) {
      for (int i = 0; i < 3; ++i) everyone_content = everyone_content && e.payoffs[i] >= other.payoffs[i];
    }
    if (everyone_content) return false;
  }
  return true;
}

// Brute force over all 64 deterministic strategies straight from the rules:
// promised inputs uniform, win iff output parity matches x != 000.
Rational ghz_best_deterministic() {
  Rational best = 0;
  for (int code = 0; code < 64; ++code) {
    Rational win = 0;
    for (int x : {0, 3, 5, 6}) {
      int parity = 0;
      for (int p = 0; p < 3; ++p) parity ^= (code >> (2 * (2 - p) + (1 - ((x >> (2 - p)) & 1)))) & 1;
      if (parity == (x == 0 ? 0 : 1)) win += q(1, 4);
    }
    if (win > best) best = win;
  }
  return best;
}

void criterion1(Outcome& o) {
  const double win = ghz_winning_probability(behavior_of_quantum(ghz_game_strategy()));
  const Rational oracle = ghz_best_deterministic();
  Rational library = 0;
  const Game g = ghz_game();
  for (const auto& p : enumerate_pure_profiles(g)) {
    const Rational w = ghz_winning_probability(behavior_of_pure(g, p));
    if (w > library) library = w;
  }
  o.detail << "quantum win " << win << ", classical best " << format_rational(library);
  o.require(std::abs(win - 1.0) <= 1e-9, "quantum win within 1e-9 of 1");
  o.require(oracle == q(3, 4) && library == oracle, "classical best pure win 3/4");
}

void criterion2(Outcome& o) {
  const Game a = game_promised();
  const auto opt = classical_social_optimum(a);
  const auto eqs = pure_nash_equilibria(a);
  o.detail << "optimum " << format_rational(opt.value) << ", " << eqs.size() << " pure equilibria";
  o.require(opt.value == 3, "social optimum 3");
  o.require(has_triple(eqs, triple(q(13, 12), q(5, 6), q(13, 12))), "(13/12, 5/6, 13/12)");
  o.require(has_triple(eqs, triple(q(13, 12), q(13, 12), q(5, 6))), "(13/12, 13/12, 5/6)");
  o.require(has_triple(eqs, triple(q(5, 6), q(13, 12), q(13, 12))), "(5/6, 13/12, 13/12)");
  o.require(conflicting(eqs), "no equilibrium preferred by all players");
}

void criterion3(Outcome& o) {
  const Game a = game_promised();
  const auto b = behavior_of_quantum(ghz_game_strategy());
  const auto f = average_payoffs(a, b);
  o.detail << "payoffs (" << f[0] << ", " << f[1] << ", " << f[2] << "), total " << f.total();
  for (int i = 0; i < 3; ++i) o.require(std::abs(f[i] - 4.0 / 3.0) <= 1e-9, "payoff 4/3");
  o.require(std::abs(f.total() - 4.0) <= 1e-9, "total 4");
  for (const char* xs : {"011", "101", "110"}) {
    const std::size_t x = joint_index(a.inputs(), xs);
    for (std::size_t y = 0; y < 8; ++y) {
      const bool target = y == 4 || y == 2 || y == 1 || y == 7;  // 100, 010, 001, 111
      o.require(std::abs(b(x, y) - (target ? 0.25 : 0.0)) <= 1e-9, std::string("behavior at x=") + xs);
    }
  }
}

void criterion4(Outcome& o) {
  const Game a = game_promised();
  const auto qs = ghz_game_strategy();
  for (int p = 0; p < 3; ++p) {
    const auto bound = outcome_correlation_bound(a, qs, p);
    const auto exact = exact_best_response_value(a, qs, p);
    if (p == 0) o.detail << "bound " << bound.best_response_value << ", exact " << exact.best_response_value;
    o.require(std::abs(bound.best_response_value - 4.0 / 3.0) <= 1e-9, "outcome-correlation bound 4/3");
    o.require(std::abs(exact.best_response_value - 4.0 / 3.0) <= 1e-9, "exact best response 4/3");
    o.require(std::abs(exact.gain()) <= 1e-9, "zero gain");
  }
}

void criterion5(Outcome& o) {
  const Game b = game_full();
  const auto opt = classical_social_optimum(b);
  Rational worst = 0;
  int checked = 0;
  for (const auto& p : enumerate_pure_profiles(b)) {
    const Rational s = svetlichny_value(behavior_of_pure(b, p));
    if (abs(s) > worst) worst = abs(s);
    ++checked;
  }
  const auto eqs = pure_nash_equilibria(b);
  o.detail << "optimum " << format_rational(opt.value) << ", max |S| " << format_rational(worst) << " over "
           << checked << " profiles";
  o.require(opt.value == 3, "social optimum 3");
  o.require(checked == 64 && worst <= 4, "|S| <= 4 on all 64 profiles");
  o.require(has_triple(eqs, triple(q(7, 6), q(11, 12), q(11, 12))), "(7/6, 11/12, 11/12)");
  o.require(has_triple(eqs, triple(q(11, 12), q(7, 6), q(11, 12))), "(11/12, 7/6, 11/12)");
  o.require(has_triple(eqs, triple(q(11, 12), q(11, 12), q(7, 6))), "(11/12, 11/12, 7/6)");
}

SeesawResult game_b_seesaw() {
  SeesawOptions opt;
  opt.restarts = 50;
  opt.seed = 0;
  return seesaw_optimize(game_full(), opt);
}

void criterion6(Outcome& o, const SeesawResult& r) {
  const auto beh = behavior_of_quantum(r.strategy);
  const auto f = average_payoffs(game_full(), beh);
  const double s = svetlichny_value(beh);
  o.detail << "F_total " << f.total() << ", payoffs (" << f[0] << ", " << f[1] << ", " << f[2] << "), S " << s;
  o.require(f.total() >= 2 + std::sqrt(2.0) - 1e-4, "F_total >= 3.41421 - 1e-4");
  for (int i = 0; i < 3; ++i) o.require(std::abs(f[i] - 1.13807) <= 1e-3, "per-player payoff near 1.13807");
  o.require(std::abs(s - 5.65685) <= 1e-3, "Svetlichny value near 5.65685");
}

// Checked on the analytic strategy and on the optimizer's output.
void criterion7(Outcome& o, const SeesawResult& r) {
  const Game b = game_full();
  const std::vector<std::pair<const char*, QuantumStrategy>> strategies{{"analytic", svetlichny_strategy()},
                                                                       {"seesaw", r.strategy}};
  for (const auto& [label, qs] : strategies) {
    const auto verdict = verify_quantum_equilibrium(b, qs, BoundMethod::kNpaSdp, 2e-3);
    double lo = 1e9, hi = -1e9, gap = 0;
    for (const auto& rep : verdict.reports) {
      lo = std::min(lo, rep.best_response_value);
      hi = std::max(hi, rep.best_response_value);
      gap = std::max(gap, std::abs(rep.solver->gap));
      o.require(rep.best_response_value >= 1.136 && rep.best_response_value <= 1.141,
                std::string(label) + " bound in [1.136, 1.141]");
      o.require(std::abs(rep.solver->gap) <= 1e-7, std::string(label) + " duality gap <= 1e-7");
      const auto exact = exact_best_response_value(b, qs, rep.player);
      o.require(std::abs(exact.best_response_value - exact.current_payoff) <= 1e-6,
                std::string(label) + " exact best response within 1e-6");
    }
    o.require(verdict.is_equilibrium, std::string(label) + " verdict at tol 2e-3");
    if (label != strategies.front().first) o.detail << "; ";
    o.detail << label << " bounds [" << lo << ", " << hi << "] gap " << gap;
  }
}

void criterion8(Outcome& o) {
  const Game b = game_full();
  std::mt19937_64 rng(2026);
  double worst = 0;
  for (int k = 0; k < 100; ++k) {
    const auto beh = testing::random_real_behavior(b, rng);
    worst = std::max(worst, std::abs(total_average_payoff(b, beh) - (2 + svetlichny_value(beh) / 4)));
  }
  o.detail << "worst deviation " << worst << " over 100 behaviors";
  o.require(worst <= 1e-9, "F_total = 2 + S/4 within 1e-9");
}

void criterion9(Outcome& o) {
  std::mt19937_64 rng(99);
  double ns_worst = 0;
  for (int k = 0; k < 100; ++k) {
    const auto rep = check_no_signalling(behavior_of_quantum(testing::random_strategy(rng, k % 2 == 1)), 1e-9);
    ns_worst = std::max(ns_worst, rep.worst_violation);
    o.require(rep.passes, "no-signalling");
  }
  int chain = 0;
  for (int k = 0; k < 20; ++k) {
    const auto qs = testing::random_strategy(rng, k % 2 == 0);
    for (const Game& g : {game_promised(), game_full()}) {
      for (int p = 0; p < 3; ++p) {
        const auto exact = exact_best_response_value(g, qs, p);
        const auto bound = outcome_correlation_bound(g, qs, p);
        const bool ok = bound.best_response_value >= exact.best_response_value - 1e-9 &&
                        exact.best_response_value >= exact.current_payoff - 1e-9;
        chain += ok;
        o.require(ok, "outcome_correlation >= exact_povm >= achieved");
      }
    }
  }
  double cross = 0;
  for (int k = 0; k < 100; ++k) {
    const Game& g = k % 2 ? game_full() : game_promised();
    const auto exact = testing::random_exact_behavior(g, rng);
    const auto e = average_payoffs(g, exact);
    const auto r = average_payoffs(g, to_real(exact));
    for (int i = 0; i < 3; ++i) cross = std::max(cross, std::abs(to_double(e[i]) - r[i]));
  }
  o.require(cross <= 1e-12, "rational/real agreement within 1e-12");
  int trips = 0;
  for (const auto& entry : catalog()) {
    const Game back = parse_game_text(serialize_game(entry.game));
    trips += back == entry.game;
    o.require(back == entry.game && serialize_game(back) == serialize_game(entry.game), "round trip " + entry.name);
  }
  o.detail << "no-signalling worst " << ns_worst << ", dominance " << chain << "/120, cross " << cross
           << ", round trips " << trips << "/3";
}

void criterion10(Outcome& o) {
  const Game a = game_promised();
  const auto beh = behavior_of_quantum(ghz_game_strategy());
  double worst_z = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto s = cli::simulate_rounds(a, beh, 1000000, seed);
    for (int i = 0; i < 3; ++i) {
      const double z = std::abs(s.mean[i] - 4.0 / 3.0) / s.standard_error[i];
      worst_z = std::max(worst_z, z);
      o.require(s.standard_error[i] > 0 && z <= 4.0, "seed " + std::to_string(seed) + " within 4 SE");
    }
  }
  o.detail << "10 seeds x 1e6 rounds, worst |z| " << worst_z;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  std::optional<SeesawResult> seesaw;
  auto seesaw_result = [&]() -> const SeesawResult& {
    if (!seesaw) seesaw = game_b_seesaw();
    return *seesaw;
  };
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"GHZ game: quantum wins with certainty, classical 3/4", criterion1},
      {"Game A: classical optimum and conflicting equilibria", criterion2},
      {"Game A: GHZ strategy payoffs and behavior", criterion3},
      {"Game A: GHZ strategy is an equilibrium", criterion4},
      {"Game B: classical optimum, Svetlichny bound, equilibria", criterion5},
      {"Game B: seesaw reaches 2 + sqrt(2)", [&](Outcome& o) { criterion6(o, seesaw_result()); }},
      {"Game B: moment-matrix equilibrium check", [&](Outcome& o) { criterion7(o, seesaw_result()); }},
      {"Game B: F_total = 2 + S/4", criterion8},
      {"Property suites", criterion9},
      {"Game A: simulation matches 4/3", criterion10},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::printf("%s criterion %zu: %s | %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.detail.str().c_str(), secs);
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria passed in %.1fs\n", static_cast<int>(criteria.size()) - failures, criteria.size(),
              total);
  return failures == 0 ? 0 : 1;
}
