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

#ifndef QADVICE_CLASSICAL_HPP_
#define QADVICE_CLASSICAL_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qadvice/behavior.hpp"
#include "qadvice/errors.hpp"
#include "qadvice/game.hpp"
#include "qadvice/game_model.hpp"
#include "qadvice/rational.hpp"

namespace qadvice {

// One deterministic map X_i -> Y_i per player: maps[i][x_i] = y_i.
struct PureProfile {
  std::vector<std::vector<int>> maps;

  friend bool operator==(const PureProfile&, const PureProfile&) = default;
};

// Pr(y_i | x_i) for one player, indexed [x_i][y_i].
using MixedStrategy = std::vector<std::vector<Rational>>;

// Classical advice: a distribution over joint advice symbols and one
// response table per player, response[i][x_i][r_i] = y_i.
struct CorrelatedStrategy {
  std::vector<std::vector<std::string>> advice;
  std::vector<Rational> distribution;
  std::vector<std::vector<std::vector<int>>> response;

  MixedRadix advice_radix() const {
    std::vector<int> sizes;
    for (const auto& a : advice) sizes.push_back(static_cast<int>(a.size()));
    return MixedRadix(sizes);
  }
};

inline constexpr std::size_t kDefaultMaxJointAdvice = 64;

// Compact text form: "A:01 B:00 C:11" lists each player's outputs per input.
inline std::string describe_profile(const Game& game, const PureProfile& profile) {
  std::string out;
  for (int i = 0; i < game.player_count(); ++i) {
    if (i) out += ' ';
    out += game.player(i).name.substr(0, 1) + ':';
    for (int y : profile.maps[i]) out += game.player(i).outputs[y];
  }
  return out;
}

// Enumeration order of pure profiles: player 0's map is the most significant
// digit, and within a map the output for input 0 is most significant.
class ProfileSpace {
 public:
  explicit ProfileSpace(const Game& game) {
    std::vector<int> per_player;
    for (const auto& p : game.players()) {
      std::size_t count = 1;
      for (std::size_t k = 0; k < p.inputs.size(); ++k) count *= p.outputs.size();
      per_player.push_back(static_cast<int>(count));
      maps_.emplace_back(std::vector<int>(p.inputs.size(), static_cast<int>(p.outputs.size())));
    }
    profiles_ = MixedRadix(per_player);
  }

  std::size_t size() const { return profiles_.size(); }
  const MixedRadix& radix() const { return profiles_; }
  int maps_per_player(int i) const { return profiles_.radix(i); }

  std::vector<int> map(int player, int map_index) const {
    return maps_[player].digits(static_cast<std::size_t>(map_index));
  }

  PureProfile decode(std::size_t index) const {
    PureProfile out;
    for (int i = 0; i < profiles_.positions(); ++i) out.maps.push_back(map(i, profiles_.digit(index, i)));
    return out;
  }

  std::size_t encode(const PureProfile& profile) const {
    std::vector<int> digits;
    for (int i = 0; i < profiles_.positions(); ++i) {
      digits.push_back(static_cast<int>(maps_[i].index(profile.maps[i])));
    }
    return profiles_.index(digits);
  }

 private:
  MixedRadix profiles_;
  std::vector<MixedRadix> maps_;
};

inline std::vector<PureProfile> enumerate_pure_profiles(const Game& game) {
  ProfileSpace space(game);
  std::vector<PureProfile> out;
  out.reserve(space.size());
  for (std::size_t k = 0; k < space.size(); ++k) out.push_back(space.decode(k));
  return out;
}

namespace detail {

inline void require_profile_shape(const Game& game, const PureProfile& profile) {
  if (static_cast<int>(profile.maps.size()) != game.player_count()) {
    throw StructuralError("profile has " + std::to_string(profile.maps.size()) +
                          " players, game has " + std::to_string(game.player_count()));
  }
  for (int i = 0; i < game.player_count(); ++i) {
    const auto& p = game.player(i);
    if (profile.maps[i].size() != p.inputs.size()) {
      throw StructuralError("map of player " + p.name + " is not total on its inputs");
    }
    for (int y : profile.maps[i]) {
      if (y < 0 || y >= static_cast<int>(p.outputs.size())) {
        throw StructuralError("map of player " + p.name + " uses an unknown output");
      }
    }
  }
}

// Joint output of a pure profile on joint input x.
inline std::size_t respond(const Game& game, const PureProfile& profile, std::size_t x) {
  std::size_t y = 0;
  for (int i = 0; i < game.player_count(); ++i) {
    y += game.outputs().stride(i) * profile.maps[i][game.inputs().digit(x, i)];
  }
  return y;
}

}  // namespace detail

// Payoff vector of a pure profile, computed directly from the payoff table.
inline ExactPayoffs pure_payoffs(const Game& game, const PureProfile& profile) {
  detail::require_profile_shape(game, profile);
  ExactPayoffs out{std::vector<Rational>(game.player_count(), Rational(0))};
  for (std::size_t x : game.support()) {
    const std::size_t y = detail::respond(game, profile, x);
    for (int i = 0; i < game.player_count(); ++i) out.values[i] += game.prior(x) * game.payoff(x, y, i);
  }
  return out;
}

// Pr(y|x) = prod_i Pr(y_i|x_i).
inline ExactBehavior behavior_of_mixed(const Game& game, const std::vector<MixedStrategy>& profile) {
  if (static_cast<int>(profile.size()) != game.player_count()) {
    throw StructuralError("mixed profile has " + std::to_string(profile.size()) +
                          " players, game has " + std::to_string(game.player_count()));
  }
  for (int i = 0; i < game.player_count(); ++i) {
    const auto& p = game.player(i);
    if (profile[i].size() != p.inputs.size()) {
      throw StructuralError("mixed strategy of " + p.name + " has wrong number of inputs");
    }
    for (const auto& column : profile[i]) {
      if (column.size() != p.outputs.size()) {
        throw StructuralError("mixed strategy of " + p.name + " has wrong number of outputs");
      }
      Rational sum = 0;
      for (const auto& v : column) {
        if (v < 0) throw ValidationError("negative probability in mixed strategy of " + p.name);
        sum += v;
      }
      if (sum != 1) {
        throw ValidationError("mixed strategy of " + p.name + " sums to " + format_rational(sum));
      }
    }
  }
  ExactBehavior out = ExactBehavior::for_game(game);
  for (std::size_t x = 0; x < game.inputs().size(); ++x) {
    for (std::size_t y = 0; y < game.outputs().size(); ++y) {
      Rational pr = 1;
      for (int i = 0; i < game.player_count() && pr != 0; ++i) {
        pr *= profile[i][game.inputs().digit(x, i)][game.outputs().digit(y, i)];
      }
      out.set(x, y, pr);
    }
  }
  return out;
}

inline std::vector<MixedStrategy> as_mixed(const Game& game, const PureProfile& profile) {
  detail::require_profile_shape(game, profile);
  std::vector<MixedStrategy> out;
  for (int i = 0; i < game.player_count(); ++i) {
    MixedStrategy s;
    for (int y : profile.maps[i]) {
      std::vector<Rational> column(game.player(i).outputs.size(), Rational(0));
      column[y] = 1;
      s.push_back(std::move(column));
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline ExactBehavior behavior_of_pure(const Game& game, const PureProfile& profile) {
  return behavior_of_mixed(game, as_mixed(game, profile));
}

inline void validate_correlated(const Game& game, const CorrelatedStrategy& cs,
                                std::size_t max_joint_advice = kDefaultMaxJointAdvice) {
  const int n = game.player_count();
  if (static_cast<int>(cs.advice.size()) != n || static_cast<int>(cs.response.size()) != n) {
    throw StructuralError("correlated strategy does not have one advice space per player");
  }
  const MixedRadix advice = cs.advice_radix();
  if (advice.size() > max_joint_advice) {
    throw ValidationError("joint advice space has " + std::to_string(advice.size()) +
                          " symbols, limit is " + std::to_string(max_joint_advice));
  }
  if (cs.distribution.size() != advice.size()) {
    throw StructuralError("advice distribution has " + std::to_string(cs.distribution.size()) +
                          " entries, expected " + std::to_string(advice.size()));
  }
  Rational sum = 0;
  for (const auto& q : cs.distribution) {
    if (q < 0) throw ValidationError("negative advice probability");
    sum += q;
  }
  if (sum != 1) throw ValidationError("advice distribution sums to " + format_rational(sum));
  for (int i = 0; i < n; ++i) {
    const auto& p = game.player(i);
    if (cs.response[i].size() != p.inputs.size()) {
      throw StructuralError("response map of " + p.name + " is not total on its inputs");
    }
    for (std::size_t xi = 0; xi < p.inputs.size(); ++xi) {
      const auto& row = cs.response[i][xi];
      if (row.size() > cs.advice[i].size()) {
        throw StructuralError("response map of " + p.name + " uses advice symbol #" +
                              std::to_string(cs.advice[i].size()) + " which is not in its advice space");
      }
      if (row.size() < cs.advice[i].size()) {
        throw StructuralError("response map of " + p.name + " is not total on its advice space");
      }
      for (int y : row) {
        if (y < 0 || y >= static_cast<int>(p.outputs.size())) {
          throw StructuralError("response map of " + p.name + " uses an unknown output");
        }
      }
    }
  }
}

// Pr(y|x) = sum_r Q(r) [y_i = s_i(x_i, r_i) for all i].
inline ExactBehavior behavior_of_correlated(const Game& game, const CorrelatedStrategy& cs,
                                            std::size_t max_joint_advice = kDefaultMaxJointAdvice) {
  validate_correlated(game, cs, max_joint_advice);
  const MixedRadix advice = cs.advice_radix();
  ExactBehavior out = ExactBehavior::for_game(game);
  for (std::size_t x = 0; x < game.inputs().size(); ++x) {
    std::vector<Rational> column(game.outputs().size(), Rational(0));
    for (std::size_t r = 0; r < advice.size(); ++r) {
      if (cs.distribution[r] == 0) continue;
      std::size_t y = 0;
      for (int i = 0; i < game.player_count(); ++i) {
        y += game.outputs().stride(i) *
             cs.response[i][game.inputs().digit(x, i)][advice.digit(r, i)];
      }
      column[y] += cs.distribution[r];
    }
    out.set_column(x, column);
  }
  return out;
}

struct NashEquilibrium {
  std::size_t index;  // position in enumerate_pure_profiles order
  PureProfile profile;
  ExactPayoffs payoffs;
};

// Payoffs of every pure profile, in enumeration order.
inline std::vector<ExactPayoffs> all_pure_payoffs(const Game& game) {
  ProfileSpace space(game);
  std::vector<ExactPayoffs> out;
  out.reserve(space.size());
  for (std::size_t k = 0; k < space.size(); ++k) out.push_back(pure_payoffs(game, space.decode(k)));
  return out;
}

// Pure profiles where no player has a pure deviation that strictly raises
// their own payoff. Mixed deviations cannot do better: F_i is linear in the
// deviator's mixed strategy, so its maximum sits at a pure map.
inline std::vector<NashEquilibrium> pure_nash_equilibria(const Game& game) {
  ProfileSpace space(game);
  const auto payoffs = all_pure_payoffs(game);
  std::vector<NashEquilibrium> out;
  for (std::size_t k = 0; k < space.size(); ++k) {
    bool stable = true;
    for (int i = 0; i < game.player_count() && stable; ++i) {
      for (int alt = 0; alt < space.maps_per_player(i); ++alt) {
        const std::size_t dev = space.radix().with_digit(k, i, alt);
        if (payoffs[dev][i] > payoffs[k][i]) {
          stable = false;
          break;
        }
      }
    }
    if (stable) out.push_back({k, space.decode(k), payoffs[k]});
  }
  return out;
}

struct SocialOptimum {
  Rational value;
  std::vector<std::size_t> indices;
  std::vector<PureProfile> maximizers;
};

// max over pure profiles of sum_i F_i. Correlated strategies mix pure
// profiles, and F_total is linear, so this is also the correlated optimum.
inline SocialOptimum classical_social_optimum(const Game& game) {
  ProfileSpace space(game);
  const auto payoffs = all_pure_payoffs(game);
  SocialOptimum out;
  for (std::size_t k = 0; k < payoffs.size(); ++k) {
    const Rational total = payoffs[k].total();
    if (out.indices.empty() || total > out.value) {
      out.value = total;
      out.indices = {k};
    } else if (total == out.value) {
      out.indices.push_back(k);
    }
  }
  for (std::size_t k : out.indices) out.maximizers.push_back(space.decode(k));
  return out;
}

namespace detail {

// Whether p is a convex combination of `others`: exact phase-1 simplex with
// Bland's rule on  sum_q l_q (q - p) = 0,  sum_q l_q = 1,  l >= 0.
inline bool in_convex_hull(const ExactPayoffs& p, const std::vector<const ExactPayoffs*>& others) {
  const std::size_t d = p.size();
  const std::size_t rows = d + 1;
  const std::size_t cols = others.size();
  if (cols == 0) return false;
  // Tableau columns: cols originals, rows artificials, then the rhs.
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + rows + 1, Rational(0)));
  for (std::size_t q = 0; q < cols; ++q) {
    for (std::size_t r = 0; r < d; ++r) t[r][q] = (*others[q])[r] - p[r];
    t[d][q] = 1;
  }
  t[d][cols + rows] = 1;
  for (std::size_t r = 0; r < rows; ++r) {
    if (t[r][cols + rows] < 0) {
      for (auto& v : t[r]) v = -v;
    }
    t[r][cols + r] = 1;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = cols + r;
  std::vector<Rational> cost(cols + rows + 1, Rational(0));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t r = 0; r < rows; ++r) cost[j] -= t[r][j];
  }
  for (std::size_t r = 0; r < rows; ++r) cost[cols + rows] -= t[r][cols + rows];
  for (;;) {
    std::size_t enter = cols + rows;
    for (std::size_t j = 0; j < cols + rows; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols + rows) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      const Rational ratio = t[r][cols + rows] / t[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction; cannot happen in phase 1
    const Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational f = t[r][enter];
      for (std::size_t j = 0; j <= cols + rows; ++j) t[r][j] -= f * t[leave][j];
    }
    const Rational f = cost[enter];
    for (std::size_t j = 0; j <= cols + rows; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  return cost[cols + rows] == 0;
}

}  // namespace detail

// Distinct payoff points of the pure profiles, in order of first appearance.
// Their convex hull is the set of payoffs reachable with classical advice;
// the list may include points interior to the hull.
inline std::vector<ExactPayoffs> payoff_polytope_vertices(const Game& game) {
  std::vector<ExactPayoffs> out;
  for (auto& point : all_pure_payoffs(game)) {
    if (std::find(out.begin(), out.end(), point) == out.end()) out.push_back(std::move(point));
  }
  return out;
}

// The subset of payoff_polytope_vertices that are extreme points of the hull.
inline std::vector<ExactPayoffs> extreme_payoff_points(const Game& game) {
  const auto points = payoff_polytope_vertices(game);
  std::vector<ExactPayoffs> out;
  for (std::size_t k = 0; k < points.size(); ++k) {
    std::vector<const ExactPayoffs*> others;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != k) others.push_back(&points[j]);
    }
    if (!detail::in_convex_hull(points[k], others)) out.push_back(points[k]);
  }
  return out;
}

struct PointwiseSwap {
  int input;   // x_i
  int advice;  // r_i
  int from;    // s_i(x_i, r_i)
  int to;      // deviating output
  Rational gain;
};

struct CorrelatedEquilibriumReport {
  bool is_equilibrium = true;
  // Largest payoff increase any single player can get by replacing their
  // response map; zero at an equilibrium.
  Rational max_gain = 0;
  int player = -1;
  // For the deviating player: the improved response map and the swaps it
  // is made of.
  std::vector<std::vector<int>> witness_response;
  std::vector<PointwiseSwap> swaps;
};

// Each (x_i, r_i) cell of a response map contributes separately to F_i, so
// the best alternative map is assembled from the best output cell by cell and
// its gain is the sum of the positive cell gains.
inline CorrelatedEquilibriumReport is_correlated_equilibrium(
    const Game& game, const CorrelatedStrategy& cs,
    std::size_t max_joint_advice = kDefaultMaxJointAdvice) {
  validate_correlated(game, cs, max_joint_advice);
  const MixedRadix advice = cs.advice_radix();
  const int n = game.player_count();
  CorrelatedEquilibriumReport report;

  for (int i = 0; i < n; ++i) {
    const int nx = static_cast<int>(game.player(i).inputs.size());
    const int nr = static_cast<int>(cs.advice[i].size());
    const int ny = static_cast<int>(game.player(i).outputs.size());
    // value[x_i][r_i][y'] = contribution to F_i if cell (x_i, r_i) outputs y'.
    std::vector<std::vector<std::vector<Rational>>> value(
        nx, std::vector<std::vector<Rational>>(nr, std::vector<Rational>(ny, Rational(0))));
    for (std::size_t x : game.support()) {
      const int xi = game.inputs().digit(x, i);
      for (std::size_t r = 0; r < advice.size(); ++r) {
        if (cs.distribution[r] == 0) continue;
        const int ri = advice.digit(r, i);
        std::size_t y = 0;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          y += game.outputs().stride(j) * cs.response[j][game.inputs().digit(x, j)][advice.digit(r, j)];
        }
        const Rational weight = game.prior(x) * cs.distribution[r];
        for (int alt = 0; alt < ny; ++alt) {
          value[xi][ri][alt] += weight * game.payoff(x, y + game.outputs().stride(i) * alt, i);
        }
      }
    }
    Rational gain = 0;
    std::vector<PointwiseSwap> swaps;
    std::vector<std::vector<int>> improved = cs.response[i];
    for (int xi = 0; xi < nx; ++xi) {
      for (int ri = 0; ri < nr; ++ri) {
        const int current = cs.response[i][xi][ri];
        int best = current;
        for (int alt = 0; alt < ny; ++alt) {
          if (value[xi][ri][alt] > value[xi][ri][best]) best = alt;
        }
        if (best != current) {
          const Rational delta = value[xi][ri][best] - value[xi][ri][current];
          gain += delta;
          swaps.push_back({xi, ri, current, best, delta});
          improved[xi][ri] = best;
        }
      }
    }
    if (gain > report.max_gain) {
      report.max_gain = gain;
      report.player = i;
      report.witness_response = std::move(improved);
      report.swaps = std::move(swaps);
    }
  }
  report.is_equilibrium = report.max_gain == 0;
  return report;
}

// Correlated strategy that plays pure profile k with probability weights[k]
// through shared advice: every player receives the same symbol k.
inline CorrelatedStrategy shared_advice_mixture(const Game& game,
                                                const std::vector<PureProfile>& profiles,
                                                const std::vector<Rational>& weights) {
  if (profiles.size() != weights.size() || profiles.empty()) {
    throw StructuralError("need one weight per profile");
  }
  const int n = game.player_count();
  const int k = static_cast<int>(profiles.size());
  CorrelatedStrategy cs;
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> symbols;
    for (int s = 0; s < k; ++s) symbols.push_back(std::to_string(s));
    cs.advice.push_back(symbols);
    std::vector<std::vector<int>> response(game.player(i).inputs.size(), std::vector<int>(k));
    for (int s = 0; s < k; ++s) {
      for (std::size_t xi = 0; xi < response.size(); ++xi) response[xi][s] = profiles[s].maps[i][xi];
    }
    cs.response.push_back(std::move(response));
  }
  const MixedRadix radix = cs.advice_radix();
  cs.distribution.assign(radix.size(), Rational(0));
  for (int s = 0; s < k; ++s) {
    std::vector<int> digits(n, s);
    cs.distribution[radix.index(digits)] = weights[s];
  }
  return cs;
}

}  // namespace qadvice

#endif  // QADVICE_CLASSICAL_HPP_
