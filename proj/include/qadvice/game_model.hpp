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

#ifndef QADVICE_GAME_MODEL_HPP_
#define QADVICE_GAME_MODEL_HPP_

#include <bit>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "qadvice/behavior.hpp"
#include "qadvice/errors.hpp"
#include "qadvice/game.hpp"
#include "qadvice/rational.hpp"

namespace qadvice {

// Average payoff F_i of every player.
template <class Scalar>
struct BasicPayoffVector {
  std::vector<Scalar> values;

  std::size_t size() const { return values.size(); }
  const Scalar& operator[](std::size_t i) const { return values[i]; }
  Scalar total() const {
    Scalar sum = 0;
    for (const auto& v : values) sum += v;
    return sum;
  }
  friend bool operator==(const BasicPayoffVector&, const BasicPayoffVector&) = default;
};

using ExactPayoffs = BasicPayoffVector<Rational>;
using RealPayoffs = BasicPayoffVector<double>;

namespace detail {

template <class Scalar>
void require_same_shape(const Game& game, const BasicBehavior<Scalar>& behavior) {
  if (!(behavior.inputs() == game.inputs()) || !(behavior.outputs() == game.outputs())) {
    throw StructuralError("behavior shape does not match game " + game.name());
  }
}

template <class Scalar>
void require_columns(const Game& game, const BasicBehavior<Scalar>& behavior) {
  require_same_shape(game, behavior);
  for (std::size_t x : game.support()) {
    if (!behavior.defined(x)) {
      throw StructuralError("behavior has no entry for supported input x=" + game.input_label(x));
    }
    const double err = behavior.column_error(x);
    if (err > normalization_tolerance<Scalar>()) {
      throw ValidationError("behavior column x=" + game.input_label(x) +
                            " is not a distribution (error " + std::to_string(err) + ")");
    }
  }
}

inline void require_binary_outputs(const MixedRadix& outputs) {
  for (int p = 0; p < outputs.positions(); ++p) {
    if (outputs.radix(p) != 2) {
      throw DomainError("correlators need binary outputs; player " + std::to_string(p) + " has " +
                        std::to_string(outputs.radix(p)));
    }
  }
}

inline int parity(const MixedRadix& radix, std::size_t index) {
  int bit = 0;
  for (int p = 0; p < radix.positions(); ++p) bit ^= radix.digit(index, p) & 1;
  return bit;
}

}  // namespace detail

// F_i = sum_x P(x) sum_y Pr(y|x) $_i(x, y). Inputs outside the prior's
// support are ignored even when the behavior defines them.
template <class Scalar>
BasicPayoffVector<Scalar> average_payoffs(const Game& game, const BasicBehavior<Scalar>& behavior) {
  detail::require_columns(game, behavior);
  BasicPayoffVector<Scalar> out{std::vector<Scalar>(game.player_count(), Scalar(0))};
  for (std::size_t x : game.support()) {
    const Scalar px = scalar_from<Scalar>(game.prior(x));
    for (std::size_t y = 0; y < game.outputs().size(); ++y) {
      const Scalar& pr = behavior(x, y);
      if (pr == 0) continue;
      for (int i = 0; i < game.player_count(); ++i) {
        const Rational& pay = game.payoff(x, y, i);
        if (pay == 0) continue;
        out.values[i] += px * pr * scalar_from<Scalar>(pay);
      }
    }
  }
  return out;
}

template <class Scalar>
Scalar total_average_payoff(const Game& game, const BasicBehavior<Scalar>& behavior) {
  return average_payoffs(game, behavior).total();
}

struct NoSignallingReport {
  bool passes = true;
  double worst_violation = 0.0;
  // Players whose marginal moved, and the two joint inputs that disagree.
  std::vector<int> subset;
  std::size_t first_input = 0;
  std::size_t second_input = 0;
};

// For every nonempty proper subset S of players, the marginal over y_S must
// not depend on the inputs of the other players. Only defined columns are
// compared.
template <class Scalar>
NoSignallingReport check_no_signalling(const BasicBehavior<Scalar>& behavior, double tol) {
  const MixedRadix& in = behavior.inputs();
  const MixedRadix& out = behavior.outputs();
  const int n = in.positions();
  NoSignallingReport report;

  // Subsets ordered by size, then lexicographically by bitmask.
  std::vector<unsigned> masks;
  for (int size = 1; size < n; ++size) {
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      if (std::popcount(mask) == size) masks.push_back(mask);
    }
  }

  for (unsigned mask : masks) {
    auto project = [&](const MixedRadix& radix, std::size_t index) {
      std::size_t key = 0;
      for (int p = 0; p < n; ++p) {
        if (mask & (1u << p)) key = key * radix.radix(p) + radix.digit(index, p);
      }
      return key;
    };
    std::size_t marginal_size = 1;
    for (int p = 0; p < n; ++p) {
      if (mask & (1u << p)) marginal_size *= out.radix(p);
    }
    std::vector<std::vector<Scalar>> marginals(in.size());
    for (std::size_t x = 0; x < in.size(); ++x) {
      if (!behavior.defined(x)) continue;
      marginals[x].assign(marginal_size, Scalar(0));
      for (std::size_t y = 0; y < out.size(); ++y) marginals[x][project(out, y)] += behavior(x, y);
    }
    for (std::size_t x1 = 0; x1 < in.size(); ++x1) {
      if (!behavior.defined(x1)) continue;
      for (std::size_t x2 = x1 + 1; x2 < in.size(); ++x2) {
        if (!behavior.defined(x2) || project(in, x1) != project(in, x2)) continue;
        for (std::size_t k = 0; k < marginal_size; ++k) {
          const double gap = std::abs(to_double(Scalar(marginals[x1][k] - marginals[x2][k])));
          if (gap > report.worst_violation) {
            report.worst_violation = gap;
            report.subset.clear();
            for (int p = 0; p < n; ++p) {
              if (mask & (1u << p)) report.subset.push_back(p);
            }
            report.first_input = x1;
            report.second_input = x2;
          }
        }
      }
    }
  }
  report.passes = report.worst_violation <= tol;
  return report;
}

// E(x) = Pr(even parity | x) - Pr(odd parity | x).
template <class Scalar>
Scalar correlator(const BasicBehavior<Scalar>& behavior, std::size_t x) {
  detail::require_binary_outputs(behavior.outputs());
  if (!behavior.defined(x)) {
    throw StructuralError("behavior has no entry for input index " + std::to_string(x));
  }
  Scalar even = 0;
  for (std::size_t y = 0; y < behavior.outputs().size(); ++y) {
    if (detail::parity(behavior.outputs(), y) == 0) even += behavior(x, y);
  }
  return Scalar(2) * even - Scalar(1);
}

// Svetlichny expression
//   E(000)+E(100)+E(010)+E(001)-E(111)-E(011)-E(101)-E(110),
// i.e. E(x) weighted +1 when popcount(x) <= 1 and -1 otherwise.
template <class Scalar>
Scalar svetlichny_value(const BasicBehavior<Scalar>& behavior) {
  const MixedRadix& in = behavior.inputs();
  if (in.positions() != 3 || in.size() != 8) {
    throw DomainError("the Svetlichny expression needs three players with binary inputs");
  }
  detail::require_binary_outputs(behavior.outputs());
  Scalar s = 0;
  for (std::size_t x = 0; x < 8; ++x) {
    int weight = 0;
    for (int p = 0; p < 3; ++p) weight += in.digit(x, p);
    if (weight <= 1) {
      s += correlator(behavior, x);
    } else {
      s -= correlator(behavior, x);
    }
  }
  return s;
}

// Winning probability of the GHZ game under its uniform prior on
// {000, 011, 101, 110}: win iff parity(y) = 0 on 000 and 1 otherwise.
template <class Scalar>
Scalar ghz_winning_probability(const BasicBehavior<Scalar>& behavior) {
  const MixedRadix& in = behavior.inputs();
  if (in.positions() != 3 || in.size() != 8) {
    throw DomainError("the GHZ game needs three players with binary inputs");
  }
  detail::require_binary_outputs(behavior.outputs());
  Scalar win = 0;
  const Scalar quarter = Scalar(1) / Scalar(4);
  for (std::size_t x : {0u, 3u, 5u, 6u}) {
    if (!behavior.defined(x)) {
      throw StructuralError("behavior has no entry for promised input x=" +
                            std::to_string(in.digit(x, 0)) + std::to_string(in.digit(x, 1)) +
                            std::to_string(in.digit(x, 2)));
    }
    const int target = x == 0 ? 0 : 1;
    for (std::size_t y = 0; y < 8; ++y) {
      if (detail::parity(behavior.outputs(), y) == target) win += quarter * behavior(x, y);
    }
  }
  return win;
}

}  // namespace qadvice

#endif  // QADVICE_GAME_MODEL_HPP_
