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

#ifndef QADVICE_BEHAVIOR_HPP_
#define QADVICE_BEHAVIOR_HPP_

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "qadvice/errors.hpp"
#include "qadvice/game.hpp"
#include "qadvice/rational.hpp"

namespace qadvice {

enum class Representation { kExact, kReal };

// Conditional distribution Pr(y|x) stored as one column per joint input.
// Columns may be left undefined; evaluators complain only when they need a
// column that is missing.
template <class Scalar>
class BasicBehavior {
 public:
  using scalar_type = Scalar;
  static constexpr Representation representation =
      is_exact_v<Scalar> ? Representation::kExact : Representation::kReal;

  BasicBehavior() = default;
  BasicBehavior(MixedRadix inputs, MixedRadix outputs)
      : inputs_(std::move(inputs)),
        outputs_(std::move(outputs)),
        table_(inputs_.size() * outputs_.size(), Scalar(0)),
        defined_(inputs_.size(), false) {}

  // Empty behavior shaped like the game's alphabets.
  static BasicBehavior for_game(const Game& game) {
    return BasicBehavior(game.inputs(), game.outputs());
  }

  const MixedRadix& inputs() const { return inputs_; }
  const MixedRadix& outputs() const { return outputs_; }
  int player_count() const { return inputs_.positions(); }

  bool defined(std::size_t x) const { return defined_[x]; }

  const Scalar& operator()(std::size_t x, std::size_t y) const {
    return table_[x * outputs_.size() + y];
  }

  void set(std::size_t x, std::size_t y, Scalar value) {
    table_[x * outputs_.size() + y] = std::move(value);
    defined_[x] = true;
  }

  void set_column(std::size_t x, const std::vector<Scalar>& column) {
    if (column.size() != outputs_.size()) {
      throw StructuralError("behavior column has " + std::to_string(column.size()) +
                            " entries, expected " + std::to_string(outputs_.size()));
    }
    for (std::size_t y = 0; y < column.size(); ++y) table_[x * outputs_.size() + y] = column[y];
    defined_[x] = true;
  }

  void clear_column(std::size_t x) {
    for (std::size_t y = 0; y < outputs_.size(); ++y) table_[x * outputs_.size() + y] = Scalar(0);
    defined_[x] = false;
  }

  // Largest deviation from normalization/nonnegativity over defined columns.
  double normalization_error() const {
    double worst = 0;
    for (std::size_t x = 0; x < inputs_.size(); ++x) {
      if (defined_[x]) worst = std::max(worst, column_error(x));
    }
    return worst;
  }

  double column_error(std::size_t x) const {
    Scalar sum = 0;
    double worst = 0;
    for (std::size_t y = 0; y < outputs_.size(); ++y) {
      const Scalar& v = (*this)(x, y);
      sum += v;
      if (v < 0) worst = std::max(worst, -to_double(v));
    }
    if constexpr (is_exact_v<Scalar>) {
      if (sum != 1) worst = std::max(worst, std::abs(to_double(Scalar(sum - 1))));
    } else {
      worst = std::max(worst, std::abs(sum - 1.0));
    }
    return worst;
  }

  friend bool operator==(const BasicBehavior&, const BasicBehavior&) = default;

 private:
  MixedRadix inputs_;
  MixedRadix outputs_;
  std::vector<Scalar> table_;
  std::vector<bool> defined_;
};

using ExactBehavior = BasicBehavior<Rational>;
using RealBehavior = BasicBehavior<double>;

// Tolerance for the normalization check of each representation.
template <class Scalar>
constexpr double normalization_tolerance() {
  return is_exact_v<Scalar> ? 0.0 : 1e-9;
}

inline RealBehavior to_real(const ExactBehavior& exact) {
  RealBehavior out(exact.inputs(), exact.outputs());
  for (std::size_t x = 0; x < exact.inputs().size(); ++x) {
    if (!exact.defined(x)) continue;
    for (std::size_t y = 0; y < exact.outputs().size(); ++y) out.set(x, y, to_double(exact(x, y)));
  }
  return out;
}

// weight * a + (1 - weight) * b over the columns both define.
template <class Scalar>
BasicBehavior<Scalar> mix(const Scalar& weight, const BasicBehavior<Scalar>& a,
                          const BasicBehavior<Scalar>& b) {
  if (!(a.inputs() == b.inputs()) || !(a.outputs() == b.outputs())) {
    throw StructuralError("cannot mix behaviors of different shapes");
  }
  BasicBehavior<Scalar> out(a.inputs(), a.outputs());
  for (std::size_t x = 0; x < a.inputs().size(); ++x) {
    if (!a.defined(x) || !b.defined(x)) continue;
    for (std::size_t y = 0; y < a.outputs().size(); ++y) {
      out.set(x, y, weight * a(x, y) + (Scalar(1) - weight) * b(x, y));
    }
  }
  return out;
}

// Uniform distribution over outputs for every input.
template <class Scalar>
BasicBehavior<Scalar> uniform_behavior(const MixedRadix& inputs, const MixedRadix& outputs) {
  BasicBehavior<Scalar> out(inputs, outputs);
  const Scalar p = Scalar(1) / Scalar(static_cast<long>(outputs.size()));
  for (std::size_t x = 0; x < inputs.size(); ++x) {
    for (std::size_t y = 0; y < outputs.size(); ++y) out.set(x, y, p);
  }
  return out;
}

}  // namespace qadvice

#endif  // QADVICE_BEHAVIOR_HPP_
