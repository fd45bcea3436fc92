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

#ifndef QADVICE_GAME_HPP_
#define QADVICE_GAME_HPP_

#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qadvice/errors.hpp"
#include "qadvice/rational.hpp"

namespace qadvice {

// Mixed-radix indexing of joint symbols. Position 0 is the most significant
// digit, so index order is lexicographic in (player, symbol) order.
class MixedRadix {
 public:
  MixedRadix() = default;
  explicit MixedRadix(std::vector<int> radices) : radices_(std::move(radices)) {
    strides_.assign(radices_.size(), 1);
    size_ = 1;
    for (std::size_t p = radices_.size(); p-- > 0;) {
      if (radices_[p] <= 0) throw ValidationError("empty alphabet in joint index");
      strides_[p] = size_;
      size_ *= static_cast<std::size_t>(radices_[p]);
    }
  }

  std::size_t size() const { return size_; }
  int positions() const { return static_cast<int>(radices_.size()); }
  int radix(int position) const { return radices_[position]; }
  const std::vector<int>& radices() const { return radices_; }
  std::size_t stride(int position) const { return strides_[position]; }

  int digit(std::size_t index, int position) const {
    return static_cast<int>((index / strides_[position]) % radices_[position]);
  }

  std::vector<int> digits(std::size_t index) const {
    std::vector<int> out(radices_.size());
    for (int p = 0; p < positions(); ++p) out[p] = digit(index, p);
    return out;
  }

  std::size_t index(std::span<const int> digits) const {
    if (digits.size() != radices_.size()) {
      throw StructuralError("joint symbol has " + std::to_string(digits.size()) +
                            " components, expected " + std::to_string(radices_.size()));
    }
    std::size_t out = 0;
    for (int p = 0; p < positions(); ++p) {
      if (digits[p] < 0 || digits[p] >= radices_[p]) {
        throw StructuralError("symbol index out of range at position " + std::to_string(p));
      }
      out += strides_[p] * static_cast<std::size_t>(digits[p]);
    }
    return out;
  }

  // Same index with one digit replaced.
  std::size_t with_digit(std::size_t index, int position, int value) const {
    return index - strides_[position] * static_cast<std::size_t>(digit(index, position)) +
           strides_[position] * static_cast<std::size_t>(value);
  }

  friend bool operator==(const MixedRadix& a, const MixedRadix& b) {
    return a.radices_ == b.radices_;
  }

 private:
  std::vector<int> radices_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

struct Player {
  std::string name;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  friend bool operator==(const Player&, const Player&) = default;
};

// A finite Bayesian game: players with private input/output alphabets, a
// prior over joint inputs and a payoff vector for every (x, y).
//
// Payoffs are stored flat as payoff[(x * |Y| + y) * n + i]. Rows for inputs
// outside the prior's support are kept (usually zero) but never read by the
// evaluators.
class Game {
 public:
  Game(std::string name, std::vector<Player> players, std::vector<Rational> prior,
       std::vector<Rational> payoffs);

  const std::string& name() const { return name_; }
  int player_count() const { return static_cast<int>(players_.size()); }
  const Player& player(int i) const { return players_[i]; }
  const std::vector<Player>& players() const { return players_; }

  const MixedRadix& inputs() const { return inputs_; }
  const MixedRadix& outputs() const { return outputs_; }

  const Rational& prior(std::size_t x) const { return prior_[x]; }
  const std::vector<Rational>& prior() const { return prior_; }

  const Rational& payoff(std::size_t x, std::size_t y, int i) const {
    return payoffs_[(x * outputs_.size() + y) * players_.size() + i];
  }
  Rational total_payoff(std::size_t x, std::size_t y) const {
    Rational sum = 0;
    for (int i = 0; i < player_count(); ++i) sum += payoff(x, y, i);
    return sum;
  }
  const std::vector<Rational>& payoff_table() const { return payoffs_; }

  // Joint inputs with positive prior, ascending.
  const std::vector<std::size_t>& support() const { return support_; }

  bool all_binary() const {
    for (const auto& p : players_) {
      if (p.inputs.size() != 2 || p.outputs.size() != 2) return false;
    }
    return true;
  }

  std::string input_label(std::size_t x) const { return label(inputs_.digits(x), true); }
  std::string output_label(std::size_t y) const { return label(outputs_.digits(y), false); }

  friend bool operator==(const Game& a, const Game& b) {
    return a.name_ == b.name_ && a.players_ == b.players_ && a.prior_ == b.prior_ &&
           a.payoffs_ == b.payoffs_;
  }

 private:
  std::string label(const std::vector<int>& digits, bool input) const;

  std::string name_;
  std::vector<Player> players_;
  MixedRadix inputs_;
  MixedRadix outputs_;
  std::vector<Rational> prior_;
  std::vector<Rational> payoffs_;
  std::vector<std::size_t> support_;
};

// Checks every structural invariant of a game; throws ValidationError.
inline void validate_game(const Game& game) {
  if (game.player_count() < 2 || game.player_count() > 3) {
    throw ValidationError("games must have 2 or 3 players, got " +
                          std::to_string(game.player_count()));
  }
  for (const auto& p : game.players()) {
    if (p.inputs.empty() || p.outputs.empty()) {
      throw ValidationError("player " + p.name + " has an empty alphabet");
    }
  }
  Rational sum = 0;
  for (std::size_t x = 0; x < game.inputs().size(); ++x) {
    if (game.prior(x) < 0) {
      throw ValidationError("negative prior " + format_rational(game.prior(x)) + " at x=" +
                            game.input_label(x));
    }
    sum += game.prior(x);
  }
  if (sum != 1) {
    throw ValidationError("prior sums to " + format_rational(sum) + ", expected 1");
  }
}

inline Game::Game(std::string name, std::vector<Player> players, std::vector<Rational> prior,
                  std::vector<Rational> payoffs)
    : name_(std::move(name)), players_(std::move(players)) {
  std::vector<int> in, out;
  for (const auto& p : players_) {
    if (p.inputs.empty() || p.outputs.empty()) {
      throw ValidationError("player " + p.name + " has an empty alphabet");
    }
    in.push_back(static_cast<int>(p.inputs.size()));
    out.push_back(static_cast<int>(p.outputs.size()));
  }
  inputs_ = MixedRadix(in);
  outputs_ = MixedRadix(out);
  if (prior.size() != inputs_.size()) {
    throw ValidationError("prior has " + std::to_string(prior.size()) + " entries, expected " +
                          std::to_string(inputs_.size()));
  }
  const std::size_t expected = inputs_.size() * outputs_.size() * players_.size();
  if (payoffs.size() != expected) {
    throw ValidationError("payoff table has " + std::to_string(payoffs.size()) +
                          " entries, expected " + std::to_string(expected));
  }
  prior_ = std::move(prior);
  payoffs_ = std::move(payoffs);
  for (std::size_t x = 0; x < prior_.size(); ++x) {
    if (prior_[x] > 0) support_.push_back(x);
  }
  validate_game(*this);
}

inline std::string Game::label(const std::vector<int>& digits, bool input) const {
  bool compact = true;
  std::vector<const std::string*> symbols;
  for (std::size_t p = 0; p < digits.size(); ++p) {
    const auto& alphabet = input ? players_[p].inputs : players_[p].outputs;
    symbols.push_back(&alphabet[digits[p]]);
    if (alphabet[digits[p]].size() != 1) compact = false;
  }
  std::string out;
  for (std::size_t p = 0; p < symbols.size(); ++p) {
    if (!compact && p > 0) out += ',';
    out += *symbols[p];
  }
  return out;
}

// Index of the joint input whose digits are the characters of `bits`
// ("011" -> x_A=0, x_B=1, x_C=1). Only meaningful for single-digit symbols.
inline std::size_t joint_index(const MixedRadix& radix, std::string_view bits) {
  std::vector<int> digits;
  for (char c : bits) digits.push_back(c - '0');
  return radix.index(digits);
}

}  // namespace qadvice

#endif  // QADVICE_GAME_HPP_
