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

#ifndef QADVICE_CATALOG_HPP_
#define QADVICE_CATALOG_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "qadvice/errors.hpp"
#include "qadvice/game.hpp"
#include "qadvice/rational.hpp"

namespace qadvice {

// Built-in games. Payoff tables are spelled out literally in units of 1/3,
// indexed [x][y][player] with x, y in lexicographic order 000..111.
namespace catalog_data {

// clang-format off
inline constexpr int kGhzThirds[8][8][3] = {
  // x = 000: win on even parity
  {{3,3,3},{0,0,0},{0,0,0},{3,3,3},{0,0,0},{3,3,3},{3,3,3},{0,0,0}},
  // x = 001 (never drawn)
  {{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0}},
  // x = 010 (never drawn)
  {{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0}},
  // x = 011: win on odd parity
  {{0,0,0},{3,3,3},{3,3,3},{0,0,0},{3,3,3},{0,0,0},{0,0,0},{3,3,3}},
  // x = 100 (never drawn)
  {{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0}},
  // x = 101
  {{0,0,0},{3,3,3},{3,3,3},{0,0,0},{3,3,3},{0,0,0},{0,0,0},{3,3,3}},
  // x = 110
  {{0,0,0},{3,3,3},{3,3,3},{0,0,0},{3,3,3},{0,0,0},{0,0,0},{3,3,3}},
  // x = 111 (never drawn)
  {{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0}},
};

inline constexpr int kPromisedThirds[8][8][3] = {
  // x = 000
  {{4,4,4},{0,0,0},{0,0,0},{4,4,4},{0,0,0},{4,4,4},{4,4,4},{0,0,0}},
  // x = 001 (never drawn)
  {{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0}},
  // x = 010 (never drawn)
  {{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0}},
  // x = 011
  {{0,0,0},{3,3,6},{3,6,3},{0,0,0},{6,3,3},{0,0,0},{0,0,0},{4,4,4}},
  // x = 100 (never drawn)
  {{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0}},
  // x = 101
  {{0,0,0},{3,3,6},{3,6,3},{0,0,0},{6,3,3},{0,0,0},{0,0,0},{4,4,4}},
  // x = 110
  {{0,0,0},{3,3,6},{3,6,3},{0,0,0},{6,3,3},{0,0,0},{0,0,0},{4,4,4}},
  // x = 111 (never drawn)
  {{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0}},
};

inline constexpr int kFullThirds[8][8][3] = {
  // x = 000
  {{4,4,4},{0,0,0},{0,0,0},{4,4,4},{0,0,0},{4,4,4},{4,4,4},{0,0,0}},
  // x = 001
  {{4,4,4},{0,0,0},{0,0,0},{6,3,3},{0,0,0},{3,6,3},{3,3,6},{0,0,0}},
  // x = 010
  {{4,4,4},{0,0,0},{0,0,0},{6,3,3},{0,0,0},{3,6,3},{3,3,6},{0,0,0}},
  // x = 011
  {{0,0,0},{3,3,6},{3,6,3},{0,0,0},{6,3,3},{0,0,0},{0,0,0},{4,4,4}},
  // x = 100
  {{4,4,4},{0,0,0},{0,0,0},{6,3,3},{0,0,0},{3,6,3},{3,3,6},{0,0,0}},
  // x = 101
  {{0,0,0},{3,3,6},{3,6,3},{0,0,0},{6,3,3},{0,0,0},{0,0,0},{4,4,4}},
  // x = 110
  {{0,0,0},{3,3,6},{3,6,3},{0,0,0},{6,3,3},{0,0,0},{0,0,0},{4,4,4}},
  // x = 111
  {{0,0,0},{4,4,4},{4,4,4},{0,0,0},{4,4,4},{0,0,0},{0,0,0},{4,4,4}},
};
// clang-format on

inline std::vector<Player> binary_players() {
  std::vector<Player> players;
  for (const char* name : {"Alice", "Bob", "Charlie"}) {
    players.push_back(Player{name, {"0", "1"}, {"0", "1"}});
  }
  return players;
}

inline Game from_thirds(std::string name, const int (&table)[8][8][3],
                        std::vector<Rational> prior) {
  std::vector<Rational> payoffs;
  payoffs.reserve(8 * 8 * 3);
  for (const auto& row : table) {
    for (const auto& cell : row) {
      for (int v : cell) payoffs.emplace_back(v, 3);
    }
  }
  return Game(std::move(name), binary_players(), std::move(prior), std::move(payoffs));
}

inline std::vector<Rational> promised_prior() {
  std::vector<Rational> prior(8, Rational(0));
  for (int x : {0, 3, 5, 6}) prior[x] = Rational(1, 4);
  return prior;
}

}  // namespace catalog_data

// Common-interest GHZ game: every player earns 1 when the output parity
// matches the promise (even on 000, odd on 011/101/110).
inline Game ghz_game() {
  return catalog_data::from_thirds("ghz", catalog_data::kGhzThirds, catalog_data::promised_prior());
}

// Conflicting-interest game on the GHZ promise. Summed payoffs are four times
// the GHZ common payoff.
inline Game game_promised() {
  return catalog_data::from_thirds("promised", catalog_data::kPromisedThirds,
                                   catalog_data::promised_prior());
}

// Conflicting-interest game with a uniform prior on all eight inputs; summed
// payoff is 2 + S/4 for the Svetlichny value S.
inline Game game_full() {
  return catalog_data::from_thirds("full", catalog_data::kFullThirds,
                                   std::vector<Rational>(8, Rational(1, 8)));
}

struct CatalogEntry {
  std::string name;
  std::string description;
  Game game;
};

inline std::vector<CatalogEntry> catalog() {
  return {
      {"ghz", "common-interest GHZ game, promised inputs", ghz_game()},
      {"promised", "conflicting-interest game on the GHZ promise", game_promised()},
      {"full", "conflicting-interest Svetlichny game, all inputs", game_full()},
  };
}

inline Game catalog_game(std::string_view name) {
  if (name == "ghz") return ghz_game();
  if (name == "promised") return game_promised();
  if (name == "full") return game_full();
  throw ValidationError("unknown catalog game \"" + std::string(name) + "\"");
}

}  // namespace qadvice

#endif  // QADVICE_CATALOG_HPP_
