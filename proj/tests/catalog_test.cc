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

#include <bit>

#include "qadvice/qadvice.hpp"
#include "test_support.hpp"

namespace qadvice {
namespace {

using testing::q;

// Rule-based generator for the literal tables: a round is won when the output
// parity equals floor(weight(x) / 2) mod 2. A win on x = 000 or 111 pays 4/3
// each. On mixed inputs a unanimous win pays 4/3 each; otherwise the player
// whose output differs gets 2 and the rest 1.
Rational formula_payoff(int x, int y, int player, bool common) {
  const int want = (std::popcount(static_cast<unsigned>(x)) / 2) % 2;
  if (std::popcount(static_cast<unsigned>(y)) % 2 != want) return 0;
  if (common) return 1;
  if (x == 0 || x == 7 || y == 0 || y == 7) return q(4, 3);
  const int bit = (y >> (2 - player)) & 1;
  const int ones = std::popcount(static_cast<unsigned>(y));
  const bool odd_one_out = (ones == 1) ? bit == 1 : bit == 0;
  return odd_one_out ? q(2) : q(1);
}

bool promised(int x) { return x == 0 || x == 3 || x == 5 || x == 6; }

void expect_matches_formula(const Game& g, bool common, bool only_promise) {
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      for (int p = 0; p < 3; ++p) {
        const Rational expected = (only_promise && !promised(x)) ? q(0) : formula_payoff(x, y, p, common);
        EXPECT_EQ(g.payoff(x, y, p), expected) << g.name() << " x=" << x << " y=" << y << " p=" << p;
      }
    }
  }
}

TEST(CatalogTest, TablesMatchGenerator) {
  expect_matches_formula(ghz_game(), true, true);
  expect_matches_formula(game_promised(), false, true);
  expect_matches_formula(game_full(), false, false);
}

TEST(CatalogTest, Priors) {
  for (int x = 0; x < 8; ++x) {
    EXPECT_EQ(ghz_game().prior(x), promised(x) ? q(1, 4) : q(0));
    EXPECT_EQ(game_promised().prior(x), promised(x) ? q(1, 4) : q(0));
    EXPECT_EQ(game_full().prior(x), q(1, 8));
  }
  EXPECT_EQ(game_promised().support(), (std::vector<std::size_t>{0, 3, 5, 6}));
}

// Summed payoffs are 0 or 4 on the support of the conflicting games.
TEST(CatalogTest, TotalsAreZeroOrFour) {
  for (const Game& g : {game_promised(), game_full()}) {
    for (std::size_t x : g.support()) {
      for (std::size_t y = 0; y < 8; ++y) {
        const Rational t = g.total_payoff(x, y);
        EXPECT_TRUE(t == 0 || t == 4) << g.name() << " " << x << " " << y;
      }
    }
  }
}

TEST(CatalogTest, SpotEntries) {
  const Game a = game_promised();
  const auto x = joint_index(a.inputs(), "011");
  EXPECT_EQ(a.payoff(x, joint_index(a.outputs(), "001"), 2), q(2));
  EXPECT_EQ(a.payoff(x, joint_index(a.outputs(), "001"), 0), q(1));
  EXPECT_EQ(a.payoff(x, joint_index(a.outputs(), "111"), 1), q(4, 3));
  const Game b = game_full();
  EXPECT_EQ(b.payoff(joint_index(b.inputs(), "100"), joint_index(b.outputs(), "101"), 1), q(2));
  EXPECT_EQ(b.payoff(joint_index(b.inputs(), "111"), joint_index(b.outputs(), "000"), 1), q(0));
}

TEST(CatalogTest, LookupAndValidation) {
  for (const auto& entry : catalog()) {
    EXPECT_NO_THROW(validate_game(entry.game));
    EXPECT_EQ(catalog_game(entry.name).name(), entry.name);
    EXPECT_EQ(entry.game.player(0).name, "Alice");
  }
  EXPECT_THROW(catalog_game("chsh"), ValidationError);
}

}  // namespace
}  // namespace qadvice
