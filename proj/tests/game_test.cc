// Copyright 2026 The aegame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aegame/game.h"

#include <gtest/gtest.h>

#include "aegame/errors.h"

namespace aegame {
namespace {

TEST(GameTest, LastPlayerStartsOnOddBoards) {
  EXPECT_EQ(first_player(3, LastPlayer::AvoiderLast), Player::Avoider);
  EXPECT_EQ(first_player(3, LastPlayer::EnforcerLast), Player::Enforcer);
  EXPECT_EQ(first_player(4, LastPlayer::AvoiderLast), Player::Enforcer);
  EXPECT_EQ(first_player(4, LastPlayer::EnforcerLast), Player::Avoider);
}

TEST(GameTest, FinalMoverIsTheLastPlayer) {
  for (int n = 1; n <= 9; ++n) {
    for (LastPlayer last : {LastPlayer::AvoiderLast, LastPlayer::EnforcerLast}) {
      EXPECT_EQ(player_to_move(n, last, n - 1), as_player(last)) << n;
      if (n >= 2) {
        EXPECT_EQ(player_to_move(n, last, n - 2), opponent(as_player(last)));
      }
    }
  }
}

TEST(GameTest, OutcomeFromWinners) {
  EXPECT_EQ(try_outcome_from_winners(Winner::Avoider, Winner::Avoider), Outcome::A);
  EXPECT_EQ(try_outcome_from_winners(Winner::Enforcer, Winner::Enforcer), Outcome::E);
  EXPECT_EQ(try_outcome_from_winners(Winner::Enforcer, Winner::Avoider), Outcome::SL);
  EXPECT_FALSE(try_outcome_from_winners(Winner::Avoider, Winner::Enforcer));
  EXPECT_THROW(outcome_from_winners(Winner::Avoider, Winner::Enforcer),
               InvariantViolation);
}

TEST(GameTest, WinnerForInvertsOutcome) {
  for (Outcome o : {Outcome::A, Outcome::SL, Outcome::E}) {
    EXPECT_EQ(outcome_from_winners(winner_for(o, LastPlayer::AvoiderLast),
                                   winner_for(o, LastPlayer::EnforcerLast)),
              o);
  }
  EXPECT_EQ(winner_for(Outcome::SL, LastPlayer::AvoiderLast), Winner::Enforcer);
  EXPECT_EQ(winner_for(Outcome::SL, LastPlayer::EnforcerLast), Winner::Avoider);
}

TEST(GameTest, OutcomeNamesRoundTrip) {
  for (Outcome o : {Outcome::A, Outcome::SL, Outcome::E}) {
    EXPECT_EQ(parse_outcome(to_string(o)), o);
  }
  EXPECT_FALSE(parse_outcome("X"));
  EXPECT_EQ(to_string(LastPlayer::EnforcerLast), "EnforcerLast");
  EXPECT_EQ(to_string(Player::Avoider), "Avoider");
}

}  // namespace
}  // namespace aegame
