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

// Players, move order and the three-valued outcome.

#ifndef AEGAME_GAME_H_
#define AEGAME_GAME_H_

#include <optional>
#include <ostream>
#include <string_view>

namespace aegame {

enum class Player { Avoider, Enforcer };

// Who has a winning strategy for one fixed move order.
enum class Winner { Avoider, Enforcer };

// Who plays the final move once every vertex is picked.
enum class LastPlayer { AvoiderLast, EnforcerLast };

// A: Avoider wins both orders. E: Enforcer wins both orders.
// SL: whoever plays second-to-last wins.
enum class Outcome { A, SL, E };

constexpr Player opponent(Player p) {
  return p == Player::Avoider ? Player::Enforcer : Player::Avoider;
}

constexpr Player as_player(LastPlayer last) {
  return last == LastPlayer::AvoiderLast ? Player::Avoider : Player::Enforcer;
}

constexpr Winner as_winner(Player p) {
  return p == Player::Avoider ? Winner::Avoider : Winner::Enforcer;
}

// The last player moves first on an odd board and second on an even one.
constexpr Player first_player(int num_vertices, LastPlayer last) {
  const Player l = as_player(last);
  return num_vertices % 2 == 1 ? l : opponent(l);
}

// Mover after `moves_made` picks.
constexpr Player player_to_move(int num_vertices, LastPlayer last,
                                int moves_made) {
  const Player first = first_player(num_vertices, last);
  return moves_made % 2 == 0 ? first : opponent(first);
}

// Combines the two per-order winners. Returns nullopt for the combination
// (Avoider wins as last, Enforcer wins as second-to-last), which cannot
// happen on any hypergraph.
std::optional<Outcome> try_outcome_from_winners(Winner avoider_last,
                                                Winner enforcer_last);

// As above, throwing InvariantViolation on the impossible combination.
Outcome outcome_from_winners(Winner avoider_last, Winner enforcer_last);

Winner winner_for(Outcome outcome, LastPlayer last);

std::string_view to_string(Player p);
std::string_view to_string(Winner w);
std::string_view to_string(LastPlayer l);
std::string_view to_string(Outcome o);

std::optional<Outcome> parse_outcome(std::string_view text);

std::ostream& operator<<(std::ostream& os, Player p);
std::ostream& operator<<(std::ostream& os, Winner w);
std::ostream& operator<<(std::ostream& os, LastPlayer l);
std::ostream& operator<<(std::ostream& os, Outcome o);

}  // namespace aegame

#endif  // AEGAME_GAME_H_
