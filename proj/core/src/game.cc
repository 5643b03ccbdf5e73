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

#include "aegame/errors.h"

namespace aegame {

std::optional<Outcome> try_outcome_from_winners(Winner avoider_last,
                                                Winner enforcer_last) {
  if (avoider_last == Winner::Avoider) {
    if (enforcer_last == Winner::Avoider) return Outcome::A;
    return std::nullopt;
  }
  return enforcer_last == Winner::Avoider ? Outcome::SL : Outcome::E;
}

Outcome outcome_from_winners(Winner avoider_last, Winner enforcer_last) {
  const auto o = try_outcome_from_winners(avoider_last, enforcer_last);
  if (!o) {
    throw InvariantViolation(
        "Avoider wins as last player but loses as second-to-last player");
  }
  return *o;
}

Winner winner_for(Outcome outcome, LastPlayer last) {
  switch (outcome) {
    case Outcome::A:
      return Winner::Avoider;
    case Outcome::E:
      return Winner::Enforcer;
    case Outcome::SL:
      break;
  }
  // The second-to-last player wins.
  return last == LastPlayer::AvoiderLast ? Winner::Enforcer : Winner::Avoider;
}

std::string_view to_string(Player p) {
  return p == Player::Avoider ? "Avoider" : "Enforcer";
}

std::string_view to_string(Winner w) {
  return w == Winner::Avoider ? "Avoider" : "Enforcer";
}

std::string_view to_string(LastPlayer l) {
  return l == LastPlayer::AvoiderLast ? "AvoiderLast" : "EnforcerLast";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::A:
      return "A";
    case Outcome::SL:
      return "SL";
    case Outcome::E:
      return "E";
  }
  return "?";
}

std::optional<Outcome> parse_outcome(std::string_view text) {
  if (text == "A") return Outcome::A;
  if (text == "SL") return Outcome::SL;
  if (text == "E") return Outcome::E;
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, Player p) {
  return os << to_string(p);
}
std::ostream& operator<<(std::ostream& os, Winner w) {
  return os << to_string(w);
}
std::ostream& operator<<(std::ostream& os, LastPlayer l) {
  return os << to_string(l);
}
std::ostream& operator<<(std::ostream& os, Outcome o) {
  return os << to_string(o);
}

}  // namespace aegame
