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

// Exact solver: memoized minimax over the inductive definition of the
// winner. Positions are pairs of pick masks over a fixed, edge-minimized
// board; the player to move follows from the number of picks.

#ifndef AEGAME_ORACLE_H_
#define AEGAME_ORACLE_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "aegame/game.h"
#include "aegame/hypergraph.h"

namespace aegame {

using VertexMask = std::uint64_t;

inline constexpr int kDefaultOracleBound = 16;
// Memo keys pack both masks into 64 bits.
inline constexpr int kMaxOracleBound = 32;

struct SolverOptions {
  // Largest vertex count accepted; the state space is at most 3^n.
  int max_vertices = kDefaultOracleBound;
};

struct SolverStats {
  std::uint64_t nodes = 0;      // positions expanded
  std::uint64_t memo_hits = 0;  // positions answered from the table
};

// A position of the game on `board`: which vertices each player holds and
// who moves next.
class GameState {
 public:
  GameState(std::shared_ptr<const Hypergraph> board, VertexMask avoider,
            VertexMask enforcer, Player to_move);

  // Empty masks, first player derived from the board parity.
  static GameState initial(std::shared_ptr<const Hypergraph> board,
                           LastPlayer last);

  const Hypergraph& board() const { return *board_; }
  const std::shared_ptr<const Hypergraph>& board_ptr() const { return board_; }
  VertexMask avoider_mask() const { return avoider_; }
  VertexMask enforcer_mask() const { return enforcer_; }
  VertexMask picked_mask() const { return avoider_ | enforcer_; }
  Player to_move() const { return to_move_; }
  int moves_made() const;
  bool is_picked(VertexId v) const { return picked_mask() >> v & 1; }
  std::vector<VertexId> unpicked() const;
  bool all_picked() const;
  // True once Avoider's picks contain an edge.
  bool avoider_filled_edge() const;

  // The mover picks v. Throws ContractViolation if v is taken.
  GameState after(VertexId v) const;

 private:
  std::shared_ptr<const Hypergraph> board_;
  VertexMask avoider_ = 0;
  VertexMask enforcer_ = 0;
  Player to_move_ = Player::Avoider;
};

class Solver {
 public:
  explicit Solver(SolverOptions options = {});
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;

  // Winner of the full game on h when `last` plays the final move.
  // Throws ResourceError when h has more than options.max_vertices vertices.
  Winner solve(const Hypergraph& h, LastPlayer last);

  // Winner from an arbitrary position. Throws ContractViolation when the
  // masks overlap, leave the board, or disagree with s.to_move().
  Winner solve_position(const GameState& s, LastPlayer last);

  // Both orders. Throws InvariantViolation on the impossible combination.
  Outcome outcome(const Hypergraph& h);

  // Lowest-id move that keeps the mover's game value. Throws
  // ContractViolation when no vertex is left.
  VertexId best_move(const GameState& s, LastPlayer last);

  const SolverStats& stats() const { return stats_; }
  void reset_stats() { stats_ = {}; }
  const SolverOptions& options() const { return options_; }

 private:
  class Search;
  Search& search_for(const Hypergraph& board, Player first);

  SolverOptions options_;
  SolverStats stats_;
  std::unique_ptr<Search> search_;
};

// Convenience wrappers around a fresh Solver.
Winner solve(const Hypergraph& h, LastPlayer last, SolverOptions options = {});
Outcome outcome(const Hypergraph& h, SolverOptions options = {});

}  // namespace aegame

#endif  // AEGAME_ORACLE_H_
