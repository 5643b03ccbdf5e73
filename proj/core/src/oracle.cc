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

#include "aegame/oracle.h"

#include <bit>
#include <sstream>
#include <unordered_map>

#include "aegame/errors.h"

namespace aegame {
namespace {

constexpr VertexMask bit(VertexId v) { return VertexMask{1} << v; }

VertexMask full_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : bit(n) - 1;
}

VertexMask edge_mask(const Edge& e) {
  VertexMask m = 0;
  for (VertexId v : e) m |= bit(v);
  return m;
}

void check_bound(int n, const SolverOptions& options) {
  const int bound = std::min(options.max_vertices, kMaxOracleBound);
  if (n > bound) {
    std::ostringstream msg;
    msg << "oracle bound exceeded: " << n << " vertices, limit " << bound
        << " (state space up to 3^n)";
    throw ResourceError(msg.str());
  }
}

// Entries of the memo table.
constexpr std::uint8_t kUnknown = 0;
constexpr std::uint8_t kAvoiderWins = 1;
constexpr std::uint8_t kEnforcerWins = 2;

// Boards up to this size get a flat table indexed by the base-3 position
// code; larger ones fall back to a hash map.
constexpr int kDenseLimit = 16;

}  // namespace

GameState::GameState(std::shared_ptr<const Hypergraph> board,
                     VertexMask avoider, VertexMask enforcer, Player to_move)
    : board_(std::move(board)),
      avoider_(avoider),
      enforcer_(enforcer),
      to_move_(to_move) {
  if (!board_) throw ContractViolation("GameState needs a board");
  if (board_->num_vertices() > 64) {
    throw ResourceError("GameState supports at most 64 vertices");
  }
}

GameState GameState::initial(std::shared_ptr<const Hypergraph> board,
                             LastPlayer last) {
  const int n = board ? board->num_vertices() : 0;
  return GameState(std::move(board), 0, 0, first_player(n, last));
}

int GameState::moves_made() const { return std::popcount(picked_mask()); }

std::vector<VertexId> GameState::unpicked() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < board_->num_vertices(); ++v) {
    if (!is_picked(v)) out.push_back(v);
  }
  return out;
}

bool GameState::all_picked() const {
  return picked_mask() == full_mask(board_->num_vertices());
}

bool GameState::avoider_filled_edge() const {
  for (const Edge& e : board_->edges()) {
    if ((edge_mask(e) & ~avoider_) == 0) return true;
  }
  return false;
}

GameState GameState::after(VertexId v) const {
  if (v < 0 || v >= board_->num_vertices() || is_picked(v)) {
    std::ostringstream msg;
    msg << "vertex " << v << " is not available";
    throw ContractViolation(msg.str());
  }
  VertexMask a = avoider_;
  VertexMask e = enforcer_;
  (to_move_ == Player::Avoider ? a : e) |= bit(v);
  return GameState(board_, a, e, opponent(to_move_));
}

// Position search over one minimized board and one first player.
class Solver::Search {
 public:
  Search(const Hypergraph& source, Player first)
      : source_(source), first_(first) {
    const Hypergraph board = minimize_edges(source);
    n_ = board.num_vertices();
    full_ = full_mask(n_);
    incident_.resize(n_);
    for (const Edge& e : board.edges()) {
      const VertexMask m = edge_mask(e);
      edges_.push_back(m);
      for (VertexId v : e) incident_[v].push_back(m);
    }
    if (n_ <= kDenseLimit) {
      std::uint64_t size = 1;
      pow3_.resize(n_);
      for (int v = 0; v < n_; ++v) {
        pow3_[v] = size;
        size *= 3;
      }
      table_.assign(size, kUnknown);
    }
  }

  bool matches(const Hypergraph& source, Player first) const {
    return first == first_ && source == source_;
  }

  bool contains_edge(VertexMask picks) const {
    for (VertexMask m : edges_) {
      if ((m & ~picks) == 0) return true;
    }
    return false;
  }

  std::uint64_t code(VertexMask a, VertexMask e) const {
    if (table_.empty()) return a | e << 32;
    std::uint64_t c = 0;
    for (int v = 0; v < n_; ++v) {
      if (a >> v & 1) c += pow3_[v];
      if (e >> v & 1) c += 2 * pow3_[v];
    }
    return c;
  }

  bool avoider_wins(VertexMask a, VertexMask e, std::uint64_t c,
                    SolverStats& stats) {
    const VertexMask picked = a | e;
    if (picked == full_) return true;
    // Every edge already holds an Enforcer vertex: nothing can be filled.
    bool any_live = false;
    for (VertexMask m : edges_) {
      if ((m & e) == 0) {
        any_live = true;
        break;
      }
    }
    if (!any_live) return true;

    std::uint8_t* slot = nullptr;
    if (!table_.empty()) {
      slot = &table_[c];
    } else {
      slot = &map_[c];
    }
    if (*slot != kUnknown) {
      ++stats.memo_hits;
      return *slot == kAvoiderWins;
    }
    ++stats.nodes;

    const bool dense = !table_.empty();
    const Player mover =
        std::popcount(picked) % 2 == 0 ? first_ : opponent(first_);
    VertexMask free = full_ & ~picked;
    bool result;
    if (mover == Player::Avoider) {
      result = false;
      while (free) {
        const VertexId v = std::countr_zero(free);
        free &= free - 1;
        const VertexMask next = a | bit(v);
        if (fills(v, next)) continue;
        const std::uint64_t nc = dense ? c + pow3_[v] : next | e << 32;
        if (avoider_wins(next, e, nc, stats)) {
          result = true;
          break;
        }
      }
    } else {
      result = true;
      while (free) {
        const VertexId v = std::countr_zero(free);
        free &= free - 1;
        const VertexMask next = e | bit(v);
        const std::uint64_t nc = dense ? c + 2 * pow3_[v] : a | next << 32;
        if (!avoider_wins(a, next, nc, stats)) {
          result = false;
          break;
        }
      }
    }
    // The map may have rehashed during recursion.
    if (dense) {
      table_[c] = result ? kAvoiderWins : kEnforcerWins;
    } else {
      map_[c] = result ? kAvoiderWins : kEnforcerWins;
    }
    return result;
  }

 private:
  // Only edges through the new pick can have just been filled.
  bool fills(VertexId v, VertexMask picks) const {
    for (VertexMask m : incident_[v]) {
      if ((m & ~picks) == 0) return true;
    }
    return false;
  }

  Hypergraph source_;
  Player first_;
  int n_ = 0;
  VertexMask full_ = 0;
  std::vector<VertexMask> edges_;
  std::vector<std::vector<VertexMask>> incident_;
  std::vector<std::uint64_t> pow3_;
  std::vector<std::uint8_t> table_;
  std::unordered_map<std::uint64_t, std::uint8_t> map_;
};

Solver::Solver(SolverOptions options) : options_(options) {}
Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

Solver::Search& Solver::search_for(const Hypergraph& board, Player first) {
  if (!search_ || !search_->matches(board, first)) {
    search_ = std::make_unique<Search>(board, first);
  }
  return *search_;
}

Winner Solver::solve(const Hypergraph& h, LastPlayer last) {
  check_bound(h.num_vertices(), options_);
  if (h.has_empty_edge()) return Winner::Enforcer;
  Search& search = search_for(h, first_player(h.num_vertices(), last));
  return search.avoider_wins(0, 0, 0, stats_) ? Winner::Avoider
                                              : Winner::Enforcer;
}

Winner Solver::solve_position(const GameState& s, LastPlayer last) {
  const Hypergraph& board = s.board();
  const int n = board.num_vertices();
  check_bound(n, options_);
  const VertexMask full = full_mask(n);
  if ((s.avoider_mask() & s.enforcer_mask()) != 0) {
    throw ContractViolation("GameState masks overlap");
  }
  if ((s.picked_mask() & ~full) != 0) {
    throw ContractViolation("GameState mask names a vertex off the board");
  }
  if (s.to_move() != player_to_move(n, last, s.moves_made())) {
    std::ostringstream msg;
    msg << "GameState says " << s.to_move() << " to move, but after "
        << s.moves_made() << " picks on " << n << " vertices with " << last
        << " it is " << player_to_move(n, last, s.moves_made());
    throw ContractViolation(msg.str());
  }
  Search& search = search_for(board, first_player(n, last));
  if (search.contains_edge(s.avoider_mask()) || board.has_empty_edge()) {
    return Winner::Enforcer;
  }
  const std::uint64_t c = search.code(s.avoider_mask(), s.enforcer_mask());
  return search.avoider_wins(s.avoider_mask(), s.enforcer_mask(), c, stats_)
             ? Winner::Avoider
             : Winner::Enforcer;
}

Outcome Solver::outcome(const Hypergraph& h) {
  const Winner al = solve(h, LastPlayer::AvoiderLast);
  const Winner el = solve(h, LastPlayer::EnforcerLast);
  return outcome_from_winners(al, el);
}

VertexId Solver::best_move(const GameState& s, LastPlayer last) {
  if (s.all_picked()) {
    throw ContractViolation("best_move called on a finished game");
  }
  const Winner value = solve_position(s, last);
  for (VertexId v : s.unpicked()) {
    const GameState child = s.after(v);
    const Winner child_value =
        s.to_move() == Player::Avoider && child.avoider_filled_edge()
            ? Winner::Enforcer
            : solve_position(child, last);
    if (child_value == value) return v;
  }
  throw InvariantViolation("no move preserves the position value");
}

Winner solve(const Hypergraph& h, LastPlayer last, SolverOptions options) {
  return Solver(options).solve(h, last);
}

Outcome outcome(const Hypergraph& h, SolverOptions options) {
  return Solver(options).outcome(h);
}

}  // namespace aegame
