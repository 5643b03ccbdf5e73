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

#include "aegame/classifier.h"

#include <algorithm>
#include <sstream>

#include "aegame/errors.h"

namespace aegame {
namespace {

bool has_one_edge(const Hypergraph& h) {
  return std::any_of(h.edges().begin(), h.edges().end(),
                     [](const Edge& e) { return e.size() == 1; });
}

bool is_avoider_last_kind(RecognitionKind k) {
  switch (k) {
    case RecognitionKind::IsolatedVertex:
    case RecognitionKind::Isolated2Edge:
    case RecognitionKind::Cycle:
    case RecognitionKind::Prism:
    case RecognitionKind::P1:
    case RecognitionKind::P2:
      return true;
    default:
      return false;
  }
}

std::optional<Outcome> kind_outcome(RecognitionKind k) {
  if (is_avoider_last_kind(k)) return Outcome::A;
  switch (k) {
    case RecognitionKind::Nunchaku:
    case RecognitionKind::C5:
    case RecognitionKind::Bull:
    case RecognitionKind::PseudoStar:
      return Outcome::SL;
    default:
      return std::nullopt;
  }
}

std::optional<Outcome> verdict_outcome(const Certificate& c) {
  if (const Outcome* o = std::get_if<Outcome>(&c.verdict)) return *o;
  return std::nullopt;
}

struct Piece {
  Certificate cert;
  Method al = Method::Structural;
  Method el = Method::Structural;
};

Certificate empty_edge_certificate() {
  Certificate c;
  c.basis = Basis::EmptyEdge;
  c.verdict = Outcome::E;
  return c;
}

Certificate rank2_certificate(const Hypergraph& g) {
  if (g.has_empty_edge()) return empty_edge_certificate();
  Certificate c;
  if (has_one_edge(g)) {
    c.basis = Basis::OneEdgeReduction;
    c.one_edge = one_edge_reduction(g);
    if (c.one_edge->residual_has_one_edge) {
      c.verdict = Outcome::E;
    } else {
      c.parts.push_back(rank2_certificate(c.one_edge->residual));
      c.verdict = avoider_last_winner(c.parts[0]) == Winner::Avoider
                      ? Outcome::SL
                      : Outcome::E;
    }
    return c;
  }
  if (!contains_forbidden(g, ForbiddenPattern::P3)) {
    // Without a P3 the edges are disjoint and pair themselves.
    c.basis = Basis::Pairing;
    c.verdict = Outcome::A;
    for (const Edge& e : g.edges()) c.pairing.pairs.emplace_back(e[0], e[1]);
    return c;
  }
  for (ForbiddenPattern p : {ForbiddenPattern::TwoP3, ForbiddenPattern::C4,
                             ForbiddenPattern::Sunlet3}) {
    if (auto emb = contains_forbidden(g, p)) {
      c.basis = Basis::ForbiddenSubgraph;
      c.verdict = Outcome::E;
      c.pattern = p;
      c.embedding = std::move(*emb);
      return c;
    }
  }
  c.basis = Basis::ComponentTaxonomy;
  c.verdict = Outcome::SL;
  int special = 0;
  for (auto& set : component_vertex_sets(g)) {
    Recognition r = graph_recognizers(induced_subhypergraph(g, set));
    const auto o = kind_outcome(r.kind);
    if (!o) {
      throw InvariantViolation(
          "connected component without 2P3, C4 and 3-sunlet fits no known "
          "kind: " + to_string(induced_subhypergraph(g, set)));
    }
    if (*o == Outcome::SL) ++special;
    c.components.push_back({std::move(set), std::move(r)});
  }
  if (special != 1) {
    throw InvariantViolation("graph with a P3 but no 2P3 has " +
                             std::to_string(special) +
                             " components containing a P3");
  }
  return c;
}

Certificate rank3_taxonomy(const Hypergraph& reduced) {
  Certificate c;
  c.basis = Basis::ComponentTaxonomy;
  bool avoider = true;
  for (auto& set : component_vertex_sets(reduced)) {
    Recognition r = recognize_component(induced_subhypergraph(reduced, set),
                                        RecognitionContext::LinearRank3);
    avoider = avoider && is_avoider_last_kind(r.kind);
    c.components.push_back({std::move(set), std::move(r)});
  }
  c.verdict = avoider ? Winner::Avoider : Winner::Enforcer;
  return c;
}

[[noreturn]] void refuse_oracle(const Hypergraph& h) {
  throw UnsupportedInput("no structural rule covers the fragment " +
                         to_string(h));
}

Winner oracle_solve(const Hypergraph& h, LastPlayer last,
                    const ClassifierOptions& options) {
  if (!options.allow_oracle) refuse_oracle(h);
  if (h.num_vertices() > options.oracle_bound) {
    throw ResourceError("oracle fallback needed for a fragment with " +
                        std::to_string(h.num_vertices()) +
                        " vertices, above the bound " +
                        std::to_string(options.oracle_bound) + ": " +
                        to_string(h));
  }
  return solve(h, last, SolverOptions{options.oracle_bound});
}

std::optional<Certificate> pairing_certificate(const Hypergraph& h,
                                               const ClassifierOptions& options) {
  auto pairing = find_pairing(h, options.pairing_budget);
  if (!pairing) return std::nullopt;
  Certificate c;
  c.basis = Basis::Pairing;
  c.verdict = Outcome::A;
  c.pairing = std::move(*pairing);
  return c;
}

// A certificate fixing at least the Avoider-last winner of a board without
// 1-edges or the empty edge.
Piece avoider_last_piece(const Hypergraph& r, const ClassifierOptions& options) {
  if (r.rank() <= 2) return {rank2_certificate(r)};
  if (r.rank() == 3 && is_linear(r)) {
    return {classify_rank3_linear_avoider_last(r).certificate};
  }
  if (auto c = pairing_certificate(r, options)) return {*c};
  Piece p;
  p.cert.basis = Basis::OracleFallback;
  p.cert.verdict = oracle_solve(r, LastPlayer::AvoiderLast, options);
  p.al = Method::Oracle;
  return p;
}

Piece component_piece(const Hypergraph& c, const ClassifierOptions& options) {
  if (c.has_empty_edge()) return {empty_edge_certificate()};
  if (c.rank() <= 2) return {rank2_certificate(c)};
  if (has_one_edge(c)) {
    Piece p;
    p.cert.basis = Basis::OneEdgeReduction;
    p.cert.one_edge = one_edge_reduction(c);
    if (p.cert.one_edge->residual_has_one_edge) {
      p.cert.verdict = Outcome::E;
      return p;
    }
    Piece sub = avoider_last_piece(p.cert.one_edge->residual, options);
    p.el = sub.al;
    p.cert.verdict = avoider_last_winner(sub.cert) == Winner::Avoider
                         ? Outcome::SL
                         : Outcome::E;
    p.cert.parts.push_back(std::move(sub.cert));
    return p;
  }
  if (c.rank() == 3 && is_linear(c)) {
    Certificate al = classify_rank3_linear_avoider_last(c).certificate;
    if (std::get<Winner>(al.verdict) == Winner::Avoider) {
      al.verdict = Outcome::A;
      return {std::move(al)};
    }
    Rank3Reduction reduction = std::move(*al.reduction);
    al.reduction.reset();
    const Hypergraph& r = reduction.reduced;
    Piece p;
    if (r.rank() <= 2) {
      p.cert = rank2_certificate(r);
    } else if (al.components.size() == 1 &&
               al.components[0].recognition.kind == RecognitionKind::Nunchaku) {
      p.cert = std::move(al);
      p.cert.verdict = Outcome::SL;
    } else {
      p.cert.basis = Basis::OracleFallback;
      p.cert.verdict = outcome_from_winners(
          Winner::Enforcer, oracle_solve(r, LastPlayer::EnforcerLast, options));
      p.cert.parts.push_back(std::move(al));
      p.el = Method::Oracle;
    }
    p.cert.reduction = std::move(reduction);
    return p;
  }
  if (auto cert = pairing_certificate(c, options)) return {std::move(*cert)};
  Piece p;
  p.cert.basis = Basis::OracleFallback;
  const Winner al = oracle_solve(c, LastPlayer::AvoiderLast, options);
  const Winner el = oracle_solve(c, LastPlayer::EnforcerLast, options);
  p.cert.verdict = outcome_from_winners(al, el);
  p.al = p.el = Method::Oracle;
  return p;
}

Piece board_piece(const Hypergraph& board, const ClassifierOptions& options) {
  if (board.has_empty_edge()) return {empty_edge_certificate()};
  if (board.rank() <= 2) return {rank2_certificate(board)};
  auto sets = component_vertex_sets(board);
  if (sets.size() == 1) return component_piece(board, options);
  Piece out;
  out.cert.basis = Basis::UnionTable;
  Outcome total = Outcome::A;
  for (auto& set : sets) {
    Piece p = component_piece(induced_subhypergraph(board, set), options);
    total = combine_union(total, *verdict_outcome(p.cert));
    if (p.al == Method::Oracle) out.al = Method::Oracle;
    if (p.el == Method::Oracle) out.el = Method::Oracle;
    p.cert.vertices = std::move(set);
    out.cert.parts.push_back(std::move(p.cert));
  }
  out.cert.verdict = total;
  return out;
}

// Shapes Avoider wins on as last player, checked from degrees alone.
bool has_avoider_last_shape(const Hypergraph& c) {
  const int n = c.num_vertices();
  const auto m = static_cast<int>(c.num_edges());
  if (n == 1 && m == 0) return true;
  if (n == 2 && c.edges() == std::vector<Edge>{{0, 1}}) return true;
  if (!c.is_uniform(3) || !is_linear(c) || !is_connected(c)) return false;
  const std::vector<int> d = degrees(c);
  if (n == 6 && m == 4) {
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 2; });
  }
  // Cycle: connected, linear, every edge has two degree-2 vertices and one
  // degree-1 vertex.
  if (m < 3 || n != 2 * m) return false;
  for (const Edge& e : c.edges()) {
    int twos = 0;
    for (VertexId v : e) {
      if (d[v] > 2) return false;
      twos += d[v] == 2;
    }
    if (twos != 2) return false;
  }
  return true;
}

bool fail(std::string* why, const std::string& msg) {
  if (why != nullptr) *why = msg;
  return false;
}

bool replay_reduction(const Hypergraph& h, const Rank3Reduction& red,
                      std::string* why) {
  Hypergraph cur = h;
  std::vector<VertexId> alive(h.num_vertices());
  for (int i = 0; i < h.num_vertices(); ++i) alive[i] = i;
  auto current_id = [&alive](VertexId original) -> VertexId {
    auto it = std::lower_bound(alive.begin(), alive.end(), original);
    if (it == alive.end() || *it != original) return -1;
    return static_cast<VertexId>(it - alive.begin());
  };
  for (const LeafEdgeRemoval& step : red.steps) {
    Edge e;
    for (VertexId v : step.edge) e.push_back(current_id(v));
    std::sort(e.begin(), e.end());
    if (e.size() != 3 || e.front() < 0 || !cur.contains_edge(e)) {
      return fail(why, "reduction removes an edge that is not present");
    }
    const VertexId u = current_id(step.removed_first);
    const VertexId w = current_id(step.removed_second);
    if (u < 0 || w < 0 || u == w ||
        !std::binary_search(e.begin(), e.end(), u) ||
        !std::binary_search(e.begin(), e.end(), w) || degree(cur, u) != 1 ||
        degree(cur, w) != 1) {
      return fail(why, "reduction removes vertices that are not degree-1 "
                       "vertices of the leaf-edge");
    }
    cur = enforcer_update(cur, std::max(u, w));
    cur = enforcer_update(cur, std::min(u, w));
    alive.erase(alive.begin() + std::max(u, w));
    alive.erase(alive.begin() + std::min(u, w));
  }
  if (!(cur == red.reduced) || alive != red.surviving) {
    return fail(why, "reduction trace does not reproduce the reduced board");
  }
  for (const Edge& e : leaf_edges(cur)) {
    if (e.size() == 3) return fail(why, "reduced board still has a leaf-edge");
  }
  return true;
}

bool same_partition(const Hypergraph& h,
                    const std::vector<std::vector<VertexId>>& sets) {
  std::vector<int> owner(h.num_vertices(), -1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) return false;
    for (VertexId v : sets[i]) {
      if (v < 0 || v >= h.num_vertices() || owner[v] >= 0) return false;
      owner[v] = static_cast<int>(i);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) return false;
  for (const Edge& e : h.edges()) {
    for (VertexId v : e) {
      if (owner[v] != owner[e.front()]) return false;
    }
  }
  return true;
}

bool verdict_is_enforcer(const Certificate& c) {
  return avoider_last_winner(c) == Winner::Enforcer &&
         (!verdict_outcome(c) || *verdict_outcome(c) == Outcome::E);
}

bool validate_on(const Hypergraph& board, const Certificate& c,
                 std::string* why);
bool validate_on_root(const Hypergraph& h, const Certificate& c,
                      std::string* why);

bool validate_taxonomy(const Hypergraph& board, const Certificate& c,
                       std::string* why) {
  std::vector<std::vector<VertexId>> sets;
  for (const auto& w : c.components) sets.push_back(w.vertices);
  std::vector<std::vector<VertexId>> expected = component_vertex_sets(board);
  std::vector<std::vector<VertexId>> given = sets;
  for (auto& s : given) std::sort(s.begin(), s.end());
  std::sort(given.begin(), given.end());
  if (given != expected) {
    return fail(why, "components do not match the connected components");
  }
  std::vector<Hypergraph> subs;
  for (const auto& w : c.components) {
    subs.push_back(induced_subhypergraph(board, w.vertices));
    if (!validate_recognition(subs.back(), w.recognition)) {
      return fail(why, std::string("component is not a ") +
                           std::string(to_string(w.recognition.kind)) + ": " +
                           to_string(subs.back()));
    }
  }
  if (const Winner* w = std::get_if<Winner>(&c.verdict)) {
    if (*w == Winner::Avoider) {
      for (const auto& cw : c.components) {
        if (!is_avoider_last_kind(cw.recognition.kind)) {
          return fail(why, "Avoider-last claim with a component of kind " +
                               std::string(to_string(cw.recognition.kind)));
        }
      }
      return true;
    }
    // Enforcer claims rest on the theorem for reduced linear rank-3 boards.
    if (board.rank() > 3 || !is_linear(board) || has_one_edge(board)) {
      return fail(why, "taxonomy Enforcer claim on an unsupported board");
    }
    for (const Edge& e : leaf_edges(board)) {
      if (e.size() == 3) return fail(why, "board is not reduced");
    }
    if (std::all_of(subs.begin(), subs.end(), has_avoider_last_shape)) {
      return fail(why, "every component is an Avoider-last shape");
    }
    return true;
  }
  if (has_one_edge(board)) return fail(why, "taxonomy board has a 1-edge");
  Outcome total = Outcome::A;
  for (const auto& cw : c.components) {
    const auto o = kind_outcome(cw.recognition.kind);
    if (!o) {
      return fail(why, "kind " + std::string(to_string(cw.recognition.kind)) +
                           " carries no outcome");
    }
    total = combine_union(total, *o);
  }
  if (total != *verdict_outcome(c)) {
    return fail(why, "component outcomes combine to " +
                         std::string(to_string(total)));
  }
  return true;
}

bool validate_on(const Hypergraph& board, const Certificate& c,
                 std::string* why) {
  switch (c.basis) {
    case Basis::EmptyEdge:
      if (!board.has_empty_edge()) return fail(why, "no empty edge");
      return verdict_is_enforcer(c) ||
             fail(why, "empty edge with a non-Enforcer verdict");
    case Basis::ForbiddenSubgraph:
      if (board.rank() > 2 || c.pattern == ForbiddenPattern::P3) {
        return fail(why, "forbidden-subgraph claim outside graphs");
      }
      if (!is_embedding(board, pattern_graph(c.pattern), c.embedding)) {
        return fail(why, "embedding of " + std::string(to_string(c.pattern)) +
                             " is not valid");
      }
      return verdict_is_enforcer(c) ||
             fail(why, "forbidden subgraph with a non-E verdict");
    case Basis::Pairing:
      if (!is_valid_pairing(board, c.pairing)) {
        return fail(why, "pairing misses an edge or reuses a vertex");
      }
      if (avoider_last_winner(c) != Winner::Avoider ||
          (verdict_outcome(c) && *verdict_outcome(c) != Outcome::A)) {
        return fail(why, "pairing with a non-A verdict");
      }
      return true;
    case Basis::ComponentTaxonomy:
      return validate_taxonomy(board, c, why);
    case Basis::OneEdgeReduction: {
      if (!c.one_edge) return fail(why, "missing 1-edge step");
      const OneEdgeStep& s = *c.one_edge;
      const Edge single{s.y};
      if (s.y < 0 || s.y >= board.num_vertices() ||
          !board.contains_edge(single)) {
        return fail(why, "no such 1-edge");
      }
      if (!(s.residual == enforcer_update(board, s.y)) ||
          s.residual_has_one_edge != has_one_edge(s.residual)) {
        return fail(why, "1-edge residual is wrong");
      }
      if (std::holds_alternative<Winner>(c.verdict)) {
        return avoider_last_winner(c) == Winner::Enforcer ||
               fail(why, "Avoider cannot win as last with a 1-edge");
      }
      Outcome expected = Outcome::E;
      if (!s.residual_has_one_edge) {
        if (c.parts.size() != 1) return fail(why, "missing residual part");
        if (!validate_on_root(s.residual, c.parts[0], why)) return false;
        if (avoider_last_winner(c.parts[0]) == Winner::Avoider) {
          expected = Outcome::SL;
        }
      }
      return expected == *verdict_outcome(c) ||
             fail(why, "1-edge verdict disagrees with the residual");
    }
    case Basis::UnionTable: {
      std::vector<std::vector<VertexId>> sets;
      for (const auto& p : c.parts) sets.push_back(p.vertices);
      if (c.parts.empty() || !same_partition(board, sets)) {
        return fail(why, "union parts do not split the board");
      }
      Outcome total = Outcome::A;
      bool all_avoider = true;
      for (const auto& p : c.parts) {
        const Hypergraph sub = induced_subhypergraph(board, p.vertices);
        if (!validate_on_root(sub, p, why)) return false;
        all_avoider = all_avoider && avoider_last_winner(p) == Winner::Avoider;
        if (const auto o = verdict_outcome(p)) {
          total = combine_union(total, *o);
        } else if (verdict_outcome(c)) {
          return fail(why, "union part lacks an outcome");
        }
      }
      if (const auto o = verdict_outcome(c)) {
        return *o == total || fail(why, "union table gives " +
                                            std::string(to_string(total)));
      }
      return (avoider_last_winner(c) == Winner::Avoider) == all_avoider ||
             fail(why, "union Avoider-last winner is wrong");
    }
    case Basis::OracleFallback: {
      std::optional<Winner> al;
      if (!c.parts.empty()) {
        if (c.parts.size() != 1 || !validate_on_root(board, c.parts[0], why)) {
          return false;
        }
        al = avoider_last_winner(c.parts[0]);
      }
      if (board.num_vertices() > kDefaultOracleBound) return true;
      Solver solver;
      if (!al) al = solver.solve(board, LastPlayer::AvoiderLast);
      if (avoider_last_winner(c) != *al) {
        return fail(why, "oracle disagrees on the Avoider-last winner");
      }
      if (const auto o = verdict_outcome(c)) {
        const Winner el = solver.solve(board, LastPlayer::EnforcerLast);
        if (outcome_from_winners(*al, el) != *o) {
          return fail(why, "oracle disagrees on the outcome");
        }
      }
      return true;
    }
  }
  return fail(why, "unknown basis");
}

bool validate_on_root(const Hypergraph& h, const Certificate& c,
                      std::string* why) {
  if (!c.reduction) return validate_on(h, c, why);
  if (h.rank() > 3) return fail(why, "reduction on rank above 3");
  if (!replay_reduction(h, *c.reduction, why)) return false;
  return validate_on(c.reduction->reduced, c, why);
}

}  // namespace

std::string_view to_string(Basis basis) {
  switch (basis) {
    case Basis::ForbiddenSubgraph:
      return "ForbiddenSubgraph";
    case Basis::ComponentTaxonomy:
      return "ComponentTaxonomy";
    case Basis::UnionTable:
      return "UnionTable";
    case Basis::OneEdgeReduction:
      return "OneEdgeReduction";
    case Basis::Pairing:
      return "Pairing";
    case Basis::OracleFallback:
      return "OracleFallback";
    case Basis::EmptyEdge:
      return "EmptyEdge";
  }
  return "?";
}

std::string_view to_string(Method method) {
  return method == Method::Structural ? "structural" : "oracle";
}

Winner avoider_last_winner(const Certificate& c) {
  if (const Winner* w = std::get_if<Winner>(&c.verdict)) return *w;
  return std::get<Outcome>(c.verdict) == Outcome::A ? Winner::Avoider
                                                    : Winner::Enforcer;
}

Outcome combine_union(Outcome o1, Outcome o2) {
  if (o1 == Outcome::E || o2 == Outcome::E) return Outcome::E;
  if (o1 == Outcome::SL && o2 == Outcome::SL) return Outcome::E;
  if (o1 == Outcome::SL || o2 == Outcome::SL) return Outcome::SL;
  return Outcome::A;
}

OneEdgeStep one_edge_reduction(const Hypergraph& h) {
  for (const Edge& e : h.edges()) {
    if (e.size() != 1) continue;
    OneEdgeStep step;
    step.y = e[0];
    step.residual = enforcer_update(h, step.y);
    step.residual_has_one_edge = has_one_edge(step.residual);
    return step;
  }
  throw ContractViolation("one_edge_reduction needs a 1-edge");
}

Classification classify_rank2(const Hypergraph& g) {
  if (g.rank() > 2) {
    throw UnsupportedInput("classify_rank2 needs rank at most 2, got " +
                           std::to_string(g.rank()));
  }
  Classification out;
  out.board = g;
  out.certificate = rank2_certificate(g);
  const Outcome o = std::get<Outcome>(out.certificate.verdict);
  out.verdict.outcome = o;
  out.verdict.avoider_last = winner_for(o, LastPlayer::AvoiderLast);
  out.verdict.enforcer_last = winner_for(o, LastPlayer::EnforcerLast);
  return out;
}

Rank3Verdict classify_rank3_linear_avoider_last(const Hypergraph& h) {
  if (h.rank() > 3) {
    throw UnsupportedInput("rank-3 classifier got rank " +
                           std::to_string(h.rank()));
  }
  if (!is_linear(h)) {
    throw UnsupportedInput("rank-3 classifier needs a linear hypergraph");
  }
  Rank3Verdict out;
  if (h.has_empty_edge()) {
    out.certificate = empty_edge_certificate();
    out.certificate.verdict = Winner::Enforcer;
    return out;
  }
  if (has_one_edge(h)) {
    out.certificate.basis = Basis::OneEdgeReduction;
    out.certificate.one_edge = one_edge_reduction(h);
    out.certificate.verdict = Winner::Enforcer;
    return out;
  }
  Rank3Reduction reduction = reduce_rank3_traced(h);
  out.certificate = rank3_taxonomy(reduction.reduced);
  out.certificate.reduction = std::move(reduction);
  out.winner = std::get<Winner>(out.certificate.verdict);
  return out;
}

Classification classify(const Hypergraph& h, const ClassifierOptions& options) {
  Classification out;
  out.board = minimize_edges(h);
  Piece p = board_piece(out.board, options);
  const Outcome o = *verdict_outcome(p.cert);
  out.certificate = std::move(p.cert);
  out.verdict.outcome = o;
  out.verdict.avoider_last = winner_for(o, LastPlayer::AvoiderLast);
  out.verdict.enforcer_last = winner_for(o, LastPlayer::EnforcerLast);
  out.verdict.avoider_last_method = p.al;
  out.verdict.enforcer_last_method = p.el;
  return out;
}

bool validate_certificate(const Hypergraph& h, const Certificate& c,
                          std::string* why) {
  return validate_on_root(h, c, why);
}

std::string summarize(const Certificate& c) {
  std::ostringstream out;
  if (c.reduction) out << "reduced(" << c.reduction->steps.size() << ")/";
  out << to_string(c.basis);
  switch (c.basis) {
    case Basis::ForbiddenSubgraph:
      out << "(" << to_string(c.pattern) << ")";
      break;
    case Basis::ComponentTaxonomy: {
      out << "(";
      for (std::size_t i = 0; i < c.components.size(); ++i) {
        if (i > 0) out << ",";
        out << to_string(c.components[i].recognition.kind);
      }
      out << ")";
      break;
    }
    case Basis::OneEdgeReduction:
      if (c.one_edge) out << "(y=" << c.one_edge->y << ")";
      break;
    default:
      break;
  }
  if (!c.parts.empty()) {
    out << "[";
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
      if (i > 0) out << ", ";
      out << summarize(c.parts[i]);
    }
    out << "]";
  }
  out << ":";
  if (const auto o = verdict_outcome(c)) {
    out << to_string(*o);
  } else {
    out << "AvoiderLast=" << to_string(std::get<Winner>(c.verdict));
  }
  return out.str();
}

}  // namespace aegame
