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

// Recognizers and constructions for the structural gadgets: chains,
// nunchakus, cycles, prisms, linear trees, the connected graphs without
// 2P3/C4/3-sunlet, pairings and the non-cut-vertex rule.

#ifndef AEGAME_STRUCTURE_H_
#define AEGAME_STRUCTURE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "aegame/hypergraph.h"

namespace aegame {

// An ab-chain: a linear simple walk of 3-edges in which `a` lies only in
// the first edge and `b` only in the last.
struct Chain {
  std::vector<Edge> edges;
  VertexId a = -1;
  VertexId b = -1;

  int length() const { return static_cast<int>(edges.size()); }
  friend bool operator==(const Chain&, const Chain&) = default;
};

// Checks every chain invariant; if `h` is given, also that each edge
// belongs to it.
bool is_valid_chain(const Chain& chain, const Hypergraph* h = nullptr);

// Shortest ab-chain, found by breadth-first layering over 3-edges. The
// length is dist_H(a, b). Throws UnsupportedInput on non-linear input and
// ContractViolation when a == b.
std::optional<Chain> shortest_chain(const Hypergraph& h, VertexId a,
                                    VertexId b);

// dist over 3-edges from `source`: 0 for the source, -1 when unreachable.
std::vector<int> chain_distances(const Hypergraph& h, VertexId source);

// Joins an ab-chain and a bc-chain into an ac-chain using only their edges.
// Throws ContractViolation unless p.b == q.a and a, b, c are distinct.
Chain compose_chains(const Chain& p, const Chain& q);

enum class RecognitionKind {
  IsolatedVertex,
  Isolated2Edge,
  Chain,
  Nunchaku,
  Cycle,
  Prism,
  LinearTree,
  P1,
  P2,
  C5,
  Bull,
  PseudoStar,
  Other,
};

std::string_view to_string(RecognitionKind kind);

struct RecognitionWitness {
  // Walk order for chains, nunchakus and cycles; edge order for prisms.
  std::vector<Edge> edge_order;
  // Named positions: C5 in cyclic order; bull as x, y, z, u, v with
  // triangle xyz and pendant edges xu, yv; chain endpoints a, b.
  std::vector<VertexId> vertex_order;
  // Hub of a pseudo-star.
  std::optional<VertexId> hub;
};

struct Recognition {
  RecognitionKind kind = RecognitionKind::Other;
  RecognitionWitness witness;
};

// How to read a component without 3-edges.
enum class RecognitionContext {
  // Rank <= 2 components get graph kinds (P1, P2, C5, Bull, PseudoStar).
  Auto,
  // Rank <= 2 components get the linear rank-3 kinds (IsolatedVertex,
  // Isolated2Edge, Nunchaku).
  LinearRank3,
};

// Classifies a connected hypergraph as exactly one kind. For rank 3 the
// precedence is Prism, Cycle, Nunchaku, Chain, LinearTree, Other.
Recognition recognize_component(
    const Hypergraph& h, RecognitionContext context = RecognitionContext::Auto);

// Independent re-check of a recognition against the definition of its kind.
bool validate_recognition(const Hypergraph& h, const Recognition& r);

// Nunchaku with its walk order, or kind Other.
Recognition is_nunchaku(const Hypergraph& h);

// Graph taxonomy for connected rank-2 input: P1, P2, C5, Bull, PseudoStar
// or Other. Throws UnsupportedInput above rank 2.
Recognition graph_recognizers(const Hypergraph& g);

// Hub y such that every component of g^{-y} has at most two vertices.
std::optional<VertexId> pseudo_star_hub(const Hypergraph& g);

enum class ForbiddenPattern { P3, TwoP3, C4, Sunlet3 };

std::string_view to_string(ForbiddenPattern pattern);

// Pattern graph with the canonical vertex labels used by embeddings:
// P3 = 0-1-2; 2P3 = 0-1-2, 3-4-5; C4 = 0-1-2-3-0;
// 3-sunlet = triangle 0,1,2 with pendant edges 0-3, 1-4, 2-5.
Hypergraph pattern_graph(ForbiddenPattern pattern);

// embedding[i] is the host vertex for pattern vertex i.
using Embedding = std::vector<VertexId>;

// Subgraph (not necessarily induced) containment via dedicated detectors.
// Throws UnsupportedInput above rank 2.
std::optional<Embedding> contains_forbidden(const Hypergraph& g,
                                            ForbiddenPattern pattern);

// Generic backtracking subgraph search; the cross-check for the detectors.
std::optional<Embedding> find_embedding(const Hypergraph& host,
                                        const Hypergraph& pattern);

// Injective and edge-preserving.
bool is_embedding(const Hypergraph& host, const Hypergraph& pattern,
                  const Embedding& embedding);

// Among vertices maximizing dist_H(x, .), the one of minimum degree, ties
// to the lowest id. Throws ContractViolation unless h is connected, reduced,
// linear, 3-uniform and not a single vertex.
VertexId find_non_cut_vertex(const Hypergraph& h, VertexId x);

// y such that H^{-y} is disconnected. Only meaningful for connected h.
bool is_cut_vertex(const Hypergraph& h, VertexId y);

struct Pairing {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  friend bool operator==(const Pairing&, const Pairing&) = default;
};

// Pairs are disjoint, well formed, and every edge contains one of them.
bool is_valid_pairing(const Hypergraph& h, const Pairing& pairing);

inline constexpr std::size_t kDefaultPairingBudget = 1'000'000;

struct PairingSearchStats {
  std::size_t nodes = 0;
  // True when the search space was exhausted, so a missing pairing means
  // none exists.
  bool exhausted = false;
  // Fast path that produced the pairing, empty for the search.
  std::string_view construction;
};

// Constructions for graphs of P1/P2 components, cycles and nunchaku minus an
// end vertex; otherwise an exact backtracking search limited to `budget`
// nodes. nullopt means "not found within budget" unless stats->exhausted.
std::optional<Pairing> find_pairing(const Hypergraph& h,
                                    std::size_t budget = kDefaultPairingBudget,
                                    PairingSearchStats* stats = nullptr);

}  // namespace aegame

#endif  // AEGAME_STRUCTURE_H_
