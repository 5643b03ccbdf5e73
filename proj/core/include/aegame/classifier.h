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


// Structural outcome classification with checkable certificates: the
// rank-2 theorem, the linear rank-3 Avoider-last theorem, the 1-edge
// reduction and the union table, falling back to the oracle elsewhere.

#ifndef AEGAME_CLASSIFIER_H_
#define AEGAME_CLASSIFIER_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aegame/game.h"
#include "aegame/hypergraph.h"
#include "aegame/oracle.h"
#include "aegame/structure.h"

namespace aegame {

enum class Basis {
  ForbiddenSubgraph,
  ComponentTaxonomy,
  UnionTable,
  OneEdgeReduction,
  Pairing,
  OracleFallback,
  EmptyEdge,
};

std::string_view to_string(Basis basis);

enum class Method { Structural, Oracle };

std::string_view to_string(Method method);

struct ComponentWitness {
  // Vertices of the component, in the ids of the certified board.
  std::vector<VertexId> vertices;
  Recognition recognition;
};

// Result of removing a 1-edge {y}: Avoider loses as last player, and as
// second-to-last player she wins iff she wins on `residual` = H^{-y} as last.
struct OneEdgeStep {
  VertexId y = -1;
  Hypergraph residual;
  bool residual_has_one_edge = false;
};

struct Certificate {
  Basis basis = Basis::OracleFallback;
  // An Outcome, or the Avoider-last winner alone.
  std::variant<Outcome, Winner> verdict = Outcome::E;
  // Set for parts of a union: the part's vertices in the parent board.
  std::vector<VertexId> vertices;
  // When set, every field below speaks about reduction->reduced.
  std::optional<Rank3Reduction> reduction;

  ForbiddenPattern pattern = ForbiddenPattern::P3;
  Embedding embedding;
  std::vector<ComponentWitness> components;
  Pairing pairing;
  std::optional<OneEdgeStep> one_edge;
  std::vector<Certificate> parts;
};

// The Avoider-last winner a certificate vouches for.
Winner avoider_last_winner(const Certificate& c);

struct ClassifierVerdict {
  Winner avoider_last = Winner::Enforcer;
  Method avoider_last_method = Method::Structural;
  Winner enforcer_last = Winner::Enforcer;
  Method enforcer_last_method = Method::Structural;
  Outcome outcome = Outcome::E;
};

struct Classification {
  ClassifierVerdict verdict;
  // The board the certificate speaks about: the input with superset edges
  // dropped.
  Hypergraph board;
  Certificate certificate;
};

struct ClassifierOptions {
  // Vertex bound for oracle fallbacks.
  int oracle_bound = kDefaultOracleBound;
  // When false, any fragment the theorems do not cover throws
  // UnsupportedInput instead of reaching the oracle.
  bool allow_oracle = true;
  // Node budget for the pairing search tried before an oracle fallback.
  std::size_t pairing_budget = 20'000;
};

Outcome combine_union(Outcome o1, Outcome o2);

// Uses the 1-edge {y} with the smallest y. Throws ContractViolation when h
// has no 1-edge.
OneEdgeStep one_edge_reduction(const Hypergraph& h);

// Throws UnsupportedInput above rank 2.
Classification classify_rank2(const Hypergraph& g);

struct Rank3Verdict {
  Winner winner = Winner::Enforcer;
  Certificate certificate;
};

// Avoider-last winner of a linear rank-3 hypergraph. Throws UnsupportedInput
// for non-linear input or rank above 3.
Rank3Verdict classify_rank3_linear_avoider_last(const Hypergraph& h);

// Dispatcher over components. Throws ResourceError when an oracle fallback
// exceeds options.oracle_bound.
Classification classify(const Hypergraph& h, const ClassifierOptions& options = {});

// Re-checks a certificate against `h` without using the classifier's code
// path. Oracle fallbacks are re-solved when h is small enough. On failure,
// `why` receives a reason.
bool validate_certificate(const Hypergraph& h, const Certificate& c,
                          std::string* why = nullptr);

// One-line human summary, e.g. "UnionTable[Pairing:A, ComponentTaxonomy:SL]:SL".
std::string summarize(const Certificate& c);

}  // namespace aegame

#endif  // AEGAME_CLASSIFIER_H_
