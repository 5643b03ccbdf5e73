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


// Instance generators, exhaustive enumerators and the theorem-verification
// suites that pit the structural results against the exact solver.

#ifndef AEGAME_HARNESS_H_
#define AEGAME_HARNESS_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aegame/hypergraph.h"

namespace aegame {

enum class Family {
  Pn,
  Cn,
  Bull,
  Sunlet3,
  PseudoStar,
  Chain,
  Nunchaku,
  Cycle3u,
  Prism,
  PrismHub,
  RandomGraph,
  RandomLinear3,
};

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

struct GenSpec {
  Family family = Family::Pn;
  // Vertex count for Pn, Cn and the random families; walk length for Chain,
  // Nunchaku and Cycle3u.
  int n = 0;
  // PseudoStar: leaves, pendant P2s and triangles around the hub (vertex 0).
  int leaves = 0;
  int pendant_paths = 0;
  int triangles = 0;
  // RandomGraph edge probability.
  double p = 0.5;
  // RandomLinear3 target edge count.
  int edges = 0;
  std::uint64_t seed = 0;
};

// Throws InputError on invalid parameters.
Hypergraph gen_family(const GenSpec& spec);

// PrismHub layout: left prism a1..f1 = 0..5, hub x = 6, right prism
// a2..f2 = 7..12, cross edges {a1, x, a2} ... {f1, x, f2}.
inline constexpr VertexId kPrismHubCenter = 6;

// Random linear hypergraph with 2- and 3-edges: draws random 2/3-subsets and
// keeps those that preserve linearity until `target_edges` are placed or the
// attempts run out.
Hypergraph random_linear3(int n, int target_edges, std::uint64_t seed);

using HypergraphSink = std::function<void(const Hypergraph&)>;
using EdgeListSink = std::function<void(std::span<const Edge>)>;

// All labeled graphs on exactly n vertices.
void enumerate_graphs(int n, const HypergraphSink& sink);

// All labeled linear hypergraphs on exactly n vertices whose edges have size
// 2 or 3 (size 3 only when `uniform3`), including the edgeless one. Edges
// arrive sorted lexicographically.
void enumerate_linear_rank3(int n, bool connected_only, const HypergraphSink& sink,
                            bool uniform3 = false);
// Same population without building Hypergraph values.
void enumerate_linear_rank3_edges(int n, bool uniform3, const EdgeListSink& sink);

// All antichains of nonempty subsets of {0..n-1} with at most `max_edges`
// members, the empty family included.
void enumerate_antichains(int n, int max_edges, const HypergraphSink& sink);

struct Violation {
  std::string suite;
  Hypergraph instance;
  std::string detail;
};

// One JSON object per line: {"suite":..,"n":..,"edges":[[..]],"detail":..}.
std::string to_json_line(const Violation& v);

struct SuiteReport {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t violation_count = 0;
  // The first few violations, verbatim.
  std::vector<Violation> violations;
  double seconds = 0;
  std::map<std::string, std::uint64_t> counters;
  std::vector<std::string> notes;

  bool passed() const { return violation_count == 0; }
};

enum class Suite {
  LastTheorem,
  UnionTable,
  Duality,
  Monotonicity,
  SuperLemma,
  OneEdge,
  LastMoveImplications,
  ManyMoves,
  Rank2,
  Rank3AvoiderLast,
  NonCut,
  Pairings,
  Reductions,
};

inline constexpr Suite kAllSuites[] = {
    Suite::LastTheorem,  Suite::UnionTable,          Suite::Duality,
    Suite::Monotonicity, Suite::SuperLemma,          Suite::OneEdge,
    Suite::LastMoveImplications, Suite::ManyMoves,   Suite::Rank2,
    Suite::Rank3AvoiderLast, Suite::NonCut,          Suite::Pairings,
    Suite::Reductions,
};

std::string_view to_string(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);

struct SuiteOptions {
  // 0 picks the suite's default bound.
  int max_n = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::size_t max_recorded = 20;
  // Random instances for suites that sample (Rank3AvoiderLast,
  // Monotonicity, SuperLemma); negative picks the default.
  int samples = -1;
  // Called for every violation as it is found, under a lock.
  std::function<void(const Violation&)> on_violation;
};

int default_max_n(Suite suite);

SuiteReport verify_suite(Suite suite, const SuiteOptions& options = {});

// The ManyMoves and LastMoveImplications suites, also reachable through
// verify_suite.
SuiteReport verify_many_moves(const SuiteOptions& options = {});
SuiteReport verify_lastmove_implications(const SuiteOptions& options = {});

// Searches linear rank-3 hypergraphs with minimum degree >= d for instances
// where Avoider wins as second-to-last player. Witnesses are reported as
// violations. n_max >= 13 adds the two-prism hub construction.
SuiteReport conjecture_search(int d, int n_max, std::uint64_t seed,
                              const SuiteOptions& options = {});

}  // namespace aegame

#endif  // AEGAME_HARNESS_H_
