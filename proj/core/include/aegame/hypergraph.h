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

// Hypergraph representation, the two game-update operators and the
// outcome-preserving reductions used throughout the library.
//
// Vertices are dense integers 0..n-1. Every operation that removes vertices
// relabels the survivors so that ids stay dense: a vertex v above a removed
// vertex r becomes v - 1. `surviving_ids` reports the mapping when callers
// need to translate back.

#ifndef AEGAME_HYPERGRAPH_H_
#define AEGAME_HYPERGRAPH_H_

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace aegame {

using VertexId = int;

// Sorted, duplicate-free list of vertices.
using Edge = std::vector<VertexId>;

// A finite hypergraph. Always held in normal form: every edge is sorted,
// the edge list is sorted lexicographically and exact duplicates are gone.
// Constructing from raw edges normalizes; the type is an immutable value.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Throws InputError if an edge names a vertex outside [0, n) or repeats a
  // vertex. Edge members may be given in any order.
  explicit Hypergraph(int num_vertices, std::vector<Edge> edges = {});

  int num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Maximum edge size, 0 without edges.
  int rank() const;
  bool is_even() const { return num_vertices_ % 2 == 0; }
  bool has_empty_edge() const;
  bool contains_edge(std::span<const VertexId> edge) const;
  bool is_uniform(int k) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
};

// "n=3 {0,1} {1,2}", for logs and test failure messages.
std::string to_string(const Hypergraph& h);
std::ostream& operator<<(std::ostream& os, const Hypergraph& h);

// H^{+x}: Avoider picked x. x leaves the vertex set and every edge; an edge
// that was {x} becomes the empty edge.
Hypergraph avoider_update(const Hypergraph& h, VertexId x);

// H^{-y}: Enforcer picked y. y leaves the vertex set and every edge through
// y is killed.
Hypergraph enforcer_update(const Hypergraph& h, VertexId y);

// Vertices of h2 are shifted by h1.num_vertices().
Hypergraph disjoint_union(const Hypergraph& h1, const Hypergraph& h2);

// Vertex sets of the connected components, each sorted, ordered by their
// smallest vertex. Isolated vertices form singleton components.
std::vector<std::vector<VertexId>> component_vertex_sets(const Hypergraph& h);

// Components as stand-alone hypergraphs, in the order of
// component_vertex_sets.
std::vector<Hypergraph> connected_components(const Hypergraph& h);

bool is_connected(const Hypergraph& h);

// Keeps the given vertices (relabelled in increasing order) and the edges
// lying entirely inside them.
Hypergraph induced_subhypergraph(const Hypergraph& h,
                                 std::span<const VertexId> vertices);

int degree(const Hypergraph& h, VertexId v);
std::vector<int> degrees(const Hypergraph& h);
int min_degree(const Hypergraph& h);

bool is_linear(const Hypergraph& h);

// Minimal transversals of h on the same vertex set. With no edges the only
// minimal transversal is the empty set; with the empty edge there is none.
// Throws ResourceError above kMaxDualVertices vertices.
inline constexpr int kMaxDualVertices = 20;
Hypergraph transversal_dual(const Hypergraph& h);

// Drops every edge that strictly contains another edge.
Hypergraph minimize_edges(const Hypergraph& h);

// Drops degree-0 vertices.
Hypergraph remove_isolated(const Hypergraph& h);

// Unordered pairs (x < y) of indistinguishable vertices: swapping x for y
// maps every edge through exactly one of them to another edge.
std::vector<std::pair<VertexId, VertexId>> indistinguishable_pairs(
    const Hypergraph& h);
bool are_indistinguishable(const Hypergraph& h, VertexId x, VertexId y);

// H^{+x-y} for an indistinguishable pair. Throws ContractViolation
// otherwise.
Hypergraph super_reduce(const Hypergraph& h, VertexId x, VertexId y);

// Edges with at most one vertex of degree greater than one.
std::vector<Edge> leaf_edges(const Hypergraph& h);

// One step of the rank-3 leaf-edge reduction, in the ids of the input.
struct LeafEdgeRemoval {
  Edge edge;
  VertexId removed_first;
  VertexId removed_second;
};

struct Rank3Reduction {
  Hypergraph reduced;
  std::vector<LeafEdgeRemoval> steps;
  // surviving[i] is the input id of vertex i of `reduced`.
  std::vector<VertexId> surviving;
};

// Repeatedly removes the lexicographically smallest size-3 leaf-edge
// together with its two smallest degree-1 vertices. Throws UnsupportedInput
// for rank above 3.
Rank3Reduction reduce_rank3_traced(const Hypergraph& h);
Hypergraph reduce_rank3(const Hypergraph& h);

// Ids of h that survive removing `removed`, in increasing order; position
// i of the result is the new id i.
std::vector<VertexId> surviving_ids(int num_vertices,
                                    std::span<const VertexId> removed);

}  // namespace aegame

#endif  // AEGAME_HYPERGRAPH_H_
