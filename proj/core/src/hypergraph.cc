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

#include "aegame/hypergraph.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>

#include "aegame/errors.h"

namespace aegame {
namespace {

void check_vertex(const Hypergraph& h, VertexId v, const char* op) {
  if (v < 0 || v >= h.num_vertices()) {
    std::ostringstream msg;
    msg << op << ": unknown vertex " << v << " (hypergraph has "
        << h.num_vertices() << " vertices)";
    throw InputError(msg.str());
  }
}

VertexId shift_past(VertexId v, VertexId removed) {
  return v > removed ? v - 1 : v;
}

// Disjoint-set forest with path halving.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Hypergraph::Hypergraph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 0) throw InputError("negative vertex count");
  for (Edge& e : edges_) {
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= num_vertices_) {
        std::ostringstream msg;
        msg << "edge member " << e[i] << " is not a vertex of a "
            << num_vertices_ << "-vertex hypergraph";
        throw InputError(msg.str());
      }
      if (i > 0 && e[i] == e[i - 1]) {
        std::ostringstream msg;
        msg << "vertex " << e[i] << " repeated inside an edge";
        throw InputError(msg.str());
      }
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

int Hypergraph::rank() const {
  std::size_t r = 0;
  for (const Edge& e : edges_) r = std::max(r, e.size());
  return static_cast<int>(r);
}

bool Hypergraph::has_empty_edge() const {
  // The empty edge sorts first.
  return !edges_.empty() && edges_.front().empty();
}

bool Hypergraph::contains_edge(std::span<const VertexId> edge) const {
  return std::binary_search(
      edges_.begin(), edges_.end(), edge,
      [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                            b.end());
      });
}

bool Hypergraph::is_uniform(int k) const {
  return std::all_of(edges_.begin(), edges_.end(), [k](const Edge& e) {
    return static_cast<int>(e.size()) == k;
  });
}

std::string to_string(const Hypergraph& h) {
  std::ostringstream os;
  os << h;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Hypergraph& h) {
  os << "n=" << h.num_vertices();
  for (const Edge& e : h.edges()) {
    os << " {";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) os << ',';
      os << e[i];
    }
    os << '}';
  }
  return os;
}

Hypergraph avoider_update(const Hypergraph& h, VertexId x) {
  check_vertex(h, x, "avoider_update");
  std::vector<Edge> edges;
  edges.reserve(h.num_edges());
  for (const Edge& e : h.edges()) {
    Edge shrunk;
    shrunk.reserve(e.size());
    for (VertexId v : e) {
      if (v != x) shrunk.push_back(shift_past(v, x));
    }
    edges.push_back(std::move(shrunk));
  }
  return Hypergraph(h.num_vertices() - 1, std::move(edges));
}

Hypergraph enforcer_update(const Hypergraph& h, VertexId y) {
  check_vertex(h, y, "enforcer_update");
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    if (std::binary_search(e.begin(), e.end(), y)) continue;
    Edge moved;
    moved.reserve(e.size());
    for (VertexId v : e) moved.push_back(shift_past(v, y));
    edges.push_back(std::move(moved));
  }
  return Hypergraph(h.num_vertices() - 1, std::move(edges));
}

Hypergraph disjoint_union(const Hypergraph& h1, const Hypergraph& h2) {
  std::vector<Edge> edges = h1.edges();
  const int offset = h1.num_vertices();
  for (Edge e : h2.edges()) {
    for (VertexId& v : e) v += offset;
    edges.push_back(std::move(e));
  }
  return Hypergraph(h1.num_vertices() + h2.num_vertices(), std::move(edges));
}

std::vector<std::vector<VertexId>> component_vertex_sets(const Hypergraph& h) {
  UnionFind uf(h.num_vertices());
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 1; i < e.size(); ++i) uf.unite(e[0], e[i]);
  }
  std::vector<std::vector<VertexId>> sets;
  std::vector<int> slot(h.num_vertices(), -1);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    const int root = uf.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(sets.size());
      sets.emplace_back();
    }
    sets[slot[root]].push_back(v);
  }
  return sets;
}

std::vector<Hypergraph> connected_components(const Hypergraph& h) {
  std::vector<Hypergraph> out;
  for (const auto& set : component_vertex_sets(h)) {
    out.push_back(induced_subhypergraph(h, set));
  }
  return out;
}

bool is_connected(const Hypergraph& h) {
  return component_vertex_sets(h).size() <= 1;
}

Hypergraph induced_subhypergraph(const Hypergraph& h,
                                 std::span<const VertexId> vertices) {
  std::vector<int> new_id(h.num_vertices(), -1);
  std::vector<VertexId> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    check_vertex(h, sorted[i], "induced_subhypergraph");
    new_id[sorted[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    Edge mapped;
    mapped.reserve(e.size());
    bool inside = true;
    for (VertexId v : e) {
      if (new_id[v] < 0) {
        inside = false;
        break;
      }
      mapped.push_back(new_id[v]);
    }
    if (inside) edges.push_back(std::move(mapped));
  }
  return Hypergraph(static_cast<int>(sorted.size()), std::move(edges));
}

int degree(const Hypergraph& h, VertexId v) {
  check_vertex(h, v, "degree");
  int d = 0;
  for (const Edge& e : h.edges()) {
    if (std::binary_search(e.begin(), e.end(), v)) ++d;
  }
  return d;
}

std::vector<int> degrees(const Hypergraph& h) {
  std::vector<int> d(h.num_vertices(), 0);
  for (const Edge& e : h.edges()) {
    for (VertexId v : e) ++d[v];
  }
  return d;
}

int min_degree(const Hypergraph& h) {
  const std::vector<int> d = degrees(h);
  return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
}

bool is_linear(const Hypergraph& h) {
  const auto& edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      int shared = 0;
      auto a = edges[i].begin();
      auto b = edges[j].begin();
      while (a != edges[i].end() && b != edges[j].end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          if (++shared > 1) return false;
          ++a;
          ++b;
        }
      }
    }
  }
  return true;
}

Hypergraph transversal_dual(const Hypergraph& h) {
  const int n = h.num_vertices();
  if (n > kMaxDualVertices) {
    std::ostringstream msg;
    msg << "transversal_dual supports at most " << kMaxDualVertices
        << " vertices, got " << n;
    throw ResourceError(msg.str());
  }
  if (h.has_empty_edge()) return Hypergraph(n);
  std::vector<std::uint32_t> masks;
  for (const Edge& e : h.edges()) {
    std::uint32_t m = 0;
    for (VertexId v : e) m |= std::uint32_t{1} << v;
    masks.push_back(m);
  }
  std::vector<Edge> transversals;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t s = 0; s < limit; ++s) {
    // s is a minimal transversal iff it hits every edge and each member has
    // a private edge that s meets only there.
    std::uint32_t has_private = 0;
    bool hits_all = true;
    for (std::uint32_t m : masks) {
      const std::uint32_t hit = m & s;
      if (hit == 0) {
        hits_all = false;
        break;
      }
      if (std::has_single_bit(hit)) has_private |= hit;
    }
    if (!hits_all || has_private != s) continue;
    Edge t;
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1) t.push_back(v);
    }
    transversals.push_back(std::move(t));
  }
  return Hypergraph(n, std::move(transversals));
}

Hypergraph minimize_edges(const Hypergraph& h) {
  const auto& edges = h.edges();
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    bool superset = false;
    for (std::size_t j = 0; j < edges.size() && !superset; ++j) {
      superset = j != i && edges[j].size() < edges[i].size() &&
                 std::includes(edges[i].begin(), edges[i].end(),
                               edges[j].begin(), edges[j].end());
    }
    if (!superset) kept.push_back(edges[i]);
  }
  return Hypergraph(h.num_vertices(), std::move(kept));
}

Hypergraph remove_isolated(const Hypergraph& h) {
  const std::vector<int> d = degrees(h);
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (d[v] > 0) keep.push_back(v);
  }
  return induced_subhypergraph(h, keep);
}

bool are_indistinguishable(const Hypergraph& h, VertexId x, VertexId y) {
  check_vertex(h, x, "are_indistinguishable");
  check_vertex(h, y, "are_indistinguishable");
  if (x == y) return false;
  auto swapped_present = [&h](const Edge& e, VertexId from, VertexId to) {
    Edge image;
    image.reserve(e.size());
    for (VertexId v : e) image.push_back(v == from ? to : v);
    std::sort(image.begin(), image.end());
    return h.contains_edge(image);
  };
  for (const Edge& e : h.edges()) {
    const bool has_x = std::binary_search(e.begin(), e.end(), x);
    const bool has_y = std::binary_search(e.begin(), e.end(), y);
    if (has_x && !has_y && !swapped_present(e, x, y)) return false;
    if (has_y && !has_x && !swapped_present(e, y, x)) return false;
  }
  return true;
}

std::vector<std::pair<VertexId, VertexId>> indistinguishable_pairs(
    const Hypergraph& h) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId x = 0; x < h.num_vertices(); ++x) {
    for (VertexId y = x + 1; y < h.num_vertices(); ++y) {
      if (are_indistinguishable(h, x, y)) pairs.emplace_back(x, y);
    }
  }
  return pairs;
}

Hypergraph super_reduce(const Hypergraph& h, VertexId x, VertexId y) {
  if (!are_indistinguishable(h, x, y)) {
    std::ostringstream msg;
    msg << "super_reduce: vertices " << x << " and " << y
        << " are not indistinguishable";
    throw ContractViolation(msg.str());
  }
  const VertexId removed[] = {std::min(x, y), std::max(x, y)};
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    const bool has_x = std::binary_search(e.begin(), e.end(), x);
    const bool has_y = std::binary_search(e.begin(), e.end(), y);
    if (has_x && has_y) continue;
    Edge shrunk;
    for (VertexId v : e) {
      if (v == x || v == y) continue;
      shrunk.push_back(v - (v > removed[0]) - (v > removed[1]));
    }
    edges.push_back(std::move(shrunk));
  }
  return Hypergraph(h.num_vertices() - 2, std::move(edges));
}

std::vector<Edge> leaf_edges(const Hypergraph& h) {
  const std::vector<int> d = degrees(h);
  std::vector<Edge> leaves;
  for (const Edge& e : h.edges()) {
    const auto heavy =
        std::count_if(e.begin(), e.end(), [&d](VertexId v) { return d[v] > 1; });
    if (heavy <= 1) leaves.push_back(e);
  }
  return leaves;
}

Rank3Reduction reduce_rank3_traced(const Hypergraph& h) {
  if (h.rank() > 3) {
    throw UnsupportedInput("reduce_rank3 needs rank at most 3, got rank " +
                           std::to_string(h.rank()));
  }
  Rank3Reduction result;
  // Work in input ids; edges stay sorted so the first match is the
  // lexicographically smallest leaf-edge.
  std::vector<Edge> edges = h.edges();
  std::vector<int> deg = degrees(h);
  std::vector<bool> alive(h.num_vertices(), true);
  for (;;) {
    auto leaf = std::find_if(edges.begin(), edges.end(), [&deg](const Edge& e) {
      return e.size() == 3 && std::count_if(e.begin(), e.end(), [&deg](VertexId v) {
                                return deg[v] > 1;
                              }) <= 1;
    });
    if (leaf == edges.end()) break;
    LeafEdgeRemoval step{*leaf, -1, -1};
    for (VertexId v : *leaf) {
      if (deg[v] != 1) continue;
      if (step.removed_first < 0) {
        step.removed_first = v;
      } else if (step.removed_second < 0) {
        step.removed_second = v;
      }
    }
    for (VertexId v : *leaf) --deg[v];
    alive[step.removed_first] = false;
    alive[step.removed_second] = false;
    edges.erase(leaf);
    result.steps.push_back(std::move(step));
  }
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (alive[v]) result.surviving.push_back(v);
  }
  result.reduced = induced_subhypergraph(Hypergraph(h.num_vertices(), edges),
                                         result.surviving);
  return result;
}

Hypergraph reduce_rank3(const Hypergraph& h) {
  return reduce_rank3_traced(h).reduced;
}

std::vector<VertexId> surviving_ids(int num_vertices,
                                    std::span<const VertexId> removed) {
  std::vector<bool> gone(num_vertices, false);
  for (VertexId v : removed) {
    if (v >= 0 && v < num_vertices) gone[v] = true;
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < num_vertices; ++v) {
    if (!gone[v]) out.push_back(v);
  }
  return out;
}

}  // namespace aegame
