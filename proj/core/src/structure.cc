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

#include "aegame/structure.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "aegame/errors.h"

namespace aegame {
namespace {

bool contains(const Edge& e, VertexId v) {
  return std::binary_search(e.begin(), e.end(), v);
}

int intersection_size(const Edge& a, const Edge& b) {
  int shared = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++shared;
      ++i;
      ++j;
    }
  }
  return shared;
}

// The single shared vertex of two edges, or -1.
VertexId junction(const Edge& a, const Edge& b) {
  for (VertexId v : a) {
    if (contains(b, v)) return v;
  }
  return -1;
}

bool all_edges_have_size(const std::vector<Edge>& edges, std::size_t k) {
  return std::all_of(edges.begin(), edges.end(),
                     [k](const Edge& e) { return e.size() == k; });
}

// Orders `edges` as a walk in which exactly consecutive edges meet, each in
// one vertex. For `closed`, the walk is cyclic and needs at least 3 edges
// with distinct meeting vertices. Returns indices into `edges`.
std::optional<std::vector<int>> walk_order(const std::vector<Edge>& edges,
                                           bool closed) {
  const int m = static_cast<int>(edges.size());
  if (m == 0) return std::nullopt;
  std::vector<std::vector<int>> adj(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const int s = intersection_size(edges[i], edges[j]);
      if (s > 1) return std::nullopt;
      if (s == 1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  int start = -1;
  if (closed) {
    if (m < 3) return std::nullopt;
    for (int i = 0; i < m; ++i) {
      if (adj[i].size() != 2) return std::nullopt;
    }
    start = 0;
  } else {
    if (m == 1) return std::vector<int>{0};
    int ends = 0;
    for (int i = 0; i < m; ++i) {
      if (adj[i].size() == 1) {
        if (start < 0) start = i;
        ++ends;
      } else if (adj[i].size() != 2) {
        return std::nullopt;
      }
    }
    if (ends != 2) return std::nullopt;
  }
  std::vector<int> order{start};
  std::vector<bool> seen(m, false);
  seen[start] = true;
  int current = start;
  for (;;) {
    int next = -1;
    for (int j : adj[current]) {
      if (!seen[j]) {
        next = j;
        break;
      }
    }
    if (next < 0) break;
    seen[next] = true;
    order.push_back(next);
    current = next;
  }
  if (static_cast<int>(order.size()) != m) return std::nullopt;
  if (closed && m == 3) {
    // Three edges through one common vertex meet pairwise but form a star.
    const Edge& a = edges[0];
    for (VertexId v : a) {
      if (contains(edges[1], v) && contains(edges[2], v)) return std::nullopt;
    }
  }
  return order;
}

std::vector<Edge> pick(const std::vector<Edge>& edges,
                       const std::vector<int>& order) {
  std::vector<Edge> out;
  out.reserve(order.size());
  for (int i : order) out.push_back(edges[i]);
  return out;
}

bool covers_all_vertices(const Hypergraph& h) {
  const std::vector<int> d = degrees(h);
  return std::all_of(d.begin(), d.end(), [](int x) { return x > 0; });
}

bool same_edge_set(const Hypergraph& h, std::vector<Edge> edges) {
  for (Edge& e : edges) std::sort(e.begin(), e.end());
  std::sort(edges.begin(), edges.end());
  return edges == h.edges();
}

std::vector<std::vector<VertexId>> neighbour_lists(const Hypergraph& g) {
  std::vector<std::set<VertexId>> adj(g.num_vertices());
  for (const Edge& e : g.edges()) {
    if (e.size() != 2) continue;
    adj[e[0]].insert(e[1]);
    adj[e[1]].insert(e[0]);
  }
  std::vector<std::vector<VertexId>> out(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    out[v].assign(adj[v].begin(), adj[v].end());
  }
  return out;
}

bool adjacent(const std::vector<std::vector<VertexId>>& adj, VertexId a,
              VertexId b) {
  return std::binary_search(adj[a].begin(), adj[a].end(), b);
}

void require_rank2(const Hypergraph& g, const char* op) {
  if (g.rank() > 2) {
    std::ostringstream msg;
    msg << op << " needs rank at most 2, got rank " << g.rank();
    throw UnsupportedInput(msg.str());
  }
}

std::optional<Recognition> recognize_prism(const Hypergraph& h) {
  if (h.num_vertices() != 6 || h.num_edges() != 4) return std::nullopt;
  if (!h.is_uniform(3) || !is_linear(h)) return std::nullopt;
  const std::vector<int> d = degrees(h);
  if (!std::all_of(d.begin(), d.end(), [](int x) { return x == 2; })) {
    return std::nullopt;
  }
  Recognition r{RecognitionKind::Prism, {}};
  r.witness.edge_order = h.edges();
  return r;
}

std::optional<Recognition> recognize_cycle(const Hypergraph& h) {
  if (!h.is_uniform(3) || h.num_edges() < 3) return std::nullopt;
  if (h.num_vertices() != 2 * static_cast<int>(h.num_edges())) {
    return std::nullopt;
  }
  const auto order = walk_order(h.edges(), /*closed=*/true);
  if (!order) return std::nullopt;
  Recognition r{RecognitionKind::Cycle, {}};
  r.witness.edge_order = pick(h.edges(), *order);
  return r;
}

std::optional<Recognition> recognize_nunchaku(const Hypergraph& h) {
  const auto& edges = h.edges();
  if (edges.size() < 2) return std::nullopt;
  const auto order = walk_order(edges, /*closed=*/false);
  if (!order) return std::nullopt;
  std::vector<Edge> walk = pick(edges, *order);
  if (walk.front().size() != 2 || walk.back().size() != 2) return std::nullopt;
  for (std::size_t i = 1; i + 1 < walk.size(); ++i) {
    if (walk[i].size() != 3) return std::nullopt;
  }
  if (h.num_vertices() != 2 * static_cast<int>(walk.size()) - 1) {
    return std::nullopt;
  }
  if (walk.back() < walk.front()) std::reverse(walk.begin(), walk.end());
  Recognition r{RecognitionKind::Nunchaku, {}};
  r.witness.edge_order = std::move(walk);
  return r;
}

std::optional<Recognition> recognize_chain(const Hypergraph& h) {
  const auto& edges = h.edges();
  if (edges.empty() || !h.is_uniform(3)) return std::nullopt;
  const auto order = walk_order(edges, /*closed=*/false);
  if (!order) return std::nullopt;
  std::vector<Edge> walk = pick(edges, *order);
  if (h.num_vertices() != 2 * static_cast<int>(walk.size()) + 1) {
    return std::nullopt;
  }
  if (walk.back() < walk.front()) std::reverse(walk.begin(), walk.end());
  VertexId a = -1;
  VertexId b = -1;
  if (walk.size() == 1) {
    a = walk[0].front();
    b = walk[0].back();
  } else {
    for (VertexId v : walk.front()) {
      if (!contains(walk[1], v)) {
        a = v;
        break;
      }
    }
    for (VertexId v : walk.back()) {
      if (!contains(walk[walk.size() - 2], v)) {
        b = v;
        break;
      }
    }
  }
  Recognition r{RecognitionKind::Chain, {}};
  r.witness.edge_order = std::move(walk);
  r.witness.vertex_order = {a, b};
  return r;
}

std::optional<Recognition> recognize_linear_tree(const Hypergraph& h) {
  const auto& edges = h.edges();
  if (edges.empty() || !is_linear(h)) return std::nullopt;
  int excess = 0;
  for (const Edge& e : edges) {
    if (e.size() < 2) return std::nullopt;
    excess += static_cast<int>(e.size()) - 1;
  }
  if (excess != h.num_vertices() - 1) return std::nullopt;
  // Growth order: each edge meets the union of the previous ones in exactly
  // one vertex.
  std::vector<bool> in_tree(h.num_vertices(), false);
  std::vector<bool> used(edges.size(), false);
  std::vector<Edge> order{edges[0]};
  used[0] = true;
  for (VertexId v : edges[0]) in_tree[v] = true;
  for (std::size_t step = 1; step < edges.size(); ++step) {
    bool grew = false;
    for (std::size_t i = 0; i < edges.size() && !grew; ++i) {
      if (used[i]) continue;
      const auto touching = std::count_if(
          edges[i].begin(), edges[i].end(),
          [&in_tree](VertexId v) { return in_tree[v]; });
      if (touching != 1) continue;
      used[i] = true;
      for (VertexId v : edges[i]) in_tree[v] = true;
      order.push_back(edges[i]);
      grew = true;
    }
    if (!grew) return std::nullopt;
  }
  Recognition r{RecognitionKind::LinearTree, {}};
  r.witness.edge_order = std::move(order);
  return r;
}

std::optional<Recognition> recognize_c5(const Hypergraph& g,
                                        const std::vector<std::vector<VertexId>>& adj) {
  if (g.num_vertices() != 5 || g.num_edges() != 5) return std::nullopt;
  for (const auto& nb : adj) {
    if (nb.size() != 2) return std::nullopt;
  }
  std::vector<VertexId> order{0};
  VertexId prev = -1;
  VertexId cur = 0;
  for (int step = 0; step < 4; ++step) {
    const VertexId next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  std::vector<VertexId> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return std::nullopt;
  }
  Recognition r{RecognitionKind::C5, {}};
  r.witness.vertex_order = std::move(order);
  return r;
}

std::optional<Recognition> recognize_bull(const Hypergraph& g,
                                          const std::vector<std::vector<VertexId>>& adj) {
  if (g.num_vertices() != 5 || g.num_edges() != 5) return std::nullopt;
  // x, y carry the pendant edges; z is the third triangle vertex.
  for (VertexId x = 0; x < 5; ++x) {
    for (VertexId y = 0; y < 5; ++y) {
      for (VertexId z = 0; z < 5; ++z) {
        if (x == y || y == z || x == z) continue;
        std::vector<VertexId> rest;
        for (VertexId v = 0; v < 5; ++v) {
          if (v != x && v != y && v != z) rest.push_back(v);
        }
        for (int flip = 0; flip < 2; ++flip) {
          const VertexId u = rest[flip];
          const VertexId v = rest[1 - flip];
          std::vector<Edge> want = {{x, y}, {y, z}, {x, z}, {x, u}, {y, v}};
          if (same_edge_set(g, want)) {
            Recognition r{RecognitionKind::Bull, {}};
            r.witness.vertex_order = {x, y, z, u, v};
            return r;
          }
        }
      }
    }
  }
  (void)adj;
  return std::nullopt;
}

}  // namespace

bool is_valid_chain(const Chain& chain, const Hypergraph* h) {
  const auto& e = chain.edges;
  const std::size_t len = e.size();
  if (len == 0 || chain.a == chain.b || chain.a < 0 || chain.b < 0) {
    return false;
  }
  for (const Edge& edge : e) {
    if (edge.size() != 3 || !std::is_sorted(edge.begin(), edge.end())) {
      return false;
    }
    if (h != nullptr && !h->contains_edge(edge)) return false;
  }
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const int s = intersection_size(e[i], e[j]);
      if (j == i + 1 ? s != 1 : s != 0) return false;
    }
  }
  if (!contains(e.front(), chain.a) || !contains(e.back(), chain.b)) {
    return false;
  }
  for (std::size_t i = 1; i < len; ++i) {
    if (contains(e[i], chain.a)) return false;
  }
  for (std::size_t i = 0; i + 1 < len; ++i) {
    if (contains(e[i], chain.b)) return false;
  }
  return true;
}

std::vector<int> chain_distances(const Hypergraph& h, VertexId source) {
  std::vector<int> dist(h.num_vertices(), -1);
  if (source < 0 || source >= h.num_vertices()) {
    throw InputError("chain_distances: unknown vertex " +
                     std::to_string(source));
  }
  std::vector<std::vector<int>> incident(h.num_vertices());
  const auto& edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].size() != 3) continue;
    for (VertexId v : edges[i]) incident[v].push_back(static_cast<int>(i));
  }
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (int ei : incident[u]) {
      for (VertexId w : edges[ei]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

std::optional<Chain> shortest_chain(const Hypergraph& h, VertexId a,
                                    VertexId b) {
  if (a < 0 || a >= h.num_vertices() || b < 0 || b >= h.num_vertices()) {
    throw InputError("shortest_chain: unknown vertex");
  }
  if (a == b) throw ContractViolation("shortest_chain needs a != b");
  if (!is_linear(h)) {
    throw UnsupportedInput("shortest_chain needs a linear hypergraph");
  }
  const auto& edges = h.edges();
  std::vector<std::vector<int>> incident(h.num_vertices());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].size() != 3) continue;
    for (VertexId v : edges[i]) incident[v].push_back(static_cast<int>(i));
  }
  std::vector<int> via_edge(h.num_vertices(), -1);
  std::vector<VertexId> via_vertex(h.num_vertices(), -1);
  std::vector<bool> seen(h.num_vertices(), false);
  std::deque<VertexId> queue{a};
  seen[a] = true;
  while (!queue.empty() && !seen[b]) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (int ei : incident[u]) {
      for (VertexId w : edges[ei]) {
        if (seen[w]) continue;
        seen[w] = true;
        via_edge[w] = ei;
        via_vertex[w] = u;
        queue.push_back(w);
      }
    }
  }
  if (!seen[b]) return std::nullopt;
  Chain chain;
  chain.a = a;
  chain.b = b;
  for (VertexId v = b; v != a; v = via_vertex[v]) {
    chain.edges.push_back(edges[via_edge[v]]);
  }
  std::reverse(chain.edges.begin(), chain.edges.end());
  if (!is_valid_chain(chain, &h)) {
    throw InvariantViolation("breadth-first walk is not a chain");
  }
  return chain;
}

Chain compose_chains(const Chain& p, const Chain& q) {
  if (!is_valid_chain(p) || !is_valid_chain(q)) {
    throw ContractViolation("compose_chains: inputs must be chains");
  }
  const VertexId a = p.a;
  const VertexId b = p.b;
  const VertexId c = q.b;
  if (q.a != b || a == c) {
    throw ContractViolation(
        "compose_chains needs an ab-chain and a bc-chain with a, b, c "
        "distinct");
  }
  auto in_chain = [](const Chain& ch, VertexId v) {
    return std::any_of(ch.edges.begin(), ch.edges.end(),
                       [v](const Edge& e) { return contains(e, v); });
  };
  Chain out;
  out.a = a;
  out.b = c;
  if (in_chain(p, c)) {
    // Prefix of p up to the first edge through c.
    for (const Edge& e : p.edges) {
      out.edges.push_back(e);
      if (contains(e, c)) break;
    }
  } else if (in_chain(q, a)) {
    // Suffix of q from the last edge through a.
    std::size_t j = q.edges.size();
    while (j-- > 0) {
      if (contains(q.edges[j], a)) break;
    }
    out.edges.assign(q.edges.begin() + static_cast<std::ptrdiff_t>(j),
                     q.edges.end());
  } else {
    std::set<VertexId> q_vertices;
    for (const Edge& e : q.edges) q_vertices.insert(e.begin(), e.end());
    std::size_t i = 0;
    while (std::none_of(p.edges[i].begin(), p.edges[i].end(),
                        [&](VertexId v) { return q_vertices.count(v) > 0; })) {
      ++i;
    }
    std::size_t j = q.edges.size() - 1;
    while (intersection_size(p.edges[i], q.edges[j]) == 0) --j;
    out.edges.assign(p.edges.begin(),
                     p.edges.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    out.edges.insert(out.edges.end(),
                     q.edges.begin() + static_cast<std::ptrdiff_t>(j),
                     q.edges.end());
  }
  if (!is_valid_chain(out)) {
    throw ContractViolation(
        "compose_chains: chains do not live in a common linear hypergraph");
  }
  return out;
}

std::string_view to_string(RecognitionKind kind) {
  switch (kind) {
    case RecognitionKind::IsolatedVertex:
      return "IsolatedVertex";
    case RecognitionKind::Isolated2Edge:
      return "Isolated2Edge";
    case RecognitionKind::Chain:
      return "Chain";
    case RecognitionKind::Nunchaku:
      return "Nunchaku";
    case RecognitionKind::Cycle:
      return "Cycle";
    case RecognitionKind::Prism:
      return "Prism";
    case RecognitionKind::LinearTree:
      return "LinearTree";
    case RecognitionKind::P1:
      return "P1";
    case RecognitionKind::P2:
      return "P2";
    case RecognitionKind::C5:
      return "C5";
    case RecognitionKind::Bull:
      return "Bull";
    case RecognitionKind::PseudoStar:
      return "PseudoStar";
    case RecognitionKind::Other:
      return "Other";
  }
  return "?";
}

Recognition recognize_component(const Hypergraph& h,
                                RecognitionContext context) {
  if (h.num_vertices() == 0 || !is_connected(h)) return {};
  if (h.rank() <= 2) {
    if (context == RecognitionContext::Auto) return graph_recognizers(h);
    if (h.num_vertices() == 1 && h.num_edges() == 0) {
      return {RecognitionKind::IsolatedVertex, {}};
    }
    if (h.num_vertices() == 2 && h.num_edges() == 1 && h.rank() == 2) {
      return {RecognitionKind::Isolated2Edge, {h.edges(), {}, {}}};
    }
    return is_nunchaku(h);
  }
  if (h.rank() > 3 || !is_linear(h) || h.has_empty_edge()) return {};
  if (auto r = recognize_prism(h)) return *r;
  if (auto r = recognize_cycle(h)) return *r;
  if (auto r = recognize_nunchaku(h)) return *r;
  if (auto r = recognize_chain(h)) return *r;
  if (auto r = recognize_linear_tree(h)) return *r;
  return {};
}

Recognition is_nunchaku(const Hypergraph& h) {
  if (h.num_vertices() == 0 || !is_connected(h) || h.rank() > 3) return {};
  if (auto r = recognize_nunchaku(h)) return *r;
  return {};
}

std::optional<VertexId> pseudo_star_hub(const Hypergraph& g) {
  for (VertexId y = 0; y < g.num_vertices(); ++y) {
    const auto sets = component_vertex_sets(enforcer_update(g, y));
    if (std::all_of(sets.begin(), sets.end(),
                    [](const auto& s) { return s.size() <= 2; })) {
      return y;
    }
  }
  return std::nullopt;
}

Recognition graph_recognizers(const Hypergraph& g) {
  require_rank2(g, "graph_recognizers");
  if (g.num_vertices() == 0 || !is_connected(g)) return {};
  for (const Edge& e : g.edges()) {
    if (e.size() != 2) return {};
  }
  if (g.num_vertices() == 1) return {RecognitionKind::P1, {}};
  if (g.num_vertices() == 2) {
    return {RecognitionKind::P2, {g.edges(), {}, {}}};
  }
  const auto adj = neighbour_lists(g);
  if (auto r = recognize_c5(g, adj)) return *r;
  if (auto r = recognize_bull(g, adj)) return *r;
  if (auto hub = pseudo_star_hub(g)) {
    Recognition r{RecognitionKind::PseudoStar, {}};
    r.witness.hub = *hub;
    return r;
  }
  return {};
}

bool validate_recognition(const Hypergraph& h, const Recognition& r) {
  const auto& w = r.witness;
  const int n = h.num_vertices();
  switch (r.kind) {
    case RecognitionKind::IsolatedVertex:
    case RecognitionKind::P1:
      return n == 1 && h.num_edges() == 0;
    case RecognitionKind::Isolated2Edge:
    case RecognitionKind::P2:
      return n == 2 && h.edges() == std::vector<Edge>{{0, 1}};
    case RecognitionKind::Chain: {
      if (w.vertex_order.size() != 2) return false;
      const Chain chain{w.edge_order, w.vertex_order[0], w.vertex_order[1]};
      return is_valid_chain(chain, &h) && same_edge_set(h, w.edge_order) &&
             covers_all_vertices(h);
    }
    case RecognitionKind::Nunchaku: {
      const auto& e = w.edge_order;
      const std::size_t len = e.size();
      if (len < 2 || !same_edge_set(h, e) || !covers_all_vertices(h)) {
        return false;
      }
      if (e.front().size() != 2 || e.back().size() != 2) return false;
      for (std::size_t i = 1; i + 1 < len; ++i) {
        if (e[i].size() != 3) return false;
      }
      for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = i + 1; j < len; ++j) {
          const int s = intersection_size(e[i], e[j]);
          if (j == i + 1 ? s != 1 : s != 0) return false;
        }
      }
      return n == 2 * static_cast<int>(len) - 1;
    }
    case RecognitionKind::Cycle: {
      const auto& e = w.edge_order;
      const std::size_t len = e.size();
      if (len < 3 || !same_edge_set(h, e) || n != 2 * static_cast<int>(len)) {
        return false;
      }
      // Removing the closing edge {a, b, c} leaves an ab-chain of length
      // len - 1 that avoids c.
      const Edge& closing = e.back();
      const VertexId a = junction(closing, e.front());
      const VertexId b = junction(closing, e[len - 2]);
      if (a < 0 || b < 0 || a == b) return false;
      VertexId c = -1;
      for (VertexId v : closing) {
        if (v != a && v != b) c = v;
      }
      const Chain path{std::vector<Edge>(e.begin(), e.end() - 1), a, b};
      if (!is_valid_chain(path, &h)) return false;
      for (std::size_t i = 0; i + 1 < len; ++i) {
        if (contains(e[i], c)) return false;
      }
      return closing.size() == 3;
    }
    case RecognitionKind::Prism: {
      // A cycle of length 3 plus the edge through its degree-1 vertices.
      if (n != 6 || h.num_edges() != 4 || w.edge_order.size() != 4) {
        return false;
      }
      if (!same_edge_set(h, w.edge_order)) return false;
      for (std::size_t drop = 0; drop < 4; ++drop) {
        std::vector<Edge> cyc;
        for (std::size_t i = 0; i < 4; ++i) {
          if (i != drop) cyc.push_back(w.edge_order[i]);
        }
        const Hypergraph c3(6, cyc);
        const auto order = walk_order(c3.edges(), /*closed=*/true);
        if (!order || !c3.is_uniform(3)) continue;
        const std::vector<int> d = degrees(c3);
        Edge ones;
        for (VertexId v = 0; v < 6; ++v) {
          if (d[v] == 1) ones.push_back(v);
        }
        if (ones == w.edge_order[drop]) return true;
      }
      return false;
    }
    case RecognitionKind::LinearTree: {
      const auto& e = w.edge_order;
      if (e.empty() || !same_edge_set(h, e) || !is_linear(h)) return false;
      std::vector<bool> in_tree(n, false);
      for (VertexId v : e.front()) in_tree[v] = true;
      for (std::size_t i = 1; i < e.size(); ++i) {
        const auto touching = std::count_if(
            e[i].begin(), e[i].end(), [&](VertexId v) { return in_tree[v]; });
        if (touching != 1) return false;
        for (VertexId v : e[i]) in_tree[v] = true;
      }
      return std::all_of(in_tree.begin(), in_tree.end(),
                         [](bool b) { return b; });
    }
    case RecognitionKind::C5: {
      const auto& o = w.vertex_order;
      if (n != 5 || o.size() != 5) return false;
      std::vector<Edge> want;
      for (int i = 0; i < 5; ++i) want.push_back({o[i], o[(i + 1) % 5]});
      std::vector<VertexId> s = o;
      std::sort(s.begin(), s.end());
      return s == std::vector<VertexId>{0, 1, 2, 3, 4} && same_edge_set(h, want);
    }
    case RecognitionKind::Bull: {
      const auto& o = w.vertex_order;
      if (n != 5 || o.size() != 5) return false;
      std::vector<VertexId> s = o;
      std::sort(s.begin(), s.end());
      if (s != std::vector<VertexId>{0, 1, 2, 3, 4}) return false;
      return same_edge_set(h, {{o[0], o[1]}, {o[1], o[2]}, {o[0], o[2]},
                               {o[0], o[3]}, {o[1], o[4]}});
    }
    case RecognitionKind::PseudoStar: {
      if (!w.hub || n < 3 || h.rank() > 2 || !is_connected(h)) return false;
      for (const Edge& e : h.edges()) {
        if (e.size() != 2) return false;
      }
      const auto sets = component_vertex_sets(enforcer_update(h, *w.hub));
      return std::all_of(sets.begin(), sets.end(),
                         [](const auto& set) { return set.size() <= 2; });
    }
    case RecognitionKind::Other:
      return true;
  }
  return false;
}

std::string_view to_string(ForbiddenPattern pattern) {
  switch (pattern) {
    case ForbiddenPattern::P3:
      return "P3";
    case ForbiddenPattern::TwoP3:
      return "2P3";
    case ForbiddenPattern::C4:
      return "C4";
    case ForbiddenPattern::Sunlet3:
      return "3-sunlet";
  }
  return "?";
}

Hypergraph pattern_graph(ForbiddenPattern pattern) {
  switch (pattern) {
    case ForbiddenPattern::P3:
      return Hypergraph(3, {{0, 1}, {1, 2}});
    case ForbiddenPattern::TwoP3:
      return Hypergraph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    case ForbiddenPattern::C4:
      return Hypergraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    case ForbiddenPattern::Sunlet3:
      return Hypergraph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
  }
  return {};
}

bool is_embedding(const Hypergraph& host, const Hypergraph& pattern,
                  const Embedding& embedding) {
  if (static_cast<int>(embedding.size()) != pattern.num_vertices()) {
    return false;
  }
  std::vector<VertexId> sorted = embedding;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  for (VertexId v : embedding) {
    if (v < 0 || v >= host.num_vertices()) return false;
  }
  for (const Edge& e : pattern.edges()) {
    Edge image;
    for (VertexId v : e) image.push_back(embedding[v]);
    std::sort(image.begin(), image.end());
    if (!host.contains_edge(image)) return false;
  }
  return true;
}

std::optional<Embedding> find_embedding(const Hypergraph& host,
                                        const Hypergraph& pattern) {
  const int k = pattern.num_vertices();
  if (k > host.num_vertices()) return std::nullopt;
  // Pattern edges are checked once their largest vertex is placed.
  std::vector<std::vector<Edge>> closing(k);
  for (const Edge& e : pattern.edges()) {
    if (e.empty()) {
      if (!host.has_empty_edge()) return std::nullopt;
      continue;
    }
    closing[e.back()].push_back(e);
  }
  Embedding map(k, -1);
  std::vector<bool> used(host.num_vertices(), false);
  auto place = [&](auto&& self, int i) -> bool {
    if (i == k) return true;
    for (VertexId v = 0; v < host.num_vertices(); ++v) {
      if (used[v]) continue;
      map[i] = v;
      bool ok = true;
      for (const Edge& e : closing[i]) {
        Edge image;
        for (VertexId p : e) image.push_back(map[p]);
        std::sort(image.begin(), image.end());
        if (!host.contains_edge(image)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[v] = true;
      if (self(self, i + 1)) return true;
      used[v] = false;
    }
    map[i] = -1;
    return false;
  };
  if (!place(place, 0)) return std::nullopt;
  return map;
}

std::optional<Embedding> contains_forbidden(const Hypergraph& g,
                                            ForbiddenPattern pattern) {
  require_rank2(g, "contains_forbidden");
  const int n = g.num_vertices();
  const auto adj = neighbour_lists(g);
  switch (pattern) {
    case ForbiddenPattern::P3:
      for (VertexId v = 0; v < n; ++v) {
        if (adj[v].size() >= 2) return Embedding{adj[v][0], v, adj[v][1]};
      }
      return std::nullopt;
    case ForbiddenPattern::C4:
      // Two vertices with two common neighbours.
      for (VertexId u = 0; u < n; ++u) {
        for (VertexId w = u + 1; w < n; ++w) {
          std::vector<VertexId> common;
          std::set_intersection(adj[u].begin(), adj[u].end(), adj[w].begin(),
                                adj[w].end(), std::back_inserter(common));
          if (common.size() >= 2) {
            return Embedding{u, common[0], w, common[1]};
          }
        }
      }
      return std::nullopt;
    case ForbiddenPattern::Sunlet3:
      // A triangle whose vertices have distinct outside neighbours.
      for (VertexId x = 0; x < n; ++x) {
        for (VertexId y : adj[x]) {
          if (y <= x) continue;
          for (VertexId z : adj[y]) {
            if (z <= y || !adjacent(adj, x, z)) continue;
            for (VertexId px : adj[x]) {
              if (px == y || px == z) continue;
              for (VertexId py : adj[y]) {
                if (py == x || py == z || py == px) continue;
                for (VertexId pz : adj[z]) {
                  if (pz == x || pz == y || pz == px || pz == py) continue;
                  return Embedding{x, y, z, px, py, pz};
                }
              }
            }
          }
        }
      }
      return std::nullopt;
    case ForbiddenPattern::TwoP3:
      // A P3, then another P3 avoiding its three vertices.
      for (VertexId c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < adj[c].size(); ++i) {
          for (std::size_t j = i + 1; j < adj[c].size(); ++j) {
            const VertexId a = adj[c][i];
            const VertexId b = adj[c][j];
            auto outside = [&](VertexId v) { return v != a && v != b && v != c; };
            for (VertexId d = 0; d < n; ++d) {
              if (!outside(d)) continue;
              std::vector<VertexId> free;
              for (VertexId w : adj[d]) {
                if (outside(w)) free.push_back(w);
              }
              if (free.size() >= 2) {
                return Embedding{a, c, b, free[0], d, free[1]};
              }
            }
          }
        }
      }
      return std::nullopt;
  }
  return std::nullopt;
}

bool is_cut_vertex(const Hypergraph& h, VertexId y) {
  return !is_connected(enforcer_update(h, y));
}

VertexId find_non_cut_vertex(const Hypergraph& h, VertexId x) {
  if (x < 0 || x >= h.num_vertices()) {
    throw InputError("find_non_cut_vertex: unknown vertex " +
                     std::to_string(x));
  }
  if (h.num_vertices() < 2 || h.num_edges() == 0 || !h.is_uniform(3) ||
      !is_connected(h) || !is_linear(h) || !leaf_edges(h).empty()) {
    throw ContractViolation(
        "find_non_cut_vertex needs a connected reduced linear 3-uniform "
        "hypergraph other than a single vertex");
  }
  const std::vector<int> dist = chain_distances(h, x);
  const std::vector<int> deg = degrees(h);
  const int far = *std::max_element(dist.begin(), dist.end());
  VertexId best = -1;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (dist[v] != far) continue;
    if (best < 0 || deg[v] < deg[best]) best = v;
  }
  return best;
}

bool is_valid_pairing(const Hypergraph& h, const Pairing& pairing) {
  std::vector<bool> used(h.num_vertices(), false);
  for (const auto& [x, y] : pairing.pairs) {
    if (x < 0 || y < 0 || x >= h.num_vertices() || y >= h.num_vertices() ||
        x == y || used[x] || used[y]) {
      return false;
    }
    used[x] = used[y] = true;
  }
  for (const Edge& e : h.edges()) {
    const bool hit = std::any_of(
        pairing.pairs.begin(), pairing.pairs.end(), [&e](const auto& p) {
          return contains(e, p.first) && contains(e, p.second);
        });
    if (!hit) return false;
  }
  return true;
}

namespace {

using PairList = std::vector<std::pair<VertexId, VertexId>>;

std::pair<VertexId, VertexId> ordered(VertexId a, VertexId b) {
  return {std::min(a, b), std::max(a, b)};
}

// Pairs for a walk of 3-edges whose last edge may be a 2-edge: each edge
// pairs its two vertices not shared with the next edge.
std::optional<PairList> walk_pairing(const std::vector<Edge>& walk) {
  PairList pairs;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const Edge& e = walk[i];
    if (i + 1 == walk.size()) {
      if (e.size() == 2) {
        pairs.push_back(ordered(e[0], e[1]));
        break;
      }
      const VertexId skip = i > 0 ? junction(e, walk[i - 1]) : e.back();
      Edge rest;
      for (VertexId v : e) {
        if (v != skip) rest.push_back(v);
      }
      pairs.push_back(ordered(rest[0], rest[1]));
      break;
    }
    if (e.size() != 3) return std::nullopt;
    const VertexId skip = junction(e, walk[i + 1]);
    Edge rest;
    for (VertexId v : e) {
      if (v != skip) rest.push_back(v);
    }
    pairs.push_back(ordered(rest[0], rest[1]));
  }
  return pairs;
}

// Constructions for one connected component, in component ids.
std::optional<std::pair<PairList, std::string_view>> construct_pairing(
    const Hypergraph& c) {
  if (c.num_edges() == 0) return std::make_pair(PairList{}, "empty");
  if (c.num_vertices() == 2 && c.edges() == std::vector<Edge>{{0, 1}}) {
    return std::make_pair(PairList{{0, 1}}, "matching");
  }
  if (auto cyc = recognize_cycle(c)) {
    // Each degree-1 vertex with the junction it shares with the next edge.
    const auto& e = cyc->witness.edge_order;
    const std::vector<int> d = degrees(c);
    PairList pairs;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const VertexId j = junction(e[i], e[(i + 1) % e.size()]);
      VertexId lone = -1;
      for (VertexId v : e[i]) {
        if (d[v] == 1) lone = v;
      }
      pairs.push_back(ordered(lone, j));
    }
    return std::make_pair(std::move(pairs), "cycle");
  }
  const auto order = walk_order(c.edges(), /*closed=*/false);
  if (order) {
    std::vector<Edge> walk = pick(c.edges(), *order);
    if (walk.front().size() == 2 && walk.back().size() == 3) {
      std::reverse(walk.begin(), walk.end());
    }
    const bool shape_ok =
        all_edges_have_size({walk.begin(), walk.end() - 1}, 3) &&
        (walk.back().size() == 2 || walk.back().size() == 3);
    if (shape_ok && covers_all_vertices(c)) {
      if (auto pairs = walk_pairing(walk)) {
        return std::make_pair(std::move(*pairs), "walk");
      }
    }
  }
  return std::nullopt;
}

class PairingSearch {
 public:
  PairingSearch(const Hypergraph& h, std::size_t budget)
      : h_(h), budget_(budget), used_(h.num_vertices(), false),
        hit_(h.num_edges(), 0), degree_(degrees(h)) {}

  // true: found; false: exhausted or out of budget (see out_of_budget()).
  bool run() { return recurse(); }
  bool out_of_budget() const { return out_of_budget_; }
  std::size_t nodes() const { return nodes_; }
  const PairList& pairs() const { return chosen_; }

 private:
  std::vector<std::pair<VertexId, VertexId>> available(const Edge& e) const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (used_[e[i]]) continue;
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        if (!used_[e[j]]) out.emplace_back(e[i], e[j]);
      }
    }
    std::stable_sort(out.begin(), out.end(), [this](const auto& p, const auto& q) {
      return degree_[p.first] + degree_[p.second] <
             degree_[q.first] + degree_[q.second];
    });
    return out;
  }

  bool recurse() {
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      return false;
    }
    const auto& edges = h_.edges();
    int target = -1;
    std::vector<std::pair<VertexId, VertexId>> options;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (hit_[i]) continue;
      auto avail = available(edges[i]);
      if (avail.empty()) return false;
      if (target < 0 || avail.size() < options.size()) {
        target = static_cast<int>(i);
        options = std::move(avail);
      }
    }
    if (target < 0) return true;
    for (const auto& [x, y] : options) {
      used_[x] = used_[y] = true;
      chosen_.emplace_back(x, y);
      std::vector<std::size_t> newly;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!hit_[i] && contains(edges[i], x) && contains(edges[i], y)) {
          hit_[i] = 1;
          newly.push_back(i);
        }
      }
      if (recurse()) return true;
      for (std::size_t i : newly) hit_[i] = 0;
      chosen_.pop_back();
      used_[x] = used_[y] = false;
      if (out_of_budget_) return false;
    }
    return false;
  }

  const Hypergraph& h_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::vector<bool> used_;
  std::vector<char> hit_;
  std::vector<int> degree_;
  PairList chosen_;
};

}  // namespace

std::optional<Pairing> find_pairing(const Hypergraph& h, std::size_t budget,
                                    PairingSearchStats* stats) {
  PairingSearchStats local;
  PairingSearchStats& st = stats ? *stats : local;
  st = {};
  for (const Edge& e : h.edges()) {
    if (e.size() < 2) {
      st.exhausted = true;
      return std::nullopt;
    }
  }
  // Pairs never need to cross components.
  Pairing result;
  bool all_constructed = true;
  std::string_view last_construction;
  for (const auto& set : component_vertex_sets(h)) {
    const Hypergraph c = induced_subhypergraph(h, set);
    PairList local_pairs;
    if (auto built = construct_pairing(c)) {
      local_pairs = std::move(built->first);
      if (built->second != "empty") last_construction = built->second;
    } else {
      all_constructed = false;
      PairingSearch search(c, budget > st.nodes ? budget - st.nodes : 0);
      const bool found = search.run();
      st.nodes += search.nodes();
      if (!found) {
        st.exhausted = !search.out_of_budget();
        return std::nullopt;
      }
      local_pairs = search.pairs();
    }
    for (const auto& [x, y] : local_pairs) {
      result.pairs.push_back(ordered(set[x], set[y]));
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  st.exhausted = true;
  st.construction = all_constructed
                        ? (last_construction.empty() ? "empty" : last_construction)
                        : std::string_view{};
  if (!is_valid_pairing(h, result)) {
    throw InvariantViolation("constructed pairing does not hit every edge");
  }
  return result;
}

}  // namespace aegame
