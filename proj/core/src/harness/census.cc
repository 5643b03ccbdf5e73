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

#include "aegame/census.h"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <map>
#include <unordered_map>

#include "aegame/errors.h"

namespace aegame {
namespace {

using Code = unsigned __int128;

constexpr int choose2(int k) { return k * (k - 1) / 2; }
constexpr int choose3(int k) { return k * (k - 1) * (k - 2) / 6; }
// Internal capacity covers both census kinds.
constexpr int kCapacity = kMaxUniformCensusVertices;
constexpr int kPairSlots = choose2(kCapacity);
static_assert(kPairSlots + choose3(kCapacity) <= 128);

int slot(const int* v, std::size_t size) {
  // v sorted ascending; colex rank.
  if (size == 2) return choose2(v[1]) + v[0];
  return kPairSlots + choose3(v[2]) + choose2(v[1]) + v[0];
}

constexpr int kMaxEdges = choose2(kCapacity);

// Edge list on at most kCapacity vertices, free of allocation.
struct SmallHypergraph {
  int n = 0;
  int m = 0;
  std::array<std::array<int, 3>, kMaxEdges> edge{};
  std::array<int, kMaxEdges> size{};

  void add(std::initializer_list<int> members) {
    std::copy(members.begin(), members.end(), edge[m].begin());
    size[m] = static_cast<int>(members.size());
    ++m;
  }
};

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

// Isomorphism-invariant vertex colours: degree profile refined by the
// colours of edge partners. Colours are ranks of invariant hashes.
std::array<int, kCapacity> refined_colors(const SmallHypergraph& h) {
  const int n = h.n;
  std::array<std::uint64_t, kCapacity> hash{};
  std::array<int, kCapacity> color{};
  int classes = 1;
  for (int round = 0; round <= n; ++round) {
    std::array<std::uint64_t, kCapacity> next{};
    for (int v = 0; v < n; ++v) next[v] = mix(hash[v] + 0x9E3779B97F4A7C15ULL);
    // Edge terms are combined by addition, so their order is irrelevant.
    for (int i = 0; i < h.m; ++i) {
      const int k = h.size[i];
      std::uint64_t total = 0;
      for (int a = 0; a < k; ++a) total += mix(hash[h.edge[i][a]] ^ 0xA5A5A5A5ULL);
      for (int a = 0; a < k; ++a) {
        const int v = h.edge[i][a];
        const std::uint64_t others =
            total - mix(hash[v] ^ 0xA5A5A5A5ULL);
        next[v] += mix(static_cast<std::uint64_t>(k) * 0x100000001B3ULL ^ others);
      }
    }
    std::array<std::uint64_t, kCapacity> sorted = next;
    std::sort(sorted.begin(), sorted.begin() + n);
    const auto last = std::unique(sorted.begin(), sorted.begin() + n);
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), last, next[v]) - sorted.begin());
    }
    const int count = static_cast<int>(last - sorted.begin());
    // Feed ranks back in so the next round only sees the partition.
    for (int v = 0; v < n; ++v) hash[v] = static_cast<std::uint64_t>(color[v]);
    if (count == classes && round > 0) break;
    classes = count;
  }
  return color;
}

struct RawForm {
  Code code = 0;
  std::uint64_t automorphisms = 0;
};

RawForm canonical_raw(const SmallHypergraph& h) {
  const int n = h.n;
  const auto color = refined_colors(h);
  // Vertices sorted by colour; each run of equal colour is a cell whose
  // members are permuted among the cell's positions.
  std::array<int, kCapacity> order{};
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.begin() + n, [&color](int a, int b) {
    return color[a] != color[b] ? color[a] < color[b] : a < b;
  });
  std::array<int, kCapacity + 1> cell_start{};
  int cells = 0;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || color[order[i]] != color[order[i - 1]]) cell_start[cells++] = i;
  }
  cell_start[cells] = n;

  RawForm best{~Code{0}, 0};
  std::array<int, kCapacity> pos{};
  auto evaluate = [&]() {
    Code code = 0;
    for (int i = 0; i < h.m; ++i) {
      int image[3] = {0, 0, 0};
      const int k = h.size[i];
      for (int a = 0; a < k; ++a) image[a] = pos[h.edge[i][a]];
      if (k == 2) {
        if (image[0] > image[1]) std::swap(image[0], image[1]);
      } else {
        if (image[0] > image[1]) std::swap(image[0], image[1]);
        if (image[1] > image[2]) std::swap(image[1], image[2]);
        if (image[0] > image[1]) std::swap(image[0], image[1]);
      }
      code |= Code{1} << slot(image, static_cast<std::size_t>(k));
    }
    if (code < best.code) {
      best.code = code;
      best.automorphisms = 1;
    } else if (code == best.code) {
      ++best.automorphisms;
    }
  };
  auto assign = [&](auto&& self, int cell) -> void {
    if (cell == cells) {
      evaluate();
      return;
    }
    int* first = order.data() + cell_start[cell];
    int* last = order.data() + cell_start[cell + 1];
    std::sort(first, last);
    do {
      for (int* it = first; it != last; ++it) {
        pos[*it] = static_cast<int>(it - order.data());
      }
      self(self, cell + 1);
    } while (std::next_permutation(first, last));
  };
  assign(assign, 0);
  return best;
}

SmallHypergraph to_small(const Hypergraph& h) {
  SmallHypergraph s;
  s.n = h.num_vertices();
  for (const Edge& e : h.edges()) {
    if (s.m == kMaxEdges) throw UnsupportedInput("too many edges for the census");
    std::copy(e.begin(), e.end(), s.edge[s.m].begin());
    s.size[s.m] = static_cast<int>(e.size());
    ++s.m;
  }
  return s;
}

}  // namespace

CanonicalForm canonical_form(const Hypergraph& h) {
  if (h.num_vertices() > kCapacity) {
    throw UnsupportedInput("canonical_form handles at most " +
                           std::to_string(kCapacity) + " vertices");
  }
  for (const Edge& e : h.edges()) {
    if (e.size() != 2 && e.size() != 3) {
      throw UnsupportedInput("canonical_form needs 2- and 3-edges");
    }
  }
  const RawForm raw = canonical_raw(to_small(h));
  CanonicalForm out;
  out.low = static_cast<std::uint64_t>(raw.code);
  out.high = static_cast<std::uint64_t>(raw.code >> 64);
  out.automorphisms = raw.automorphisms;
  return out;
}

std::vector<std::vector<CensusClass>> linear_rank3_census(int n_max,
                                                          bool uniform3) {
  const int limit = uniform3 ? kMaxUniformCensusVertices : kMaxCensusVertices;
  if (n_max < 0 || n_max > limit) {
    throw UnsupportedInput("census supports 0.." + std::to_string(limit) +
                           " vertices");
  }
  std::vector<std::vector<CensusClass>> levels(n_max + 1);
  levels[0].push_back({Hypergraph(0), 1});
  std::uint64_t factorial = 1;
  for (int n = 1; n <= n_max; ++n) {
    factorial *= static_cast<std::uint64_t>(n);
    const VertexId w = n - 1;
    struct CodeHash {
      std::size_t operator()(Code c) const {
        const auto lo = static_cast<std::uint64_t>(c);
        const auto hi = static_cast<std::uint64_t>(c >> 64);
        return std::hash<std::uint64_t>{}(lo * 0x9E3779B97F4A7C15ULL ^ hi);
      }
    };
    std::unordered_map<Code, std::size_t, CodeHash> seen;
    std::vector<CensusClass>& out = levels[n];
    for (const CensusClass& parent : levels[n - 1]) {
      const Hypergraph& base = parent.representative;
      // Pairs already inside an edge cannot join the new vertex in a
      // 3-edge without breaking linearity.
      std::vector<std::vector<bool>> covered(n, std::vector<bool>(n, false));
      for (const Edge& e : base.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
          for (std::size_t j = i + 1; j < e.size(); ++j) {
            covered[e[i]][e[j]] = covered[e[j]][e[i]] = true;
          }
        }
      }
      SmallHypergraph work = to_small(base);
      work.n = n;
      const int base_edges = work.m;
      std::array<bool, kCapacity> used{};
      auto extend = [&](auto&& self, VertexId v) -> void {
        while (v < w && used[v]) ++v;
        if (v >= w) {
          const RawForm form = canonical_raw(work);
          if (seen.emplace(form.code, out.size()).second) {
            std::vector<Edge> edges = base.edges();
            for (int i = base_edges; i < work.m; ++i) {
              edges.emplace_back(work.edge[i].begin(),
                                 work.edge[i].begin() + work.size[i]);
            }
            out.push_back({Hypergraph(n, std::move(edges)),
                           factorial / form.automorphisms});
          }
          return;
        }
        used[v] = true;
        self(self, v + 1);
        if (!uniform3) {
          work.add({v, w});
          self(self, v + 1);
          --work.m;
        }
        for (VertexId u = v + 1; u < w; ++u) {
          if (used[u] || covered[v][u]) continue;
          used[u] = true;
          work.add({v, u, w});
          self(self, v + 1);
          --work.m;
          used[u] = false;
        }
        used[v] = false;
      };
      extend(extend, 0);
    }
  }
  return levels;
}

}  // namespace aegame
