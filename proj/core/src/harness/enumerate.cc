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

#include <bit>
#include <cstdint>

#include "aegame/errors.h"
#include "aegame/harness.h"

namespace aegame {
namespace {

int pair_index(int a, int b) { return b * (b - 1) / 2 + a; }

}  // namespace

void enumerate_graphs(int n, const HypergraphSink& sink) {
  if (n < 0 || n > 11) throw UnsupportedInput("enumerate_graphs supports n <= 11");
  std::vector<Edge> pairs;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.push_back({i, j});
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1) edges.push_back(pairs[k]);
    }
    sink(Hypergraph(n, std::move(edges)));
  }
}

void enumerate_linear_rank3_edges(int n, bool uniform3, const EdgeListSink& sink) {
  if (n < 0 || n > 11) {
    throw UnsupportedInput("enumerate_linear_rank3 supports n <= 11");
  }
  // Candidate edges in lexicographic order, each with the pairs it covers.
  // Linearity is exactly "no pair covered twice".
  struct Candidate {
    Edge edge;
    std::uint64_t pairs;
  };
  std::vector<Candidate> candidates;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!uniform3) candidates.push_back({{a, b}, std::uint64_t{1} << pair_index(a, b)});
      for (int c = b + 1; c < n; ++c) {
        candidates.push_back(
            {{a, b, c}, (std::uint64_t{1} << pair_index(a, b)) |
                            (std::uint64_t{1} << pair_index(a, c)) |
                            (std::uint64_t{1} << pair_index(b, c))});
      }
    }
  }
  std::vector<Edge> chosen;
  auto recurse = [&](auto&& self, std::size_t from, std::uint64_t covered) -> void {
    sink(std::span<const Edge>(chosen));
    for (std::size_t j = from; j < candidates.size(); ++j) {
      if (candidates[j].pairs & covered) continue;
      chosen.push_back(candidates[j].edge);
      self(self, j + 1, covered | candidates[j].pairs);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, 0);
}

void enumerate_linear_rank3(int n, bool connected_only, const HypergraphSink& sink,
                            bool uniform3) {
  enumerate_linear_rank3_edges(n, uniform3, [&](std::span<const Edge> edges) {
    Hypergraph h(n, std::vector<Edge>(edges.begin(), edges.end()));
    if (connected_only && (n == 0 || !is_connected(h))) return;
    sink(h);
  });
}

void enumerate_antichains(int n, int max_edges, const HypergraphSink& sink) {
  if (n < 0 || n > 6) throw UnsupportedInput("enumerate_antichains supports n <= 6");
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> chosen;
  auto emit = [&]() {
    std::vector<Edge> edges;
    for (std::uint32_t m : chosen) {
      Edge e;
      for (int v = 0; v < n; ++v) {
        if (m >> v & 1) e.push_back(v);
      }
      edges.push_back(std::move(e));
    }
    sink(Hypergraph(n, std::move(edges)));
  };
  auto recurse = [&](auto&& self, std::uint32_t from) -> void {
    emit();
    if (static_cast<int>(chosen.size()) == max_edges) return;
    for (std::uint32_t m = from; m <= full; ++m) {
      bool ok = true;
      for (std::uint32_t c : chosen) {
        if ((c & m) == c || (c & m) == m) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(m);
      self(self, m + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 1);
}

}  // namespace aegame
