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

#include <algorithm>
#include <array>
#include <random>
#include <string>

#include "aegame/errors.h"
#include "aegame/harness.h"

namespace aegame {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 12> kFamilyNames = {{
    {Family::Pn, "Pn"},
    {Family::Cn, "Cn"},
    {Family::Bull, "Bull"},
    {Family::Sunlet3, "Sunlet3"},
    {Family::PseudoStar, "PseudoStar"},
    {Family::Chain, "Chain"},
    {Family::Nunchaku, "Nunchaku"},
    {Family::Cycle3u, "Cycle3u"},
    {Family::Prism, "Prism"},
    {Family::PrismHub, "PrismHub"},
    {Family::RandomGraph, "RandomGraph"},
    {Family::RandomLinear3, "RandomLinear3"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

// Prism on a..f = offset..offset+5.
void add_prism(std::vector<Edge>& edges, int offset) {
  const int a = offset, b = offset + 1, c = offset + 2, d = offset + 3,
            e = offset + 4, f = offset + 5;
  edges.push_back({d, e, f});
  edges.push_back({b, c, f});
  edges.push_back({a, c, e});
  edges.push_back({a, b, d});
}

bool linear_with(const std::vector<Edge>& edges, const Edge& candidate) {
  for (const Edge& e : edges) {
    int shared = 0;
    for (VertexId v : candidate) {
      shared += std::binary_search(e.begin(), e.end(), v) ? 1 : 0;
    }
    if (shared > 1) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

Hypergraph random_linear3(int n, int target_edges, std::uint64_t seed) {
  require(n >= 0 && target_edges >= 0, "RandomLinear3 needs n, edges >= 0");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  if (n < 2) return Hypergraph(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  const int attempts = 100 * target_edges + 1000;
  for (int i = 0; i < attempts && static_cast<int>(edges.size()) < target_edges;
       ++i) {
    const int size = (n >= 3 && rng() % 2 == 0) ? 3 : 2;
    Edge e;
    while (static_cast<int>(e.size()) < size) {
      const int v = pick(rng);
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    std::sort(e.begin(), e.end());
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
    if (linear_with(edges, e)) edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph gen_family(const GenSpec& spec) {
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::Pn: {
      require(spec.n >= 1, "Pn needs n >= 1");
      for (int i = 0; i + 1 < spec.n; ++i) edges.push_back({i, i + 1});
      return Hypergraph(spec.n, std::move(edges));
    }
    case Family::Cn: {
      require(spec.n >= 3, "Cn needs n >= 3");
      for (int i = 0; i < spec.n; ++i) edges.push_back({i, (i + 1) % spec.n});
      return Hypergraph(spec.n, std::move(edges));
    }
    case Family::Bull:
      // Triangle 0,1,2 with pendant edges 0-3 and 1-4.
      return Hypergraph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
    case Family::Sunlet3:
      return Hypergraph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
    case Family::PseudoStar: {
      require(spec.leaves >= 0 && spec.pendant_paths >= 0 && spec.triangles >= 0,
              "PseudoStar counts must be non-negative");
      const int n =
          1 + spec.leaves + 2 * (spec.pendant_paths + spec.triangles);
      require(n >= 3, "PseudoStar needs at least 3 vertices");
      int next = 1;
      for (int i = 0; i < spec.leaves; ++i) edges.push_back({0, next++});
      for (int i = 0; i < spec.pendant_paths; ++i) {
        edges.push_back({0, next});
        edges.push_back({next, next + 1});
        next += 2;
      }
      for (int i = 0; i < spec.triangles; ++i) {
        edges.push_back({0, next});
        edges.push_back({0, next + 1});
        edges.push_back({next, next + 1});
        next += 2;
      }
      return Hypergraph(n, std::move(edges));
    }
    case Family::Chain: {
      require(spec.n >= 1, "Chain needs length >= 1");
      for (int i = 0; i < spec.n; ++i) {
        edges.push_back({2 * i, 2 * i + 1, 2 * i + 2});
      }
      return Hypergraph(2 * spec.n + 1, std::move(edges));
    }
    case Family::Nunchaku: {
      require(spec.n >= 2, "Nunchaku needs length >= 2");
      const int len = spec.n;
      const int n = 2 * len - 1;
      edges.push_back({0, 1});
      for (int i = 1; i + 1 < len; ++i) {
        edges.push_back({2 * i - 1, 2 * i, 2 * i + 1});
      }
      edges.push_back({n - 2, n - 1});
      return Hypergraph(n, std::move(edges));
    }
    case Family::Cycle3u: {
      require(spec.n >= 3, "Cycle3u needs length >= 3");
      const int n = 2 * spec.n;
      for (int i = 0; i < spec.n; ++i) {
        edges.push_back({2 * i, 2 * i + 1, (2 * i + 2) % n});
      }
      return Hypergraph(n, std::move(edges));
    }
    case Family::Prism:
      add_prism(edges, 0);
      return Hypergraph(6, std::move(edges));
    case Family::PrismHub: {
      add_prism(edges, 0);
      add_prism(edges, kPrismHubCenter + 1);
      for (int i = 0; i < 6; ++i) edges.push_back({i, kPrismHubCenter, kPrismHubCenter + 1 + i});
      return Hypergraph(13, std::move(edges));
    }
    case Family::RandomGraph: {
      require(spec.n >= 0, "RandomGraph needs n >= 0");
      require(spec.p >= 0 && spec.p <= 1, "RandomGraph needs 0 <= p <= 1");
      std::mt19937_64 rng(spec.seed);
      std::bernoulli_distribution coin(spec.p);
      for (int i = 0; i < spec.n; ++i) {
        for (int j = i + 1; j < spec.n; ++j) {
          if (coin(rng)) edges.push_back({i, j});
        }
      }
      return Hypergraph(spec.n, std::move(edges));
    }
    case Family::RandomLinear3:
      return random_linear3(spec.n, spec.edges, spec.seed);
  }
  throw InputError("unknown family");
}

}  // namespace aegame
