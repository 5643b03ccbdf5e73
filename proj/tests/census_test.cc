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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "aegame/errors.h"
#include "aegame/harness.h"

namespace aegame {
namespace {

Hypergraph relabel(const Hypergraph& h, const std::vector<VertexId>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    Edge f;
    for (VertexId v : e) f.push_back(perm[v]);
    edges.push_back(f);
  }
  return Hypergraph(h.num_vertices(), edges);
}

TEST(CanonicalFormTest, InvariantUnderRelabelling) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Hypergraph h = random_linear3(n, 1 + static_cast<int>(rng() % n), rng());
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const CanonicalForm a = canonical_form(h);
    const CanonicalForm b = canonical_form(relabel(h, perm));
    EXPECT_EQ(a, b) << h;
    EXPECT_EQ(a.automorphisms, b.automorphisms) << h;
  }
}

TEST(CanonicalFormTest, SeparatesNonIsomorphicBoards) {
  EXPECT_FALSE(canonical_form(gen_family({.family = Family::Pn, .n = 4})) ==
               canonical_form(gen_family({.family = Family::PseudoStar, .leaves = 3})));
}

TEST(CanonicalFormTest, Automorphisms) {
  EXPECT_EQ(canonical_form(gen_family({.family = Family::Cn, .n = 5})).automorphisms, 10u);
  // The prism's triples are the vertex stars of K4.
  EXPECT_EQ(canonical_form(gen_family({.family = Family::Prism})).automorphisms, 24u);
  EXPECT_EQ(canonical_form(Hypergraph(4)).automorphisms, 24u);
  EXPECT_THROW(canonical_form(Hypergraph(3, {{0}})), UnsupportedInput);
}

TEST(CensusTest, FrozenClassCounts) {
  const auto census = linear_rank3_census(7);
  const std::size_t classes[] = {1, 1, 2, 5, 15, 66, 528, 9311};
  const std::uint64_t labeled[] = {1, 1, 2, 9, 96, 2544, 173808, 31590702};
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(census[n].size(), classes[n]) << n;
    std::uint64_t total = 0;
    for (const CensusClass& c : census[n]) total += c.labeled_count;
    EXPECT_EQ(total, labeled[n]) << n;
  }
}

TEST(CensusTest, LabeledTotalsMatchEnumeration) {
  const auto census = linear_rank3_census(6);
  for (int n = 0; n <= 6; ++n) {
    std::uint64_t enumerated = 0;
    enumerate_linear_rank3(n, false, [&](const Hypergraph&) { ++enumerated; });
    std::uint64_t total = 0;
    for (const CensusClass& c : census[n]) total += c.labeled_count;
    EXPECT_EQ(total, enumerated) << n;
  }
}

TEST(CensusTest, UniformCensusMatchesEnumeration) {
  const auto census = linear_rank3_census(7, true);
  for (int n = 0; n <= 7; ++n) {
    std::uint64_t enumerated = 0;
    enumerate_linear_rank3(n, false, [&](const Hypergraph&) { ++enumerated; }, true);
    std::uint64_t total = 0;
    for (const CensusClass& c : census[n]) {
      EXPECT_TRUE(c.representative.is_uniform(3) || c.representative.num_edges() == 0);
      total += c.labeled_count;
    }
    EXPECT_EQ(total, enumerated) << n;
  }
}

TEST(CensusTest, Bounds) {
  EXPECT_THROW(linear_rank3_census(kMaxCensusVertices + 1), UnsupportedInput);
  EXPECT_THROW(linear_rank3_census(kMaxUniformCensusVertices + 1, true),
               UnsupportedInput);
}

}  // namespace
}  // namespace aegame
