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

#include <gtest/gtest.h>

#include "aegame/errors.h"
#include "aegame/harness.h"
#include "testing/reference_solver.h"

namespace aegame {
namespace {

TEST(HypergraphTest, NormalizesEdges) {
  const Hypergraph h(3, {{2, 0}, {0, 2}, {1}});
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 2}, {1}}));
  EXPECT_EQ(h.rank(), 2);
  EXPECT_TRUE(h.contains_edge(Edge{0, 2}));
  EXPECT_FALSE(h.contains_edge(Edge{0, 1}));
}

TEST(HypergraphTest, RejectsBadEdges) {
  EXPECT_THROW(Hypergraph(2, {{0, 2}}), InputError);
  EXPECT_THROW(Hypergraph(3, {{1, 1}}), InputError);
  EXPECT_THROW(Hypergraph(2, {{-1}}), InputError);
}

TEST(HypergraphTest, AvoiderUpdateShrinksEdges) {
  const Hypergraph h(3, {{0}, {0, 1}, {1, 2}});
  const Hypergraph after = avoider_update(h, 0);
  EXPECT_EQ(after, Hypergraph(2, {{}, {0}, {0, 1}}));
  EXPECT_TRUE(after.has_empty_edge());
}

TEST(HypergraphTest, EnforcerUpdateKillsEdges) {
  const Hypergraph h(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(enforcer_update(h, 1), Hypergraph(2, {{0, 1}}));
}

TEST(HypergraphTest, DisjointUnionShifts) {
  const Hypergraph u = disjoint_union(Hypergraph(2, {{0, 1}}), Hypergraph(1, {{0}}));
  EXPECT_EQ(u, Hypergraph(3, {{0, 1}, {2}}));
}

TEST(HypergraphTest, Components) {
  const Hypergraph h(6, {{0, 3}, {3, 4}, {1, 5}});
  const auto sets = component_vertex_sets(h);
  EXPECT_EQ(sets, (std::vector<std::vector<VertexId>>{{0, 3, 4}, {1, 5}, {2}}));
  const auto parts = connected_components(h);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], Hypergraph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(parts[2], Hypergraph(1));
  EXPECT_FALSE(is_connected(h));
  EXPECT_TRUE(is_connected(parts[0]));
}

TEST(HypergraphTest, DegreesAndLinearity) {
  const Hypergraph h(5, {{0, 1, 2}, {2, 3, 4}});
  EXPECT_EQ(degrees(h), (std::vector<int>{1, 1, 2, 1, 1}));
  EXPECT_EQ(min_degree(h), 1);
  EXPECT_TRUE(is_linear(h));
  EXPECT_FALSE(is_linear(Hypergraph(4, {{0, 1, 2}, {1, 2, 3}})));
}

TEST(HypergraphTest, TransversalDual) {
  const Hypergraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_EQ(transversal_dual(c4), Hypergraph(4, {{0, 2}, {1, 3}}));
  EXPECT_EQ(transversal_dual(Hypergraph(2)), Hypergraph(2, {{}}));
  EXPECT_EQ(transversal_dual(Hypergraph(2, {{}})), Hypergraph(2));
  EXPECT_EQ(transversal_dual(transversal_dual(c4)), c4);
}

TEST(HypergraphTest, DualSwapsRolesAndKeepsTheSeat) {
  for (int n = 1; n <= 4; ++n) {
    enumerate_antichains(n, 16, [](const Hypergraph& h) {
      const testing::ReferenceSolver here(h);
      const testing::ReferenceSolver there(transversal_dual(h));
      EXPECT_EQ(here.solve(LastPlayer::AvoiderLast) == Winner::Avoider,
                there.solve(LastPlayer::EnforcerLast) == Winner::Enforcer)
          << h;
      EXPECT_EQ(here.solve(LastPlayer::EnforcerLast) == Winner::Avoider,
                there.solve(LastPlayer::AvoiderLast) == Winner::Enforcer)
          << h;
    });
  }
}

TEST(HypergraphTest, MinimizeAndRemoveIsolated) {
  const Hypergraph h(4, {{0, 1}, {0, 1, 2}, {1, 2}});
  EXPECT_EQ(minimize_edges(h), Hypergraph(4, {{0, 1}, {1, 2}}));
  EXPECT_EQ(remove_isolated(h), Hypergraph(3, {{0, 1}, {0, 1, 2}, {1, 2}}));
  EXPECT_EQ(remove_isolated(Hypergraph(3, {{2}})), Hypergraph(1, {{0}}));
}

TEST(HypergraphTest, IndistinguishablePairsAndSuperReduce) {
  const Hypergraph p3(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(indistinguishable_pairs(p3),
            (std::vector<std::pair<VertexId, VertexId>>{{0, 2}}));
  EXPECT_TRUE(are_indistinguishable(p3, 0, 2));
  EXPECT_FALSE(are_indistinguishable(p3, 0, 1));
  const Hypergraph r = super_reduce(p3, 0, 2);
  EXPECT_EQ(r, Hypergraph(1, {{0}}));
  EXPECT_EQ(testing::reference_outcome(r), testing::reference_outcome(p3));
  EXPECT_THROW(super_reduce(p3, 0, 1), ContractViolation);
}

TEST(HypergraphTest, LeafEdges) {
  const Hypergraph chain(5, {{0, 1, 2}, {2, 3, 4}});
  EXPECT_EQ(leaf_edges(chain).size(), 2u);
  const Hypergraph prism(6, {{3, 4, 5}, {1, 2, 5}, {0, 2, 4}, {0, 1, 3}});
  EXPECT_TRUE(leaf_edges(prism).empty());
}

TEST(HypergraphTest, ReduceRank3RemovesLeafEdges) {
  const Hypergraph chain(5, {{0, 1, 2}, {2, 3, 4}});
  const Rank3Reduction r = reduce_rank3_traced(chain);
  EXPECT_EQ(r.reduced, Hypergraph(1));
  EXPECT_EQ(r.surviving, (std::vector<VertexId>{4}));
  ASSERT_EQ(r.steps.size(), 2u);
  EXPECT_EQ(r.steps[0].edge, (Edge{0, 1, 2}));
  EXPECT_EQ(r.steps[0].removed_first, 0);
  EXPECT_EQ(r.steps[0].removed_second, 1);
  EXPECT_EQ(testing::reference_outcome(chain), testing::reference_outcome(r.reduced));
  EXPECT_THROW(reduce_rank3(Hypergraph(4, {{0, 1, 2, 3}})), UnsupportedInput);
}

TEST(HypergraphTest, SurvivingIds) {
  const std::vector<VertexId> removed = {1, 3};
  EXPECT_EQ(surviving_ids(5, removed), (std::vector<VertexId>{0, 2, 4}));
}

TEST(HypergraphTest, InducedSubhypergraph) {
  const Hypergraph h(4, {{0, 1}, {1, 2}, {2, 3}});
  const std::vector<VertexId> keep = {1, 2, 3};
  EXPECT_EQ(induced_subhypergraph(h, keep), Hypergraph(3, {{0, 1}, {1, 2}}));
}

TEST(HypergraphTest, ToString) {
  EXPECT_EQ(to_string(Hypergraph(3, {{0, 1}, {1, 2}})), "n=3 {0,1} {1,2}");
}

}  // namespace
}  // namespace aegame
