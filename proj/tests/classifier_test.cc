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

#include "aegame/classifier.h"

#include <gtest/gtest.h>

#include <random>

#include "aegame/errors.h"
#include "aegame/harness.h"
#include "testing/reference_solver.h"

namespace aegame {
namespace {

Hypergraph family(Family f, int n = 0) { return gen_family({.family = f, .n = n}); }

Outcome structural(const Hypergraph& h) {
  const Classification c = classify(h, {.allow_oracle = false});
  std::string why;
  EXPECT_TRUE(validate_certificate(c.board, c.certificate, &why)) << h << ": " << why;
  return c.verdict.outcome;
}

TEST(UnionTableTest, Combine) {
  using enum Outcome;
  EXPECT_EQ(combine_union(A, A), A);
  EXPECT_EQ(combine_union(A, SL), SL);
  EXPECT_EQ(combine_union(SL, A), SL);
  EXPECT_EQ(combine_union(SL, SL), E);
  EXPECT_EQ(combine_union(A, E), E);
  EXPECT_EQ(combine_union(SL, E), E);
  EXPECT_EQ(combine_union(E, E), E);
}

TEST(Rank2Test, NamedGraphs) {
  const Hypergraph two_p3 = disjoint_union(family(Family::Pn, 3), family(Family::Pn, 3));
  const std::vector<std::pair<Hypergraph, Outcome>> cases = {
      {family(Family::Pn, 1), Outcome::A},   {family(Family::Pn, 2), Outcome::A},
      {family(Family::Bull), Outcome::SL},   {family(Family::Cn, 5), Outcome::SL},
      {family(Family::Pn, 3), Outcome::SL},  {family(Family::Pn, 4), Outcome::SL},
      {family(Family::Pn, 5), Outcome::SL},  {family(Family::Cn, 3), Outcome::SL},
      {family(Family::Sunlet3), Outcome::E}, {family(Family::Cn, 4), Outcome::E},
      {two_p3, Outcome::E},
  };
  for (const auto& [g, want] : cases) {
    const Classification c = classify_rank2(g);
    EXPECT_EQ(c.verdict.outcome, want) << g;
    EXPECT_EQ(testing::reference_outcome(g), want) << g;
    std::string why;
    EXPECT_TRUE(validate_certificate(g, c.certificate, &why)) << g << ": " << why;
  }
}

TEST(Rank2Test, ForbiddenPatternCertificate) {
  const Classification c = classify_rank2(family(Family::Cn, 4));
  EXPECT_EQ(c.certificate.basis, Basis::ForbiddenSubgraph);
  EXPECT_EQ(c.certificate.pattern, ForbiddenPattern::C4);
  EXPECT_EQ(c.verdict.avoider_last_method, Method::Structural);
}

TEST(Rank2Test, AgreesWithReferenceOnSmallGraphs) {
  for (int n = 0; n <= 5; ++n) {
    enumerate_graphs(n, [](const Hypergraph& g) {
      EXPECT_EQ(classify_rank2(g).verdict.outcome, testing::reference_outcome(g)) << g;
    });
  }
}

TEST(Rank2Test, RejectsHigherRank) {
  EXPECT_THROW(classify_rank2(Hypergraph(3, {{0, 1, 2}})), UnsupportedInput);
}

TEST(OneEdgeTest, Reduction) {
  const Hypergraph h(4, {{0}, {1, 2}, {2, 3}});
  const OneEdgeStep step = one_edge_reduction(h);
  EXPECT_EQ(step.y, 0);
  EXPECT_EQ(step.residual, Hypergraph(3, {{0, 1}, {1, 2}}));
  EXPECT_FALSE(step.residual_has_one_edge);
  EXPECT_THROW(one_edge_reduction(Hypergraph(2, {{0, 1}})), ContractViolation);
  EXPECT_EQ(structural(h), testing::reference_outcome(h));
}

TEST(Rank3Test, AvoiderLastWinners) {
  for (int l = 3; l <= 5; ++l) {
    EXPECT_EQ(classify_rank3_linear_avoider_last(family(Family::Cycle3u, l)).winner,
              Winner::Avoider);
  }
  EXPECT_EQ(classify_rank3_linear_avoider_last(family(Family::Prism)).winner,
            Winner::Avoider);
  for (int l = 2; l <= 5; ++l) {
    EXPECT_EQ(classify_rank3_linear_avoider_last(family(Family::Nunchaku, l)).winner,
              Winner::Enforcer);
  }
  const Rank3Verdict hub = classify_rank3_linear_avoider_last(family(Family::PrismHub));
  EXPECT_EQ(hub.winner, Winner::Enforcer);
  EXPECT_TRUE(validate_certificate(family(Family::PrismHub), hub.certificate));
  EXPECT_THROW(classify_rank3_linear_avoider_last(Hypergraph(4, {{0, 1, 2}, {1, 2, 3}})),
               UnsupportedInput);
}

TEST(Rank3Test, GadgetOutcomes) {
  for (int l = 2; l <= 5; ++l) EXPECT_EQ(structural(family(Family::Nunchaku, l)), Outcome::SL);
  for (int l = 3; l <= 5; ++l) EXPECT_EQ(structural(family(Family::Cycle3u, l)), Outcome::A);
  EXPECT_EQ(structural(family(Family::Prism)), Outcome::A);
  EXPECT_EQ(structural(disjoint_union(family(Family::Prism), family(Family::Pn, 3))),
            Outcome::SL);
}

TEST(ClassifyTest, AgreesWithReferenceOnAntichains) {
  for (int n = 0; n <= 4; ++n) {
    enumerate_antichains(n, 16, [](const Hypergraph& h) {
      const Classification c = classify(h);
      EXPECT_EQ(c.verdict.outcome, testing::reference_outcome(h)) << h;
      std::string why;
      EXPECT_TRUE(validate_certificate(c.board, c.certificate, &why)) << h << ": " << why;
    });
  }
}

TEST(ClassifyTest, AgreesWithOracleOnRandomLinearBoards) {
  std::mt19937_64 rng(11);
  Solver solver;
  for (int i = 0; i < 300; ++i) {
    const int n = 4 + static_cast<int>(rng() % 8);
    const Hypergraph h = random_linear3(n, 1 + static_cast<int>(rng() % n), rng());
    const Classification c = classify(h);
    EXPECT_EQ(c.verdict.outcome, solver.outcome(h)) << h;
    std::string why;
    EXPECT_TRUE(validate_certificate(c.board, c.certificate, &why)) << h << ": " << why;
  }
}

TEST(ClassifyTest, EmptyEdge) {
  const Classification c = classify(Hypergraph(2, {{}, {0, 1}}));
  EXPECT_EQ(c.verdict.outcome, Outcome::E);
  EXPECT_EQ(c.certificate.basis, Basis::EmptyEdge);
}

TEST(ClassifyTest, StructuralModeRefusesUncoveredFragments) {
  EXPECT_THROW(classify(family(Family::PrismHub), {.allow_oracle = false}),
               UnsupportedInput);
  EXPECT_THROW(classify(family(Family::PrismHub), {.oracle_bound = 8}), ResourceError);
  const Classification c = classify(family(Family::PrismHub));
  EXPECT_EQ(c.verdict.outcome, Outcome::SL);
  EXPECT_EQ(c.verdict.avoider_last_method, Method::Structural);
  EXPECT_EQ(c.verdict.enforcer_last_method, Method::Oracle);
}

TEST(ClassifyTest, MinimizesBeforeCertifying) {
  const Hypergraph h(3, {{0, 1}, {0, 1, 2}});
  const Classification c = classify(h);
  EXPECT_EQ(c.board, Hypergraph(3, {{0, 1}}));
  EXPECT_EQ(c.verdict.outcome, Outcome::A);
}

TEST(CertificateTest, TamperingIsDetected) {
  const Hypergraph c4 = family(Family::Cn, 4);
  Classification c = classify_rank2(c4);
  c.certificate.verdict = Outcome::SL;
  EXPECT_FALSE(validate_certificate(c4, c.certificate));

  Classification d = classify_rank2(c4);
  std::swap(d.certificate.embedding[0], d.certificate.embedding[1]);
  EXPECT_FALSE(validate_certificate(c4, d.certificate));

  const Hypergraph prism = family(Family::Prism);
  const Hypergraph p3 = family(Family::Pn, 3);
  Classification e = classify(prism);
  EXPECT_FALSE(validate_certificate(p3, e.certificate));
}

TEST(CertificateTest, Summary) {
  const Classification c = classify(disjoint_union(family(Family::Cn, 5), Hypergraph(1)));
  EXPECT_EQ(c.verdict.outcome, Outcome::SL);
  const std::string s = summarize(c.certificate);
  EXPECT_NE(s.find("C5"), std::string::npos) << s;
  EXPECT_NE(s.find(":SL"), std::string::npos) << s;
  const Classification u = classify(disjoint_union(family(Family::Cn, 5),
                                                   family(Family::Cycle3u, 3)));
  EXPECT_EQ(u.verdict.outcome, Outcome::SL);
  const std::string t = summarize(u.certificate);
  EXPECT_NE(t.find("UnionTable"), std::string::npos) << t;
}

}  // namespace
}  // namespace aegame
