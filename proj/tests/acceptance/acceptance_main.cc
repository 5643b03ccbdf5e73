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


// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "aegame/census.h"
#include "aegame/classifier.h"
#include "aegame/harness.h"
#include "aegame/oracle.h"

namespace aegame {
namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

Hypergraph family(Family f, int n = 0) { return gen_family({.family = f, .n = n}); }

void expect_outcome(Result& r, Solver& solver, const std::string& name,
                    const Hypergraph& h, Outcome want) {
  const Outcome got = solver.outcome(h);
  r.expect(got == want, name + " gave " + std::string(to_string(got)) +
                            ", want " + std::string(to_string(want)));
}

void expect_suite(Result& r, const SuiteReport& report) {
  r.detail << ' ' << report.name << " instances=" << report.instances
           << " violations=" << report.violation_count;
  if (!report.violations.empty()) {
    r.detail << " first=" << to_json_line(report.violations.front());
  }
  r.expect(report.passed(), report.name + " has violations");
  r.expect(report.instances > 0, report.name + " checked nothing");
}

std::uint64_t counter(const SuiteReport& r, const std::string& key) {
  const auto it = r.counters.find(key);
  return it == r.counters.end() ? 0 : it->second;
}

// Reports shared between criteria 4-6 and 7.
SuiteReport rank2_report;
SuiteReport rank3_report;
SuiteReport union_report;

void small_boards(Result& r) {
  Solver solver;
  expect_outcome(r, solver, "single 2-edge", Hypergraph(2, {{0, 1}}), Outcome::A);
  expect_outcome(r, solver, "single 1-edge", Hypergraph(1, {{0}}), Outcome::SL);
  expect_outcome(r, solver, "3-star", Hypergraph(4, {{0, 1}, {0, 2}, {0, 3}}),
                 Outcome::SL);
  expect_outcome(r, solver, "C4", family(Family::Cn, 4), Outcome::E);
}

void rank2_table(Result& r) {
  Solver solver;
  expect_outcome(r, solver, "P1", family(Family::Pn, 1), Outcome::A);
  expect_outcome(r, solver, "P2", family(Family::Pn, 2), Outcome::A);
  expect_outcome(r, solver, "bull", family(Family::Bull), Outcome::SL);
  expect_outcome(r, solver, "C5", family(Family::Cn, 5), Outcome::SL);
  for (int n = 3; n <= 5; ++n) {
    expect_outcome(r, solver, "P" + std::to_string(n), family(Family::Pn, n), Outcome::SL);
  }
  expect_outcome(r, solver, "C3", family(Family::Cn, 3), Outcome::SL);
  expect_outcome(r, solver, "3-sunlet", family(Family::Sunlet3), Outcome::E);
  expect_outcome(r, solver, "C4", family(Family::Cn, 4), Outcome::E);
  expect_outcome(r, solver, "2P3",
                 disjoint_union(family(Family::Pn, 3), family(Family::Pn, 3)),
                 Outcome::E);
}

void rank3_gadgets(Result& r) {
  Solver solver;
  int largest = 0;
  for (int l = 2; l <= 5; ++l) {
    const Hypergraph h = family(Family::Nunchaku, l);
    largest = std::max(largest, h.num_vertices());
    expect_outcome(r, solver, "nunchaku " + std::to_string(l), h, Outcome::SL);
  }
  for (int l = 3; l <= 5; ++l) {
    const Hypergraph h = family(Family::Cycle3u, l);
    largest = std::max(largest, h.num_vertices());
    expect_outcome(r, solver, "cycle " + std::to_string(l), h, Outcome::A);
  }
  expect_outcome(r, solver, "prism", family(Family::Prism), Outcome::A);
  r.detail << " largest=" << largest;
  r.expect(largest == 10, "largest instance should have 10 vertices");
}

void rank2_classifier(Result& r) {
  SuiteOptions o;
  o.max_n = 6;
  rank2_report = verify_suite(Suite::Rank2, o);
  expect_suite(r, rank2_report);
  // 1 + 1 + 2 + 8 + 64 + 1024 + 32768 labeled graphs on 0..6 vertices.
  r.expect(rank2_report.instances == 33868, "wrong graph count");
}

void rank3_classifier(Result& r) {
  SuiteOptions o;
  o.max_n = 8;
  o.samples = 10000;
  rank3_report = verify_suite(Suite::Rank3AvoiderLast, o);
  expect_suite(r, rank3_report);
  r.expect(counter(rank3_report, "random") == 10000, "random sample count");
  // Every labeled linear rank-<=3 hypergraph on 1..8 vertices belongs to
  // exactly one class; the class sizes must add up to the labeled totals.
  const auto census = linear_rank3_census(8);
  const std::uint64_t labeled[] = {1, 1, 2, 9, 96, 2544, 173808, 31590702,
                                   15700710528ULL};
  for (int n = 0; n <= 8; ++n) {
    std::uint64_t total = 0;
    for (const CensusClass& c : census[n]) total += c.labeled_count;
    r.expect(total == labeled[n], "census total at n=" + std::to_string(n));
  }
  r.detail << " connected_labeled=" << counter(rank3_report, "census_labeled");
}

void union_table(Result& r) {
  SuiteOptions o;
  o.max_n = 5;
  union_report = verify_suite(Suite::UnionTable, o);
  expect_suite(r, union_report);
}

void impossibility(Result& r) {
  std::uint64_t total = 0;
  for (const SuiteReport* rep : {&rank2_report, &rank3_report, &union_report}) {
    r.expect(rep->instances > 0, rep->name + " did not run");
    total += counter(*rep, "impossible");
  }
  r.detail << " impossible=" << total;
  r.expect(total == 0, "impossible combination observed");
}

void prism_hub(Result& r) {
  const Hypergraph h = family(Family::PrismHub);
  r.expect(h.num_vertices() == 13, "13 vertices");
  r.expect(min_degree(h) == 3, "minimum degree 3");
  Solver solver(SolverOptions{13});
  r.expect(solver.solve(enforcer_update(h, kPrismHubCenter), LastPlayer::AvoiderLast) ==
               Winner::Avoider,
           "Avoider should win as last without the hub");
  r.expect(solver.solve(h, LastPlayer::EnforcerLast) == Winner::Avoider,
           "Avoider should win as second-to-last");
  r.detail << " nodes=" << solver.stats().nodes;
  r.expect(solver.stats().nodes <= 1594323 * 2ULL, "state count above 3^13 per search");
}

void duality(Result& r) {
  SuiteOptions o;
  o.max_n = 6;
  expect_suite(r, verify_suite(Suite::Duality, o));
}

void converses(Result& r) {
  const SuiteReport rep = verify_suite(Suite::LastMoveImplications);
  expect_suite(r, rep);
  r.expect(counter(rep, "converse_first_found") == 1, "no counterexample to the first converse");
  r.expect(counter(rep, "converse_second_found") == 1,
           "no counterexample to the second converse");
  for (const std::string& note : rep.notes) {
    r.detail << " {" << note << "}";
    const auto pos = note.find("n=");
    r.expect(pos != std::string::npos && std::stoi(note.substr(pos + 2)) <= 7,
             "counterexample above 7 vertices");
  }
}

void non_cut(Result& r) {
  SuiteOptions o;
  o.max_n = 9;
  const SuiteReport rep = verify_suite(Suite::NonCut, o);
  expect_suite(r, rep);
  // All connected reduced linear 3-uniform labeled instances on 2..9
  // vertices, counted once by a full labeled sweep.
  r.expect(counter(rep, "census_labeled") == 18611220, "labeled coverage");
  r.detail << " labeled_covered=" << counter(rep, "census_labeled");
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Result&)> run;
};

}  // namespace
}  // namespace aegame

int main() {
  using namespace aegame;
  const std::vector<Criterion> criteria = {
      {1, "small boards: 2-edge, 1-edge, 3-star, C4", 1, small_boards},
      {2, "rank-2 outcome table", 5, rank2_table},
      {3, "rank-3 gadgets: nunchakus, cycles, prism", 30, rank3_gadgets},
      {4, "rank-2 classifier vs oracle, all graphs n<=6", 600, rank2_classifier},
      {5, "rank-3 Avoider-last classifier vs oracle, n<=8 plus 10^4 random", 1e9,
       rank3_classifier},
      {6, "union table", 1e9, union_table},
      {7, "impossible combination never occurs", 1e9, impossibility},
      {8, "13-vertex two-prism hub", 60, prism_hub},
      {9, "duality, n<=6 with <=6 edges", 1e9, duality},
      {10, "converse counterexamples within n<=7", 1e9, converses},
      {11, "non-cut rule, 3-uniform n<=9", 1e9, non_cut},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Result r;
    const auto start = Clock::now();
    try {
      c.run(r);
    } catch (const std::exception& e) {
      r.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      r.expect(false, "took " + std::to_string(seconds) + " s, limit " +
                          std::to_string(c.limit_seconds) + " s");
    }
    failures += !r.pass;
    std::printf("%s criterion %d: %s (%.2f s)%s\n", r.pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), seconds, r.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
