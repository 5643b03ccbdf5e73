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
#include <chrono>
#include <memory>
#include <mutex>
#include <random>
#include <thread>

#include "aegame/census.h"
#include "aegame/classifier.h"
#include "aegame/errors.h"
#include "aegame/game.h"
#include "aegame/harness.h"
#include "aegame/oracle.h"
#include "aegame/structure.h"
#include "json.hpp"

namespace aegame {
namespace {

// Labelled sweeps stop here; the census covers larger instances.
constexpr int kNonCutLabeledMax = 7;

constexpr LastPlayer kOrders[] = {LastPlayer::AvoiderLast,
                                  LastPlayer::EnforcerLast};

constexpr std::pair<Suite, std::string_view> kSuiteNames[] = {
    {Suite::LastTheorem, "LastTheorem"},
    {Suite::UnionTable, "UnionTable"},
    {Suite::Duality, "Duality"},
    {Suite::Monotonicity, "Monotonicity"},
    {Suite::SuperLemma, "SuperLemma"},
    {Suite::OneEdge, "OneEdge"},
    {Suite::LastMoveImplications, "LastMoveImplications"},
    {Suite::ManyMoves, "ManyMoves"},
    {Suite::Rank2, "Rank2"},
    {Suite::Rank3AvoiderLast, "Rank3AvoiderLast"},
    {Suite::NonCut, "NonCut"},
    {Suite::Pairings, "Pairings"},
    {Suite::Reductions, "Reductions"},
};

// Per-worker view of a sweep. Every worker walks the whole population and
// keeps the items whose index is its own modulo the worker count.
class Context {
 public:
  Context(std::string suite, const SuiteOptions& options, std::mutex& mu,
          int worker, int jobs)
      : suite_(std::move(suite)), options_(options), mu_(mu), worker_(worker),
        jobs_(jobs), solver(SolverOptions{kMaxOracleBound}) {}

  bool mine() { return index_++ % static_cast<std::uint64_t>(jobs_) ==
                       static_cast<std::uint64_t>(worker_); }
  void instance() { ++report.instances; }
  void count(const std::string& key, std::uint64_t by = 1) {
    report.counters[key] += by;
  }
  void violation(const Hypergraph& h, std::string detail) {
    Violation v{suite_, h, std::move(detail)};
    ++report.violation_count;
    if (options_.on_violation) {
      std::lock_guard<std::mutex> lock(mu_);
      options_.on_violation(v);
    }
    if (report.violations.size() < options_.max_recorded) {
      report.violations.push_back(std::move(v));
    }
  }
  const SuiteOptions& options() const { return options_; }
  int worker() const { return worker_; }

  // Outcome with the impossible combination reported instead of thrown.
  std::optional<Outcome> outcome(const Hypergraph& h) {
    const Winner al = solver.solve(h, LastPlayer::AvoiderLast);
    const Winner el = solver.solve(h, LastPlayer::EnforcerLast);
    const auto o = try_outcome_from_winners(al, el);
    if (!o) {
      count("impossible");
      violation(h, "Avoider wins as last but Enforcer wins as last too");
    }
    return o;
  }

  SuiteReport report;

 private:
  std::string suite_;
  const SuiteOptions& options_;
  std::mutex& mu_;
  int worker_;
  int jobs_;
  std::uint64_t index_ = 0;

 public:
  Solver solver;
};

template <class Body>
SuiteReport run_sweep(std::string name, const SuiteOptions& options, Body body) {
  const auto start = std::chrono::steady_clock::now();
  const int jobs = std::max(1, options.jobs);
  std::mutex mu;
  std::vector<std::unique_ptr<Context>> contexts;
  for (int w = 0; w < jobs; ++w) {
    contexts.push_back(std::make_unique<Context>(name, options, mu, w, jobs));
  }
  if (jobs == 1) {
    body(*contexts[0]);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(jobs);
    for (int w = 0; w < jobs; ++w) {
      threads.emplace_back([&, w] {
        try {
          body(*contexts[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  SuiteReport out;
  out.name = std::move(name);
  for (auto& ctx : contexts) {
    SuiteReport& r = ctx->report;
    out.instances += r.instances;
    out.violation_count += r.violation_count;
    for (auto& v : r.violations) {
      if (out.violations.size() < options.max_recorded) {
        out.violations.push_back(std::move(v));
      }
    }
    for (const auto& [k, v] : r.counters) out.counters[k] += v;
    out.notes.insert(out.notes.end(), r.notes.begin(), r.notes.end());
  }
  out.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return out;
}

int bound(const SuiteOptions& o, Suite s) {
  return o.max_n > 0 ? o.max_n : default_max_n(s);
}

int samples(const SuiteOptions& o, int fallback) {
  return o.samples >= 0 ? o.samples : fallback;
}

// Antichains on 0..n vertices: all of them up to 5 vertices, at most six
// edges on 6 vertices.
void for_each_antichain(int n_max, const HypergraphSink& sink) {
  for (int n = 0; n <= std::min(n_max, 6); ++n) {
    enumerate_antichains(n, n <= 5 ? (1 << n) : 6, sink);
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t x = seed * 0x9E3779B97F4A7C15ULL + i + 1;
  x ^= x >> 31;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 29;
  return x;
}

// A random hypergraph with `m` random nonempty edges.
Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int m) {
  std::vector<Edge> edges;
  if (n == 0) return Hypergraph(0);
  std::uniform_int_distribution<std::uint32_t> mask(1, (1u << n) - 1);
  for (int i = 0; i < m; ++i) {
    const std::uint32_t bits = mask(rng);
    Edge e;
    for (int v = 0; v < n; ++v) {
      if (bits >> v & 1) e.push_back(v);
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

bool has_one_edge(const Hypergraph& h) {
  return std::any_of(h.edges().begin(), h.edges().end(),
                     [](const Edge& e) { return e.size() == 1; });
}

std::string winner_text(Winner w) { return std::string(to_string(w)); }

// ---------------------------------------------------------------------------

SuiteReport last_theorem(const SuiteOptions& o) {
  const int n_max = bound(o, Suite::LastTheorem);
  return run_sweep("LastTheorem", o, [&](Context& ctx) {
    auto check = [&](const Hypergraph& h) {
      if (!ctx.mine()) return;
      ctx.instance();
      if (auto out = ctx.outcome(h)) ctx.count(std::string(to_string(*out)));
    };
    for_each_antichain(n_max, check);
    for (int n = 6; n <= std::min(n_max, 6); ++n) {
      enumerate_linear_rank3(n, false, check);
    }
  });
}

std::vector<std::pair<std::string, Hypergraph>> union_pool(int n_max) {
  std::vector<std::pair<std::string, Hypergraph>> pool;
  auto add = [&pool](std::string name, Hypergraph h) {
    pool.emplace_back(std::move(name), std::move(h));
  };
  add("P1", gen_family({.family = Family::Pn, .n = 1}));
  add("P2", gen_family({.family = Family::Pn, .n = 2}));
  add("P3", gen_family({.family = Family::Pn, .n = 3}));
  add("P4", gen_family({.family = Family::Pn, .n = 4}));
  add("C3", gen_family({.family = Family::Cn, .n = 3}));
  add("C4", gen_family({.family = Family::Cn, .n = 4}));
  add("C5", gen_family({.family = Family::Cn, .n = 5}));
  add("bull", gen_family({.family = Family::Bull}));
  add("3-sunlet", gen_family({.family = Family::Sunlet3}));
  add("1-edge", Hypergraph(1, {{0}}));
  add("3-edge", Hypergraph(3, {{0, 1, 2}}));
  add("nunchaku3", gen_family({.family = Family::Nunchaku, .n = 3}));
  add("chain2", gen_family({.family = Family::Chain, .n = 2}));
  const Hypergraph prism = gen_family({.family = Family::Prism});
  add("prism-y", enforcer_update(prism, 0));
  add("prism+x", avoider_update(prism, 0));
  add("prism+x-y", enforcer_update(avoider_update(prism, 0), 0));
  for (int n = 1; n <= n_max; ++n) {
    enumerate_graphs(n, [&](const Hypergraph& g) {
      if (is_connected(g)) add("graph " + to_string(g), g);
    });
  }
  return pool;
}

SuiteReport union_table(const SuiteOptions& o) {
  const auto pool = union_pool(bound(o, Suite::UnionTable));
  return run_sweep("UnionTable", o, [&](Context& ctx) {
    std::vector<std::optional<Outcome>> outcomes;
    for (const auto& [name, h] : pool) outcomes.push_back(ctx.outcome(h));
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = 0; j < pool.size(); ++j) {
        if (!ctx.mine()) continue;
        ctx.instance();
        if (!outcomes[i] || !outcomes[j]) continue;
        const Hypergraph u = disjoint_union(pool[i].second, pool[j].second);
        const auto got = ctx.outcome(u);
        const Outcome want = combine_union(*outcomes[i], *outcomes[j]);
        if (got && *got != want) {
          ctx.violation(u, pool[i].first + " u " + pool[j].first + ": oracle " +
                               std::string(to_string(*got)) + ", table " +
                               std::string(to_string(want)));
        }
      }
    }
    if (ctx.worker() == 0) ctx.count("pool", pool.size());
  });
}

SuiteReport duality(const SuiteOptions& o) {
  const int n_max = bound(o, Suite::Duality);
  return run_sweep("Duality", o, [&](Context& ctx) {
    for_each_antichain(n_max, [&](const Hypergraph& h) {
      if (!ctx.mine()) return;
      ctx.instance();
      const Hypergraph dual = transversal_dual(h);
      // The seat is preserved and the roles swap: Avoider last on H is
      // Enforcer last on the dual.
      for (LastPlayer last : kOrders) {
        const LastPlayer swapped = last == LastPlayer::AvoiderLast
                                       ? LastPlayer::EnforcerLast
                                       : LastPlayer::AvoiderLast;
        const bool avoider = ctx.solver.solve(h, last) == Winner::Avoider;
        const bool dual_enforcer =
            ctx.solver.solve(dual, swapped) == Winner::Enforcer;
        if (avoider != dual_enforcer) {
          ctx.violation(h, std::string(to_string(last)) + ": Avoider " +
                               (avoider ? "wins" : "loses") +
                               " but dual " + to_string(dual));
        }
      }
    });
  });
}

SuiteReport monotonicity(const SuiteOptions& o) {
  const int n_max = bound(o, Suite::Monotonicity);
  auto check = [](Context& ctx, const Hypergraph& h, const Edge& extra) {
    std::vector<Edge> edges = h.edges();
    edges.push_back(extra);
    const Hypergraph bigger(h.num_vertices(), std::move(edges));
    for (LastPlayer last : kOrders) {
      if (ctx.solver.solve(h, last) == Winner::Enforcer &&
          ctx.solver.solve(bigger, last) == Winner::Avoider) {
        ctx.violation(bigger, "adding an edge flipped " +
                                  std::string(to_string(last)) +
                                  " to Avoider; base " + to_string(h));
      }
    }
  };
  return run_sweep("Monotonicity", o, [&](Context& ctx) {
    for_each_antichain(std::min(n_max, 5), [&](const Hypergraph& h) {
      const int n = h.num_vertices();
      for (std::uint32_t m = 1; m < (1u << n); ++m) {
        if (!ctx.mine()) continue;
        ctx.instance();
        Edge e;
        for (int v = 0; v < n; ++v) {
          if (m >> v & 1) e.push_back(v);
        }
        check(ctx, h, e);
      }
    });
    const int count = samples(ctx.options(), 2000);
    for (int i = 0; i < count; ++i) {
      if (!ctx.mine()) continue;
      ctx.instance();
      std::mt19937_64 rng(mix_seed(ctx.options().seed, i));
      const int n = 5 + static_cast<int>(rng() % 3);
      const Hypergraph h = random_hypergraph(rng, n, 1 + static_cast<int>(rng() % 6));
      const Hypergraph extra = random_hypergraph(rng, n, 1);
      check(ctx, h, extra.edges()[0]);
    }
  });
}

SuiteReport super_lemma(const SuiteOptions& o) {
  const int n_max = bound(o, Suite::SuperLemma);
  auto check = [](Context& ctx, const Hypergraph& h) {
    const auto pairs = indistinguishable_pairs(h);
    if (pairs.empty()) return;
    const auto base = ctx.outcome(h);
    for (const auto& [x, y] : pairs) {
      ctx.count("pairs");
      const Hypergraph reduced = super_reduce(h, x, y);
      const auto after = ctx.outcome(reduced);
      if (base && after && *base != *after) {
        ctx.violation(h, "reducing (" + std::to_string(x) + "," +
                             std::to_string(y) + ") changed " +
                             std::string(to_string(*base)) + " to " +
                             std::string(to_string(*after)));
      }
    }
  };
  return run_sweep("SuperLemma", o, [&](Context& ctx) {
    for_each_antichain(std::min(n_max, 5), [&](const Hypergraph& h) {
      if (!ctx.mine()) return;
      ctx.instance();
      check(ctx, h);
    });
    const int count = samples(ctx.options(), 500);
    for (int i = 0; i < count; ++i) {
      if (!ctx.mine()) continue;
      ctx.instance();
      std::mt19937_64 rng(mix_seed(ctx.options().seed, i));
      const int n = 6 + static_cast<int>(rng() % 2);
      check(ctx, random_hypergraph(rng, n, 1 + static_cast<int>(rng() % 6)));
    }
  });
}

SuiteReport one_edge(const SuiteOptions& o) {
  const int n_max = bound(o, Suite::OneEdge);
  return run_sweep("OneEdge", o, [&](Context& ctx) {
    for_each_antichain(n_max, [&](const Hypergraph& h) {
      if (!has_one_edge(h) || !ctx.mine()) return;
      ctx.instance();
      const OneEdgeStep step = one_edge_reduction(h);
      const Winner al = ctx.solver.solve(h, LastPlayer::AvoiderLast);
      const Winner el = ctx.solver.solve(h, LastPlayer::EnforcerLast);
      if (al != Winner::Enforcer) {
        ctx.violation(h, "Avoider wins as last despite a 1-edge");
      }
      const Winner residual = ctx.solver.solve(step.residual, LastPlayer::AvoiderLast);
      if (el != residual) {
        ctx.violation(h, "second-to-last winner " + winner_text(el) +
                             " but residual last winner " + winner_text(residual));
      }
      const Classification c = classify(h);
      std::string why;
      if (c.verdict.outcome != outcome_from_winners(al, el)) {
        ctx.violation(h, "classifier says " +
                             std::string(to_string(c.verdict.outcome)));
      } else if (!validate_certificate(c.board, c.certificate, &why)) {
        ctx.violation(h, "certificate rejected: " + why);
      }
    });
  });
}

SuiteReport lastmove(const SuiteOptions& o) {
  const int n_max = bound(o, Suite::LastMoveImplications);
  return run_sweep("LastMoveImplications", o, [&](Context& ctx) {
    bool found_first = false;
    bool found_second = false;
    // Checks both implications and records converse counterexamples.
    auto check = [&](const Hypergraph& h) {
      const int n = h.num_vertices();
      if (n == 0) return;
      // Avoider second-to-last = Enforcer last, and vice versa.
      const Winner el = ctx.solver.solve(h, LastPlayer::EnforcerLast);
      const Winner al = ctx.solver.solve(h, LastPlayer::AvoiderLast);
      bool some_y = false;
      bool some_x = false;
      for (VertexId v = 0; v < n; ++v) {
        some_y = some_y || ctx.solver.solve(enforcer_update(h, v),
                                            LastPlayer::AvoiderLast) ==
                               Winner::Avoider;
        some_x = some_x || ctx.solver.solve(avoider_update(h, v),
                                            LastPlayer::EnforcerLast) ==
                               Winner::Enforcer;
      }
      if (some_y && el != Winner::Avoider) {
        ctx.violation(h, "Avoider wins some H^{-y} as last but loses H as "
                         "second-to-last");
      }
      if (some_x && al != Winner::Enforcer) {
        ctx.violation(h, "Enforcer wins some H^{+x} as last but loses H as "
                         "second-to-last");
      }
      if (el == Winner::Avoider && !some_y) {
        ctx.count("converse_first_counterexamples");
        if (!found_first) {
          found_first = true;
          ctx.report.notes.push_back("first converse fails on " + to_string(h));
        }
      }
      if (al == Winner::Enforcer && !some_x) {
        ctx.count("converse_second_counterexamples");
        if (!found_second) {
          found_second = true;
          ctx.report.notes.push_back("second converse fails on " + to_string(h));
        }
      }
    };
    for_each_antichain(std::min(n_max, 5), [&](const Hypergraph& h) {
      if (!ctx.mine()) return;
      ctx.instance();
      check(h);
    });
    // Keep looking for converse counterexamples on up to 7 vertices:
    // remaining antichains first, then graphs and linear rank-3 boards.
    for (int n = std::min(n_max, 5) + 1; n <= 5 && !(found_first && found_second); ++n) {
      enumerate_antichains(n, 1 << n, [&](const Hypergraph& h) {
        if (found_first && found_second) return;
        if (!ctx.mine()) return;
        check(h);
      });
    }
    for (int n = 6; n <= 7 && !(found_first && found_second); ++n) {
      enumerate_graphs(n, [&](const Hypergraph& g) {
        if (found_first && found_second) return;
        if (!ctx.mine()) return;
        check(g);
      });
    }
    for (int n = 6; n <= 7 && !(found_first && found_second); ++n) {
      enumerate_linear_rank3(n, true, [&](const Hypergraph& h) {
        if (found_first && found_second) return;
        if (!ctx.mine()) return;
        check(h);
      });
    }
    ctx.count("converse_first_found", found_first ? 1 : 0);
    ctx.count("converse_second_found", found_second ? 1 : 0);
  });
}

SuiteReport many_moves(const SuiteOptions& o) {
  const int n_max = bound(o, Suite::ManyMoves);
  return run_sweep("ManyMoves", o, [&](Context& ctx) {
    for_each_antichain(n_max, [&](const Hypergraph& h) {
      const int n = h.num_vertices();
      if (n == 0 || !ctx.mine()) return;
      ctx.instance();
      auto board = std::make_shared<const Hypergraph>(h);
      for (Player p : {Player::Avoider, Player::Enforcer}) {
        for (bool as_first : {true, false}) {
          // The order in which p moves first (or second).
          const Player starter = as_first ? p : opponent(p);
          const LastPlayer last = first_player(n, LastPlayer::AvoiderLast) == starter
                                      ? LastPlayer::AvoiderLast
                                      : LastPlayer::EnforcerLast;
          if (ctx.solver.solve(h, last) != as_winner(p)) continue;
          // The opponent opens with |X| moves of matching parity.
          for (VertexMask x = 1; x < (VertexMask{1} << n); ++x) {
            const int size = std::popcount(x);
            if ((size % 2 == 0) != as_first) continue;
            const VertexMask avoider = p == Player::Avoider ? 0 : x;
            const VertexMask enforcer = p == Player::Avoider ? x : 0;
            const GameState s(board, avoider, enforcer, p);
            ctx.count("positions");
            if (ctx.solver.solve_position(s, last) != as_winner(p)) {
              ctx.violation(h, std::string(to_string(p)) + " wins as " +
                                   (as_first ? "first" : "second") +
                                   " player but loses after opponent opens with mask " +
                                   std::to_string(x));
            }
          }
        }
      }
    });
  });
}

SuiteReport rank2(const SuiteOptions& o) {
  const int n_max = bound(o, Suite::Rank2);
  return run_sweep("Rank2", o, [&](Context& ctx) {
    for (int n = 0; n <= n_max; ++n) {
      enumerate_graphs(n, [&](const Hypergraph& g) {
        if (!ctx.mine()) return;
        ctx.instance();
        const auto truth = ctx.outcome(g);
        if (!truth) return;
        ctx.count(std::string(to_string(*truth)));
        const Classification c = classify_rank2(g);
        if (c.verdict.outcome != *truth) {
          ctx.violation(g, "classifier " +
                               std::string(to_string(c.verdict.outcome)) +
                               ", oracle " + std::string(to_string(*truth)));
          return;
        }
        std::string why;
        if (!validate_certificate(g, c.certificate, &why)) {
          ctx.violation(g, "certificate rejected: " + why);
        }
        const Classification d = classify(g, {.allow_oracle = false});
        if (d.verdict.outcome != *truth) {
          ctx.violation(g, "dispatcher disagrees");
        }
      });
    }
  });
}

void check_rank3(Context& ctx, const Hypergraph& h, const char* source) {
  ctx.instance();
  ctx.count(source);
  const Rank3Verdict v = classify_rank3_linear_avoider_last(h);
  const Winner al = ctx.solver.solve(h, LastPlayer::AvoiderLast);
  const Winner el = ctx.solver.solve(h, LastPlayer::EnforcerLast);
  if (!try_outcome_from_winners(al, el)) {
    ctx.count("impossible");
    ctx.violation(h, "Avoider wins as last but Enforcer wins as last too");
  }
  if (al == Winner::Avoider) ctx.count("avoider_last_wins");
  if (v.winner != al) {
    ctx.violation(h, std::string(source) + ": classifier " +
                         winner_text(v.winner) + ", oracle " + winner_text(al) +
                         " (" + summarize(v.certificate) + ")");
    return;
  }
  std::string why;
  if (!validate_certificate(h, v.certificate, &why)) {
    ctx.violation(h, "certificate rejected: " + why);
  }
}

SuiteReport rank3(const SuiteOptions& o) {
  const int n_max = bound(o, Suite::Rank3AvoiderLast);
  const auto census = linear_rank3_census(std::min(n_max, kMaxCensusVertices));
  return run_sweep("Rank3AvoiderLast", o, [&](Context& ctx) {
    for (const auto& level : census) {
      for (const CensusClass& c : level) {
        const Hypergraph& h = c.representative;
        if (h.num_vertices() == 0 || !is_connected(h) || !ctx.mine()) continue;
        ctx.count("census_labeled", c.labeled_count);
        check_rank3(ctx, h, "census");
      }
    }
    for (int n = 1; n <= std::min(n_max, 6); ++n) {
      enumerate_linear_rank3(n, true, [&](const Hypergraph& h) {
        if (ctx.mine()) check_rank3(ctx, h, "labeled");
      });
    }
    const int count = samples(ctx.options(), 10000);
    for (int i = 0; i < count; ++i) {
      if (!ctx.mine()) continue;
      std::mt19937_64 rng(mix_seed(ctx.options().seed, i));
      const int n = 4 + static_cast<int>(rng() % 9);
      const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(n + 2));
      check_rank3(ctx, random_linear3(n, m, rng()), "random");
    }
  });
}

// Connected, every vertex covered, and no edge with two degree-1 vertices.
bool reduced_connected_uniform(int n, std::span<const Edge> edges) {
  if (edges.empty()) return false;
  int degree[16] = {};
  for (const Edge& e : edges) {
    for (VertexId v : e) ++degree[v];
  }
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 0) return false;
  }
  for (const Edge& e : edges) {
    if ((degree[e[0]] == 1) + (degree[e[1]] == 1) + (degree[e[2]] == 1) >= 2) {
      return false;
    }
  }
  return true;
}

// With `all_ties`, every vertex the rule could return under some labelling
// is checked, which makes the check valid for a whole isomorphism class.
void check_non_cut(Context& ctx, const Hypergraph& h, bool all_ties) {
  const int n = h.num_vertices();
  ctx.instance();
  std::vector<bool> cut(n);
  int non_cut_count = 0;
  for (VertexId v = 0; v < n; ++v) {
    cut[v] = is_cut_vertex(h, v);
    non_cut_count += !cut[v];
  }
  if (non_cut_count < 2) ctx.violation(h, "fewer than two non-cut vertices");
  const std::vector<int> degree = degrees(h);
  std::vector<std::vector<int>> dist;
  for (VertexId x = 0; x < n; ++x) dist.push_back(chain_distances(h, x));
  for (VertexId x = 0; x < n; ++x) {
    const VertexId u = find_non_cut_vertex(h, x);
    if (cut[u]) {
      ctx.violation(h, "rule picked cut vertex " + std::to_string(u) +
                           " from " + std::to_string(x));
    }
    const int far = *std::max_element(dist[x].begin(), dist[x].end());
    int low = n;
    for (VertexId v = 0; v < n; ++v) {
      if (dist[x][v] == far) low = std::min(low, degree[v]);
    }
    if (dist[x][u] != far || degree[u] != low) {
      ctx.violation(h, "rule ignored its own preference from " +
                           std::to_string(x));
    }
    if (!all_ties) continue;
    for (VertexId v = 0; v < n; ++v) {
      if (dist[x][v] == far && degree[v] == low && cut[v]) {
        ctx.violation(h, "tied candidate " + std::to_string(v) + " from " +
                             std::to_string(x) + " is a cut vertex");
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (dist[a][c] > dist[a][b] + dist[b][c]) {
          ctx.violation(h, "dist violates the triangle inequality");
          return;
        }
      }
    }
  }
}

SuiteReport non_cut(const SuiteOptions& o) {
  const int n_max = bound(o, Suite::NonCut);
  const auto census =
      linear_rank3_census(std::min(n_max, kMaxUniformCensusVertices), true);
  return run_sweep("NonCut", o, [&](Context& ctx) {
    for (const auto& level : census) {
      for (const CensusClass& c : level) {
        const Hypergraph& h = c.representative;
        if (!reduced_connected_uniform(h.num_vertices(), h.edges()) ||
            !is_connected(h) || !ctx.mine()) {
          continue;
        }
        ctx.count("census");
        ctx.count("census_labeled", c.labeled_count);
        check_non_cut(ctx, h, true);
      }
    }
    for (int n = 2; n <= std::min(n_max, kNonCutLabeledMax); ++n) {
      enumerate_linear_rank3_edges(n, true, [&](std::span<const Edge> edges) {
        if (!reduced_connected_uniform(n, edges)) return;
        const Hypergraph h(n, std::vector<Edge>(edges.begin(), edges.end()));
        if (!is_connected(h) || !ctx.mine()) return;
        ctx.count("labeled");
        check_non_cut(ctx, h, false);
      });
    }
  });
}

SuiteReport pairings(const SuiteOptions& o) {
  const int n_max = bound(o, Suite::Pairings);
  std::vector<Hypergraph> families;
  for (int l = 3; l <= 5; ++l) {
    families.push_back(gen_family({.family = Family::Cycle3u, .n = l}));
  }
  families.push_back(gen_family({.family = Family::Prism}));
  for (int l = 2; l <= 5; ++l) {
    families.push_back(
        enforcer_update(gen_family({.family = Family::Nunchaku, .n = l}), 0));
  }
  families.push_back(Hypergraph(7, {{0, 1}, {2, 3}, {4, 5}}));
  return run_sweep("Pairings", o, [&](Context& ctx) {
    auto check = [&](const Hypergraph& h) {
      if (!ctx.mine()) return;
      ctx.instance();
      PairingSearchStats stats;
      const auto p = find_pairing(h, 10'000, &stats);
      if (!p) {
        ctx.count(stats.exhausted ? "none" : "budget");
        return;
      }
      ctx.count("found");
      if (!is_valid_pairing(h, *p)) {
        ctx.violation(h, "invalid pairing returned");
        return;
      }
      if (h.num_vertices() <= 10) {
        const auto out = ctx.outcome(h);
        if (out && *out != Outcome::A) {
          ctx.violation(h, "pairing exists but outcome is " +
                               std::string(to_string(*out)));
        }
      }
    };
    for (const Hypergraph& h : families) check(h);
    for_each_antichain(std::min(n_max, 5), check);
    for (int n = 1; n <= std::min(n_max, 6); ++n) {
      enumerate_linear_rank3(n, false, check);
    }
  });
}

// Edges of a linear tree with exactly two leaf-edges, checked to form a
// walk from one leaf-edge to the other.
bool forms_walk_between_leaves(const Hypergraph& t) {
  const auto& edges = t.edges();
  const std::size_t m = edges.size();
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<VertexId> shared;
      std::set_intersection(edges[i].begin(), edges[i].end(), edges[j].begin(),
                            edges[j].end(), std::back_inserter(shared));
      if (!shared.empty()) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  if (m == 1) return true;
  std::size_t ends = 0;
  for (const auto& a : adj) {
    if (a.size() == 1) {
      ++ends;
    } else if (a.size() != 2) {
      return false;
    }
  }
  return ends == 2;
}

SuiteReport reductions(const SuiteOptions& o) {
  const int n_max = bound(o, Suite::Reductions);
  return run_sweep("Reductions", o, [&](Context& ctx) {
    for (int n = 1; n <= std::min(n_max, 6); ++n) {
      enumerate_linear_rank3(n, false, [&](const Hypergraph& h) {
        if (!ctx.mine()) return;
        ctx.instance();
        const Hypergraph r = reduce_rank3(h);
        for (const Edge& e : leaf_edges(r)) {
          if (e.size() == 3) ctx.violation(h, "reduction left a leaf-edge");
        }
        const auto before = ctx.outcome(h);
        const auto after = ctx.outcome(r);
        if (before && after && *before != *after) {
          ctx.violation(h, "reduction changed the outcome");
        }
        // Linear trees with exactly two leaf-edges are walks.
        int excess = 0;
        for (const Edge& e : h.edges()) excess += static_cast<int>(e.size()) - 1;
        if (!h.edges().empty() && excess == n - 1 && is_connected(h) &&
            leaf_edges(h).size() == 2) {
          ctx.count("two_leaf_trees");
          if (!forms_walk_between_leaves(h)) {
            ctx.violation(h, "linear tree with two leaf-edges is not a walk");
          }
        }
      });
    }
    for_each_antichain(std::min(n_max, 5), [&](const Hypergraph& h) {
      if (!ctx.mine()) return;
      ctx.instance();
      const bool covered = std::all_of(
          degrees(h).begin(), degrees(h).end(), [](int d) { return d > 0; });
      if (!h.has_empty_edge() && covered && !h.edges().empty()) {
        ctx.count("dual_involutions");
        if (!(transversal_dual(transversal_dual(h)) == minimize_edges(h))) {
          ctx.violation(h, "dual of the dual is not the minimized input");
        }
      }
      if (!(remove_isolated(remove_isolated(h)) == remove_isolated(h))) {
        ctx.violation(h, "remove_isolated is not idempotent");
      }
      const auto base = ctx.outcome(h);
      const auto trimmed = ctx.outcome(remove_isolated(h));
      if (base && trimmed && *base != *trimmed) {
        ctx.violation(h, "isolated vertices changed the outcome");
      }
      const int n = h.num_vertices();
      for (VertexId x = 0; x < n; ++x) {
        for (VertexId y = 0; y < n; ++y) {
          if (x == y) continue;
          const Hypergraph a = enforcer_update(avoider_update(h, x), y - (y > x));
          const Hypergraph b = avoider_update(enforcer_update(h, y), x - (x > y));
          if (!(a == b)) {
            ctx.violation(h, "H^{+x-y} differs from H^{-y+x}");
          }
        }
      }
    });
    const int count = samples(ctx.options(), 300);
    for (int i = 0; i < count; ++i) {
      if (!ctx.mine()) continue;
      ctx.instance();
      std::mt19937_64 rng(mix_seed(ctx.options().seed, i));
      const int n = 6 + static_cast<int>(rng() % 3);
      const Hypergraph h = random_hypergraph(rng, n, 1 + static_cast<int>(rng() % 8));
      const Hypergraph m = minimize_edges(h);
      if (!(minimize_edges(m) == m)) ctx.violation(h, "minimize_edges not idempotent");
      const auto d = degrees(m);
      if (std::all_of(d.begin(), d.end(), [](int x) { return x > 0; })) {
        ctx.count("dual_involutions");
        if (!(transversal_dual(transversal_dual(m)) == m)) {
          ctx.violation(h, "dual of the dual is not the minimized input");
        }
      }
    }
  });
}

}  // namespace

std::string_view to_string(Suite suite) {
  for (const auto& [s, name] : kSuiteNames) {
    if (s == suite) return name;
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& [s, n] : kSuiteNames) {
    if (n == name) return s;
  }
  return std::nullopt;
}

int default_max_n(Suite suite) {
  switch (suite) {
    case Suite::LastTheorem:
    case Suite::SuperLemma:
    case Suite::OneEdge:
    case Suite::LastMoveImplications:
    case Suite::ManyMoves:
    case Suite::Pairings:
    case Suite::Duality:
      return 5;
    case Suite::UnionTable:
    case Suite::Monotonicity:
      return 4;
    case Suite::Rank2:
    case Suite::Reductions:
      return 6;
    case Suite::Rank3AvoiderLast:
      return 7;
    case Suite::NonCut:
      return 9;
  }
  return 5;
}

std::string to_json_line(const Violation& v) {
  nlohmann::json j;
  j["suite"] = v.suite;
  j["n"] = v.instance.num_vertices();
  j["edges"] = v.instance.edges();
  j["detail"] = v.detail;
  return j.dump();
}

SuiteReport verify_many_moves(const SuiteOptions& options) {
  return many_moves(options);
}

SuiteReport verify_lastmove_implications(const SuiteOptions& options) {
  return lastmove(options);
}

SuiteReport verify_suite(Suite suite, const SuiteOptions& options) {
  switch (suite) {
    case Suite::LastTheorem:
      return last_theorem(options);
    case Suite::UnionTable:
      return union_table(options);
    case Suite::Duality:
      return duality(options);
    case Suite::Monotonicity:
      return monotonicity(options);
    case Suite::SuperLemma:
      return super_lemma(options);
    case Suite::OneEdge:
      return one_edge(options);
    case Suite::LastMoveImplications:
      return lastmove(options);
    case Suite::ManyMoves:
      return many_moves(options);
    case Suite::Rank2:
      return rank2(options);
    case Suite::Rank3AvoiderLast:
      return rank3(options);
    case Suite::NonCut:
      return non_cut(options);
    case Suite::Pairings:
      return pairings(options);
    case Suite::Reductions:
      return reductions(options);
  }
  throw InputError("unknown suite");
}

SuiteReport conjecture_search(int d, int n_max, std::uint64_t seed,
                              const SuiteOptions& options) {
  const std::string name = "Conjecture(d=" + std::to_string(d) + ")";
  const auto census = linear_rank3_census(std::min(n_max, kMaxCensusVertices));
  return run_sweep(name, options, [&](Context& ctx) {
    auto check = [&](const Hypergraph& h, const std::string& source) {
      if (h.num_vertices() == 0 || min_degree(h) < d || !ctx.mine()) return;
      if (h.num_vertices() > kMaxOracleBound) return;
      ctx.instance();
      ctx.count(source);
      bool has_cut = false;
      if (is_connected(h)) {
        for (VertexId v = 0; v < h.num_vertices() && !has_cut; ++v) {
          has_cut = is_cut_vertex(h, v);
        }
      }
      if (has_cut) ctx.count("with_cut_vertex");
      if (ctx.solver.solve(h, LastPlayer::EnforcerLast) == Winner::Avoider) {
        ctx.count("witnesses");
        ctx.violation(h, std::string("Avoider wins as second-to-last (") + source +
                             (has_cut ? ", has a cut vertex)" : ")"));
      }
    };
    for (const auto& level : census) {
      for (const CensusClass& c : level) check(c.representative, "census");
    }
    if (n_max >= 13) {
      check(gen_family({.family = Family::PrismHub}), "prism-hub");
      // Two prisms glued through a hub along random bijections.
      std::mt19937_64 rng(seed);
      for (int i = 0; i < 8; ++i) {
        std::vector<int> perm = {0, 1, 2, 3, 4, 5};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> edges = gen_family({.family = Family::PrismHub}).edges();
        std::erase_if(edges, [](const Edge& e) {
          return std::binary_search(e.begin(), e.end(), kPrismHubCenter);
        });
        for (int v = 0; v < 6; ++v) {
          edges.push_back({v, kPrismHubCenter, kPrismHubCenter + 1 + perm[v]});
        }
        check(Hypergraph(13, std::move(edges)), "hub-join");
      }
    }
  });
}

}  // namespace aegame
