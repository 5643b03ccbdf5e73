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

#include "commands.h"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <mutex>
#include <sstream>

#include "aegame/classifier.h"
#include "aegame/errors.h"
#include "json.hpp"

namespace aegame::cli {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void write_output(const std::string& path, const std::string& text,
                  std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

std::string edge_names(const HypergraphDocument& doc, const Edge& e) {
  if (e.empty()) return "{}";
  std::string s;
  for (VertexId v : e) {
    if (!s.empty()) s += ' ';
    s += doc.names[v];
  }
  return s;
}

// Terminal winner once the game is decided, nullopt while it is open.
std::optional<Winner> decided(const GameState& s) {
  if (s.avoider_filled_edge()) return Winner::Enforcer;
  if (s.all_picked()) return Winner::Avoider;
  return std::nullopt;
}

Winner value(Solver& solver, const GameState& s, LastPlayer last) {
  if (auto w = decided(s)) return *w;
  return solver.solve_position(s, last);
}

void print_board(const HypergraphDocument& doc, const GameState& s,
                 std::ostream& out) {
  out << "remaining:";
  for (VertexId v : s.unpicked()) out << ' ' << doc.names[v];
  out << "\nlive edges:";
  bool any = false;
  for (const Edge& e : s.board().edges()) {
    bool dead = false;
    Edge rest;
    for (VertexId v : e) {
      if (s.enforcer_mask() >> v & 1) dead = true;
      if (!s.is_picked(v)) rest.push_back(v);
    }
    if (dead) continue;
    any = true;
    out << " {" << edge_names(doc, rest) << "}";
  }
  if (!any) out << " none";
  out << '\n';
}

}  // namespace

HypergraphDocument read_document(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  return parse_document(text);
}

int report_error(const std::exception& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  if (dynamic_cast<const ResourceError*>(&e)) return kExitResource;
  if (dynamic_cast<const InputError*>(&e)) return kExitInputError;
  if (dynamic_cast<const UnsupportedInput*>(&e)) return kExitInputError;
  return kExitViolations;
}

int cmd_solve(const SolveArgs& args, Streams io) {
  const HypergraphDocument doc = read_document(args.path, io.in);
  Solver solver(SolverOptions{args.bound});
  const auto start = Clock::now();
  const Winner w = solver.solve(doc.graph, args.last);
  io.out << "winner: " << to_string(w) << '\n'
         << "last: " << to_string(args.last) << '\n'
         << "nodes: " << solver.stats().nodes << '\n'
         << "memo_hits: " << solver.stats().memo_hits << '\n'
         << "seconds: " << seconds_since(start) << '\n';
  return kExitOk;
}

int cmd_outcome(const OutcomeArgs& args, Streams io) {
  const HypergraphDocument doc = read_document(args.path, io.in);
  if (args.method == OutcomeMethod::Oracle) {
    Solver solver(SolverOptions{args.bound});
    const Winner al = solver.solve(doc.graph, LastPlayer::AvoiderLast);
    const Winner el = solver.solve(doc.graph, LastPlayer::EnforcerLast);
    io.out << "outcome: " << to_string(outcome_from_winners(al, el)) << '\n'
           << "avoider_last: " << to_string(al) << " (oracle)\n"
           << "enforcer_last: " << to_string(el) << " (oracle)\n"
           << "nodes: " << solver.stats().nodes << '\n';
    return kExitOk;
  }
  ClassifierOptions options;
  options.oracle_bound = args.bound;
  options.allow_oracle = args.method == OutcomeMethod::Auto;
  const Classification c = classify(doc.graph, options);
  const ClassifierVerdict& v = c.verdict;
  io.out << "outcome: " << to_string(v.outcome) << '\n'
         << "avoider_last: " << to_string(v.avoider_last) << " ("
         << to_string(v.avoider_last_method) << ")\n"
         << "enforcer_last: " << to_string(v.enforcer_last) << " ("
         << to_string(v.enforcer_last_method) << ")\n"
         << "certificate: " << summarize(c.certificate) << '\n';
  std::string why;
  if (!validate_certificate(c.board, c.certificate, &why)) {
    io.err << "certificate rejected: " << why << '\n';
    return kExitViolations;
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, Streams io) {
  std::vector<Suite> suites;
  if (args.suite == "all") {
    suites.assign(std::begin(kAllSuites), std::end(kAllSuites));
  } else if (auto s = parse_suite(args.suite)) {
    suites.push_back(*s);
  } else {
    throw InputError("unknown suite " + args.suite);
  }
  std::ofstream log;
  if (!args.log_path.empty()) {
    log.open(args.log_path, std::ios::binary);
    if (!log) throw InputError("cannot write " + args.log_path);
  }
  std::ostream& sink = args.log_path.empty() ? io.err : log;
  SuiteOptions options;
  options.max_n = args.max_n;
  options.seed = args.seed;
  options.jobs = args.jobs;
  options.samples = args.samples;
  options.on_violation = [&sink](const Violation& v) {
    sink << to_json_line(v) << '\n';
  };
  std::uint64_t violations = 0;
  for (Suite s : suites) {
    const SuiteReport r = verify_suite(s, options);
    violations += r.violation_count;
    io.out << r.name << ": " << (r.passed() ? "PASS" : "FAIL")
           << " instances=" << r.instances
           << " violations=" << r.violation_count << " seconds=" << r.seconds;
    for (const auto& [key, count] : r.counters) io.out << ' ' << key << '=' << count;
    io.out << '\n';
    for (const std::string& note : r.notes) io.out << "  " << note << '\n';
  }
  return violations == 0 ? kExitOk : kExitViolations;
}

int cmd_gen(const GenArgs& args, Streams io) {
  const Hypergraph h = gen_family(args.spec);
  write_output(args.output, serialize(name_vertices(h), args.format), io.out);
  return kExitOk;
}

int cmd_reduce(const TransformArgs& args, Streams io) {
  const HypergraphDocument doc = read_document(args.path, io.in);
  const Rank3Reduction r = reduce_rank3_traced(doc.graph);
  io.out << serialize(rename_from(doc, r.reduced, r.surviving), args.format);
  return kExitOk;
}

int cmd_dual(const TransformArgs& args, Streams io) {
  const HypergraphDocument doc = read_document(args.path, io.in);
  io.out << serialize(HypergraphDocument{doc.names, transversal_dual(doc.graph)},
                      args.format);
  return kExitOk;
}

int cmd_conjecture(const ConjectureArgs& args, Streams io) {
  SuiteOptions options;
  options.seed = args.seed;
  options.jobs = args.jobs;
  options.max_recorded = 50;
  const SuiteReport r = conjecture_search(args.d, args.max_n, args.seed, options);
  io.out << r.name << ": instances=" << r.instances
         << " witnesses=" << r.violation_count << " seconds=" << r.seconds;
  for (const auto& [key, count] : r.counters) io.out << ' ' << key << '=' << count;
  io.out << "\nwitnesses are instances on which Avoider wins as second-to-last; "
            "this is bounded evidence, not a proof\n";
  for (const Violation& v : r.violations) io.out << to_json_line(v) << '\n';
  return kExitOk;
}

std::string to_json(const Transcript& t) {
  nlohmann::json j;
  j["last"] = std::string(to_string(t.last));
  j["moves"] = nlohmann::json::array();
  for (const TranscriptMove& m : t.moves) {
    j["moves"].push_back({{"player", std::string(to_string(m.player))},
                          {"vertex", m.vertex},
                          {"before", std::string(to_string(m.before))},
                          {"after", std::string(to_string(m.after))}});
  }
  j["winner"] = std::string(to_string(t.winner));
  return j.dump(2) + "\n";
}

Winner replay(const HypergraphDocument& doc, const Transcript& t) {
  const auto board = std::make_shared<const Hypergraph>(doc.graph);
  GameState s = GameState::initial(board, t.last);
  for (std::size_t i = 0; i < t.moves.size(); ++i) {
    const TranscriptMove& m = t.moves[i];
    if (decided(s)) throw InputError("move " + std::to_string(i) + " after the end");
    if (m.player != s.to_move()) {
      throw InputError("move " + std::to_string(i) + " by the wrong player");
    }
    const VertexId v = find_vertex(doc, m.vertex);
    if (v < 0 || s.is_picked(v)) {
      throw InputError("move " + std::to_string(i) + " is illegal");
    }
    s = s.after(v);
  }
  const auto w = decided(s);
  if (!w) throw InputError("transcript ends before the game is decided");
  return *w;
}

std::optional<VertexId> pairing_hint(const Pairing& pairing,
                                     const GameState& state) {
  const int n = state.board().num_vertices();
  std::vector<VertexId> partner(n, -1);
  for (const auto& [a, b] : pairing.pairs) {
    partner[a] = b;
    partner[b] = a;
  }
  const VertexMask enforcer = state.enforcer_mask();
  std::optional<VertexId> unpaired;
  std::optional<VertexId> untouched;
  for (VertexId v : state.unpicked()) {
    const VertexId p = partner[v];
    if (p >= 0 && (enforcer >> p & 1)) return v;
    if (p < 0 && !unpaired) unpaired = v;
    if (p >= 0 && !state.is_picked(p) && !untouched) untouched = v;
  }
  return unpaired ? unpaired : untouched;
}

int cmd_play(const PlayArgs& args, Streams io, Transcript* transcript) {
  if (args.path == "-") {
    throw InputError("play reads moves from standard input; pass the board as a file");
  }
  const HypergraphDocument doc = read_document(args.path, io.in);
  const Hypergraph& h = doc.graph;
  if (h.num_vertices() > args.bound) {
    throw ResourceError("board has " + std::to_string(h.num_vertices()) +
                        " vertices; play supports at most " +
                        std::to_string(args.bound));
  }
  Solver solver(SolverOptions{args.bound});
  const auto board = std::make_shared<const Hypergraph>(h);
  GameState state = GameState::initial(board, args.last);
  const Player engine = opponent(args.human);

  std::optional<Pairing> pairing;
  if (args.hints && args.human == Player::Avoider) {
    pairing = find_pairing(h);
    if (pairing) {
      io.out << "pairing:";
      for (const auto& [a, b] : pairing->pairs) {
        io.out << ' ' << doc.names[a] << '-' << doc.names[b];
      }
      io.out << "\nnever take both vertices of a pair\n";
    } else {
      io.out << "no pairing found\n";
    }
  }
  io.out << "you are " << to_string(args.human) << ", " << to_string(args.last)
         << "; with perfect play " << to_string(value(solver, state, args.last))
         << " wins\n";

  Transcript t;
  t.last = args.last;
  while (!decided(state)) {
    print_board(doc, state, io.out);
    const Player mover = state.to_move();
    const Winner before = value(solver, state, args.last);
    VertexId pick = -1;
    if (mover == engine) {
      pick = solver.best_move(state, args.last);
      io.out << "engine picks " << doc.names[pick] << '\n';
    } else {
      if (pairing) {
        if (auto hint = pairing_hint(*pairing, state)) {
          io.out << "hint: " << doc.names[*hint] << '\n';
        }
      }
      while (pick < 0) {
        io.out << "pick> " << std::flush;
        std::string name;
        if (!(io.in >> name)) throw InputError("input ended before the game did");
        const VertexId v = find_vertex(doc, name);
        if (v < 0 || state.is_picked(v)) {
          io.out << "illegal pick '" << name << "'; choose a remaining vertex\n";
          continue;
        }
        pick = v;
      }
    }
    state = state.after(pick);
    t.moves.push_back({mover, doc.names[pick], before,
                       value(solver, state, args.last)});
  }
  t.winner = *decided(state);
  io.out << "winner: " << to_string(t.winner) << '\n';
  if (!args.transcript_path.empty()) {
    write_output(args.transcript_path, to_json(t), io.out);
  }
  if (transcript) *transcript = std::move(t);
  return kExitOk;
}

}  // namespace aegame::cli
