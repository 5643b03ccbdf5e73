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


// Subcommands of the aegame tool. Each returns a process exit code and
// talks only through the streams it is given, so tests can drive it.

#ifndef AEGAME_TOOLS_COMMANDS_H_
#define AEGAME_TOOLS_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aegame/document.h"
#include "aegame/game.h"
#include "aegame/harness.h"
#include "aegame/oracle.h"
#include "aegame/structure.h"

namespace aegame::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolations = 1,
  kExitInputError = 2,
  kExitResource = 3,
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// Reads a document from a path, or from `in` when the path is "-".
HypergraphDocument read_document(const std::string& path, std::istream& in);

// Maps the library's error types onto exit codes and prints the message.
int report_error(const std::exception& e, std::ostream& err);

struct SolveArgs {
  std::string path;
  LastPlayer last = LastPlayer::AvoiderLast;
  int bound = kDefaultOracleBound;
};
int cmd_solve(const SolveArgs& args, Streams io);

enum class OutcomeMethod { Auto, Oracle, Structural };

struct OutcomeArgs {
  std::string path;
  OutcomeMethod method = OutcomeMethod::Auto;
  int bound = kDefaultOracleBound;
};
int cmd_outcome(const OutcomeArgs& args, Streams io);

struct VerifyArgs {
  // Suite name or "all".
  std::string suite = "all";
  int max_n = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
  int samples = -1;
  // JSON-lines file for violations; empty for none.
  std::string log_path;
};
int cmd_verify(const VerifyArgs& args, Streams io);

struct GenArgs {
  GenSpec spec;
  std::string output = "-";
  DocumentFormat format = DocumentFormat::Text;
};
int cmd_gen(const GenArgs& args, Streams io);

struct TransformArgs {
  std::string path;
  DocumentFormat format = DocumentFormat::Text;
};
// Rank-3 leaf-edge reduction, names preserved.
int cmd_reduce(const TransformArgs& args, Streams io);
// Minimal transversals on the same vertex names.
int cmd_dual(const TransformArgs& args, Streams io);

struct ConjectureArgs {
  int d = 3;
  int max_n = 8;
  std::uint64_t seed = 0;
  int jobs = 1;
};
int cmd_conjecture(const ConjectureArgs& args, Streams io);

struct TranscriptMove {
  Player player = Player::Avoider;
  std::string vertex;
  // Game value for the mover before and after the pick.
  Winner before = Winner::Avoider;
  Winner after = Winner::Avoider;
};

struct Transcript {
  LastPlayer last = LastPlayer::AvoiderLast;
  std::vector<TranscriptMove> moves;
  Winner winner = Winner::Avoider;
};

std::string to_json(const Transcript& t);

// Replays a transcript through the rules. Returns the winner the rules
// produce; throws InputError on alternation or legality errors.
Winner replay(const HypergraphDocument& doc, const Transcript& t);

// Avoider's pick under a pairing strategy: the partner of an Enforcer
// vertex, then an unpaired vertex, then a vertex of an untouched pair.
// nullopt when every free vertex would complete a pair.
std::optional<VertexId> pairing_hint(const Pairing& pairing,
                                     const GameState& state);

struct PlayArgs {
  std::string path;
  Player human = Player::Avoider;
  LastPlayer last = LastPlayer::AvoiderLast;
  int bound = kDefaultOracleBound;
  bool hints = false;
  // Where to write the transcript as JSON; empty for none.
  std::string transcript_path;
};

// Interactive game against the engine. Human picks are read by name from
// io.in; end of input aborts with kExitInputError.
int cmd_play(const PlayArgs& args, Streams io, Transcript* transcript = nullptr);

}  // namespace aegame::cli

#endif  // AEGAME_TOOLS_COMMANDS_H_
