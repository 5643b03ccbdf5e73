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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "aegame/errors.h"

namespace aegame::cli {
namespace {

class CliTest : public ::testing::Test {
 protected:
  std::string write_board(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() /
                      ("aegame_cli_test_" + std::to_string(::getpid()) + "_" + name);
    std::ofstream(path) << text;
    paths_.push_back(path);
    return path.string();
  }
  void TearDown() override {
    for (const auto& p : paths_) std::filesystem::remove(p);
  }

  std::istringstream in_;
  std::ostringstream out_;
  std::ostringstream err_;
  Streams io() { return {in_, out_, err_}; }

 private:
  std::vector<std::filesystem::path> paths_;
};

constexpr const char* kC4 = "a b\nb c\nc d\nd a\n";

TEST_F(CliTest, SolveReadsStandardInput) {
  in_.str(kC4);
  EXPECT_EQ(cmd_solve({.path = "-"}, io()), kExitOk);
  EXPECT_NE(out_.str().find("winner: Enforcer"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("nodes: "), std::string::npos);
}

TEST_F(CliTest, OutcomeMethods) {
  const std::string c4 = write_board("c4", kC4);
  EXPECT_EQ(cmd_outcome({.path = c4, .method = OutcomeMethod::Structural}, io()), kExitOk);
  EXPECT_NE(out_.str().find("outcome: E"), std::string::npos);
  EXPECT_NE(out_.str().find("ForbiddenSubgraph"), std::string::npos);
  out_.str("");
  EXPECT_EQ(cmd_outcome({.path = c4, .method = OutcomeMethod::Oracle}, io()), kExitOk);
  EXPECT_NE(out_.str().find("(oracle)"), std::string::npos);
}

TEST_F(CliTest, StructuralFailsLoudly) {
  std::ostringstream gen_out;
  Streams gen_io{in_, gen_out, err_};
  cmd_gen({.spec = {.family = Family::PrismHub}}, gen_io);
  const std::string hub = write_board("hub", gen_out.str());
  try {
    cmd_outcome({.path = hub, .method = OutcomeMethod::Structural}, io());
    FAIL();
  } catch (const UnsupportedInput& e) {
    EXPECT_EQ(report_error(e, err_), kExitInputError);
  }
  try {
    cmd_solve({.path = hub, .bound = 10}, io());
    FAIL();
  } catch (const ResourceError& e) {
    EXPECT_EQ(report_error(e, err_), kExitResource);
  }
}

TEST_F(CliTest, ErrorCodes) {
  EXPECT_EQ(report_error(ParseError(3, "bad"), err_), kExitInputError);
  EXPECT_EQ(report_error(InvariantViolation("bug"), err_), kExitViolations);
  EXPECT_THROW(cmd_solve({.path = "/nonexistent/board"}, io()), InputError);
}

TEST_F(CliTest, GenReduceDual) {
  cmd_gen({.spec = {.family = Family::Chain, .n = 2}}, io());
  EXPECT_EQ(out_.str(), "vertices: v0 v1 v2 v3 v4\nv0 v1 v2\nv2 v3 v4\n");
  in_.str(out_.str());
  out_.str("");
  EXPECT_EQ(cmd_reduce({.path = "-"}, io()), kExitOk);
  EXPECT_EQ(out_.str(), "vertices: v4\n");
  in_.clear();
  in_.str(kC4);
  out_.str("");
  EXPECT_EQ(cmd_dual({.path = "-"}, io()), kExitOk);
  EXPECT_EQ(out_.str(), "vertices: a b c d\na c\nb d\n");
}

TEST_F(CliTest, GenJsonRoundTrips) {
  cmd_gen({.spec = {.family = Family::Prism}, .format = DocumentFormat::Json}, io());
  const HypergraphDocument doc = parse_document(out_.str());
  EXPECT_EQ(doc.graph, gen_family({.family = Family::Prism}));
}

TEST_F(CliTest, VerifyReportsPass) {
  EXPECT_EQ(cmd_verify({.suite = "Rank2", .max_n = 4}, io()), kExitOk);
  EXPECT_NE(out_.str().find("Rank2: PASS"), std::string::npos) << out_.str();
  EXPECT_THROW(cmd_verify({.suite = "Nope"}, io()), InputError);
}

TEST_F(CliTest, ConjectureListsWitnesses) {
  EXPECT_EQ(cmd_conjecture({.d = 2, .max_n = 6}, io()), kExitOk);
  EXPECT_NE(out_.str().find("witnesses="), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("\"suite\""), std::string::npos) << out_.str();
}

TEST_F(CliTest, PlayOnSingleVertex) {
  const std::string p1 = write_board("p1", "vertices: a\n");
  in_.str("a\n");
  Transcript t;
  EXPECT_EQ(cmd_play({.path = p1}, io(), &t), kExitOk);
  ASSERT_EQ(t.moves.size(), 1u);
  EXPECT_EQ(t.winner, Winner::Avoider);
}

TEST_F(CliTest, PlayRepromptsOnIllegalPicks) {
  const std::string c4 = write_board("c4", kC4);
  in_.str("zz a b c d\n");
  Transcript t;
  EXPECT_EQ(cmd_play({.path = c4}, io(), &t), kExitOk);
  EXPECT_NE(out_.str().find("illegal pick 'zz'"), std::string::npos);
  EXPECT_EQ(t.winner, Winner::Enforcer);
  const HypergraphDocument doc = parse_text(kC4);
  EXPECT_EQ(replay(doc, t), t.winner);
}

TEST_F(CliTest, PlayStopsAtEndOfInput) {
  const std::string c4 = write_board("c4", kC4);
  in_.str("");
  EXPECT_THROW(cmd_play({.path = c4}, io()), InputError);
  EXPECT_THROW(cmd_play({.path = "-"}, io()), InputError);
}

TEST_F(CliTest, PlayRefusesLargeBoards) {
  std::ostringstream gen_out;
  Streams gen_io{in_, gen_out, err_};
  cmd_gen({.spec = {.family = Family::Pn, .n = 12}}, gen_io);
  const std::string big = write_board("big", gen_out.str());
  EXPECT_THROW(cmd_play({.path = big, .bound = 10}, io()), ResourceError);
}

// Every human line of play on a small board: the engine never gives away a
// won game and every transcript replays to its recorded winner.
void explore(const std::string& path, const HypergraphDocument& doc, Player human,
             LastPlayer last, std::vector<std::string> prefix, int* games) {
  std::string script;
  for (const std::string& s : prefix) script += s + "\n";
  std::istringstream in(script);
  std::ostringstream out;
  std::ostringstream err;
  Transcript t;
  try {
    cmd_play({.path = path, .human = human, .last = last}, {in, out, err}, &t);
  } catch (const InputError&) {
    // The script ran out: branch on every legal human pick.
    const auto board = std::make_shared<const Hypergraph>(doc.graph);
    GameState s = GameState::initial(board, last);
    Solver solver;
    std::size_t used = 0;
    while (s.to_move() != human || used < prefix.size()) {
      if (s.to_move() == human) {
        s = s.after(find_vertex(doc, prefix[used++]));
      } else {
        s = s.after(solver.best_move(s, last));
      }
    }
    for (VertexId v : s.unpicked()) {
      auto next = prefix;
      next.push_back(doc.names[v]);
      explore(path, doc, human, last, next, games);
    }
    return;
  }
  ++(*games);
  EXPECT_EQ(replay(doc, t), t.winner);
  for (const TranscriptMove& m : t.moves) {
    if (m.player == opponent(human) && m.before == as_winner(m.player)) {
      EXPECT_EQ(m.after, m.before) << "engine gave away a won game";
    }
  }
}

TEST_F(CliTest, EngineNeverLosesValue) {
  for (const char* text : {kC4, "a b\nb c\n", "a b\nb c\nc a\nc d\n"}) {
    const std::string path = write_board("explore", text);
    const HypergraphDocument doc = parse_text(text);
    for (Player human : {Player::Avoider, Player::Enforcer}) {
      for (LastPlayer last : {LastPlayer::AvoiderLast, LastPlayer::EnforcerLast}) {
        int games = 0;
        explore(path, doc, human, last, {}, &games);
        EXPECT_GT(games, 0);
      }
    }
  }
}

TEST_F(CliTest, EngineBeatsAvoiderOnC4) {
  const std::string c4 = write_board("c4", kC4);
  const HypergraphDocument doc = parse_text(kC4);
  for (LastPlayer last : {LastPlayer::AvoiderLast, LastPlayer::EnforcerLast}) {
    // Two human picks, any order.
    for (const char* first : {"a", "b", "c", "d"}) {
      for (const char* second : {"a", "b", "c", "d"}) {
        std::istringstream in(std::string(first) + " " + second + " a b c d\n");
        std::ostringstream out;
        std::ostringstream err;
        Transcript t;
        cmd_play({.path = c4, .last = last}, {in, out, err}, &t);
        EXPECT_EQ(t.winner, Winner::Enforcer);
      }
    }
  }
}

// Avoider follows the pairing hint against every Enforcer line.
bool hint_wins(const Pairing& p, const GameState& s) {
  if (s.avoider_filled_edge()) return false;
  if (s.all_picked()) return true;
  if (s.to_move() == Player::Avoider) {
    const auto hint = pairing_hint(p, s);
    return hint && hint_wins(p, s.after(*hint));
  }
  for (VertexId v : s.unpicked()) {
    if (!hint_wins(p, s.after(v))) return false;
  }
  return true;
}

TEST(PairingHintTest, FollowingPairsAlwaysWins) {
  for (const Hypergraph& h :
       {gen_family({.family = Family::Cycle3u, .n = 3}),
        gen_family({.family = Family::Cycle3u, .n = 4}),
        Hypergraph(7, {{0, 1, 2}, {2, 3}, {4, 5, 6}}),
        enforcer_update(gen_family({.family = Family::Nunchaku, .n = 3}), 0)}) {
    const auto pairing = find_pairing(h);
    ASSERT_TRUE(pairing) << h;
    const auto board = std::make_shared<const Hypergraph>(h);
    for (LastPlayer last : {LastPlayer::AvoiderLast, LastPlayer::EnforcerLast}) {
      EXPECT_TRUE(hint_wins(*pairing, GameState::initial(board, last))) << h;
    }
  }
}

TEST_F(CliTest, PlayPrintsPairingHints) {
  std::ostringstream gen_out;
  Streams gen_io{in_, gen_out, err_};
  cmd_gen({.spec = {.family = Family::Cycle3u, .n = 3}}, gen_io);
  const std::string cycle = write_board("cycle", gen_out.str());
  in_.str("v0 v1 v2 v3 v4 v5\n");
  EXPECT_EQ(cmd_play({.path = cycle, .hints = true}, io()), kExitOk);
  EXPECT_NE(out_.str().find("pairing:"), std::string::npos);
  EXPECT_NE(out_.str().find("hint: "), std::string::npos);
}

TEST(TranscriptTest, ReplayRejectsBadTranscripts) {
  const HypergraphDocument doc = parse_text("a b\n");
  Transcript t;
  t.last = LastPlayer::AvoiderLast;
  t.moves = {{Player::Avoider, "a"}};
  EXPECT_THROW(replay(doc, t), InputError);
  t.moves = {{Player::Enforcer, "a"}, {Player::Avoider, "a"}};
  EXPECT_THROW(replay(doc, t), InputError);
  t.moves = {{Player::Enforcer, "a"}};
  EXPECT_THROW(replay(doc, t), InputError);
  t.moves = {{Player::Enforcer, "a"}, {Player::Avoider, "b"}};
  EXPECT_EQ(replay(doc, t), Winner::Avoider);
  EXPECT_NE(to_json(t).find("\"winner\""), std::string::npos);
}

}  // namespace
}  // namespace aegame::cli
