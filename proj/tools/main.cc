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

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.h"

namespace {

using aegame::DocumentFormat;
using aegame::LastPlayer;
using aegame::Player;
namespace cli = aegame::cli;

const std::map<std::string, LastPlayer> kLastNames = {
    {"avoider", LastPlayer::AvoiderLast}, {"enforcer", LastPlayer::EnforcerLast}};
const std::map<std::string, Player> kPlayerNames = {
    {"avoider", Player::Avoider}, {"enforcer", Player::Enforcer}};
const std::map<std::string, DocumentFormat> kFormatNames = {
    {"text", DocumentFormat::Text}, {"json", DocumentFormat::Json}};
const std::map<std::string, cli::OutcomeMethod> kMethodNames = {
    {"auto", cli::OutcomeMethod::Auto},
    {"oracle", cli::OutcomeMethod::Oracle},
    {"structural", cli::OutcomeMethod::Structural}};

std::map<std::string, aegame::Family> family_names() {
  std::map<std::string, aegame::Family> names;
  for (int i = 0; i <= static_cast<int>(aegame::Family::RandomLinear3); ++i) {
    const auto f = static_cast<aegame::Family>(i);
    names.emplace(std::string(aegame::to_string(f)), f);
  }
  return names;
}

// Parses into a string and assigns the mapped value, sidestepping CLI11's
// handling of enums that have a to_string overload.
template <class T>
CLI::Option* add_choice(CLI::App* app, const std::string& name, T& target,
                        const std::map<std::string, T>& names,
                        const std::string& help) {
  return app
      ->add_option_function<std::string>(
          name,
          [&target, &names](const std::string& value) {
            target = names.at(value);
          },
          help)
      ->check(CLI::IsMember(names));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Avoider-Enforcer game solver, classifiers and verification harness"};
  app.require_subcommand(1);
  cli::Streams io{std::cin, std::cout, std::cerr};
  std::function<int()> run;

  cli::SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Exact winner for one order of play");
  solve_cmd->add_option("file", solve.path, "Board file, - for stdin")->required();
  add_choice(solve_cmd, "--last", solve.last, kLastNames, "Who moves last");
  solve_cmd->add_option("--bound", solve.bound, "Largest vertex count to search")
      ->check(CLI::Range(1, aegame::kMaxOracleBound));
  solve_cmd->callback([&] { run = [&] { return cli::cmd_solve(solve, io); }; });

  cli::OutcomeArgs outcome;
  auto* outcome_cmd = app.add_subcommand("outcome", "Outcome class A, SL or E");
  outcome_cmd->add_option("file", outcome.path, "Board file, - for stdin")->required();
  add_choice(outcome_cmd, "--method", outcome.method, kMethodNames,
             "auto, oracle or structural");
  outcome_cmd->add_option("--bound", outcome.bound, "Vertex bound for the oracle")
      ->check(CLI::Range(1, aegame::kMaxOracleBound));
  outcome_cmd->callback([&] { run = [&] { return cli::cmd_outcome(outcome, io); }; });

  cli::VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", verify.suite, "Suite name or all");
  verify_cmd->add_option("--max-n", verify.max_n, "Vertex bound, 0 for the default")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", verify.seed, "Seed for sampled populations");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--samples", verify.samples,
                         "Random samples, -1 for the default");
  verify_cmd->add_option("--log", verify.log_path, "JSON-lines violation log");
  verify_cmd->callback([&] { run = [&] { return cli::cmd_verify(verify, io); }; });

  cli::GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a named family");
  const auto families = family_names();
  add_choice(gen_cmd, "--family", gen.spec.family, families, "Family name")
      ->required();
  gen_cmd->add_option("--n", gen.spec.n, "Vertex count or walk length");
  gen_cmd->add_option("--leaves", gen.spec.leaves, "Pseudo-star leaves");
  gen_cmd->add_option("--paths", gen.spec.pendant_paths, "Pseudo-star pendant paths");
  gen_cmd->add_option("--triangles", gen.spec.triangles, "Pseudo-star triangles");
  gen_cmd->add_option("--p", gen.spec.p, "Edge probability for random graphs");
  gen_cmd->add_option("--edges", gen.spec.edges, "Target edges for random linear");
  gen_cmd->add_option("--seed", gen.spec.seed, "Seed for random families");
  gen_cmd->add_option("-o,--output", gen.output, "Output file, - for stdout");
  add_choice(gen_cmd, "--format", gen.format, kFormatNames, "text or json");
  gen_cmd->callback([&] { run = [&] { return cli::cmd_gen(gen, io); }; });

  cli::TransformArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Remove rank-3 leaf-edges");
  reduce_cmd->add_option("file", reduce.path, "Board file, - for stdin")->required();
  add_choice(reduce_cmd, "--format", reduce.format, kFormatNames, "text or json");
  reduce_cmd->callback([&] { run = [&] { return cli::cmd_reduce(reduce, io); }; });

  cli::TransformArgs dual;
  auto* dual_cmd = app.add_subcommand("dual", "Minimal transversals");
  dual_cmd->add_option("file", dual.path, "Board file, - for stdin")->required();
  add_choice(dual_cmd, "--format", dual.format, kFormatNames, "text or json");
  dual_cmd->callback([&] { run = [&] { return cli::cmd_dual(dual, io); }; });

  cli::PlayArgs play;
  auto* play_cmd = app.add_subcommand("play", "Play against the engine");
  play_cmd->add_option("file", play.path, "Board file")->required();
  add_choice(play_cmd, "--as", play.human, kPlayerNames, "Your side");
  add_choice(play_cmd, "--last", play.last, kLastNames, "Who moves last");
  play_cmd->add_option("--bound", play.bound, "Largest board accepted")
      ->check(CLI::Range(1, aegame::kMaxOracleBound));
  play_cmd->add_flag("--hints", play.hints, "Print pairing hints when playing Avoider");
  play_cmd->add_option("--transcript", play.transcript_path, "Write the game as JSON");
  play_cmd->callback([&] { run = [&] { return cli::cmd_play(play, io); }; });

  cli::ConjectureArgs conjecture;
  auto* conjecture_cmd = app.add_subcommand(
      "conjecture", "Search for boards where Avoider wins as second-to-last");
  conjecture_cmd->add_option("--d", conjecture.d, "Minimum degree")
      ->check(CLI::NonNegativeNumber);
  conjecture_cmd->add_option("--max-n", conjecture.max_n, "Vertex bound")
      ->check(CLI::Range(1, aegame::kMaxOracleBound));
  conjecture_cmd->add_option("--seed", conjecture.seed, "Seed for sampled joins");
  conjecture_cmd->add_option("--jobs", conjecture.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  conjecture_cmd->callback(
      [&] { run = [&] { return cli::cmd_conjecture(conjecture, io); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitInputError;
  }
  try {
    return run();
  } catch (const std::exception& e) {
    return cli::report_error(e, std::cerr);
  }
}
