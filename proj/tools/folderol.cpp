// folderol - command line front end.
//
//   folderol                      interactive session (same as "repl")
//   folderol script FILE          run session commands from FILE
//   folderol run "A; B |- C"      run the automatic strategy on a sequent
//   folderol prove [--bound N] [--emit FILE] "A |- C"
//   folderol check FILE
//
// Exit status: 0 proved/accepted, 1 not proved/rejected, 2 usage or parse error.

#include <unistd.h>

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "folderol/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Folderol: a sequent-calculus prover for first-order logic"};
  app.require_subcommand(0, 1);

  folderol::SessionOptions options;
  std::size_t max_steps = 0;
  std::uint64_t seed = 0;
  app.add_option("--max-steps", max_steps, "Stop run after this many steps (0 = no limit)");
  auto* seed_opt = app.add_option("--seed", seed, "Close goals with a randomly chosen unifiable pair");
  app.add_flag("--dedup", options.prover.remove_duplicates, "Drop duplicate formulae from new subgoals");

  auto* repl = app.add_subcommand("repl", "Interactive session (default)");

  std::string script_path;
  auto* script = app.add_subcommand("script", "Run session commands from a file");
  script->add_option("file", script_path, "Command file")->required();

  std::string run_seq;
  auto* run = app.add_subcommand("run", "Run the automatic strategy on a sequent");
  run->add_option("sequent", run_seq, "Sequent text, e.g. \"P & Q |- Q & P\"")->required();

  std::string prove_seq;
  int bound = 4;
  std::string emit;
  auto* prove = app.add_subcommand("prove", "Bounded backtracking search with a checkable proof");
  prove->add_option("sequent", prove_seq, "Sequent text")->required();
  prove->add_option("--bound", bound, "Largest quantifier-expansion bound to try")->check(CLI::NonNegativeNumber);
  prove->add_option("--emit", emit, "Write the proof tree to this file");

  std::string check_path;
  auto* check = app.add_subcommand("check", "Check a proof tree file");
  check->add_option("file", check_path, "Proof tree file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (max_steps > 0) options.max_steps = max_steps;
  if (seed_opt->count() > 0) options.prover.seed = seed;
  folderol::Session session(std::cout, options);

  if (*script) return session.script(script_path);
  if (*check) return session.check(check_path);
  if (*prove) {
    std::optional<std::string> out;
    if (!emit.empty()) out = emit;
    return session.prove(prove_seq, bound, out);
  }
  if (*run) {
    std::pair<std::vector<std::string>, std::vector<std::string>> sides;
    try {
      sides = folderol::split_sequent_text(run_seq);
    } catch (const std::exception& e) {
      std::cout << "Error: " << e.what() << "\n";
      return 2;
    }
    if (int code = session.read_goalseq(sides.first, sides.second); code != 0) return code;
    session.run();
    return session.table().empty() ? 0 : 1;
  }

  (void)repl;
  const bool interactive = isatty(STDIN_FILENO) != 0;
  if (interactive) std::cout << "Folderol. Type help for commands.\n";
  int last = 0;
  std::string line;
  while (true) {
    if (interactive) std::cout << "> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    folderol::CommandResult r = session.execute(line);
    if (r.code != 0) last = r.code;
    if (r.quit) break;
  }
  return interactive ? 0 : last;
}
