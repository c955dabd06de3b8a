#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folderol/prover.hpp"
#include "folderol/proof_tree.hpp"

namespace folderol {

/// Splits "A1; A2 |- B1; B2" into formula texts. Either side may be empty.
/// Throws SyntaxError when there is no "|-" or more than one.
std::pair<std::vector<std::string>, std::vector<std::string>> split_sequent_text(std::string_view text);

/// Parses sequent text as produced by split_sequent_text.
Sequent parse_sequent(std::string_view text);

struct SessionOptions {
  /// Safety cap on the steps taken by one run command.
  std::optional<std::size_t> max_steps;
  ProverOptions prover;
  /// Largest bound tried by the prove command when none is given.
  int default_bound = 4;
};

/// Exit status of a command: 0 proved/accepted/ok, 1 not proved/rejected,
/// 2 usage or parse error.
struct CommandResult {
  int code = 0;
  bool quit = false;
};

/**
 * Interactive proof session: one goal table driven by the Folderol engine,
 * plus entry points for the bounded prover and the checker. All output goes
 * to the stream given at construction.
 */
class Session {
 public:
  explicit Session(std::ostream& out, SessionOptions options = {});

  /// Runs one command line. Blank lines and lines starting with '#' are
  /// ignored.
  CommandResult execute(std::string_view line);
  /// Runs every line of in; the result is the last nonzero status, or 0.
  CommandResult run_script(std::istream& in);

  int read_goal(const std::string& formula);
  int read_goalseq(const std::vector<std::string>& left, const std::vector<std::string>& right);
  int step();
  int steps(int n);
  int run();
  int fail_goal(int n, const std::string& formula);
  int prove(const std::string& sequent, std::optional<int> bound, const std::optional<std::string>& emit);
  int check(const std::string& path);
  int script(const std::string& path);

  const GoalTable& table() const noexcept { return table_; }
  const std::vector<TraceEvent>& history() const noexcept { return history_; }

 private:
  int advance(int n, std::optional<std::size_t> cap);
  void help();

  std::ostream& out_;
  SessionOptions options_;
  Engine engine_;
  GoalTable table_;
  std::vector<TraceEvent> history_;
  int script_depth_ = 0;
};

}  // namespace folderol
