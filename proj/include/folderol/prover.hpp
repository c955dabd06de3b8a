#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "folderol/term.hpp"
#include "folderol/unify.hpp"

namespace folderol {

enum class Side { Left, Right };

struct Entry {
  int cost;
  Side side;
  Formula formula;
};

/// Entries ordered by nondecreasing cost; the head is reduced next.
using Goal = std::vector<Entry>;
/// Open goals, current goal first. Empty means the proof is finished.
using GoalTable = std::vector<Goal>;

struct SidedFormula {
  Side side;
  Formula formula;
};

class ProverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 1 for rules with one premise, 2 for case splits, 3 for quantifier
/// expansion, 4 when nothing applies.
int cost(Side side, const Formula& a);
Entry make_entry(Side side, Formula a);

/// Before entries of equal cost.
void insert_early(Entry e, Goal& g);
/// After entries of equal cost.
void insert_late(Entry e, Goal& g);

struct SplitGoal {
  std::vector<Formula> left;
  std::vector<Formula> right;
};
SplitGoal split_goal(const Goal& g);

/// Inserts each pair early, in order. With remove_duplicates set, a pair
/// already present on the same side is dropped.
Goal new_goal(Goal g, const std::vector<SidedFormula>& pairs, bool remove_duplicates = false);
Goal make_goal(const std::vector<Formula>& left, const std::vector<Formula>& right);

Goal instantiate_goal(const Environment& env, const Goal& g);
GoalTable instantiate_table(const Environment& env, const GoalTable& tab);

struct Solution {
  Formula formula;  // the left atom, uninstantiated
  Environment env;
};

/// The first left atom, right atom pair (in split order) that unifies.
std::optional<Solution> solve_goal(const Goal& g);
/// Every unifiable pair, in the order solve_goal would try them.
std::vector<Solution> all_solutions(const Goal& g);

std::vector<std::string> vars_in_goal(const Goal& g, std::vector<std::string> acc);
std::vector<ParamInfo> params_in_table(const GoalTable& tab);

/// Rule name for reducing e: connective or quantifier, then ":left"/":right".
std::string rule_name(const Entry& e);

/// Subgoals from reducing head against the rest of its goal, drawing fresh
/// names from names. Returns nullopt when head is atomic.
std::optional<std::vector<Goal>> reduce_goal(const Entry& head, const Goal& rest, NameSupply& names,
                                             bool remove_duplicates = false);

using Solver = std::function<std::optional<Solution>(const Goal&)>;

struct Inserted {
  std::vector<Formula> closed;  // success formulae, in closing order
  GoalTable table;
};

/// Tries to close each new goal with solve; a closed goal's environment
/// instantiates the remaining new goals and the table. Unsolved goals go
/// onto the table front, so the last one ends up on top.
Inserted insert_goals(std::vector<Goal> goals, GoalTable tab, const Solver& solve = solve_goal);

struct TraceEvent {
  std::string rule;
  std::size_t indent = 0;             // number of other open goals
  std::vector<Formula> closed;        // success formulae, in closing order
};

struct ProverOptions {
  /// When set, a goal is closed by a pair chosen at random among all
  /// unifiable ones instead of the first.
  std::optional<std::uint64_t> seed;
  bool remove_duplicates = false;
};

struct StepResult {
  enum class Status { Stepped, Finished, NoRules };
  Status status;
  TraceEvent event;  // meaningful when Stepped
  GoalTable table;
};

/// One step of the strategy as a pure function of the table and the name
/// supply. Throws ProverError on an empty head goal.
StepResult proof_step(const GoalTable& tab, NameSupply& names, bool remove_duplicates = false,
                      const Solver& solve = solve_goal);

struct RunResult {
  GoalTable table;
  std::vector<TraceEvent> events;
  bool no_rules = false;  // stopped because every formula of the goal is atomic
  bool capped = false;    // stopped by max_steps with goals still open
};

/// The automatic strategy with its name supply and options. One per session.
class Engine {
 public:
  explicit Engine(ProverOptions options = {});

  NameSupply& names() noexcept { return names_; }
  const ProverOptions& options() const noexcept { return options_; }

  /// Reads As |- Bs: resets the name supply and tries to close the goal.
  GoalTable read_table(const std::vector<Formula>& left, const std::vector<Formula>& right);

  Inserted insert_goals(std::vector<Goal> goals, GoalTable tab);

  /// Reduces the head entry of the head goal. Throws ProverError on an
  /// empty head goal.
  StepResult proof_step(const GoalTable& tab);

  /// Up to n steps, unbounded if n < 0, never more than max_steps when given.
  RunResult proof_steps(int n, GoalTable tab, const std::function<void(const TraceEvent&)>& observer = {},
                        std::optional<std::size_t> max_steps = std::nullopt);

 private:
  Solver solver();

  ProverOptions options_;
  NameSupply names_;
  std::mt19937_64 rng_;
};

std::string format_sequent(const std::vector<Formula>& left, const std::vector<Formula>& right);
std::string format_goal(const Goal& g);
/// The table display: goals, then "N goals" when N > 1, then the
/// parameter table. "No more goals: proof finished" when empty.
std::string format_table(const GoalTable& tab);
std::string format_event(const TraceEvent& e);

inline constexpr const char* kNoRulesMessage = "**No proof rules applicable**";

}  // namespace folderol
