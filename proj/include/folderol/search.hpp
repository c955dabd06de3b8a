#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "folderol/proof_tree.hpp"
#include "folderol/prover.hpp"
#include "folderol/tactics.hpp"

namespace folderol {

struct SearchStats {
  std::size_t nodes = 0;        // sequents visited
  std::size_t closures = 0;     // closing unifications attempted
  std::size_t expansions = 0;   // quantifier expansion rounds
};

/**
 * Complete bounded search for a proof of As |- Bs.
 *
 * Depth-first with backtracking. A sequent is first closed by any left/right
 * atom pair that unifies under the current environment; each such choice can
 * be undone. Otherwise the cheapest reducible formula is reduced (left
 * before right, first in list order) with no alternative rule tried. When
 * only atoms and quantifiers to instantiate remain and the bound is positive,
 * every ALL on the left and EXISTS on the right gets one fresh metavariable
 * instance and the search continues with the bound decreased by one. The
 * bound is tracked per branch.
 *
 * The returned tree is ground: metavariables are instantiated by the final
 * environment (leftover ones become a fresh constant) and eigenvariables
 * are constants.
 */
std::optional<ProofTree> prove_bounded(const std::vector<Formula>& left, const std::vector<Formula>& right,
                                       int bound, SearchStats* stats = nullptr);

struct DeepeningResult {
  int bound;
  ProofTree tree;
};

/// prove_bounded at bounds 0, 1, ..., max_bound; the first success.
std::optional<DeepeningResult> prove_deepening(const std::vector<Formula>& left, const std::vector<Formula>& right,
                                               int max_bound);

/// A Folderol proof state: the goal table and the name supply that the
/// next step draws from.
struct ProofState {
  GoalTable table;
  NameSupply names;
};

ProofState initial_state(const std::vector<Formula>& left, const std::vector<Formula>& right);
bool proof_finished(const ProofState& s);

/// One step of the automatic strategy. Fails on an empty table and when no
/// rule applies.
Tactic<ProofState> folderol_step_tactic();
/// Closes the head goal; one outcome per unifiable left/right atom pair.
Tactic<ProofState> close_goal_tac();
/// Reduces the head entry of the head goal without trying to close the
/// subgoals. Fails when the head entry is atomic.
Tactic<ProofState> expand_tac();

}  // namespace folderol
