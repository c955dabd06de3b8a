#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "folderol/checker.hpp"
#include "folderol/proof_tree.hpp"
#include "folderol/search.hpp"

namespace folderol {

// Drivers over many independent problems. Each *_serial function is the
// reference; the *_parallel twin splits the same work across OpenMP threads
// and must return identical results in the same order.

struct FolderolOutcome {
  bool proved = false;     // table emptied
  bool no_rules = false;   // halted with only atomic formulae left
  bool capped = false;     // hit max_steps
  std::size_t steps = 0;

  friend bool operator==(const FolderolOutcome&, const FolderolOutcome&) = default;
};

FolderolOutcome run_folderol(const Sequent& s, std::size_t max_steps);

std::vector<FolderolOutcome> run_folderol_serial(const std::vector<Sequent>& problems, std::size_t max_steps);
std::vector<FolderolOutcome> run_folderol_parallel(const std::vector<Sequent>& problems, std::size_t max_steps);

std::vector<std::optional<ProofTree>> prove_bounded_serial(const std::vector<Sequent>& problems, int bound);
std::vector<std::optional<ProofTree>> prove_bounded_parallel(const std::vector<Sequent>& problems, int bound);

std::vector<CheckReport> check_all_serial(const std::vector<ProofTree>& trees);
std::vector<CheckReport> check_all_parallel(const std::vector<ProofTree>& trees);

/// Threads the parallel drivers will use.
int batch_threads();

/**
 * Quantifier-free sequents |- A, A |- and A |- B with at most
 * max_connectives connectives in total, over the letters P, Q, R, S, ...
 * (at most `letters` of them).
 *
 * Letters are introduced in order of first occurrence (the first leaf is
 * P, the next new letter Q, and so on), so each sequent appears once up to
 * renaming of letters.
 */
std::vector<Sequent> enumerate_propositional(int letters, int max_connectives);

}  // namespace folderol
