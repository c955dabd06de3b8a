#pragma once

#include <string>
#include <vector>

#include "folderol/proof_tree.hpp"

namespace folderol {

struct Violation {
  std::string path;    // "root", "root.0", "root.1.0", ...
  std::string reason;
};

struct CheckReport {
  std::vector<Violation> violations;

  bool accepted() const noexcept { return violations.empty(); }
};

/**
 * Checks every node of a derivation against the sequent rules.
 *
 * Sequents are compared as multisets, so the order of formulae on a side is
 * irrelevant. A node is accepted when some formula of the conclusion, taken
 * as principal, yields exactly the premises in rule order. Quantifier
 * expansions on the left of ALL and the right of EXISTS keep the quantified
 * formula; no other duplication is allowed. Eigenvariables must be constants
 * whose name occurs nowhere in the conclusion. Metavariables and loose bound
 * indices are rejected everywhere.
 */
CheckReport check_proof(const ProofTree& tree);

/// "accepted" or "rejected" followed by one "path: reason" line per violation.
std::string format_report(const CheckReport& report);

}  // namespace folderol
