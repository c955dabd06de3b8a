#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "folderol/term.hpp"

namespace folderol {

enum class Rule {
  Basic,
  NotLeft, NotRight,
  AndLeft, AndRight,
  OrLeft, OrRight,
  ImpLeft, ImpRight,
  IffLeft, IffRight,
  AllLeft, AllRight,
  ExistsLeft, ExistsRight,
};

/// "basic", "~:left", "&:right", "ALL:left", ... as in the prover's trace.
std::string_view rule_label(Rule r) noexcept;
std::optional<Rule> rule_from_label(std::string_view label);
/// Number of premises: 0 for basic, 2 for case splits, 1 otherwise.
int rule_arity(Rule r) noexcept;
const std::vector<Rule>& all_rules();

struct Sequent {
  std::vector<Formula> left;
  std::vector<Formula> right;
};

/**
 * A derivation: the conclusion sequent of each node, the rule that derives
 * it from the premises below, and for quantifier rules the witness term
 * (the instance for ALL:left and EXISTS:right, the eigenvariable constant
 * for ALL:right and EXISTS:left).
 */
struct ProofTree {
  Rule rule = Rule::Basic;
  Sequent sequent;
  std::optional<Term> witness;
  std::vector<ProofTree> premises;

  std::size_t size() const;
  std::size_t height() const;
};

class ProofFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text form documented in docs/proof-format.md.
std::string serialize(const ProofTree& tree);
/// Throws ProofFormatError on malformed input, including formulae or
/// witnesses that do not parse.
ProofTree deserialize(std::string_view text);

}  // namespace folderol
