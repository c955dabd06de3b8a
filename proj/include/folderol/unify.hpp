#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "folderol/term.hpp"

namespace folderol {

/**
 * Assignments to metavariables, newest first.
 *
 * A persistent singly linked list: bind() returns a new environment sharing
 * the old one as its tail, so an environment handed out earlier stays valid
 * while unification extends it along another branch.
 */
class Environment {
 public:
  Environment() = default;

  /// The term assigned to ?name, or nullptr.
  const Term* lookup(std::string_view name) const;
  Environment bind(std::string name, Term value) const;

  bool empty() const noexcept { return head_ == nullptr; }
  std::size_t size() const noexcept;
  std::vector<std::pair<std::string, Term>> bindings() const;

 private:
  struct Cell;
  explicit Environment(std::shared_ptr<const Cell> head) : head_(std::move(head)) {}
  std::shared_ptr<const Cell> head_;
};

/// Follows assignments while the term is an assigned metavariable.
Term chase(const Term& t, const Environment& env);

/// True when ?name occurs in t under env: inside function arguments, in a
/// parameter's dependency list, or through the assignment of another variable.
bool occurs(std::string_view name, const Term& t, const Environment& env);

/// Unifies two argument lists pairwise. Fails on a length mismatch.
std::optional<Environment> unify_terms(const std::vector<Term>& ts, const std::vector<Term>& us,
                                       const Environment& env);

/// Unifies two atomic formulae. Fails unless both are predicates with the
/// same name and unifiable argument lists.
std::optional<Environment> unify_atoms(const Formula& a, const Formula& b, const Environment& env = {});

Term instantiate(const Environment& env, const Term& t);
Formula instantiate(const Environment& env, const Formula& a);

// Accumulators. A name not yet in acc is put at the front, so the result
// lists distinct names in reverse order of first encounter.

void collect_vars(const Term& t, std::vector<std::string>& acc);
void collect_vars(const Formula& a, std::vector<std::string>& acc);

struct ParamInfo {
  std::string name;
  std::vector<std::string> deps;

  friend bool operator==(const ParamInfo&, const ParamInfo&) = default;
};

void collect_params(const Term& t, std::vector<ParamInfo>& acc);
void collect_params(const Formula& a, std::vector<ParamInfo>& acc);

}  // namespace folderol
