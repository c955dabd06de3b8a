#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace folderol {

/**
 * First-order term.
 *
 * Four shapes: a metavariable ?a, a parameter b[?a1,...,?an] carrying the
 * metavariables it must not depend on, a de Bruijn bound index, or a function
 * application (constants are 0-place applications).
 *
 * Terms are immutable and share structure; copying is a refcount bump.
 */
class Term {
 public:
  enum class Kind { Var, Param, Bound, Fun };

  static Term var(std::string name);
  static Term param(std::string name, std::vector<std::string> deps);
  static Term bound(int index);
  static Term fun(std::string name, std::vector<Term> args = {});
  static Term constant(std::string name) { return fun(std::move(name)); }

  Kind kind() const noexcept;
  bool is_var() const noexcept { return kind() == Kind::Var; }
  bool is_param() const noexcept { return kind() == Kind::Param; }
  bool is_bound() const noexcept { return kind() == Kind::Bound; }
  bool is_fun() const noexcept { return kind() == Kind::Fun; }
  bool is_constant() const noexcept { return is_fun() && args().empty(); }

  /// Name of a Var, Param or Fun. Empty for Bound.
  const std::string& name() const noexcept;
  /// Dependency list of a Param; empty otherwise.
  const std::vector<std::string>& deps() const noexcept;
  /// Index of a Bound; 0 otherwise.
  int index() const noexcept;
  /// Arguments of a Fun; empty otherwise.
  const std::vector<Term>& args() const noexcept;

  bool same_node(const Term& other) const noexcept { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class Connective { Not, And, Or, Implies, Iff };
enum class Quantifier { All, Exists };

std::string_view symbol(Connective c) noexcept;
std::string_view symbol(Quantifier q) noexcept;
/// Binding strength of a connective: ~ 4, & 3, | 2, <-> and --> 1.
int precedence(Connective c) noexcept;

/**
 * Formula: predicate application, connective application, or quantifier.
 *
 * A quantifier keeps the display name of its bound variable for printing;
 * the body refers to it by de Bruijn index. Equality (operator==) ignores
 * display names, so alpha-equivalent formulae compare equal. Use identical()
 * when the names matter.
 */
class Formula {
 public:
  enum class Kind { Pred, Conn, Quant };

  static Formula pred(std::string name, std::vector<Term> args = {});
  static Formula negation(Formula operand);
  static Formula binary(Connective c, Formula lhs, Formula rhs);
  /// Throws std::invalid_argument when the operand count does not fit c.
  static Formula conn(Connective c, std::vector<Formula> operands);
  static Formula quant(Quantifier q, std::string display_name, Formula body);

  Kind kind() const noexcept;
  bool is_pred() const noexcept { return kind() == Kind::Pred; }
  bool is_conn() const noexcept { return kind() == Kind::Conn; }
  bool is_quant() const noexcept { return kind() == Kind::Quant; }

  /// Predicate name, or the display name of a quantifier's bound variable.
  const std::string& name() const noexcept;
  const std::vector<Term>& args() const noexcept;
  Connective connective() const noexcept;
  const std::vector<Formula>& operands() const noexcept;
  Quantifier quantifier() const noexcept;
  const Formula& body() const noexcept;

  bool same_node(const Formula& other) const noexcept { return node_ == other.node_; }
  bool identical(const Formula& other) const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Replaces every subterm of t equal to old by replacement. No index shifting.
Term replace_term(const Term& old, const Term& replacement, const Term& t);

/// Replaces t by the bound index for an enclosing quantifier that the caller
/// attaches afterwards (index 0 at top level, +1 under each quantifier).
Formula abstract(const Term& t, const Formula& a);

/// Instantiates the loose index of a quantifier body with t.
Formula subst_bound(const Term& t, const Formula& body);

/// True when no Bound(i) occurs under i or fewer enclosing quantifiers.
bool is_closed(const Formula& a);

/// Generator of fresh names a, b, ..., z, ba, bb, ... (base 26, letter 'a' as
/// zero digit). Each proof session owns one.
class NameSupply {
 public:
  std::string next();
  void reset() noexcept { count_ = 0; }
  std::size_t drawn() const noexcept { return count_; }

  static std::string name_for(std::size_t n);

 private:
  std::size_t count_ = 0;
};

}  // namespace folderol
