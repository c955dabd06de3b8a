#include "folderol/term.hpp"

#include <stdexcept>
#include <utility>

namespace folderol {

namespace {
const std::string kEmptyName;
const std::vector<std::string> kNoDeps;
const std::vector<Term> kNoTerms;
const std::vector<Formula> kNoFormulae;
}  // namespace

struct Term::Node {
  Kind kind;
  std::string name;
  std::vector<std::string> deps;
  int index = 0;
  std::vector<Term> args;
};

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}, 0, {}}));
}

Term Term::param(std::string name, std::vector<std::string> deps) {
  return Term(std::make_shared<const Node>(Node{Kind::Param, std::move(name), std::move(deps), 0, {}}));
}

Term Term::bound(int index) {
  if (index < 0) throw std::invalid_argument("negative bound index");
  return Term(std::make_shared<const Node>(Node{Kind::Bound, {}, {}, index, {}}));
}

Term Term::fun(std::string name, std::vector<Term> args) {
  return Term(std::make_shared<const Node>(Node{Kind::Fun, std::move(name), {}, 0, std::move(args)}));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }

const std::string& Term::name() const noexcept { return node_->kind == Kind::Bound ? kEmptyName : node_->name; }

const std::vector<std::string>& Term::deps() const noexcept {
  return node_->kind == Kind::Param ? node_->deps : kNoDeps;
}

int Term::index() const noexcept { return node_->index; }

const std::vector<Term>& Term::args() const noexcept { return node_->kind == Kind::Fun ? node_->args : kNoTerms; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var:
      return a.name() == b.name();
    case Term::Kind::Param:
      return a.name() == b.name() && a.deps() == b.deps();
    case Term::Kind::Bound:
      return a.index() == b.index();
    case Term::Kind::Fun:
      return a.name() == b.name() && a.args() == b.args();
  }
  return false;
}

std::string_view symbol(Connective c) noexcept {
  switch (c) {
    case Connective::Not: return "~";
    case Connective::And: return "&";
    case Connective::Or: return "|";
    case Connective::Implies: return "-->";
    case Connective::Iff: return "<->";
  }
  return "?";
}

std::string_view symbol(Quantifier q) noexcept { return q == Quantifier::All ? "ALL" : "EXISTS"; }

int precedence(Connective c) noexcept {
  switch (c) {
    case Connective::Not: return 4;
    case Connective::And: return 3;
    case Connective::Or: return 2;
    case Connective::Implies:
    case Connective::Iff: return 1;
  }
  return -1;
}

struct Formula::Node {
  Kind kind;
  std::string name;  // predicate name or bound display name
  std::vector<Term> args;
  Connective connective = Connective::Not;
  Quantifier quantifier = Quantifier::All;
  std::vector<Formula> operands;  // Conn operands, or the single Quant body
};

Formula Formula::pred(std::string name, std::vector<Term> args) {
  Node n{Kind::Pred, std::move(name), std::move(args), {}, {}, {}};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::negation(Formula operand) { return conn(Connective::Not, {std::move(operand)}); }

Formula Formula::binary(Connective c, Formula lhs, Formula rhs) {
  return conn(c, {std::move(lhs), std::move(rhs)});
}

Formula Formula::conn(Connective c, std::vector<Formula> operands) {
  const std::size_t want = c == Connective::Not ? 1 : 2;
  if (operands.size() != want) throw std::invalid_argument("wrong operand count for connective");
  Node n{Kind::Conn, {}, {}, c, {}, std::move(operands)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::quant(Quantifier q, std::string display_name, Formula body) {
  std::vector<Formula> ops;
  ops.push_back(std::move(body));
  Node n{Kind::Quant, std::move(display_name), {}, {}, q, std::move(ops)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }
const std::string& Formula::name() const noexcept { return node_->kind == Kind::Conn ? kEmptyName : node_->name; }
const std::vector<Term>& Formula::args() const noexcept { return node_->kind == Kind::Pred ? node_->args : kNoTerms; }
Connective Formula::connective() const noexcept { return node_->connective; }
const std::vector<Formula>& Formula::operands() const noexcept {
  return node_->kind == Kind::Conn ? node_->operands : kNoFormulae;
}
Quantifier Formula::quantifier() const noexcept { return node_->quantifier; }
const Formula& Formula::body() const noexcept { return node_->operands.front(); }

namespace {

bool equal_formulae(const Formula& a, const Formula& b, bool compare_names) {
  if (a.same_node(b)) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Pred:
      return a.name() == b.name() && a.args() == b.args();
    case Formula::Kind::Conn: {
      if (a.connective() != b.connective()) return false;
      const auto& xs = a.operands();
      const auto& ys = b.operands();
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (!equal_formulae(xs[i], ys[i], compare_names)) return false;
      return true;
    }
    case Formula::Kind::Quant:
      if (a.quantifier() != b.quantifier()) return false;
      if (compare_names && a.name() != b.name()) return false;
      return equal_formulae(a.body(), b.body(), compare_names);
  }
  return false;
}

}  // namespace

bool Formula::identical(const Formula& other) const { return equal_formulae(*this, other, true); }

bool operator==(const Formula& a, const Formula& b) { return equal_formulae(a, b, false); }

Term replace_term(const Term& old, const Term& replacement, const Term& t) {
  if (t == old) return replacement;
  if (!t.is_fun() || t.args().empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  bool changed = false;
  for (const Term& u : t.args()) {
    args.push_back(replace_term(old, replacement, u));
    changed = changed || !args.back().same_node(u);
  }
  return changed ? Term::fun(t.name(), std::move(args)) : t;
}

namespace {

// Shared walk for abstraction and substitution: at depth i, map predicate
// arguments with the term function for that depth.
template <typename TermFn>
Formula map_at_depth(const Formula& a, int depth, const TermFn& fn) {
  switch (a.kind()) {
    case Formula::Kind::Pred: {
      std::vector<Term> args;
      args.reserve(a.args().size());
      bool changed = false;
      for (const Term& t : a.args()) {
        args.push_back(fn(depth, t));
        changed = changed || !args.back().same_node(t);
      }
      return changed ? Formula::pred(a.name(), std::move(args)) : a;
    }
    case Formula::Kind::Conn: {
      std::vector<Formula> ops;
      ops.reserve(a.operands().size());
      bool changed = false;
      for (const Formula& b : a.operands()) {
        ops.push_back(map_at_depth(b, depth, fn));
        changed = changed || !ops.back().same_node(b);
      }
      return changed ? Formula::conn(a.connective(), std::move(ops)) : a;
    }
    case Formula::Kind::Quant: {
      Formula body = map_at_depth(a.body(), depth + 1, fn);
      return body.same_node(a.body()) ? a : Formula::quant(a.quantifier(), a.name(), std::move(body));
    }
  }
  return a;
}

bool closed_term(const Term& t, int depth) {
  if (t.is_bound()) return t.index() < depth;
  for (const Term& u : t.args())
    if (!closed_term(u, depth)) return false;
  return true;
}

bool closed_at(const Formula& a, int depth) {
  switch (a.kind()) {
    case Formula::Kind::Pred:
      for (const Term& t : a.args())
        if (!closed_term(t, depth)) return false;
      return true;
    case Formula::Kind::Conn:
      for (const Formula& b : a.operands())
        if (!closed_at(b, depth)) return false;
      return true;
    case Formula::Kind::Quant:
      return closed_at(a.body(), depth + 1);
  }
  return true;
}

}  // namespace

Formula abstract(const Term& t, const Formula& a) {
  return map_at_depth(a, 0, [&](int i, const Term& u) { return replace_term(t, Term::bound(i), u); });
}

Formula subst_bound(const Term& t, const Formula& body) {
  return map_at_depth(body, 0, [&](int i, const Term& u) { return replace_term(Term::bound(i), t, u); });
}

bool is_closed(const Formula& a) { return closed_at(a, 0); }

std::string NameSupply::name_for(std::size_t n) {
  std::string out;
  do {
    out.insert(out.begin(), static_cast<char>('a' + n % 26));
    n /= 26;
  } while (n > 0);
  return out;
}

std::string NameSupply::next() { return name_for(count_++); }

}  // namespace folderol
