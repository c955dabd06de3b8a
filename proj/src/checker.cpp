#include "folderol/checker.hpp"

#include <algorithm>
#include <optional>

#include "folderol/syntax.hpp"

namespace folderol {

namespace {

bool term_has_var(const Term& t) {
  if (t.is_var()) return true;
  return std::any_of(t.args().begin(), t.args().end(), term_has_var);
}

bool term_ground(const Term& t) {
  if (t.is_var() || t.is_bound()) return false;
  return std::all_of(t.args().begin(), t.args().end(), term_ground);
}

bool term_mentions(const Term& t, const std::string& name) {
  if ((t.is_fun() || t.is_param()) && t.name() == name) return true;
  return std::any_of(t.args().begin(), t.args().end(), [&](const Term& u) { return term_mentions(u, name); });
}

template <typename Pred>
bool any_term(const Formula& a, const Pred& pred) {
  switch (a.kind()) {
    case Formula::Kind::Pred:
      return std::any_of(a.args().begin(), a.args().end(), pred);
    case Formula::Kind::Conn:
      return std::any_of(a.operands().begin(), a.operands().end(),
                         [&](const Formula& b) { return any_term(b, pred); });
    case Formula::Kind::Quant:
      return any_term(a.body(), pred);
  }
  return false;
}

bool same_multiset(const std::vector<Formula>& xs, const std::vector<Formula>& ys) {
  if (xs.size() != ys.size()) return false;
  std::vector<bool> used(ys.size(), false);
  for (const Formula& x : xs) {
    bool found = false;
    for (std::size_t j = 0; j < ys.size() && !found; ++j) {
      if (!used[j] && x == ys[j]) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool same_sequent(const Sequent& a, const Sequent& b) {
  return same_multiset(a.left, b.left) && same_multiset(a.right, b.right);
}

std::vector<Formula> without(const std::vector<Formula>& xs, std::size_t i) {
  std::vector<Formula> out = xs;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

std::vector<Formula> plus(std::vector<Formula> xs, std::initializer_list<Formula> more) {
  xs.insert(xs.end(), more);
  return xs;
}

struct Shape {
  bool on_left;
  bool is_quant;
  Connective connective = Connective::Not;
  Quantifier quantifier = Quantifier::All;
};

Shape shape_of(Rule r) {
  switch (r) {
    case Rule::NotLeft: return {true, false, Connective::Not};
    case Rule::NotRight: return {false, false, Connective::Not};
    case Rule::AndLeft: return {true, false, Connective::And};
    case Rule::AndRight: return {false, false, Connective::And};
    case Rule::OrLeft: return {true, false, Connective::Or};
    case Rule::OrRight: return {false, false, Connective::Or};
    case Rule::ImpLeft: return {true, false, Connective::Implies};
    case Rule::ImpRight: return {false, false, Connective::Implies};
    case Rule::IffLeft: return {true, false, Connective::Iff};
    case Rule::IffRight: return {false, false, Connective::Iff};
    case Rule::AllLeft: return {true, true, Connective::Not, Quantifier::All};
    case Rule::AllRight: return {false, true, Connective::Not, Quantifier::All};
    case Rule::ExistsLeft: return {true, true, Connective::Not, Quantifier::Exists};
    case Rule::ExistsRight: return {false, true, Connective::Not, Quantifier::Exists};
    case Rule::Basic: break;
  }
  return {true, false};
}

bool fits(const Shape& s, const Formula& a) {
  if (s.is_quant) return a.is_quant() && a.quantifier() == s.quantifier;
  return a.is_conn() && a.connective() == s.connective;
}

// Premises the rule yields when the formula at index i of the relevant
// side is principal.
std::vector<Sequent> expected_premises(Rule r, const Sequent& c, std::size_t i, const std::optional<Term>& w) {
  const auto& G = c.left;
  const auto& D = c.right;
  const Formula& p = (shape_of(r).on_left ? G : D)[i];
  const auto& ops = p.operands();
  switch (r) {
    case Rule::NotLeft: return {{without(G, i), plus(D, {ops[0]})}};
    case Rule::NotRight: return {{plus(G, {ops[0]}), without(D, i)}};
    case Rule::AndLeft: return {{plus(without(G, i), {ops[0], ops[1]}), D}};
    case Rule::AndRight: return {{G, plus(without(D, i), {ops[0]})}, {G, plus(without(D, i), {ops[1]})}};
    case Rule::OrLeft: return {{plus(without(G, i), {ops[0]}), D}, {plus(without(G, i), {ops[1]}), D}};
    case Rule::OrRight: return {{G, plus(without(D, i), {ops[0], ops[1]})}};
    case Rule::ImpLeft: return {{without(G, i), plus(D, {ops[0]})}, {plus(without(G, i), {ops[1]}), D}};
    case Rule::ImpRight: return {{plus(G, {ops[0]}), plus(without(D, i), {ops[1]})}};
    case Rule::IffLeft:
      return {{plus(without(G, i), {ops[0], ops[1]}), D}, {without(G, i), plus(D, {ops[0], ops[1]})}};
    case Rule::IffRight:
      return {{plus(G, {ops[0]}), plus(without(D, i), {ops[1]})}, {plus(G, {ops[1]}), plus(without(D, i), {ops[0]})}};
    case Rule::AllLeft: return {{plus(G, {subst_bound(*w, p.body())}), D}};
    case Rule::ExistsRight: return {{G, plus(D, {subst_bound(*w, p.body())})}};
    case Rule::AllRight: return {{G, plus(without(D, i), {subst_bound(*w, p.body())})}};
    case Rule::ExistsLeft: return {{plus(without(G, i), {subst_bound(*w, p.body())}), D}};
    case Rule::Basic: break;
  }
  return {};
}

class Checker {
 public:
  CheckReport report;

  void node(const ProofTree& t, const std::string& path) {
    check_node(t, path);
    for (std::size_t k = 0; k < t.premises.size(); ++k) node(t.premises[k], path + "." + std::to_string(k));
  }

 private:
  void add(const std::string& path, std::string reason) { report.violations.push_back({path, std::move(reason)}); }

  void check_node(const ProofTree& t, const std::string& path) {
    const std::string label(rule_label(t.rule));
    for (const auto* side : {&t.sequent.left, &t.sequent.right}) {
      for (const Formula& a : *side) {
        if (!is_closed(a)) return add(path, "formula " + unparse(a) + " has a loose bound index");
        if (any_term(a, term_has_var)) return add(path, "formula " + unparse(a) + " contains a metavariable");
      }
    }

    const int arity = rule_arity(t.rule);
    if (static_cast<int>(t.premises.size()) != arity) {
      return add(path, label + " needs " + std::to_string(arity) + " premise(s), found " +
                           std::to_string(t.premises.size()));
    }

    if (t.rule == Rule::Basic) {
      if (t.witness) return add(path, "basic takes no witness");
      for (const Formula& a : t.sequent.left)
        for (const Formula& b : t.sequent.right)
          if (a == b) return;
      return add(path, "basic sequent has no formula common to both sides");
    }

    const Shape shape = shape_of(t.rule);
    if (!shape.is_quant && t.witness) return add(path, label + " takes no witness");
    if (shape.is_quant) {
      if (!t.witness) return add(path, label + " needs a witness");
      const Term& w = *t.witness;
      if (!term_ground(w)) return add(path, "witness " + unparse(w) + " is not a ground term");
      const bool eigen = t.rule == Rule::AllRight || t.rule == Rule::ExistsLeft;
      if (eigen) {
        if (!(w.is_constant() || (w.is_param() && w.deps().empty())))
          return add(path, "eigenvariable " + unparse(w) + " is not a constant");
        for (const auto* side : {&t.sequent.left, &t.sequent.right}) {
          for (const Formula& a : *side) {
            if (any_term(a, [&](const Term& u) { return term_mentions(u, w.name()); }))
              return add(path, "eigenvariable " + w.name() + " occurs in the conclusion");
          }
        }
      }
    }

    const auto& side = shape.on_left ? t.sequent.left : t.sequent.right;
    bool any_candidate = false;
    for (std::size_t i = 0; i < side.size(); ++i) {
      if (!fits(shape, side[i])) continue;
      any_candidate = true;
      std::vector<Sequent> want = expected_premises(t.rule, t.sequent, i, t.witness);
      bool ok = true;
      for (std::size_t k = 0; k < want.size() && ok; ++k) ok = same_sequent(want[k], t.premises[k].sequent);
      if (ok) return;
    }
    if (!any_candidate)
      return add(path, label + " has no principal formula of that form on the " +
                           (shape.on_left ? "left" : "right"));
    add(path, "premises do not follow from the conclusion by " + label);
  }
};

}  // namespace

CheckReport check_proof(const ProofTree& tree) {
  Checker c;
  c.node(tree, "root");
  return std::move(c.report);
}

std::string format_report(const CheckReport& report) {
  std::string out = report.accepted() ? "accepted\n" : "rejected\n";
  for (const Violation& v : report.violations) out += v.path + ": " + v.reason + "\n";
  return out;
}

}  // namespace folderol
