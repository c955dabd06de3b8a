#include "folderol/search.hpp"

#include <functional>
#include <set>
#include <string>
#include <utility>

namespace folderol {

namespace {

void names_in_term(const Term& t, std::set<std::string>& out) {
  if (!t.is_bound()) out.insert(t.name());
  for (const Term& u : t.args()) names_in_term(u, out);
}

void names_in(const Formula& a, std::set<std::string>& out) {
  out.insert(a.name());
  for (const Term& t : a.args()) names_in_term(t, out);
  for (const Formula& b : a.operands()) names_in(b, out);
  if (a.is_quant()) names_in(a.body(), out);
}

template <typename Fn>
Formula map_terms(const Formula& a, const Fn& fn) {
  switch (a.kind()) {
    case Formula::Kind::Pred: {
      std::vector<Term> args;
      for (const Term& t : a.args()) args.push_back(fn(t));
      return Formula::pred(a.name(), std::move(args));
    }
    case Formula::Kind::Conn: {
      std::vector<Formula> ops;
      for (const Formula& b : a.operands()) ops.push_back(map_terms(b, fn));
      return Formula::conn(a.connective(), std::move(ops));
    }
    case Formula::Kind::Quant:
      return Formula::quant(a.quantifier(), a.name(), map_terms(a.body(), fn));
  }
  return a;
}

std::vector<Formula> prepend(std::initializer_list<Formula> front, const std::vector<Formula>& xs) {
  std::vector<Formula> out(front);
  out.insert(out.end(), xs.begin(), xs.end());
  return out;
}

std::vector<Formula> without(const std::vector<Formula>& xs, std::size_t i) {
  std::vector<Formula> out = xs;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

Rule connective_rule(Connective c, bool left) {
  switch (c) {
    case Connective::Not: return left ? Rule::NotLeft : Rule::NotRight;
    case Connective::And: return left ? Rule::AndLeft : Rule::AndRight;
    case Connective::Or: return left ? Rule::OrLeft : Rule::OrRight;
    case Connective::Implies: return left ? Rule::ImpLeft : Rule::ImpRight;
    case Connective::Iff: return left ? Rule::IffLeft : Rule::IffRight;
  }
  return Rule::Basic;
}

Rule quantifier_rule(Quantifier q, bool left) {
  if (q == Quantifier::All) return left ? Rule::AllLeft : Rule::AllRight;
  return left ? Rule::ExistsLeft : Rule::ExistsRight;
}

class BoundedSearch {
 public:
  using Cont = std::function<bool(const Environment&, ProofTree)>;

  BoundedSearch(std::set<std::string> used, SearchStats& stats) : used_(std::move(used)), stats_(stats) {}

  std::string fresh() {
    std::string name;
    do {
      name = supply_.next();
    } while (used_.count(name) != 0);
    return name;
  }

  bool prove(const Sequent& s, int n, const Environment& env, const Cont& k) {
    ++stats_.nodes;

    for (const Formula& a : s.left) {
      if (!a.is_pred()) continue;
      for (const Formula& b : s.right) {
        if (!b.is_pred()) continue;
        ++stats_.closures;
        auto closed = unify_atoms(a, b, env);
        if (!closed) continue;
        if (k(*closed, ProofTree{Rule::Basic, s, std::nullopt, {}})) return true;
        // A closure that bound nothing is as general as any other way of
        // proving this sequent, so alternatives cannot do better.
        if (closed->size() == env.size()) return false;
      }
    }

    for (int c = 1; c <= 2; ++c) {
      for (std::size_t i = 0; i < s.left.size(); ++i)
        if (cost(Side::Left, s.left[i]) == c) return reduce(s, true, i, n, env, k);
      for (std::size_t i = 0; i < s.right.size(); ++i)
        if (cost(Side::Right, s.right[i]) == c) return reduce(s, false, i, n, env, k);
    }

    if (n > 0) return expand(s, n, env, k);
    return false;
  }

 private:
  bool reduce(const Sequent& s, bool left, std::size_t i, int n, const Environment& env, const Cont& k) {
    const Formula& p = left ? s.left[i] : s.right[i];
    const auto& G = s.left;
    const auto& D = s.right;

    if (p.is_quant()) {
      // ALL:right or EXISTS:left: an eigenvariable that must not depend on
      // any metavariable of the sequent.
      std::vector<std::string> deps;
      for (const Formula& a : G) collect_vars(a, deps);
      for (const Formula& b : D) collect_vars(b, deps);
      Term param = Term::param(fresh(), std::move(deps));
      Formula inst = subst_bound(param, p.body());
      Sequent premise = left ? Sequent{prepend({inst}, without(G, i)), D} : Sequent{G, prepend({inst}, without(D, i))};
      return one(quantifier_rule(p.quantifier(), left), s, param, premise, n, env, k);
    }

    const Rule rule = connective_rule(p.connective(), left);
    const auto& ops = p.operands();
    switch (rule) {
      case Rule::NotLeft: return one(rule, s, std::nullopt, {without(G, i), prepend({ops[0]}, D)}, n, env, k);
      case Rule::NotRight: return one(rule, s, std::nullopt, {prepend({ops[0]}, G), without(D, i)}, n, env, k);
      case Rule::AndLeft: return one(rule, s, std::nullopt, {prepend({ops[0], ops[1]}, without(G, i)), D}, n, env, k);
      case Rule::OrRight: return one(rule, s, std::nullopt, {G, prepend({ops[0], ops[1]}, without(D, i))}, n, env, k);
      case Rule::ImpRight:
        return one(rule, s, std::nullopt, {prepend({ops[0]}, G), prepend({ops[1]}, without(D, i))}, n, env, k);
      case Rule::AndRight:
        return two(rule, s, {G, prepend({ops[0]}, without(D, i))}, {G, prepend({ops[1]}, without(D, i))}, n, env, k);
      case Rule::OrLeft:
        return two(rule, s, {prepend({ops[0]}, without(G, i)), D}, {prepend({ops[1]}, without(G, i)), D}, n, env, k);
      case Rule::ImpLeft:
        return two(rule, s, {without(G, i), prepend({ops[0]}, D)}, {prepend({ops[1]}, without(G, i)), D}, n, env, k);
      case Rule::IffLeft:
        return two(rule, s, {prepend({ops[0], ops[1]}, without(G, i)), D},
                   {without(G, i), prepend({ops[0], ops[1]}, D)}, n, env, k);
      case Rule::IffRight:
        return two(rule, s, {prepend({ops[0]}, G), prepend({ops[1]}, without(D, i))},
                   {prepend({ops[1]}, G), prepend({ops[0]}, without(D, i))}, n, env, k);
      default:
        return false;
    }
  }

  bool one(Rule rule, const Sequent& s, std::optional<Term> witness, const Sequent& premise, int n,
           const Environment& env, const Cont& k) {
    return prove(premise, n, env, [&](const Environment& env1, ProofTree t1) {
      return k(env1, ProofTree{rule, s, witness, {std::move(t1)}});
    });
  }

  bool two(Rule rule, const Sequent& s, const Sequent& p1, const Sequent& p2, int n, const Environment& env,
           const Cont& k) {
    return prove(p1, n, env, [&](const Environment& env1, ProofTree t1) {
      return prove(p2, n, env1, [&](const Environment& env2, ProofTree t2) {
        return k(env2, ProofTree{rule, s, std::nullopt, {t1, std::move(t2)}});
      });
    });
  }

  struct Link {
    Rule rule;
    Sequent conclusion;
    Term witness;
  };

  bool expand(const Sequent& s, int n, const Environment& env, const Cont& k) {
    std::vector<std::pair<bool, Formula>> targets;
    for (const Formula& a : s.left)
      if (a.is_quant() && a.quantifier() == Quantifier::All) targets.emplace_back(true, a);
    for (const Formula& b : s.right)
      if (b.is_quant() && b.quantifier() == Quantifier::Exists) targets.emplace_back(false, b);
    if (targets.empty()) return false;
    ++stats_.expansions;

    std::vector<Link> chain;
    Sequent cur = s;
    for (const auto& [left, q] : targets) {
      Term v = Term::var(fresh());
      Formula inst = subst_bound(v, q.body());
      chain.push_back(Link{quantifier_rule(q.quantifier(), left), cur, v});
      if (left) {
        cur.left.insert(cur.left.begin(), inst);
      } else {
        cur.right.insert(cur.right.begin(), inst);
      }
    }
    return prove(cur, n - 1, env, [&](const Environment& env1, ProofTree t) {
      for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        t = ProofTree{it->rule, it->conclusion, it->witness, {std::move(t)}};
      return k(env1, std::move(t));
    });
  }

  std::set<std::string> used_;
  SearchStats& stats_;
  NameSupply supply_;
};

Term ground_term(const Term& t, const std::string& filler) {
  switch (t.kind()) {
    case Term::Kind::Var: return Term::constant(filler);
    case Term::Kind::Param: return Term::constant(t.name());
    case Term::Kind::Bound: return t;
    case Term::Kind::Fun: {
      std::vector<Term> args;
      for (const Term& u : t.args()) args.push_back(ground_term(u, filler));
      return Term::fun(t.name(), std::move(args));
    }
  }
  return t;
}

ProofTree finalize(const ProofTree& t, const Environment& env, const std::string& filler) {
  auto fix = [&](const Formula& a) {
    return map_terms(instantiate(env, a), [&](const Term& u) { return ground_term(u, filler); });
  };
  ProofTree out;
  out.rule = t.rule;
  for (const Formula& a : t.sequent.left) out.sequent.left.push_back(fix(a));
  for (const Formula& b : t.sequent.right) out.sequent.right.push_back(fix(b));
  if (t.witness) out.witness = ground_term(instantiate(env, *t.witness), filler);
  for (const ProofTree& p : t.premises) out.premises.push_back(finalize(p, env, filler));
  return out;
}

}  // namespace

std::optional<ProofTree> prove_bounded(const std::vector<Formula>& left, const std::vector<Formula>& right,
                                       int bound, SearchStats* stats) {
  SearchStats local;
  SearchStats& st = stats != nullptr ? *stats : local;

  std::set<std::string> used;
  for (const Formula& a : left) names_in(a, used);
  for (const Formula& b : right) names_in(b, used);

  BoundedSearch search(std::move(used), st);
  std::optional<ProofTree> result;
  search.prove(Sequent{left, right}, bound < 0 ? 0 : bound, Environment{},
               [&](const Environment& env, ProofTree t) {
                 result = finalize(t, env, search.fresh());
                 return true;
               });
  return result;
}

std::optional<DeepeningResult> prove_deepening(const std::vector<Formula>& left, const std::vector<Formula>& right,
                                               int max_bound) {
  for (int n = 0; n <= max_bound; ++n)
    if (auto tree = prove_bounded(left, right, n)) return DeepeningResult{n, std::move(*tree)};
  return std::nullopt;
}

ProofState initial_state(const std::vector<Formula>& left, const std::vector<Formula>& right) {
  std::vector<Formula> as(left.rbegin(), left.rend());
  std::vector<Formula> bs(right.rbegin(), right.rend());
  return ProofState{insert_goals({make_goal(as, bs)}, {}).table, NameSupply{}};
}

bool proof_finished(const ProofState& s) { return s.table.empty(); }

Tactic<ProofState> folderol_step_tactic() {
  return [](const ProofState& s) {
    if (s.table.empty() || s.table.front().empty()) return Seq<ProofState>::empty();
    ProofState next = s;
    StepResult r = proof_step(s.table, next.names);
    if (r.status != StepResult::Status::Stepped) return Seq<ProofState>::empty();
    next.table = std::move(r.table);
    return Seq<ProofState>::single(std::move(next));
  };
}

Tactic<ProofState> close_goal_tac() {
  return [](const ProofState& s) {
    std::vector<ProofState> out;
    if (s.table.empty()) return Seq<ProofState>::empty();
    const GoalTable rest(s.table.begin() + 1, s.table.end());
    for (const Solution& sol : all_solutions(s.table.front()))
      out.push_back(ProofState{instantiate_table(sol.env, rest), s.names});
    return Seq<ProofState>::from(std::move(out));
  };
}

Tactic<ProofState> expand_tac() {
  return [](const ProofState& s) {
    if (s.table.empty() || s.table.front().empty()) return Seq<ProofState>::empty();
    const Goal& head = s.table.front();
    ProofState next{{}, s.names};
    auto subgoals = reduce_goal(head.front(), Goal(head.begin() + 1, head.end()), next.names);
    if (!subgoals) return Seq<ProofState>::empty();
    next.table.assign(s.table.begin() + 1, s.table.end());
    for (Goal& g : *subgoals) next.table.insert(next.table.begin(), std::move(g));
    return Seq<ProofState>::single(std::move(next));
  };
}

}  // namespace folderol
