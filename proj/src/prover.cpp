#include "folderol/prover.hpp"

#include <algorithm>
#include <utility>

#include "folderol/syntax.hpp"

namespace folderol {

int cost(Side side, const Formula& a) {
  const bool left = side == Side::Left;
  if (a.is_conn()) {
    switch (a.connective()) {
      case Connective::Not: return 1;
      case Connective::And: return left ? 1 : 2;
      case Connective::Or: return left ? 2 : 1;
      case Connective::Implies: return left ? 2 : 1;
      case Connective::Iff: return 2;
    }
  }
  if (a.is_quant()) {
    const bool all = a.quantifier() == Quantifier::All;
    return all == left ? 3 : 1;
  }
  return 4;
}

Entry make_entry(Side side, Formula a) {
  const int c = cost(side, a);
  return Entry{c, side, std::move(a)};
}

void insert_early(Entry e, Goal& g) {
  auto pos = std::find_if(g.begin(), g.end(), [&](const Entry& x) { return !(x.cost < e.cost); });
  g.insert(pos, std::move(e));
}

void insert_late(Entry e, Goal& g) {
  auto pos = std::find_if(g.begin(), g.end(), [&](const Entry& x) { return !(x.cost <= e.cost); });
  g.insert(pos, std::move(e));
}

SplitGoal split_goal(const Goal& g) {
  SplitGoal out;
  for (const Entry& e : g) (e.side == Side::Left ? out.left : out.right).push_back(e.formula);
  return out;
}

Goal new_goal(Goal g, const std::vector<SidedFormula>& pairs, bool remove_duplicates) {
  for (const SidedFormula& p : pairs) {
    if (remove_duplicates && std::any_of(g.begin(), g.end(), [&](const Entry& e) {
          return e.side == p.side && e.formula == p.formula;
        }))
      continue;
    insert_early(make_entry(p.side, p.formula), g);
  }
  return g;
}

Goal make_goal(const std::vector<Formula>& left, const std::vector<Formula>& right) {
  std::vector<SidedFormula> pairs;
  for (const Formula& a : left) pairs.push_back({Side::Left, a});
  for (const Formula& b : right) pairs.push_back({Side::Right, b});
  return new_goal({}, pairs);
}

Goal instantiate_goal(const Environment& env, const Goal& g) {
  if (env.empty()) return g;
  Goal out;
  out.reserve(g.size());
  for (const Entry& e : g) out.push_back(Entry{e.cost, e.side, instantiate(env, e.formula)});
  return out;
}

GoalTable instantiate_table(const Environment& env, const GoalTable& tab) {
  if (env.empty()) return tab;
  GoalTable out;
  out.reserve(tab.size());
  for (const Goal& g : tab) out.push_back(instantiate_goal(env, g));
  return out;
}

namespace {

std::pair<std::vector<Formula>, std::vector<Formula>> atoms_of(const Goal& g) {
  SplitGoal s = split_goal(g);
  auto keep_preds = [](std::vector<Formula>& xs) {
    xs.erase(std::remove_if(xs.begin(), xs.end(), [](const Formula& a) { return !a.is_pred(); }), xs.end());
  };
  keep_preds(s.left);
  keep_preds(s.right);
  return {std::move(s.left), std::move(s.right)};
}

}  // namespace

std::optional<Solution> solve_goal(const Goal& g) {
  auto [as, bs] = atoms_of(g);
  for (const Formula& a : as)
    for (const Formula& b : bs)
      if (auto env = unify_atoms(a, b)) return Solution{a, *env};
  return std::nullopt;
}

std::vector<Solution> all_solutions(const Goal& g) {
  auto [as, bs] = atoms_of(g);
  std::vector<Solution> out;
  for (const Formula& a : as)
    for (const Formula& b : bs)
      if (auto env = unify_atoms(a, b)) out.push_back(Solution{a, *env});
  return out;
}

std::vector<std::string> vars_in_goal(const Goal& g, std::vector<std::string> acc) {
  for (const Entry& e : g) collect_vars(e.formula, acc);
  return acc;
}

std::vector<ParamInfo> params_in_table(const GoalTable& tab) {
  std::vector<ParamInfo> acc;
  for (const Goal& g : tab)
    for (const Entry& e : g) collect_params(e.formula, acc);
  return acc;
}

std::string rule_name(const Entry& e) {
  std::string out;
  const Formula& a = e.formula;
  if (a.is_conn()) {
    out = symbol(a.connective());
  } else if (a.is_quant()) {
    out = symbol(a.quantifier());
  } else {
    out = a.name();
  }
  out += e.side == Side::Left ? ":left" : ":right";
  return out;
}

std::optional<std::vector<Goal>> reduce_goal(const Entry& head, const Goal& rest, NameSupply& names,
                                             bool remove_duplicates) {
  using P = std::vector<SidedFormula>;
  const Side L = Side::Left;
  const Side R = Side::Right;
  auto goals = [&](std::initializer_list<P> pairslist) {
    std::vector<Goal> out;
    for (const P& pairs : pairslist) out.push_back(new_goal(rest, pairs, remove_duplicates));
    return out;
  };

  const Formula& f = head.formula;
  const bool right = head.side == R;

  if (f.is_conn()) {
    const auto& ops = f.operands();
    switch (f.connective()) {
      case Connective::Not:
        return goals({{{right ? L : R, ops[0]}}});
      case Connective::And:
        if (right) return goals({{{R, ops[0]}}, {{R, ops[1]}}});
        return goals({{{L, ops[0]}, {L, ops[1]}}});
      case Connective::Or:
        if (right) return goals({{{R, ops[0]}, {R, ops[1]}}});
        return goals({{{L, ops[0]}}, {{L, ops[1]}}});
      case Connective::Implies:
        if (right) return goals({{{L, ops[0]}, {R, ops[1]}}});
        return goals({{{R, ops[0]}}, {{L, ops[1]}}});
      case Connective::Iff:
        if (right) return goals({{{L, ops[0]}, {R, ops[1]}}, {{R, ops[0]}, {L, ops[1]}}});
        return goals({{{L, ops[0]}, {L, ops[1]}}, {{R, ops[0]}, {R, ops[1]}}});
    }
  }

  if (f.is_quant()) {
    const bool all = f.quantifier() == Quantifier::All;
    if (all == right) {
      // ALL:right or EXISTS:left: a fresh parameter that may not depend on
      // any metavariable currently in the goal.
      std::string name = names.next();
      std::vector<std::string> deps;
      collect_vars(f.body(), deps);
      deps = vars_in_goal(rest, std::move(deps));
      Formula inst = subst_bound(Term::param(std::move(name), std::move(deps)), f.body());
      return goals({{{head.side, std::move(inst)}}});
    }
    // ALL:left or EXISTS:right: a fresh metavariable, and the quantified
    // formula goes back behind its fellows for later reuse.
    Formula inst = subst_bound(Term::var(names.next()), f.body());
    Goal g = rest;
    insert_late(head, g);
    insert_early(make_entry(head.side, std::move(inst)), g);
    return std::vector<Goal>{std::move(g)};
  }

  return std::nullopt;
}

Inserted insert_goals(std::vector<Goal> goals, GoalTable tab, const Solver& solve) {
  Inserted out;
  for (std::size_t i = 0; i < goals.size(); ++i) {
    if (auto sol = solve(goals[i])) {
      for (std::size_t j = i + 1; j < goals.size(); ++j) goals[j] = instantiate_goal(sol->env, goals[j]);
      out.closed.push_back(instantiate(sol->env, sol->formula));
      tab = instantiate_table(sol->env, tab);
    } else {
      tab.insert(tab.begin(), std::move(goals[i]));
    }
  }
  out.table = std::move(tab);
  return out;
}

StepResult proof_step(const GoalTable& tab, NameSupply& names, bool remove_duplicates, const Solver& solve) {
  if (tab.empty()) return StepResult{StepResult::Status::Finished, {}, tab};
  const Goal& head = tab.front();
  if (head.empty()) throw ProverError("Empty goal");

  const Goal rest(head.begin() + 1, head.end());
  auto subgoals = reduce_goal(head.front(), rest, names, remove_duplicates);
  if (!subgoals) return StepResult{StepResult::Status::NoRules, {}, tab};

  GoalTable others(tab.begin() + 1, tab.end());
  TraceEvent event{rule_name(head.front()), others.size(), {}};
  Inserted ins = insert_goals(std::move(*subgoals), std::move(others), solve);
  event.closed = std::move(ins.closed);
  return StepResult{StepResult::Status::Stepped, std::move(event), std::move(ins.table)};
}

Engine::Engine(ProverOptions options) : options_(options), rng_(options.seed.value_or(0)) {}

GoalTable Engine::read_table(const std::vector<Formula>& left, const std::vector<Formula>& right) {
  names_.reset();
  std::vector<Formula> as(left.rbegin(), left.rend());
  std::vector<Formula> bs(right.rbegin(), right.rend());
  return insert_goals({make_goal(as, bs)}, {}).table;
}

Solver Engine::solver() {
  if (!options_.seed) return solve_goal;
  return [this](const Goal& g) -> std::optional<Solution> {
    std::vector<Solution> all = all_solutions(g);
    if (all.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng_)];
  };
}

Inserted Engine::insert_goals(std::vector<Goal> goals, GoalTable tab) {
  return folderol::insert_goals(std::move(goals), std::move(tab), solver());
}

StepResult Engine::proof_step(const GoalTable& tab) {
  return folderol::proof_step(tab, names_, options_.remove_duplicates, solver());
}

RunResult Engine::proof_steps(int n, GoalTable tab, const std::function<void(const TraceEvent&)>& observer,
                              std::optional<std::size_t> max_steps) {
  RunResult out;
  std::size_t taken = 0;
  while (!tab.empty() && n != 0) {
    if (max_steps && taken >= *max_steps) {
      out.capped = true;
      break;
    }
    StepResult r = proof_step(tab);
    if (r.status == StepResult::Status::NoRules) {
      out.no_rules = true;
      break;
    }
    if (observer) observer(r.event);
    out.events.push_back(std::move(r.event));
    tab = std::move(r.table);
    ++taken;
    if (n > 0) --n;
  }
  out.table = std::move(tab);
  return out;
}

std::string format_sequent(const std::vector<Formula>& left, const std::vector<Formula>& right) {
  auto side = [](const std::vector<Formula>& xs) {
    if (xs.empty()) return std::string("empty");
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i > 0) s += ", ";
      s += unparse(xs[i]);
    }
    return s;
  };
  return side(left) + " |- " + side(right);
}

std::string format_goal(const Goal& g) {
  SplitGoal s = split_goal(g);
  return format_sequent(s.left, s.right);
}

std::string format_table(const GoalTable& tab) {
  if (tab.empty()) return "No more goals: proof finished\n";
  std::string out = "\n";
  for (const Goal& g : tab) out += format_goal(g) + "\n\n";
  if (tab.size() > 1) out += std::to_string(tab.size()) + " goals\n";
  std::vector<ParamInfo> params = params_in_table(tab);
  if (!params.empty()) {
    out += "Param      Not allowed in\n";
    for (const ParamInfo& p : params) {
      out += p.name;
      if (!p.deps.empty()) {
        out += std::string(p.name.size() < 11 ? 11 - p.name.size() : 1, ' ');
        out += '(';
        for (std::size_t i = 0; i < p.deps.size(); ++i) {
          if (i > 0) out += ',';
          out += '?' + p.deps[i];
        }
        out += ')';
      }
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

std::string format_event(const TraceEvent& e) {
  std::string out(e.indent, ' ');
  out += e.rule;
  for (const Formula& a : e.closed) {
    out += "  ";
    out += unparse(a);
  }
  return out;
}

}  // namespace folderol
