#pragma once

// Independent oracles for the test suites. Nothing here calls the prover,
// the unifier or the checker.

#include <cstdint>
#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "folderol/proof_tree.hpp"
#include "folderol/term.hpp"

namespace oracle {

using folderol::Connective;
using folderol::Formula;
using folderol::Quantifier;
using folderol::Sequent;
using folderol::Term;

// ---------------------------------------------------------------------------
// Truth tables

inline void letters_of(const Formula& a, std::set<std::string>& acc) {
  if (a.is_pred()) {
    acc.insert(a.name());
    return;
  }
  if (a.is_quant()) {
    letters_of(a.body(), acc);
    return;
  }
  for (const Formula& b : a.operands()) letters_of(b, acc);
}

inline bool eval(const Formula& a, const std::map<std::string, bool>& v) {
  if (a.is_pred()) return v.at(a.name());
  const auto& ops = a.operands();
  switch (a.connective()) {
    case Connective::Not: return !eval(ops[0], v);
    case Connective::And: return eval(ops[0], v) && eval(ops[1], v);
    case Connective::Or: return eval(ops[0], v) || eval(ops[1], v);
    case Connective::Implies: return !eval(ops[0], v) || eval(ops[1], v);
    case Connective::Iff: return eval(ops[0], v) == eval(ops[1], v);
  }
  return false;
}

/// Valid iff every assignment making all of the left true makes some of
/// the right true. Quantifier-free input only.
inline bool tautology(const Sequent& s) {
  std::set<std::string> names;
  for (const Formula& a : s.left) letters_of(a, names);
  for (const Formula& b : s.right) letters_of(b, names);
  const std::vector<std::string> letters(names.begin(), names.end());
  const std::uint32_t rows = 1u << letters.size();
  for (std::uint32_t row = 0; row < rows; ++row) {
    std::map<std::string, bool> v;
    for (std::size_t i = 0; i < letters.size(); ++i) v[letters[i]] = (row >> i) & 1u;
    bool lhs = true;
    for (const Formula& a : s.left) lhs = lhs && eval(a, v);
    bool rhs = false;
    for (const Formula& b : s.right) rhs = rhs || eval(b, v);
    if (lhs && !rhs) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Ground substitutions over {f/1, g/2, a/0} and the variables ?x, ?y

/// Terms over a, ?x, ?y, f and g of depth at most `depth`.
inline std::vector<Term> term_universe(int depth, bool with_vars = true) {
  std::vector<Term> level = {Term::constant("a")};
  if (with_vars) {
    level.push_back(Term::var("x"));
    level.push_back(Term::var("y"));
  }
  const std::vector<Term> atoms = level;
  for (int d = 1; d <= depth; ++d) {
    std::vector<Term> next = atoms;
    for (const Term& t : level) next.push_back(Term::fun("f", {t}));
    for (const Term& t : level)
      for (const Term& u : level) next.push_back(Term::fun("g", {t, u}));
    level = std::move(next);
  }
  return level;
}

struct Ground {
  Term x;
  Term y;
};

inline Term apply(const Ground& s, const Term& t) {
  if (t.is_var()) return t.name() == "x" ? s.x : t.name() == "y" ? s.y : t;
  if (!t.is_fun() || t.args().empty()) return t;
  std::vector<Term> args;
  for (const Term& u : t.args()) args.push_back(apply(s, u));
  return Term::fun(t.name(), std::move(args));
}

/// Does s make the two argument lists equal? Compares without building the
/// instances.
inline bool equal_under(const Ground& s, const Term& t, const Term& u) {
  if (t.is_var()) {
    const Term& v = t.name() == "x" ? s.x : s.y;
    return u.is_var() ? v == (u.name() == "x" ? s.x : s.y) : equal_under(s, u, v);
  }
  if (u.is_var()) return equal_under(s, u, t);
  if (t.name() != u.name() || t.args().size() != u.args().size()) return false;
  for (std::size_t i = 0; i < t.args().size(); ++i)
    if (!equal_under(s, t.args()[i], u.args()[i])) return false;
  return true;
}

/// Every ground substitution for ?x, ?y drawn from `ground` that equalises
/// each pair ts[i], us[i].
inline std::vector<Ground> ground_unifiers(const std::vector<Term>& ts, const std::vector<Term>& us,
                                           const std::vector<Term>& ground) {
  std::vector<Ground> out;
  for (const Term& gx : ground)
    for (const Term& gy : ground) {
      Ground s{gx, gy};
      bool ok = true;
      for (std::size_t i = 0; ok && i < ts.size(); ++i) ok = equal_under(s, ts[i], us[i]);
      if (ok) out.push_back(s);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Random well-formed formulae

/**
 * Generates closed formulae the way the parser builds them: quantified
 * bodies are generated with the bound name as a constant and then
 * abstracted. Depth counts formula nodes, so depth 1 is an atom.
 */
class FormulaGen {
 public:
  explicit FormulaGen(std::uint64_t seed) : rng_(seed) {}

  Formula formula(int depth) {
    if (depth <= 1 || pick(4) == 0) return atom();
    switch (pick(7)) {
      case 0: return Formula::negation(formula(depth - 1));
      case 1: return Formula::binary(Connective::And, formula(depth - 1), formula(depth - 1));
      case 2: return Formula::binary(Connective::Or, formula(depth - 1), formula(depth - 1));
      case 3: return Formula::binary(Connective::Implies, formula(depth - 1), formula(depth - 1));
      case 4: return Formula::binary(Connective::Iff, formula(depth - 1), formula(depth - 1));
      default: {
        const std::string x = kBound[pick(kBound.size())];
        const Quantifier q = pick(2) == 0 ? Quantifier::All : Quantifier::Exists;
        return Formula::quant(q, x, folderol::abstract(Term::constant(x), formula(depth - 1)));
      }
    }
  }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Term term(int depth) {
    if (depth <= 1 || pick(3) == 0) {
      switch (pick(3)) {
        case 0: return Term::var(kVars[pick(kVars.size())]);
        case 1: return Term::constant(kBound[pick(kBound.size())]);
        default: return Term::constant(kConsts[pick(kConsts.size())]);
      }
    }
    std::vector<Term> args;
    const std::size_t n = 1 + pick(2);
    for (std::size_t i = 0; i < n; ++i) args.push_back(term(depth - 1));
    return Term::fun(n == 1 ? "f" : "g", std::move(args));
  }

  Formula atom() {
    const std::size_t n = pick(3);
    std::vector<Term> args;
    for (std::size_t i = 0; i < n; ++i) args.push_back(term(3));
    return Formula::pred(kPreds[pick(kPreds.size())], std::move(args));
  }

  inline static const std::vector<std::string> kPreds = {"P", "Q", "R", "Even"};
  inline static const std::vector<std::string> kConsts = {"a", "b", "0", "12", "banana"};
  inline static const std::vector<std::string> kBound = {"x", "y", "z"};
  inline static const std::vector<std::string> kVars = {"a", "s", "12"};

  std::mt19937_64 rng_;
};

inline int depth(const Formula& a) {
  if (a.is_pred()) return 1;
  if (a.is_quant()) return 1 + depth(a.body());
  int d = 0;
  for (const Formula& b : a.operands()) d = std::max(d, depth(b));
  return 1 + d;
}

inline int connectives(const Formula& a) {
  if (a.is_pred()) return 0;
  if (a.is_quant()) return connectives(a.body());
  int n = 1;
  for (const Formula& b : a.operands()) n += connectives(b);
  return n;
}

// ---------------------------------------------------------------------------
// Proof-tree mutations

struct Mutant {
  std::string what;
  folderol::ProofTree tree;
};

namespace detail {

inline folderol::ProofTree& node_at(folderol::ProofTree& t, const std::vector<std::size_t>& path) {
  folderol::ProofTree* n = &t;
  for (std::size_t i : path) n = &n->premises[i];
  return *n;
}

inline void paths(const folderol::ProofTree& t, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  out.push_back(cur);
  for (std::size_t i = 0; i < t.premises.size(); ++i) {
    cur.push_back(i);
    paths(t.premises[i], cur, out);
    cur.pop_back();
  }
}

inline std::string path_name(const std::vector<std::size_t>& p) {
  std::string s = "root";
  for (std::size_t i : p) s += "." + std::to_string(i);
  return s;
}

inline Term rename_term(const Term& t, const std::string& from, const std::string& to) {
  if (t.is_fun()) {
    if (t.args().empty()) return t.name() == from ? Term::constant(to) : t;
    std::vector<Term> args;
    for (const Term& u : t.args()) args.push_back(rename_term(u, from, to));
    return Term::fun(t.name(), std::move(args));
  }
  return t;
}

inline Formula rename(const Formula& a, const std::string& from, const std::string& to) {
  if (a.is_pred()) {
    std::vector<Term> args;
    for (const Term& t : a.args()) args.push_back(rename_term(t, from, to));
    return Formula::pred(a.name(), std::move(args));
  }
  if (a.is_quant()) return Formula::quant(a.quantifier(), a.name(), rename(a.body(), from, to));
  std::vector<Formula> ops;
  for (const Formula& b : a.operands()) ops.push_back(rename(b, from, to));
  return Formula::conn(a.connective(), std::move(ops));
}

inline bool mentions(const Formula& a, const std::string& c) { return !(rename(a, c, c + "_") == a); }

}  // namespace detail

/**
 * Single-point mutations of a valid tree: every other rule label at every
 * node, deletion of each premise, swapping the two premises of a split,
 * dropping any one formula of any sequent, adding a stray atom to any
 * sequent, replacing any witness, and renaming one occurrence of an
 * eigenvariable.
 */
inline std::vector<Mutant> mutations(const folderol::ProofTree& valid) {
  using folderol::ProofTree;
  using folderol::Rule;
  std::vector<Mutant> out;
  std::vector<std::vector<std::size_t>> ps;
  std::vector<std::size_t> cur;
  detail::paths(valid, cur, ps);

  auto emit = [&](const std::vector<std::size_t>& p, const std::string& what,
                  const std::function<void(ProofTree&)>& change) {
    ProofTree t = valid;
    change(detail::node_at(t, p));
    out.push_back({detail::path_name(p) + ": " + what, std::move(t)});
  };

  for (const auto& p : ps) {
    const ProofTree& n = detail::node_at(const_cast<ProofTree&>(valid), p);

    for (Rule r : folderol::all_rules())
      if (r != n.rule)
        emit(p, "label " + std::string(folderol::rule_label(r)), [r](ProofTree& m) { m.rule = r; });

    for (std::size_t i = 0; i < n.premises.size(); ++i)
      emit(p, "delete premise " + std::to_string(i),
           [i](ProofTree& m) { m.premises.erase(m.premises.begin() + static_cast<std::ptrdiff_t>(i)); });
    if (n.premises.size() == 2)
      emit(p, "swap premises", [](ProofTree& m) { std::swap(m.premises[0], m.premises[1]); });

    for (std::size_t i = 0; i < n.sequent.left.size(); ++i)
      emit(p, "drop left " + std::to_string(i), [i](ProofTree& m) {
        m.sequent.left.erase(m.sequent.left.begin() + static_cast<std::ptrdiff_t>(i));
      });
    for (std::size_t i = 0; i < n.sequent.right.size(); ++i)
      emit(p, "drop right " + std::to_string(i), [i](ProofTree& m) {
        m.sequent.right.erase(m.sequent.right.begin() + static_cast<std::ptrdiff_t>(i));
      });
    emit(p, "stray left atom", [](ProofTree& m) { m.sequent.left.push_back(Formula::pred("Stray")); });
    emit(p, "stray right atom", [](ProofTree& m) { m.sequent.right.push_back(Formula::pred("Stray")); });

    if (n.witness) {
      emit(p, "witness -> zz", [](ProofTree& m) { m.witness = Term::constant("zz"); });
      emit(p, "witness removed", [](ProofTree& m) { m.witness.reset(); });
    }

    // One occurrence of an eigenvariable renamed: in the premise formulae
    // that mention it, one formula at a time.
    const bool eigen = n.rule == Rule::AllRight || n.rule == Rule::ExistsLeft;
    if (eigen && n.witness && n.witness->is_constant()) {
      const std::string c = n.witness->name();
      for (std::size_t k = 0; k < n.premises.size(); ++k) {
        const Sequent& s = n.premises[k].sequent;
        for (std::size_t i = 0; i < s.left.size(); ++i)
          if (detail::mentions(s.left[i], c))
            emit(p, "rename eigen in premise left " + std::to_string(i), [k, i, c](ProofTree& m) {
              m.premises[k].sequent.left[i] = detail::rename(m.premises[k].sequent.left[i], c, "zz");
            });
        for (std::size_t i = 0; i < s.right.size(); ++i)
          if (detail::mentions(s.right[i], c))
            emit(p, "rename eigen in premise right " + std::to_string(i), [k, i, c](ProofTree& m) {
              m.premises[k].sequent.right[i] = detail::rename(m.premises[k].sequent.right[i], c, "zz");
            });
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text helpers

/// Collapses every run of whitespace to one blank and trims the ends.
inline std::string squash(const std::string& s) {
  std::istringstream in(s);
  std::string word;
  std::string out;
  while (in >> word) out += (out.empty() ? "" : " ") + word;
  return out;
}

}  // namespace oracle
