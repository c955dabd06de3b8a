#include "folderol/unify.hpp"

#include <algorithm>

namespace folderol {

struct Environment::Cell {
  std::string name;
  Term value;
  std::shared_ptr<const Cell> next;
};

const Term* Environment::lookup(std::string_view name) const {
  for (const Cell* c = head_.get(); c != nullptr; c = c->next.get())
    if (c->name == name) return &c->value;
  return nullptr;
}

Environment Environment::bind(std::string name, Term value) const {
  return Environment(std::make_shared<const Cell>(Cell{std::move(name), std::move(value), head_}));
}

std::size_t Environment::size() const noexcept {
  std::size_t n = 0;
  for (const Cell* c = head_.get(); c != nullptr; c = c->next.get()) ++n;
  return n;
}

std::vector<std::pair<std::string, Term>> Environment::bindings() const {
  std::vector<std::pair<std::string, Term>> out;
  for (const Cell* c = head_.get(); c != nullptr; c = c->next.get()) out.emplace_back(c->name, c->value);
  return out;
}

Term chase(const Term& t, const Environment& env) {
  Term cur = t;
  while (cur.is_var()) {
    const Term* next = env.lookup(cur.name());
    if (next == nullptr) break;
    cur = *next;
  }
  return cur;
}

namespace {

bool occurs_in_var(std::string_view name, const std::string& b, const Environment& env) {
  if (name == b) return true;
  const Term* value = env.lookup(b);
  return value != nullptr && occurs(name, *value, env);
}

// A dependency only reaches the plain variables of its value; parameters met
// there contribute nothing, as when the value is substituted into the list.
bool occurs_plain(std::string_view name, const Term& t, const Environment& env) {
  switch (t.kind()) {
    case Term::Kind::Fun:
      return std::any_of(t.args().begin(), t.args().end(),
                         [&](const Term& u) { return occurs_plain(name, u, env); });
    case Term::Kind::Var: {
      if (name == t.name()) return true;
      const Term* value = env.lookup(t.name());
      return value != nullptr && occurs_plain(name, *value, env);
    }
    default:
      return false;
  }
}

bool occurs_in_dep(std::string_view name, const std::string& b, const Environment& env) {
  if (name == b) return true;
  const Term* value = env.lookup(b);
  return value != nullptr && occurs_plain(name, *value, env);
}

std::optional<Environment> unify_var(const std::string& a, const Term& t, const Environment& env) {
  if (t.is_var() && t.name() == a) return env;
  if (occurs(a, t, env)) return std::nullopt;
  return env.bind(a, t);
}

std::optional<Environment> unify_term(const Term& t, const Term& u, const Environment& env) {
  if (t.is_var()) return unify_var(t.name(), u, env);
  if (u.is_var()) return unify_var(u.name(), t, env);
  if (t.is_param() && u.is_param()) {
    if (t.name() == u.name()) return env;
    return std::nullopt;
  }
  if (t.is_fun() && u.is_fun()) {
    if (t.name() == u.name()) return unify_terms(t.args(), u.args(), env);
    return std::nullopt;
  }
  return std::nullopt;
}

void insert_name(const std::string& name, std::vector<std::string>& acc) {
  if (std::find(acc.begin(), acc.end(), name) == acc.end()) acc.insert(acc.begin(), name);
}

// The variables of a term once instantiated, without rebuilding it. Parameters
// inside are skipped, so a cycle through dependency lists cannot loop.
void collect_plain_vars(const Environment& env, const Term& t, std::vector<std::string>& acc) {
  if (t.is_var()) {
    const Term* value = env.lookup(t.name());
    if (value == nullptr)
      insert_name(t.name(), acc);
    else
      collect_plain_vars(env, *value, acc);
  } else if (t.is_fun()) {
    for (const Term& u : t.args()) collect_plain_vars(env, u, acc);
  }
}

template <typename Fn>
void each_term(const Formula& a, const Fn& fn) {
  switch (a.kind()) {
    case Formula::Kind::Pred:
      for (const Term& t : a.args()) fn(t);
      return;
    case Formula::Kind::Conn:
      for (const Formula& b : a.operands()) each_term(b, fn);
      return;
    case Formula::Kind::Quant:
      each_term(a.body(), fn);
      return;
  }
}

}  // namespace

bool occurs(std::string_view name, const Term& t, const Environment& env) {
  switch (t.kind()) {
    case Term::Kind::Fun:
      return std::any_of(t.args().begin(), t.args().end(), [&](const Term& u) { return occurs(name, u, env); });
    case Term::Kind::Param:
      return std::any_of(t.deps().begin(), t.deps().end(),
                         [&](const std::string& b) { return occurs_in_dep(name, b, env); });
    case Term::Kind::Var:
      return occurs_in_var(name, t.name(), env);
    case Term::Kind::Bound:
      return false;
  }
  return false;
}

std::optional<Environment> unify_terms(const std::vector<Term>& ts, const std::vector<Term>& us,
                                       const Environment& env) {
  if (ts.size() != us.size()) return std::nullopt;
  std::optional<Environment> cur = env;
  for (std::size_t i = 0; i < ts.size() && cur; ++i)
    cur = unify_term(chase(ts[i], *cur), chase(us[i], *cur), *cur);
  return cur;
}

std::optional<Environment> unify_atoms(const Formula& a, const Formula& b, const Environment& env) {
  if (!a.is_pred() || !b.is_pred() || a.name() != b.name()) return std::nullopt;
  return unify_terms(a.args(), b.args(), env);
}

Term instantiate(const Environment& env, const Term& t) {
  if (env.empty()) return t;
  switch (t.kind()) {
    case Term::Kind::Fun: {
      if (t.args().empty()) return t;
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& u : t.args()) args.push_back(instantiate(env, u));
      return Term::fun(t.name(), std::move(args));
    }
    case Term::Kind::Param: {
      std::vector<std::string> deps;
      for (const std::string& b : t.deps()) collect_plain_vars(env, Term::var(b), deps);
      return Term::param(t.name(), std::move(deps));
    }
    case Term::Kind::Var: {
      const Term* value = env.lookup(t.name());
      return value == nullptr ? t : instantiate(env, *value);
    }
    case Term::Kind::Bound:
      return t;
  }
  return t;
}

Formula instantiate(const Environment& env, const Formula& a) {
  if (env.empty()) return a;
  switch (a.kind()) {
    case Formula::Kind::Pred: {
      std::vector<Term> args;
      args.reserve(a.args().size());
      for (const Term& t : a.args()) args.push_back(instantiate(env, t));
      return Formula::pred(a.name(), std::move(args));
    }
    case Formula::Kind::Conn: {
      std::vector<Formula> ops;
      ops.reserve(a.operands().size());
      for (const Formula& b : a.operands()) ops.push_back(instantiate(env, b));
      return Formula::conn(a.connective(), std::move(ops));
    }
    case Formula::Kind::Quant:
      return Formula::quant(a.quantifier(), a.name(), instantiate(env, a.body()));
  }
  return a;
}

void collect_vars(const Term& t, std::vector<std::string>& acc) {
  if (t.is_var()) {
    insert_name(t.name(), acc);
  } else {
    for (const Term& u : t.args()) collect_vars(u, acc);
  }
}

void collect_vars(const Formula& a, std::vector<std::string>& acc) {
  each_term(a, [&](const Term& t) { collect_vars(t, acc); });
}

void collect_params(const Term& t, std::vector<ParamInfo>& acc) {
  if (t.is_param()) {
    ParamInfo info{t.name(), t.deps()};
    if (std::find(acc.begin(), acc.end(), info) == acc.end()) acc.insert(acc.begin(), std::move(info));
  } else {
    for (const Term& u : t.args()) collect_params(u, acc);
  }
}

void collect_params(const Formula& a, std::vector<ParamInfo>& acc) {
  each_term(a, [&](const Term& t) { collect_params(t, acc); });
}

}  // namespace folderol
