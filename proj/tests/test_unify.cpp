#include <algorithm>

#include "doctest.h"
#include "folderol/syntax.hpp"
#include "folderol/unify.hpp"
#include "support/oracles.hpp"

using namespace folderol;

namespace {

Term v(const char* n) { return Term::var(n); }
Term c(const char* n) { return Term::constant(n); }
Term f(Term t) { return Term::fun("f", {std::move(t)}); }
Term g(Term t, Term u) { return Term::fun("g", {std::move(t), std::move(u)}); }

std::optional<Environment> unify(const char* a, const char* b) { return unify_atoms(parse(a), parse(b)); }

}  // namespace

TEST_CASE("worked examples") {
  SUBCASE("two distinct constants") { CHECK_FALSE(unify("P(g(a,c))", "P(g(?b,?b))")); }
  SUBCASE("occurs check through an earlier solution") { CHECK_FALSE(unify("P(g(?a,f(?a)))", "P(g(?b,?b))")); }
  SUBCASE("three equations solved in turn") {
    auto env = unify("P(h(?a,f(?a),?d))", "P(h(g(0,?d),?b,?c))");
    REQUIRE(env);
    // Up to renaming of ?c and ?d.
    Term a = instantiate(*env, v("a"));
    Term b = instantiate(*env, v("b"));
    Term d = instantiate(*env, v("d"));
    Term cc = instantiate(*env, v("c"));
    CHECK(d == cc);
    REQUIRE(d.is_var());
    CHECK(a == Term::fun("g", {c("0"), d}));
    CHECK(b == f(Term::fun("g", {c("0"), d})));
  }
  SUBCASE("identical atoms need no assignment") {
    auto env = unify("P(?a)", "P(?a)");
    REQUIRE(env);
    CHECK(env->empty());
  }
}

TEST_CASE("parameter dependencies") {
  SUBCASE("?a = g(?c), ?c = b[?a] fails") {
    CHECK_FALSE(unify_terms({v("a"), v("c")}, {Term::fun("g", {v("c")}), Term::param("b", {"a"})}, {}));
  }
  SUBCASE("?a = d[?c], ?c = b[?a] succeeds") {
    auto env = unify_terms({v("a"), v("c")}, {Term::param("d", {"c"}), Term::param("b", {"a"})}, {});
    REQUIRE(env);
    CHECK(instantiate(*env, v("c")) == Term::param("b", {}));
    CHECK(instantiate(*env, v("a")) == Term::param("d", {}));
  }
  SUBCASE("assigning into a parameter's own dependency is circular") {
    CHECK_FALSE(unify_atoms(Formula::pred("R", {v("c"), v("c")}),
                            Formula::pred("R", {Term::param("b", {"a"}), v("a")})));
  }
}

TEST_CASE("occurs check") {
  CHECK_FALSE(unify("P(?a)", "P(f(?a))"));
  CHECK_FALSE(unify("R(?a,f(?a))", "R(?b,?b)"));
  CHECK(unify("R(?a,f(?b))", "R(?b,?c)"));
}

TEST_CASE("clashes") {
  CHECK_FALSE(unify("P(a)", "Q(a)"));
  CHECK_FALSE(unify("P(a)", "P(a,a)"));
  CHECK_FALSE(unify("P(f(a))", "P(g(a,a))"));
  CHECK_FALSE(unify("P(f(?a))", "P(b)"));
  CHECK_FALSE(unify_atoms(parse("P & Q"), parse("P & Q")));
  CHECK_FALSE(unify_atoms(Formula::pred("P", {Term::param("b", {})}), Formula::pred("P", {Term::param("c", {})})));
}

TEST_CASE("environment never stores identity assignments") {
  auto env = unify("P(?a, ?a)", "P(?b, ?a)");
  REQUIRE(env);
  for (const auto& [name, t] : env->bindings()) CHECK_FALSE((t.is_var() && t.name() == name));
}

TEST_CASE("unify extends the environment it is given") {
  Environment base = Environment{}.bind("a", c("k"));
  CHECK_FALSE(unify_atoms(parse("P(?a)"), parse("P(j)"), base));
  auto env = unify_atoms(parse("P(?a)"), parse("P(?b)"), base);
  REQUIRE(env);
  CHECK(instantiate(*env, v("b")) == c("k"));
  CHECK(base.size() == 1);
}

TEST_CASE("instantiate") {
  SUBCASE("chases through assignments") {
    Environment env = Environment{}.bind("b", v("c")).bind("a", v("b"));
    CHECK(instantiate(env, v("a")) == v("c"));
    CHECK(chase(v("a"), env) == v("c"));
  }
  SUBCASE("empty environment") {
    Term t = g(v("x"), f(c("a")));
    CHECK(instantiate(Environment{}, t) == t);
  }
  SUBCASE("parameter dependencies are regathered") {
    Environment env = Environment{}.bind("a", f(v("b")));
    Term p = instantiate(env, Term::param("c", {"a", "d"}));
    REQUIRE(p.is_param());
    std::vector<std::string> deps = p.deps();
    std::sort(deps.begin(), deps.end());
    CHECK(deps == std::vector<std::string>{"b", "d"});
  }
  SUBCASE("formulae") {
    Environment env = Environment{}.bind("c", c("a")).bind("b", c("a"));
    CHECK(instantiate(env, parse("R(?c,?c)")).identical(parse("R(a,a)")));
    CHECK(instantiate(env, parse("R(a,?b)")).identical(parse("R(a,a)")));
    Environment env2 = Environment{}.bind("a", Term::fun("g", {c("0"), v("c")}));
    CHECK(instantiate(env2, parse("P(?a, ?d)")).identical(parse("P(g(0,?c), ?d)")));
  }
}

TEST_CASE("collect_vars") {
  std::vector<std::string> acc;
  collect_vars(Term::fun("f", {v("x"), g(v("y"), v("x"))}), acc);
  // New names go to the front.
  CHECK(acc == std::vector<std::string>{"y", "x"});

  std::vector<std::string> none;
  collect_vars(g(c("a"), f(c("b"))), none);
  CHECK(none.empty());
  collect_vars(Term::param("b", {"a"}), none);
  CHECK(none.empty());

  std::vector<std::string> keep = {"x"};
  collect_vars(parse("R(?x, ?z)"), keep);
  CHECK(keep == std::vector<std::string>{"z", "x"});
}

TEST_CASE("collect_params") {
  std::vector<ParamInfo> acc;
  collect_params(parse("P(a, f(?x))"), acc);
  CHECK(acc.empty());
  collect_params(Formula::pred("R", {Term::param("b", {"a"}), Term::param("c", {})}), acc);
  CHECK(acc.size() == 2);
  CHECK(std::find(acc.begin(), acc.end(), ParamInfo{"b", {"a"}}) != acc.end());
  CHECK(std::find(acc.begin(), acc.end(), ParamInfo{"c", {}}) != acc.end());
}

TEST_CASE("agrees with ground enumeration on single-argument atoms of depth 1") {
  const auto terms = oracle::term_universe(1);
  const auto ground = oracle::term_universe(2, false);
  for (const Term& s : terms)
    for (const Term& t : terms) {
      auto env = unify_atoms(Formula::pred("P", {s}), Formula::pred("P", {t}));
      auto sols = oracle::ground_unifiers({s}, {t}, ground);
      INFO(unparse(s) << " = " << unparse(t));
      CHECK(env.has_value() == !sols.empty());
      if (!env) continue;
      const Term ix = instantiate(*env, v("x"));
      const Term iy = instantiate(*env, v("y"));
      for (const auto& sol : sols) {
        CHECK(oracle::apply(sol, ix) == sol.x);
        CHECK(oracle::apply(sol, iy) == sol.y);
      }
    }
}
