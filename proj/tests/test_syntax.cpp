#include "doctest.h"
#include "folderol/syntax.hpp"
#include "support/oracles.hpp"

using namespace folderol;

TEST_CASE("scan") {
  using T = Token;
  CHECK(scan("P-->Q") == std::vector<Token>{T::id("P"), T::key("-->"), T::id("Q")});
  CHECK(scan("").empty());
  CHECK(scan("ALL x.P(x)") ==
        std::vector<Token>{T::key("ALL"), T::id("x"), T::key("."), T::id("P"), T::key("("), T::id("x"), T::key(")")});
  CHECK(scan("a<->b\t\n EXISTS") == std::vector<Token>{T::id("a"), T::key("<->"), T::id("b"), T::key("EXISTS")});
  CHECK(scan("?s ?12") == std::vector<Token>{T::key("?"), T::id("s"), T::key("?"), T::id("12")});
  CHECK(scan("x-y") == std::vector<Token>{T::id("x"), T::key("-"), T::id("y")});
}

TEST_CASE("parse builds the expected trees") {
  SUBCASE("0-place predicate") { CHECK(parse("P").identical(Formula::pred("P"))); }
  SUBCASE("distributive theorem has <-> at the root") {
    Formula a = parse("P | (Q & R) <-> (P | Q) & (P | R)");
    REQUIRE(a.is_conn());
    CHECK(a.connective() == Connective::Iff);
    CHECK(a.operands()[0].connective() == Connective::Or);
    CHECK(a.operands()[1].connective() == Connective::And);
  }
  SUBCASE("no arity checking") { CHECK_NOTHROW(parse("f(f(f),f(f,f),f)")); }
  SUBCASE("infixes associate to the right") {
    CHECK(parse("P --> Q --> R") == parse("P --> (Q --> R)"));
    CHECK(parse("P <-> Q --> R") == parse("P <-> (Q --> R)"));
    CHECK(parse("P & Q & R") == parse("P & (Q & R)"));
  }
  SUBCASE("precedence") {
    CHECK(parse("~P & Q | R --> S") == parse("(((~P) & Q) | R) --> S"));
  }
  SUBCASE("quantifier scope extends right") {
    Formula a = parse("ALL x. P(x) --> Q(x)");
    REQUIRE(a.is_quant());
    CHECK(a.body().is_conn());
  }
  SUBCASE("terms") {
    Formula a = parse("P(r, 12, banana, ?s, ?12, f(x,?y), succ(succ(0)))");
    const auto& args = a.args();
    REQUIRE(args.size() == 7);
    CHECK(args[0] == Term::constant("r"));
    CHECK(args[3] == Term::var("s"));
    CHECK(args[4] == Term::var("12"));
    CHECK(args[5] == Term::fun("f", {Term::constant("x"), Term::var("y")}));
    CHECK(args[6] == Term::fun("succ", {Term::fun("succ", {Term::constant("0")})}));
  }
  SUBCASE("space before an argument list") { CHECK(parse("P (x,y)") == parse("P(x,y)")); }
}

TEST_CASE("parse errors") {
  auto message = [](const char* text) {
    try {
      parse(text);
    } catch (const SyntaxError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("P(a") == "Symbol ) expected");
  CHECK(message("P(a,)") == "Syntax of term");
  CHECK(message("P Q") == "Extra characters in formula");
  CHECK(message("P ~ Q") == "Extra characters in formula");
  CHECK(message("& P") == "Syntax of formula");
  CHECK(message("") == "Syntax of formula");
  CHECK(message("ALL . P") == "Syntax of formula");
  // Negation applies to atoms and parenthesised formulae only.
  CHECK(message("~ALL x. P(x)") == "Syntax of formula");
  CHECK_NOTHROW(parse("~(ALL x. P(x))"));
}

TEST_CASE("unparse") {
  CHECK(unparse(parse("(P | Q) & (P | R) --> P | (Q & R)")) == "(P | Q) & (P | R) --> P | Q & R");
  CHECK(unparse(Formula::pred("P")) == "P");
  CHECK(unparse(parse("ALL x.R(x,x)")) == "ALL x. R(x,x)");
  CHECK(unparse(parse("(P-->Q) --> P")) == "(P --> Q) --> P");
  CHECK(unparse(parse("P --> (Q --> R)")) == "P --> (Q --> R)");
  CHECK(unparse(parse("~ (EXISTS x. ALL y. F(x,y) <-> ~ F(y,y))")) ==
        "~(EXISTS x. ALL y. F(x,y) <-> ~F(y,y))");
  CHECK(unparse(Term::var("a")) == "?a");
  CHECK(unparse(Term::param("b", {"a"})) == "b");
  CHECK(unparse(Formula::pred("P", {Term::bound(0)})) == "P(B.0)");
}

TEST_CASE("the plain printer reuses the stored name; avoid_capture renames") {
  // ALL x. R(x, c) where c is a constant literally named x.
  Formula a = Formula::quant(Quantifier::All, "x", Formula::pred("R", {Term::bound(0), Term::constant("x")}));
  CHECK(unparse(a) == "ALL x. R(x,x)");
  const std::string safe = unparse(a, PrintOptions{true});
  CHECK(safe == "ALL x1. R(x1,x)");
  CHECK(parse(safe) == a);
}

TEST_CASE("round trip on the provable examples") {
  for (const char* text : {"P | (Q & R) <-> (P | Q) & (P | R)", "((P-->Q) --> P) --> P",
                           "~ (EXISTS x. ALL y. F(x,y) <-> ~ F(y,y))",
                           "EXISTS x. EXISTS y. P (x,y) --> (ALL x. ALL y. P(x,y))",
                           "EXISTS x. ALL y. ALL z. (P(y)-->Q(z)) --> (P(x)-->Q(x))"}) {
    Formula a = parse(text);
    CHECK(parse(unparse(a)) == a);
    CHECK(parse(unparse(a)).identical(a));
  }
}

TEST_CASE("round trip on random formulae") {
  oracle::FormulaGen gen(7);
  for (int i = 0; i < 300; ++i) {
    Formula a = gen.formula(5);
    const std::string text = unparse(a);
    INFO(text);
    CHECK(parse(text).identical(a));
  }
}

TEST_CASE("parse_term") {
  CHECK(parse_term("f(a, ?b)") == Term::fun("f", {Term::constant("a"), Term::var("b")}));
  CHECK_THROWS_AS(parse_term("f(a"), SyntaxError);
  CHECK_THROWS_AS(parse_term("a b"), SyntaxError);
}
