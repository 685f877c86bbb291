#include <doctest.h>

#include "hamel/logic/eval.hpp"
#include "hamel/logic/linear_form.hpp"
#include "hamel/logic/syntax.hpp"
#include "hamel/presentation.hpp"
#include "support.hpp"

using namespace hamel;
using namespace hamel::logic;

namespace {

std::size_t error_column(std::string_view s) {
  try {
    parse_formula(s);
  } catch (const ParseError& e) {
    return e.position();
  }
  return 0;
}

std::string roundtrip(std::string_view s) { return print_formula(*parse_formula(s)); }

}  // namespace

TEST_CASE("formula syntax tree") {
  FormulaPtr f = parse_formula("E x. (0 <0 x & x <1 0)");
  FormulaPtr expected = f_exists("x", f_and(f_lt(0, t_zero(), t_var("x")), f_lt(1, t_var("x"), t_zero())));
  CHECK(same(*f, *expected));
  CHECK_THROWS_AS(parse_formula("a & b = c"), ParseError);
  // precedence: ! > & > | > ->
  FormulaPtr g = parse_formula("!a = b & c = d | e = f -> g = h -> i = j");
  CHECK(g->kind == Formula::Kind::Implies);
  CHECK(g->b->kind == Formula::Kind::Implies);
  CHECK(g->a->kind == Formula::Kind::Or);
  CHECK(g->a->a->kind == Formula::Kind::And);
  CHECK(g->a->a->a->kind == Formula::Kind::Not);
}

TEST_CASE("canonical printing round trips") {
  const char* corpus[] = {
      "E x. (0 <0 x & x <1 0)",
      "A y. E x. (y <0 x & x <1 y)",
      "a <0 b & !(c = inf)",
      "x = y",
      "true",
      "false",
      "3/2*h1 - -1*t2 = 0",
      "v(x) = h1",
      "v(x + 2*y) <=0 v(v(x))",
      "(a = b | c = d) & e <1 f",
      "a = b | c = d & e <1 f",
      "(a = b -> c = d) -> e = f",
      "a = b -> c = d -> e = f",
      "(E x. x = y) & z = z",
      "!(E x. x <0 y) | (A z. z <=1 z)",
      "E x. !(x = 0)",
      "2*(x + y) - 3*(x - 2*(y + z)) <1 inf",
      "0*x = 0",
      "x - (y - z) = x - y + z",
      "E x. E y. (x <0 y -> y <1 x)",
      "!(!(a = b))",
      "a <12 b",
      "inf + -3*0 = 1*0",
  };
  for (const char* s : corpus) CHECK(roundtrip(s) == s);
  // whitespace is not significant
  CHECK(roundtrip("E   x.(0<0 x&x <1 0)") == "E x. (0 <0 x & x <1 0)");
}

TEST_CASE("grammar errors carry a position") {
  CHECK(error_column("x <0") == 5);
  CHECK(error_column("x < y") == 3);           // missing order suffix
  CHECK(error_column("x = y &") == 8);
  CHECK(error_column("E . x = y") == 3);
  CHECK(error_column("E x x = y") == 5);
  CHECK(error_column("(x = y") == 7);
  CHECK(error_column("x = 3") == 5);           // bare constant
  CHECK(error_column("x = y $ z") == 7);
  CHECK(error_column("v = x") == 3);           // v needs an argument
  CHECK(error_column("E E. x = x") == 3);      // reserved word
  CHECK(error_column("x = 1/0*y") == 7);
  CHECK(error_column("") == 1);
}

TEST_CASE("well-formedness against a structure") {
  FormulaPtr f = parse_formula("v(x) = x");
  CHECK_THROWS_AS(check_formula(*f, 2, false), ParseError);
  CHECK_NOTHROW(check_formula(*f, 2, true));
  FormulaPtr g = parse_formula("x <2 y");
  CHECK_THROWS_AS(check_formula(*g, 2, false), ParseError);
  CHECK_NOTHROW(check_formula(*g, 3, false));
  try {
    check_formula(*parse_formula("x = y & v(x) = y"), 2, false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
}

TEST_CASE("linear normal forms") {
  LinearForm a = normalize_term(*parse_term("x + x + -1*y"));
  CHECK(print_form(a) == "2*x - y");
  CHECK(normalize_term(*parse_term("x + inf")).inf);
  CHECK(print_form(normalize_term(*parse_term("3*(x + 2*y) - 6*y"))) == "3*x + 0*y");
  CHECK(normalize_term(*parse_term("3*(x + 2*y) - 6*y")).coeffs == normalize_term(*parse_term("3*x")).coeffs);
  CHECK(normalize_term(*parse_term("0")).is_ground_zero());
  CHECK_THROWS_AS(normalize_term(*parse_term("v(x)")), DomainError);
}

TEST_CASE("quantifier-free evaluation in M1") {
  test::M1 w;
  const Model& m = w.model;
  Assignment s{{"x", Point(parse_vector(m, "h2 + 5*t"))}};
  CHECK(evaluate_qf(m, *parse_formula("v(x) = h1"), s));
  CHECK(evaluate_qf(m, *parse_formula("x = x"), s));
  CHECK(evaluate_qf(m, *parse_formula("x = x"), {{"x", Point::infinity()}}));
  CHECK(evaluate_qf(m, *parse_formula("x <1 h1"), {{"x", Point(w.h2)}}));
  CHECK_FALSE(evaluate_qf(m, *parse_formula("x <1 h1"), {{"x", Point::infinity()}}));
  CHECK(evaluate_qf(m, *parse_formula("h1 <=0 h1 & !(t <0 h2) & 0 <1 t & t <1 h1"), {}));
  CHECK(evaluate_qf(m, *parse_formula("v(t) = h1 & v(0) = inf & v(inf) = inf & 0*inf = inf"), {}));
  CHECK_THROWS_AS(evaluate_qf(m, *parse_formula("y = y"), {}), DomainError);
  CHECK_THROWS_AS(evaluate_qf(m, *parse_formula("E y. y = y"), {}), DomainError);
  CHECK_THROWS_AS(evaluate_qf(m, *parse_formula("h1 <2 h2"), {}), DomainError);
  Model p = Model::plain(2);
  CHECK_THROWS_AS(evaluate_qf(p, *parse_formula("v(0) = 0"), {}), DomainError);
}

TEST_CASE("quantifier-free evaluation in the leading-term structure") {
  OracleStructure o;
  LeadAssignment s{{"x", oracle::parse_lead_point("2*e1 - 3*e2")}};
  CHECK(evaluate_qf(o, *parse_formula("v(x) = e1"), s));
  CHECK(evaluate_qf(o, *parse_formula("0 <1 x & v(x) <0 e2 & e2 <0 inf"), s));
  CHECK(evaluate_qf(o, *parse_formula("v(x) <=0 v(x + e0) | v(x + e0) = e0"), s));
  CHECK_THROWS_AS(evaluate_qf(o, *parse_formula("x <0 e1"), s), DomainError);
  CHECK_THROWS_AS(evaluate_qf(o, *parse_formula("x <2 e1"), s), DomainError);
}
