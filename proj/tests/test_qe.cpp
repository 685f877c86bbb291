#include <doctest.h>

#include "hamel/logic/eval.hpp"
#include "hamel/logic/qe.hpp"
#include "hamel/logic/search.hpp"
#include "hamel/lab/random.hpp"
#include "support.hpp"

using namespace hamel;
using namespace hamel::logic;

namespace {

std::string qe_text(std::string_view s, int k = 2) { return print_formula(*qe(*parse_formula(s), k)); }
bool decide(std::string_view s, int k = 2) { return decide_sentence(*parse_formula(s), k); }

}  // namespace

TEST_CASE("eliminating one variable") {
  // the order-1 constraint only bounds x from below; x is finite, so c must be
  CHECK(qe_text("E x. (a <0 x & x <0 b & c <1 x)") == "a <0 b & !(c = inf)");
  CHECK(qe_text("E x. x = y") == "true");
  CHECK(qe_text("E x. (0 <0 x & x <1 0)") == "true");
  CHECK(qe_text("E x. (x <0 x)") == "false");
  CHECK(qe_text("E x. (a <0 x & x <0 a)") == "false");
  CHECK(qe_text("E x. (a <0 x & x <1 b)") == "!(a = inf)");
  CHECK(qe_text("E x. (x <1 b)") == "true");
  CHECK(qe_text("a = b") == "a = b");
  CHECK(qe_text("E x. x = inf") == "true");
  CHECK(qe_text("A x. x = inf") == "false");
}

TEST_CASE("deciding sentences") {
  CHECK_FALSE(decide("E x. (x <0 x)"));
  CHECK_FALSE(decide("E x. (0 <0 x & x <0 0)"));
  CHECK(decide("0 = 0"));
  CHECK(decide("A y. (!(y = inf) -> E x. (y <0 x & x <1 y))"));
  // y = inf has nothing above it in order 0
  CHECK_FALSE(decide("A y. E x. (y <0 x & x <1 y)"));
  CHECK(decide("A x. A y. (x <0 y | y <0 x | x = y)"));
  CHECK(decide("A x. x <=1 inf"));
  CHECK(decide("E x. E y. (x <0 y & y <1 x & x <2 y)", 3));
  CHECK_FALSE(decide("E x. (x <0 0 & 0 <0 2*x)"));
  CHECK(decide("A x. (0 <0 x -> 0 <0 3/2*x)"));
  CHECK_THROWS_AS(decide("x = x"), DomainError);
  CHECK_THROWS_AS(decide("E x. v(x) = x"), DomainError);
  CHECK_THROWS_AS(decide("E x. x <2 x"), DomainError);
}

TEST_CASE("qe agrees with witness search") {
  test::Rng r(2024);
  lab::FormulaShape shape;
  for (int i = 0; i < 150; ++i) {
    FormulaPtr f = lab::random_formula(r, shape);
    FormulaPtr g = qe(*f, 2);
    INFO(print_formula(*f), " ~> ", print_formula(*g));
    CHECK(is_quantifier_free(*g));
    for (const auto& v : free_vars(*g)) CHECK(free_vars(*f).contains(v));
    FormulaPtr gg = qe(*g, 2);
    for (int mi = 0; mi < 2; ++mi) {
      Model m = test::random_plain(r, 2, 3);
      for (int s = 0; s < 10; ++s) {
        Assignment sigma;
        for (const auto& v : shape.vars) sigma[v] = lab::random_point(r, m, 2);
        const bool expected = evaluate_by_search(m, *f, sigma);
        CHECK(evaluate_qf(m, *g, sigma) == expected);
        CHECK(evaluate_qf(m, *gg, sigma) == expected);
      }
    }
  }
}

TEST_CASE("three orders") {
  test::Rng r(99);
  lab::FormulaShape shape;
  shape.orders = 3;
  shape.max_quantifiers = 2;
  for (int i = 0; i < 60; ++i) {
    FormulaPtr f = lab::random_formula(r, shape);
    FormulaPtr g = qe(*f, 3);
    INFO(print_formula(*f), " ~> ", print_formula(*g));
    Model m = test::random_plain(r, 3, 3);
    for (int s = 0; s < 8; ++s) {
      Assignment sigma;
      for (const auto& v : shape.vars) sigma[v] = lab::random_point(r, m, 2);
      CHECK(evaluate_qf(m, *g, sigma) == evaluate_by_search(m, *f, sigma));
    }
  }
}

TEST_CASE("sentences have the same truth value in every model") {
  test::Rng r(5);
  lab::FormulaShape shape;
  for (int i = 0; i < 40; ++i) {
    FormulaPtr f = lab::random_sentence(r, shape);
    const bool d = decide_sentence(*f, 2);
    INFO(print_formula(*f));
    CHECK(free_vars(*f).empty());
    for (int k = 0; k < 3; ++k) CHECK(evaluate_by_search(test::random_plain(r, 2, static_cast<int>(r.below(4))), *f, {}) == d);
  }
}

TEST_CASE("witness search on hand instances") {
  Model m = Model::plain(2);
  Adjoined a = adjoin_free(m, {Cut::below_weak(0, m.zero()), Cut::nothing(1)}, "g");
  const Model& p = a.model;
  CHECK(evaluate_by_search(p, *parse_formula("E x. (g <0 x & x <1 g)"), {}));
  CHECK(evaluate_by_search(p, *parse_formula("0 <0 g & g <1 0"), {}));
  CHECK_FALSE(evaluate_by_search(p, *parse_formula("E x. (g <0 x & x <0 g)"), {}));
  CHECK(evaluate_by_search(p, *parse_formula("A x. (x = inf | x <0 inf)"), {}));
  CHECK_THROWS_AS(evaluate_by_search(test::M1().model, *parse_formula("E x. x = x"), {}), ModeError);
}
