#include <doctest.h>

#include "hamel/scalar.hpp"
#include "support.hpp"

using hamel::Scalar;

TEST_CASE("scalar arithmetic is exact") {
  CHECK(Scalar(1, 2) + Scalar(1, 3) == Scalar(5, 6));
  CHECK(Scalar(-2, 3) * Scalar(3, 4) == Scalar(-1, 2));
  CHECK(Scalar(7, 10) < Scalar(5, 7));
  CHECK(Scalar(4, -6) == Scalar(-2, 3));
  CHECK(Scalar(0, 5).to_string() == "0");
  CHECK(Scalar(6, 4).to_string() == "3/2");
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(Scalar(1, 0), hamel::DivisionByZero);
  CHECK_THROWS_AS(Scalar(3) / Scalar(0), hamel::DivisionByZero);
  CHECK_THROWS_AS(Scalar(0).inverse(), hamel::DivisionByZero);
  CHECK_THROWS_AS(Scalar::parse("1/0"), hamel::DivisionByZero);
}

TEST_CASE("scalar parsing") {
  CHECK(Scalar::parse("-12/8") == Scalar(-3, 2));
  CHECK(Scalar::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
  CHECK_THROWS_AS(Scalar::parse("1/-2"), hamel::ParseError);
  CHECK_THROWS_AS(Scalar::parse("x"), hamel::ParseError);
  CHECK_THROWS_AS(Scalar::parse(""), hamel::ParseError);
}

TEST_CASE("ordered field laws on random triples") {
  hamel::test::Rng r(11);
  for (int i = 0; i < 2000; ++i) {
    long an = r.range(-50, 50), ad = r.range(1, 50);
    long bn = r.range(-50, 50), bd = r.range(1, 50);
    Scalar a(an, ad), b(bn, bd), c = r.scalar(30);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    // comparison agrees with integer cross multiplication
    const long lhs = an * bd, rhs = bn * ad;
    CHECK((a < b) == (lhs < rhs));
    CHECK((a == b) == (lhs == rhs));
    if (a < b) CHECK(a + c < b + c);
    if (a < b && c > Scalar(0)) CHECK(a * c < b * c);
  }
}
