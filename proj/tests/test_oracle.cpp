#include <doctest.h>

#include "hamel/oracle.hpp"
#include "support.hpp"

using namespace hamel;
using namespace hamel::oracle;

namespace {

LeadVector e(long n, long d = 1) { return LeadVector::basis(Scalar(n, d)); }

LeadVector random_lead(test::Rng& r) {
  LeadVector out;
  for (int i = 0, n = static_cast<int>(r.below(4)); i < n; ++i)
    out = out + r.nonzero_scalar() * e(r.range(-4, 4), r.range(1, 3));
  return out;
}

// v(x) >=_0 v(y) in index order, infinity on top.
bool value_ge(const LeadPoint& a, const LeadPoint& b) { return lead_value_compare(a, b) != Ordering::Less; }

}  // namespace

TEST_CASE("leading-term valuation and sign") {
  CHECK(lead_valuate(Scalar(2) * e(1) - Scalar(3) * e(2)) == LeadPoint{false, e(1)});
  CHECK(lead_valuate(LeadVector()).infinite);
  CHECK(lead_valuate(LeadPoint::inf()).infinite);
  CHECK(lead_valuate(e(5)) == LeadPoint{false, e(5)});
  CHECK(lead_sign1(Scalar(2) * e(1) - Scalar(3) * e(2)) == Sign::Positive);
  CHECK(lead_sign1(Scalar(-1, 2) * e(0) + Scalar(100) * e(1)) == Sign::Negative);
  CHECK(lead_sign1(LeadVector()) == Sign::Zero);
  CHECK(lead_value_compare({false, e(1)}, {false, e(2)}) == Ordering::Less);
  CHECK(lead_value_compare({false, e(3)}, LeadPoint::inf()) == Ordering::Less);
  CHECK(lead_value_compare({false, e(1, 2)}, {false, e(1, 2)}) == Ordering::Equal);
  CHECK_THROWS_AS(lead_value_compare({false, e(1) + e(2)}, {false, e(1)}), DomainError);
  CHECK_THROWS_AS(lead_value_compare({false, Scalar(2) * e(1)}, {false, e(1)}), DomainError);
}

TEST_CASE("oracle syntax") {
  CHECK(parse_lead("2*e1 + -3*e2") == Scalar(2) * e(1) - Scalar(3) * e(2));
  CHECK(parse_lead("e(1/2)") == e(1, 2));
  CHECK(parse_lead("e(-3) - e(-3)").is_zero());
  CHECK(parse_lead_point("inf").infinite);
  CHECK(format_lead(Scalar(2) * e(1) - Scalar(3) * e(2)) == "2*e1 - 3*e2");
  CHECK(format_lead(e(1, 2) - e(-1)) == "-e(-1) + e(1/2)");
  CHECK_THROWS_AS(parse_lead("2*x1"), ParseError);
  CHECK_THROWS_AS(parse_lead("e1 +"), ParseError);
}

TEST_CASE("oracle satisfies the value-only axioms") {
  test::Rng r(8);
  for (int i = 0; i < 3000; ++i) {
    LeadVector x = random_lead(r), y = random_lead(r);
    LeadPoint vx = lead_valuate(x), vy = lead_valuate(y), vxy = lead_valuate(x + y);
    CHECK(vx.infinite == x.is_zero());
    const LeadPoint& mn = value_ge(vx, vy) ? vy : vx;
    CHECK(value_ge(vxy, mn));
    if (!(vx == vy)) CHECK(vxy == mn);
    CHECK(lead_valuate(r.nonzero_scalar() * x) == vx);
    CHECK(lead_valuate(vx) == vx);
    if (!x.is_zero()) CHECK(lead_sign1(vx.v) == Sign::Positive);
    if (lead_sign1(x) == Sign::Positive && lead_sign1(y - x) == Sign::Positive) CHECK(value_ge(vx, vy));
    CHECK(parse_lead(format_lead(x)) == x);
  }
}

TEST_CASE("distinct basis elements are independent") {
  test::Rng r(9);
  for (int i = 0; i < 1000; ++i) {
    LeadVector sum;
    Scalar least(1000);
    for (long q = -3; q <= 3; ++q) {
      if (!r.coin()) continue;
      sum = sum + r.nonzero_scalar() * e(q);
      least = std::min(least, Scalar(q));
    }
    if (least == Scalar(1000)) continue;
    CHECK(lead_valuate(sum) == LeadPoint{false, LeadVector::basis(least)});
  }
}
