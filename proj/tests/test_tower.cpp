#include <doctest.h>

#include "hamel/tower.hpp"
#include "support.hpp"

using namespace hamel;
using test::M1;

namespace {

Point P(const Vector& v) { return Point(v); }
const Point kInf = Point::infinity();

Ordering cmp(const Model& m, const Vector& a, const Vector& b, int order) { return compare(m, P(a), P(b), order); }

}  // namespace

TEST_CASE("M1 orders and values") {
  M1 w;
  const Model& m = w.model;
  CHECK(cmp(m, m.zero(), w.h1, 0) == Ordering::Less);
  CHECK(cmp(m, w.h1, w.h2, 0) == Ordering::Less);
  CHECK(cmp(m, w.h2, w.t, 0) == Ordering::Less);
  CHECK(valuate(m, P(w.h1)) == P(w.h1));
  CHECK(valuate(m, P(w.h2)) == P(w.h2));
  CHECK(valuate(m, P(w.t)) == P(w.h1));
  CHECK(cmp(m, w.h2, w.h1, 1) == Ordering::Less);
  CHECK(cmp(m, m.zero(), w.t, 1) == Ordering::Less);
  CHECK(cmp(m, w.t, w.h1, 1) == Ordering::Less);
  CHECK(cmp(m, w.h1, m.zero(), 1) == Ordering::Greater);
  CHECK(valuate(m, P(w.h1 - Scalar(3) * w.h2)) == P(w.h1));
  CHECK(cmp(m, w.h1 - Scalar(3) * w.h2, m.zero(), 1) == Ordering::Greater);
  CHECK(valuate(m, P(w.h2 + Scalar(5) * w.t)) == P(w.h1));
  CHECK(valuate(m, P(Scalar(7) * w.h1)) == P(w.h1));
  CHECK(valuate(m, P(m.zero())).is_infinite());
  CHECK(valuate(m, kInf).is_infinite());
  CHECK(compare(m, kInf, P(w.t), 0) == Ordering::Greater);
  CHECK(compare(m, kInf, kInf, 1) == Ordering::Equal);
  CHECK(cmp(m, w.t, w.t, 0) == Ordering::Equal);
}

TEST_CASE("M1 residue comparisons") {
  M1 w;
  const Model& m = w.model;
  CHECK(residue_compare(m, w.t, m.zero(), w.h1) == Ordering::Greater);
  CHECK(residue_compare(m, w.h1, w.t, w.h1) == Ordering::Greater);
  CHECK(residue_compare(m, w.t, w.t + w.h2, w.h1) == Ordering::Equal);
  CHECK_THROWS_AS(residue_compare(m, w.h1, m.zero(), w.h2), DomainError);
  CHECK_THROWS_AS(residue_compare(m, w.h1, m.zero(), w.t), MalformedCut);
}

TEST_CASE("M1 separated basis and value sets") {
  M1 w;
  const Model& m = w.model;
  std::vector<Vector> a{w.h1, w.h2};
  CHECK(separated_basis(m, a) == a);
  std::vector<Vector> b{w.h1, w.h2 + Scalar(5) * w.t};
  CHECK(separated_basis(m, b) == b);
  std::vector<Vector> c{w.h1, Scalar(2) * w.h1};
  CHECK(separated_basis(m, c) == std::vector<Vector>{w.h1});
  CHECK(subspace_values(m, std::vector<Vector>{w.h1}) == std::vector<Vector>{w.h1});
  CHECK(subspace_values(m, a) == std::vector<Vector>{w.h1, w.h2});
  CHECK(subspace_values(m, b) == std::vector<Vector>{w.h1});
  CHECK(subspace_values(m, std::vector<Vector>{}).empty());
}

TEST_CASE("plain free adjunction") {
  Model m = Model::plain(2);
  Adjoined h = adjoin_free(m, {Cut::below_weak(0, m.zero()), Cut::nothing(1)});
  const Model& m1 = h.model;
  CHECK(cmp(m1, h.element(), m1.zero(), 0) == Ordering::Greater);
  CHECK(cmp(m1, h.element(), m1.zero(), 1) == Ordering::Less);
  Adjoined f = adjoin_free(m1, {Cut::below_strict(0, h.element()), Cut::everything(1)});
  const Model& m2 = f.model;
  CHECK(cmp(m2, m2.zero(), f.element(), 0) == Ordering::Less);
  CHECK(cmp(m2, f.element(), h.element(), 0) == Ordering::Less);
  CHECK(cmp(m2, f.element(), h.element(), 1) == Ordering::Greater);
  CHECK(cmp(m2, f.element(), m2.zero(), 1) == Ordering::Greater);
  Adjoined top = adjoin_free(m2, {Cut::everything(0), Cut::everything(1)});
  for (int i = 0; i < 2; ++i) {
    CHECK(cmp(top.model, top.element(), h.element(), i) == Ordering::Greater);
    CHECK(cmp(top.model, top.element(), f.element(), i) == Ordering::Greater);
    CHECK(cmp(top.model, top.element(), h.element() + Scalar(100) * f.element(), i) == Ordering::Greater);
  }
}

TEST_CASE("adjunction errors") {
  M1 w;
  Model plain = Model::plain(2);
  CHECK_THROWS_AS(adjoin_free(w.model, {Cut::everything(0), Cut::everything(1)}), ModeError);
  CHECK_THROWS_AS(adjoin_value(plain, Cut::everything(0)), ModeError);
  CHECK_THROWS_AS(adjoin_free(plain, {Cut::everything(0)}), MalformedCut);
  CHECK_THROWS_AS(adjoin_free(plain, {Cut::everything(1), Cut::everything(0)}), MalformedCut);
  CHECK_THROWS_AS(adjoin_value(w.model, Cut::everything(1)), MalformedCut);
  // alpha must be a value
  CHECK_THROWS_AS(adjoin_ball(w.model, AlphaCut{w.t, w.model.zero(), true}, Cut::everything(0)), MalformedCut);
  CHECK_THROWS_AS(adjoin_ball(w.model, AlphaCut{w.model.zero(), w.model.zero(), true}, Cut::everything(0)),
                  MalformedCut);
  // pivot of value h1 lies outside the closed ball of h2
  CHECK_THROWS_AS(adjoin_ball(w.model, AlphaCut{w.h2, w.t, true}, Cut::everything(0)), MalformedCut);
  // a bound from another tower
  M1 other;
  CHECK_THROWS_AS(adjoin_value(w.model, Cut::below_weak(0, other.h1)), MalformedCut);
  CHECK_THROWS_AS(compare(w.model, P(w.h1), P(other.h1), 0), ModelMismatch);
  CHECK_THROWS_AS(valuate(plain, P(plain.zero())), ModeError);
  CHECK_THROWS_AS(sign(w.model, w.h1, 2), DomainError);
}

TEST_CASE("names") {
  M1 w;
  CHECK(w.model.name(2) == "t");
  CHECK(w.model.find("h2") == GenId{1});
  CHECK_FALSE(w.model.find("h9").has_value());
  CHECK(w.model.fresh_name("h") == "h4");
}

namespace {

void check_order_laws(test::Rng& r, const Model& m, int order) {
  Vector x = test::random_vector(r, m), y = test::random_vector(r, m), z = test::random_vector(r, m);
  const int s = sign(m, x - y, order);
  CHECK(s == -sign(m, y - x, order));
  CHECK((s == 0) == (x == y));
  CHECK(sign(m, (x + z) - (y + z), order) == s);
  Scalar l = r.nonzero_scalar();
  if (l > Scalar(0)) CHECK(sign(m, l * x, order) == sign(m, x, order));
  CHECK(sign(m, -x, order) == -sign(m, x, order));
  // transitivity
  if (sign(m, y - x, order) > 0 && sign(m, z - y, order) > 0) CHECK(sign(m, z - x, order) > 0);
}

}  // namespace

TEST_CASE("order laws on random towers") {
  test::Rng r(21);
  for (int trial = 0; trial < 40; ++trial) {
    Model h = test::random_hamel(r, 1 + static_cast<int>(r.below(10)));
    Model p = test::random_plain(r, 3, 1 + static_cast<int>(r.below(8)));
    for (int i = 0; i < 50; ++i) {
      check_order_laws(r, h, 0);
      check_order_laws(r, h, 1);
      check_order_laws(r, p, static_cast<int>(r.below(3)));
    }
  }
}

TEST_CASE("valuation axioms on random Hamel towers") {
  test::Rng r(33);
  for (int trial = 0; trial < 40; ++trial) {
    Model m = test::random_hamel(r, 1 + static_cast<int>(r.below(10)));
    for (int i = 0; i < 60; ++i) {
      Vector x = test::random_vector(r, m), y = test::random_vector(r, m);
      Point vx = valuate(m, P(x)), vy = valuate(m, P(y)), vxy = valuate(m, P(x + y));
      CHECK(vx == valuate_recursive(m, P(x)));
      CHECK(vx.is_infinite() == x.is_zero());
      // ultrametric, strict when values differ
      const Point& mn = compare(m, vx, vy, 0) == Ordering::Less ? vx : vy;
      CHECK(compare(m, vxy, mn, 0) != Ordering::Less);
      if (!(vx == vy)) CHECK(vxy == mn);
      CHECK(valuate(m, P(r.nonzero_scalar() * x)) == vx);
      if (x.is_zero()) continue;
      CHECK(valuate(m, vx) == vx);
      CHECK(compare(m, vx, P(m.zero()), 1) == Ordering::Greater);
      // convexity
      if (sign(m, x, 1) > 0 && sign(m, y - x, 1) > 0) CHECK(compare(m, vx, vy, 0) != Ordering::Less);
    }
  }
}

TEST_CASE("distinct values are linearly independent") {
  test::Rng r(44);
  for (int trial = 0; trial < 200; ++trial) {
    Model m = test::random_hamel(r, 2 + static_cast<int>(r.below(10)));
    const auto& values = m.values_in_order();
    Vector sum = m.zero();
    std::size_t least = values.size();
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!r.coin()) continue;
      least = std::min(least, i);
      sum = sum + r.nonzero_scalar() * m.gen(values[i]);
    }
    if (least == values.size()) continue;
    CHECK(valuate(m, P(sum)) == P(m.gen(values[least])));
  }
}

TEST_CASE("value gap between h and 2h") {
  test::Rng r(55);
  for (int trial = 0; trial < 50; ++trial) {
    Model m = test::random_hamel(r, 1 + static_cast<int>(r.below(12)));
    for (GenId a : m.values_in_order())
      for (GenId b : m.values_in_order()) {
        Vector h = m.gen(a), hp = m.gen(b);
        const bool inside = sign(m, hp - h, 1) > 0 && sign(m, Scalar(2) * h - hp, 1) > 0;
        CHECK_FALSE(inside);
      }
  }
}

TEST_CASE("adjunction is conservative") {
  test::Rng r(66);
  for (int trial = 0; trial < 60; ++trial) {
    Model m = test::random_hamel(r, static_cast<int>(r.below(8)));
    std::vector<Vector> xs;
    for (int i = 0; i < 8; ++i) xs.push_back(test::random_vector(r, m));
    Model big = m;
    for (int k = 0; k < 3; ++k) {
      if (big.values_in_order().empty() || r.coin()) {
        big = adjoin_value(big, test::random_cut(r, big, 0)).model;
      } else {
        Vector alpha = big.gen(big.values_in_order()[r.below(big.values_in_order().size())]);
        big = adjoin_ball(big, AlphaCut{alpha, big.zero(), r.coin()}, test::random_cut(r, big, 0)).model;
      }
    }
    for (const Vector& x : xs) {
      CHECK(valuate(big, P(x)) == big.adopt(valuate(m, P(x))));
      for (const Vector& y : xs)
        for (int i = 0; i < 2; ++i) CHECK(sign(m, x - y, i) == sign(big, x - y, i));
    }
  }
}

TEST_CASE("separated basis on random spans") {
  test::Rng r(77);
  for (int trial = 0; trial < 150; ++trial) {
    Model m = test::random_hamel(r, 1 + static_cast<int>(r.below(10)));
    std::vector<Vector> vs;
    for (int i = 0, n = 1 + static_cast<int>(r.below(5)); i < n; ++i) vs.push_back(test::random_vector(r, m, 4));
    std::vector<Vector> basis = separated_basis(m, vs);
    CHECK(basis.size() <= vs.size());
    CHECK(subspace_values(m, vs).size() <= basis.size());
    for (int s = 0; s < 20; ++s) {
      Vector sum = m.zero();
      Point least = Point::infinity();
      for (const Vector& b : basis) {
        if (!r.coin()) continue;
        sum = sum + r.nonzero_scalar() * b;
        Point vb = valuate(m, P(b));
        if (compare(m, vb, least, 0) == Ordering::Less) least = vb;
      }
      CHECK(valuate(m, P(sum)) == least);
    }
    // each input lies in the span: adding it to the basis does not grow it
    for (const Vector& v : vs) {
      std::vector<Vector> ext = basis;
      ext.push_back(v);
      CHECK(separated_basis(m, ext).size() == basis.size());
    }
  }
}
