#include "common.hpp"

#include "hamel/oracle.hpp"

namespace hamel::lab {

using detail::render_inputs;
using detail::show;

namespace {

Ordering vcmp(const Model& m, const Point& a, const Point& b) { return compare(m, a, b, 0); }

void check_tower_sample(detail::Run& run, Rng& r, const Model& m) {
  const auto& cfg = run.config();
  Vector x = random_vector(r, m, cfg.max_support, cfg.scalar_height);
  Vector y = random_vector(r, m, cfg.max_support, cfg.scalar_height);
  Vector z = random_vector(r, m, cfg.max_support, cfg.scalar_height);
  Scalar lambda = r.nonzero_scalar(cfg.scalar_height);
  const std::string in = render_inputs(m, {{"x", x}, {"y", y}, {"z", z}}) + " lambda=" + lambda.to_string();

  const Point vx = valuate(m, x), vy = valuate(m, y);
  run.check(vx.is_infinite() == x.is_zero(), in, "v(x) = inf iff x = 0", "v(x) = " + show(m, vx));
  run.check(valuate(m, lambda * x) == vx, in, "v(lambda*x) = v(x)", "v(lambda*x) = " + show(m, valuate(m, lambda * x)));
  const Point vxy = valuate(m, x + y);
  const Point low = vcmp(m, vx, vy) == Ordering::Greater ? vy : vx;
  run.check(vcmp(m, vxy, low) != Ordering::Less, in, "v(x + y) >=0 min0(v(x), v(y))", "v(x + y) = " + show(m, vxy));
  run.check(valuate(m, vx) == vx, in, "v(v(x)) = v(x)", "v(v(x)) = " + show(m, valuate(m, vx)));
  if (!x.is_zero())
    run.check(compare(m, vx, m.zero(), 1) == Ordering::Greater, in, "v(x) >1 0", "v(x) = " + show(m, vx));
  run.check(valuate_recursive(m, x) == vx, in, "valuate_recursive(x) = " + show(m, vx),
            show(m, valuate_recursive(m, x)));

  // convexity on the positive <_1 representatives
  Vector px = sign(m, x, 1) < 0 ? -x : x;
  Vector py = sign(m, y, 1) < 0 ? -y : y;
  if (less(m, py, px, 1)) std::swap(px, py);
  if (!px.is_zero() && less(m, px, py, 1))
    run.check(vcmp(m, valuate(m, px), valuate(m, py)) != Ordering::Less, in,
              "0 <1 x' <1 y' implies v(x') >=0 v(y') for x' = +-x, y' = +-y",
              "v(x') = " + show(m, valuate(m, px)) + ", v(y') = " + show(m, valuate(m, py)));

  for (int i = 0; i < 2; ++i) {
    const Ordering xy = compare(m, x, y, i);
    const Ordering yx = compare(m, y, x, i);
    run.check(static_cast<int>(xy) == -static_cast<int>(yx), in, "antisymmetric <" + std::to_string(i),
              std::string(to_string(xy)) + "/" + to_string(yx));
    run.check((xy == Ordering::Equal) == (x == y), in, "x =" + std::to_string(i) + " y iff x = y", to_string(xy));
    run.check(compare(m, x + z, y + z, i) == xy, in, "x <" + std::to_string(i) + " y iff x + z <" + std::to_string(i) + " y + z",
              to_string(compare(m, x + z, y + z, i)));
    Ordering scaled_cmp = compare(m, lambda * x, lambda * y, i);
    Ordering want = lambda.sign() > 0 ? xy : to_ordering(-static_cast<int>(xy));
    run.check(scaled_cmp == want, in, "scaling by lambda in <" + std::to_string(i), to_string(scaled_cmp));
    if (xy == Ordering::Less && compare(m, y, z, i) == Ordering::Less)
      run.check(less(m, x, z, i), in, "transitive <" + std::to_string(i), to_string(compare(m, x, z, i)));
  }
}

oracle::LeadVector random_lead(Rng& r, long height) {
  oracle::LeadVector out;
  const int n = static_cast<int>(r.below(4));
  for (int i = 0; i < n; ++i)
    out = out + r.nonzero_scalar(height) * oracle::LeadVector::basis(Scalar(r.range(-3, 3), r.range(1, 2)));
  return out;
}

void check_oracle_sample(detail::Run& run, Rng& r) {
  using namespace oracle;
  const long h = run.config().scalar_height;
  LeadVector x = random_lead(r, h), y = random_lead(r, h);
  Scalar lambda = r.nonzero_scalar(h);
  const std::string in = "oracle x=" + format_lead(x) + " y=" + format_lead(y) + " lambda=" + lambda.to_string();
  const LeadPoint vx = lead_valuate(x), vy = lead_valuate(y);
  run.check(vx.infinite == x.is_zero(), in, "v(x) = inf iff x = 0", "v(x) = " + format_lead(vx));
  run.check(lead_valuate(lambda * x) == vx, in, "v(lambda*x) = v(x)", format_lead(lead_valuate(lambda * x)));
  const LeadPoint low = lead_value_compare(vx, vy) == Ordering::Greater ? vy : vx;
  run.check(lead_value_compare(lead_valuate(x + y), low) != Ordering::Less, in, "v(x + y) >=0 min0(v(x), v(y))",
            format_lead(lead_valuate(x + y)));
  run.check(lead_valuate(vx) == vx, in, "v(v(x)) = v(x)", format_lead(lead_valuate(vx)));
  if (!x.is_zero())
    run.check(lead_sign1(vx.v) == Sign::Positive, in, "v(x) >1 0", format_lead(vx));
  LeadVector px = lead_sign1(x) == Sign::Negative ? -x : x;
  LeadVector py = lead_sign1(y) == Sign::Negative ? -y : y;
  if (lead_sign1(py - px) == Sign::Negative) std::swap(px, py);
  if (!px.is_zero() && lead_sign1(py - px) == Sign::Positive)
    run.check(lead_value_compare(lead_valuate(px), lead_valuate(py)) != Ordering::Less, in,
              "0 <1 x' <1 y' implies v(x') >=0 v(y')", format_lead(lead_valuate(px)));
}

}  // namespace

Report run_axiom_suite(const SuiteConfig& cfg) {
  detail::Run run(cfg, "axioms");
  for (std::size_t k = 0; k < axiom_models; ++k) {
    Rng r(cfg.seed, k);
    Model m = random_hamel(r, static_cast<int>(r.range(0, cfg.max_gens)));
    run.check(valuate(m, Point::infinity()).is_infinite() && valuate(m, m.zero()).is_infinite(),
              render_inputs(m, {}), "v(0) = v(inf) = inf", show(m, valuate(m, m.zero())));
    for (std::size_t t = 0; t < run.trials(); ++t) {
      check_tower_sample(run, r, m);
      check_oracle_sample(run, r);
    }
  }
  run.report().stat("models", std::to_string(axiom_models));
  run.report().stat("samples", std::to_string(axiom_models * run.trials()));
  return run.finish();
}

}  // namespace hamel::lab
