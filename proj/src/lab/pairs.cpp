#include "common.hpp"

#include "hamel/logic/eval.hpp"

namespace hamel::lab {

using detail::render_inputs;
using detail::show;
using namespace logic;

namespace {

bool in_s(const Model& m, const Vector& x) { return compare(m, valuate(m, x), m.zero(), 0) == Ordering::Greater; }

}  // namespace

Report run_pair_suite(const SuiteConfig& cfg) {
  detail::Run run(cfg, "pairs");
  const FormulaPtr h_pred = parse_formula("!(x = inf) & v(x) = x");
  const FormulaPtr s_pred = parse_formula("0 <0 v(x)");
  std::size_t points = 0, closures = 0, gaps = 0, members = 0;
  for (std::size_t t = 0; t < run.trials(); ++t) {
    Rng r(cfg.seed, t);
    Model m = random_hamel(r, static_cast<int>(r.range(1, cfg.max_gens)));
    const std::string base = render_inputs(m, {});

    // (i) predicates via evaluate_qf against the engine
    for (int k = 0; k < 10; ++k, ++points) {
      const Point x = random_point(r, m, cfg.max_support);
      const bool h_direct = x.is_finite() && valuate(m, x) == x;
      const bool s_direct = x.is_infinite() || in_s(m, x.vector());
      const Assignment s{{"x", x}};
      const std::string in = render_inputs(m, {{"x", x}});
      run.check(evaluate_qf(m, *h_pred, s) == h_direct, in, "H(x) = " + std::string(h_direct ? "true" : "false"),
                "evaluate_qf disagrees");
      run.check(evaluate_qf(m, *s_pred, s) == s_direct, in, "S(x) = " + std::string(s_direct ? "true" : "false"),
                "evaluate_qf disagrees");
    }

    // (ii) closure of S under linear combinations
    for (int k = 0; k < 2; ++k) {
      std::vector<Vector> s;
      for (int tries = 0; tries < 200 && s.size() < 2; ++tries) {
        Vector x = random_vector(r, m, cfg.max_support, cfg.scalar_height);
        if (x.is_zero() || in_s(m, x)) s.push_back(x);
      }
      if (s.size() < 2) {
        ++run.report().retries;
        continue;
      }
      ++closures;
      const Scalar l1 = r.scalar(cfg.scalar_height), l2 = r.scalar(cfg.scalar_height);
      const Vector sum = l1 * s[0] + l2 * s[1];
      run.check(sum.is_zero() || in_s(m, sum),
                render_inputs(m, {{"s1", s[0]}, {"s2", s[1]}}) + " l1=" + l1.to_string() + " l2=" + l2.to_string(),
                "l1*s1 + l2*s2 in S", "v = " + show(m, valuate(m, sum)));
    }

    // (iii) density and dense-pair witnesses on a random interval
    for (;;) {
      Vector a = random_vector(r, m, cfg.max_support), b = random_vector(r, m, cfg.max_support);
      const Ordering o = compare(m, a, b, 0);
      if (o == Ordering::Equal) continue;
      if (o == Ordering::Greater) std::swap(a, b);
      const std::string in = render_inputs(m, {{"a", a}, {"b", b}});
      Witness d = density_witness(m, a, b);
      run.check(less(d.model, d.model.adopt(a), d.element, 0) && less(d.model, d.element, d.model.adopt(b), 0) &&
                    valuate(d.model, d.element) == Point(d.element),
                in, "density: a <0 h <0 b, v(h) = h", format_vector(d.model, d.element));
      Witness p = dense_pair_witness(m, a, b);
      run.check(less(p.model, p.model.adopt(a), p.element, 0) && less(p.model, p.element, p.model.adopt(b), 0) &&
                    in_s(p.model, p.element),
                in, "dense pair: a <0 s <0 b, s in S", format_vector(p.model, p.element));
      break;
    }

    // (iv) value gap: h' not in (h, 2h)_1 for generator values h, h'
    for (GenId g1 : m.values_in_order())
      for (GenId g2 : m.values_in_order()) {
        ++gaps;
        const Vector h = m.gen(g1), h2 = m.gen(g2);
        run.check(!(less(m, h, h2, 1) && less(m, h2, Scalar(2) * h, 1)), base + " h=" + m.name(g1) + " h'=" + m.name(g2),
                  "h' not in (h, 2h)_1", "h <1 h' <1 2h");
      }

    // (v) X = { x : x = v(x) >0 g } lies in (0, eps)_1 when g >0 v(eps)
    Vector eps;
    do {
      eps = random_vector(r, m, cfg.max_support, cfg.scalar_height);
    } while (eps.is_zero());
    if (sign(m, eps, 1) < 0) eps = -eps;
    const Vector ve = valuate(m, eps).vector();
    Vector above = random_vector(r, m, cfg.max_support, cfg.scalar_height);
    if (!less(m, ve, above, 0)) above = sign(m, ve, 0) > 0 ? Scalar(2) * ve : Scalar(1, 2) * ve;
    Witness gw = density_witness(m, ve, above);
    Model x_model = gw.model;
    const Vector g = gw.element;
    for (int k = 0; k < 3; ++k) x_model = adjoin_value(x_model, r.coin() ? Cut::below_weak(0, g) : random_cut(r, x_model, 0)).model;
    const std::string in = render_inputs(x_model, {{"eps", eps}, {"g", g}});
    for (GenId h : x_model.values_in_order()) {
      const Vector x = x_model.gen(h);
      if (!less(x_model, g, x, 0)) continue;
      ++members;
      run.check(less(x_model, x_model.zero(), x, 1) && less(x_model, x, x_model.adopt(eps), 1), in + " x=" + x_model.name(h),
                "x in (0, eps)_1", "outside");
    }
  }
  run.report().stat("points", std::to_string(points));
  run.report().stat("closures", std::to_string(closures));
  run.report().stat("gap_pairs", std::to_string(gaps));
  run.report().stat("x_members", std::to_string(members));
  return run.finish();
}

}  // namespace hamel::lab
