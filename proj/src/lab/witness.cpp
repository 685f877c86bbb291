#include <array>

#include "common.hpp"

namespace hamel::lab {

using detail::inside;
using detail::random_interval;
using detail::render_inputs;
using detail::show;
using detail::show_interval;

namespace {

const std::array<const char*, 5> kKinds = {"density", "independence", "nonvalue", "densepair", "plain"};

// Every comparison and valuation among `old` elements is unchanged in the
// extension.
void check_conservative(detail::Run& run, const std::string& in, const Model& m, const Model& ext,
                        const std::vector<Vector>& old) {
  for (std::size_t i = 0; i < old.size(); ++i) {
    if (m.is_hamel()) {
      const Point before = valuate(m, old[i]);
      const Point after = valuate(ext, ext.adopt(old[i]));
      run.check(ext.adopt(before) == after, in, "v(" + format_vector(m, old[i]) + ") = " + show(m, before),
                show(ext, after));
    }
    for (std::size_t j = i + 1; j < old.size(); ++j)
      for (int o = 0; o < m.order_count(); ++o) {
        const Ordering before = compare(m, old[i], old[j], o);
        const Ordering after = compare(ext, ext.adopt(old[i]), ext.adopt(old[j]), o);
        run.check(before == after, in,
                  format_vector(m, old[i]) + " vs " + format_vector(m, old[j]) + " in <" + std::to_string(o) + ": " +
                      to_string(before),
                  to_string(after));
      }
  }
}

std::pair<Vector, Vector> ordered_pair(Rng& r, const Model& m, int support) {
  for (;;) {
    Vector a = random_vector(r, m, support), b = random_vector(r, m, support);
    Ordering o = compare(m, a, b, 0);
    if (o == Ordering::Equal) continue;
    if (o == Ordering::Greater) std::swap(a, b);
    return {a, b};
  }
}

}  // namespace

Report run_witness_suite(const SuiteConfig& cfg) {
  detail::Run run(cfg, "witness");
  std::array<std::size_t, kKinds.size()> counts{};
  for (std::size_t t = 0; t < run.trials(); ++t) {
    Rng r(cfg.seed, t);
    const std::size_t kind = t % kKinds.size();
    ++counts[kind];
    const int size = static_cast<int>(r.range(1, cfg.max_gens));
    const int support = cfg.max_support;
    Model m = kind == 4 ? random_plain(r, static_cast<int>(r.range(1, 3)), size) : random_hamel(r, size);
    std::vector<Vector> old;
    for (int i = 0; i < 5; ++i) old.push_back(random_vector(r, m, support));
    std::string in = render_inputs(m, {});
    Model ext = m;

    if (kind == 0 || kind == 3) {
      auto [a, b] = ordered_pair(r, m, support);
      old.push_back(a);
      old.push_back(b);
      in += " a=" + format_vector(m, a) + " b=" + format_vector(m, b);
      Witness w = kind == 0 ? density_witness(m, a, b) : dense_pair_witness(m, a, b);
      ext = w.model;
      const Vector& s = w.element;
      const std::string got = format_vector(ext, s);
      run.check(less(ext, ext.adopt(a), s, 0) && less(ext, s, ext.adopt(b), 0), in + " " + kKinds[kind],
                "a <0 s <0 b", got);
      if (kind == 0) {
        run.check(valuate(ext, s) == Point(s), in + " density", "v(h) = h", got + " has value " + show(ext, valuate(ext, s)));
      } else {
        run.check(compare(ext, valuate(ext, s), ext.zero(), 0) == Ordering::Greater, in + " densepair", "v(s) >0 0",
                  got + " has value " + show(ext, valuate(ext, s)));
      }
    } else {
      std::vector<Interval> ivs;
      for (int o = 0; o < m.order_count(); ++o) {
        ivs.push_back(random_interval(r, m, o, support));
        in += " " + show_interval(m, ivs.back(), o);
        for (const Bound* b : {&ivs.back().lower, &ivs.back().upper})
          if (b->is_finite()) old.push_back(b->vector());
      }
      Witness w = kind == 1   ? independence_witness(m, ivs[0], ivs[1])
                  : kind == 2 ? nonvalue_witness(m, ivs[0], ivs[1])
                              : independence_witness(m, ivs);
      ext = w.model;
      const std::string got = format_vector(ext, w.element);
      for (int o = 0; o < m.order_count(); ++o)
        run.check(inside(ext, ivs[o], w.element, o), in + " " + kKinds[kind],
                  "z in " + show_interval(m, ivs[o], o), got);
      if (kind == 2)
        run.check(!(valuate(ext, w.element) == Point(w.element)), in + " nonvalue", "v(z) != z", got);
    }
    check_conservative(run, in + " " + kKinds[kind], m, ext, old);
  }
  for (std::size_t k = 0; k < kKinds.size(); ++k) run.report().stat(kKinds[k], std::to_string(counts[k]));
  return run.finish();
}

}  // namespace hamel::lab
