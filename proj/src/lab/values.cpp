#include <algorithm>
#include <map>

#include "common.hpp"

namespace hamel::lab {

using detail::render_inputs;
using detail::show;

Report run_value_independence(const SuiteConfig& cfg) {
  detail::Run run(cfg, "value_independence");
  std::map<std::size_t, std::size_t> by_size;
  for (std::size_t t = 0; t < run.trials(); ++t) {
    Rng r(cfg.seed, t);
    Model m = random_hamel(r, static_cast<int>(r.range(1, cfg.max_gens)));
    std::vector<GenId> pool = m.values_in_order();
    std::vector<Vector> hs;
    const auto n = static_cast<std::size_t>(r.range(1, static_cast<long>(std::min<std::size_t>(pool.size(), 5))));
    while (hs.size() < n) {
      const std::size_t k = r.below(pool.size());
      hs.push_back(m.gen(pool[k]));
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
    }
    Vector sum = m.zero();
    std::string terms;
    for (const Vector& h : hs) {
      Scalar lambda = r.nonzero_scalar(cfg.scalar_height);
      sum = sum + lambda * h;
      terms += (terms.empty() ? "" : " + ") + lambda.to_string() + "*" + format_vector(m, h);
    }
    Vector low = hs.front();
    for (const Vector& h : hs)
      if (less(m, h, low, 0)) low = h;
    ++by_size[n];
    const std::string in = render_inputs(m, {}) + " sum=" + terms;
    const Point v = valuate(m, sum);
    run.check(!sum.is_zero(), in, "sum != 0", "0");
    run.check(v == Point(low), in, show(m, low), show(m, v));
    run.check(valuate_recursive(m, sum) == Point(low), in, show(m, low), show(m, valuate_recursive(m, sum)));
  }
  std::string hist;
  for (const auto& [n, c] : by_size) hist += (hist.empty() ? "" : ",") + std::to_string(n) + ":" + std::to_string(c);
  run.report().stat("sizes", hist);
  return run.finish();
}

namespace {

bool contains(const std::vector<Vector>& vs, const Vector& x) { return std::find(vs.begin(), vs.end(), x) != vs.end(); }

std::string list(const Model& m, const std::vector<Vector>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + format_vector(m, vs[i]);
  return out + "]";
}

enum class Schedule { Random, Full, Zero };

}  // namespace

Report run_value_growth(const SuiteConfig& cfg) {
  detail::Run run(cfg, "value_growth");
  std::map<std::size_t, std::size_t> hist;
  std::size_t full_hits = 0, zero_hits = 0;
  for (std::size_t t = 0; t < run.trials(); ++t) {
    const auto schedule = static_cast<Schedule>(t % 3);
    for (std::uint64_t attempt = 0;; ++attempt) {
      Rng r(cfg.seed, t, attempt);
      Model m = random_hamel(r, static_cast<int>(r.range(2, cfg.max_gens)));
      std::vector<Vector> g0;
      const long k = r.range(1, 5);
      for (long i = 0; i < k; ++i) g0.push_back(random_vector(r, m, cfg.max_support, cfg.scalar_height));
      const std::vector<Vector> v0 = subspace_values(m, g0);
      const long want = schedule == Schedule::Random ? r.range(0, 4) : r.range(1, 4);

      auto g0_combination = [&] {
        Vector out = m.zero();
        for (const Vector& g : g0) out = out + r.scalar(cfg.scalar_height) * g;
        return out;
      };
      std::vector<Vector> cs;
      if (schedule == Schedule::Full) {
        std::vector<Vector> fresh;
        for (GenId h : m.values_in_order())
          if (!contains(v0, m.gen(h))) fresh.push_back(m.gen(h));
        if (static_cast<long>(fresh.size()) < want) {
          if (attempt + 1 >= 100) {
            run.fail("seed=" + std::to_string(cfg.seed) + " trial=" + std::to_string(t), "feasible configuration",
                     "retry cap reached");
            break;
          }
          ++run.report().retries;
          continue;
        }
        for (long j = 0; j < want; ++j) {
          const std::size_t pick = r.below(fresh.size());
          cs.push_back(r.nonzero_scalar(cfg.scalar_height) * fresh[pick] + g0_combination());
          fresh.erase(fresh.begin() + static_cast<std::ptrdiff_t>(pick));
        }
      } else if (schedule == Schedule::Zero) {
        for (long j = 0; j < want; ++j) cs.push_back(g0_combination());
      } else {
        for (long j = 0; j < want; ++j) cs.push_back(random_vector(r, m, cfg.max_support, cfg.scalar_height));
      }

      std::vector<Vector> all = g0;
      all.insert(all.end(), cs.begin(), cs.end());
      const std::vector<Vector> v1 = subspace_values(m, all);
      std::size_t growth = 0;
      for (const Vector& h : v1) growth += contains(v0, h) ? 0 : 1;
      bool nested = true;
      for (const Vector& h : v0) nested = nested && contains(v1, h);

      const std::string in = render_inputs(m, {}) + " G0=" + list(m, g0) + " c=" + list(m, cs);
      ++hist[growth];
      run.check(nested, in, "v(G0) subset of v(G0 + C c)", "v(G0)=" + list(m, v0) + " v(G0 + C c)=" + list(m, v1));
      run.check(growth <= static_cast<std::size_t>(want), in, "growth <= " + std::to_string(want),
                std::to_string(growth));
      if (schedule == Schedule::Full) {
        full_hits += growth == static_cast<std::size_t>(want) ? 1 : 0;
        run.check(growth == static_cast<std::size_t>(want), in, "growth = " + std::to_string(want),
                  std::to_string(growth));
      }
      if (schedule == Schedule::Zero) {
        zero_hits += growth == 0 ? 1 : 0;
        run.check(growth == 0, in, "growth = 0", std::to_string(growth));
      }
      break;
    }
  }
  std::string h;
  for (const auto& [g, c] : hist) h += (h.empty() ? "" : ",") + std::to_string(g) + ":" + std::to_string(c);
  run.report().stat("growth", h);
  run.report().stat("forced_full", std::to_string(full_hits));
  run.report().stat("forced_zero", std::to_string(zero_hits));
  return run.finish();
}

}  // namespace hamel::lab
