#include <algorithm>
#include <array>

#include "common.hpp"

#include "hamel/logic/eval.hpp"

namespace hamel::lab {

using detail::show;
using namespace logic;

namespace {

constexpr int kLen = 7;

struct Instance {
  Model m = Model::hamel();
  int arity = 0;
  std::vector<std::vector<Vector>> a;  // a[i][l]
  std::vector<Point> b;
  TermPtr h;

  Assignment at(int i) const {
    Assignment s;
    for (int l = 0; l < arity; ++l) s["x" + std::to_string(l + 1)] = a[i][l];
    for (std::size_t k = 0; k < b.size(); ++k) s["y" + std::to_string(k + 1)] = b[k];
    return s;
  }

  std::string render() const {
    std::string out = "model{" + inline_model(m) + "} h=" + print_term(*h);
    for (std::size_t k = 0; k < b.size(); ++k) out += " y" + std::to_string(k + 1) + "=" + show(m, b[k]);
    for (int i = 0; i < kLen; ++i) {
      out += " a" + std::to_string(i) + "=(";
      for (int l = 0; l < arity; ++l) out += (l ? ", " : "") + format_vector(m, a[i][l]);
      out += ")";
    }
    return out;
  }
};

Instance sample(Rng& r, const SuiteConfig& cfg) {
  Instance in;
  in.m = random_hamel(r, static_cast<int>(r.range(1, cfg.max_gens / 2 + 1)));
  in.arity = static_cast<int>(r.range(1, 3));
  in.a.assign(kLen, std::vector<Vector>(static_cast<std::size_t>(in.arity)));
  for (int l = 0; l < in.arity; ++l) {
    std::vector<Vector> chain = detail::increasing_values(r, in.m, kLen);
    if (r.coin()) std::reverse(chain.begin(), chain.end());
    for (int i = 0; i < kLen; ++i) in.a[i][l] = chain[i];
  }
  const auto& values = in.m.values_in_order();
  const long nb = r.range(0, 2);
  for (long k = 0; k < nb; ++k) {
    switch (r.below(4)) {
      case 0: in.b.emplace_back(in.m.zero()); break;
      case 1: in.b.emplace_back(in.m.gen(r.pick(values))); break;
      case 2: in.b.emplace_back(-in.m.gen(r.pick(values))); break;
      default: in.b.push_back(random_point(r, in.m, cfg.max_support));
    }
  }
  static const std::array<long, 6> kXCoeffs = {0, 0, 1, 1, -1, 2};
  TermPtr h;
  auto add = [&](TermPtr piece) { h = h ? t_add(h, piece) : piece; };
  for (int l = 0; l < in.arity; ++l) {
    const long c = kXCoeffs[r.below(kXCoeffs.size())];
    if (c == 1) add(t_var("x" + std::to_string(l + 1)));
    if (c != 0 && c != 1) add(t_scale(Scalar(c), t_var("x" + std::to_string(l + 1))));
  }
  for (std::size_t k = 0; k < in.b.size(); ++k) {
    const long c = r.range(-1, 1);
    if (c == 1) add(t_var("y" + std::to_string(k + 1)));
    if (c == -1) add(t_scale(Scalar(-1), t_var("y" + std::to_string(k + 1))));
  }
  if (r.below(12) == 0) add(t_inf());
  in.h = h ? h : t_zero();
  return in;
}

}  // namespace

Report run_trichotomy(const SuiteConfig& cfg) {
  detail::Run run(cfg, "trichotomy");
  std::array<std::size_t, 3> clauses{};
  std::size_t discarded = 0;
  for (std::size_t t = 0; t < run.trials(); ++t) {
    bool accepted = false;
    for (std::uint64_t attempt = 0; attempt < 100 && !accepted; ++attempt) {
      Rng r(cfg.seed, t, attempt);
      Instance in = sample(r, cfg);
      std::vector<Point> hv;
      accepted = true;
      for (int i = 0; i < kLen && accepted; ++i) {
        hv.push_back(evaluate_term(in.m, *in.h, in.at(i)));
        accepted = hv.back().is_infinite() || valuate(in.m, hv.back()) == hv.back();
      }
      if (!accepted) {
        ++discarded;
        continue;
      }
      bool all_inf = true, all_same = true;
      for (const Point& p : hv) {
        all_inf = all_inf && p.is_infinite();
        all_same = all_same && p == hv.front();
      }
      const bool constant = all_same && !all_inf;
      int projections = 0;
      for (int l = 0; l < in.arity; ++l) {
        bool match = true;
        for (int i = 0; i < kLen; ++i) match = match && hv[i] == Point(in.a[i][l]);
        projections += match ? 1 : 0;
      }
      const int fits = (all_inf ? 1 : 0) + (constant ? 1 : 0) + projections;
      std::string values;
      for (const Point& p : hv) values += (values.empty() ? "" : ", ") + show(in.m, p);
      run.check(fits == 1, in.render(), "exactly one clause fits",
                std::to_string(fits) + " clauses fit h(a_i, b) = [" + values + "]");
      if (fits == 1) ++clauses[all_inf ? 0 : (constant ? 1 : 2)];
    }
    if (!accepted) {
      run.fail("seed=" + std::to_string(cfg.seed) + " trial=" + std::to_string(t), "an accepted instance",
               "retry cap reached");
    }
  }
  run.report().retries = discarded;
  run.report().stat("infinite", std::to_string(clauses[0]));
  run.report().stat("constant", std::to_string(clauses[1]));
  run.report().stat("projection", std::to_string(clauses[2]));
  return run.finish();
}

}  // namespace hamel::lab
