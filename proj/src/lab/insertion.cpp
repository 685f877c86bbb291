#include <algorithm>
#include <array>
#include <optional>

#include "common.hpp"

#include "hamel/logic/eval.hpp"

namespace hamel::lab {

using detail::render_inputs;
using detail::show;
using namespace logic;

namespace {

constexpr int kSide = 5;
constexpr int kLen = 2 * kSide + 1;
constexpr int kC = kSide;  // the inserted index

enum class Outcome { Done, Retry };

const std::array<const char*, 4> kPatterns = {"nonconstant_constant", "nonconstant_nonconstant", "constant_g",
                                              "criterion"};

std::string seq(const Model& m, const std::vector<Vector>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + format_vector(m, xs[i]);
  return out + "]";
}

/// lambda * (new ball element of value alpha), adjoined to m.
Vector ball_at(Rng& r, Model& m, const Vector& alpha, long height) {
  const GenId ag = alpha.leading_gen();
  Vector pivot = r.coin() ? random_ball_element(r, m, ag) : m.zero();
  Adjoined a = adjoin_ball(m, AlphaCut{alpha, pivot, r.coin()}, random_cut(r, m, 0));
  m = a.model;
  return r.nonzero_scalar(height) * a.element();
}

/// Values strictly increasing in <_0 for every index, the one at kC inserted
/// afterwards by density_witness.
std::vector<Vector> inserted_chain(Rng& r, Model& m) {
  std::vector<Vector> vals = detail::increasing_values(r, m, kLen - 1);
  Witness w = density_witness(m, vals[kC - 1], vals[kC]);
  m = w.model;
  vals.insert(vals.begin() + kC, w.element);
  return vals;
}

/// Elements of value beta, strictly <_1-monotone and one-signed, the one at
/// kC inserted by independence_witness between its neighbours.
std::vector<Vector> inserted_ball_sequence(Rng& r, Model& m, const Vector& beta, long height) {
  std::vector<Vector> xs;
  for (int i = 0; i < kLen - 1; ++i) {
    Vector x = ball_at(r, m, beta, height);
    xs.push_back(sign(m, x, 1) < 0 ? -x : x);
  }
  std::sort(xs.begin(), xs.end(), [&](const Vector& a, const Vector& b) { return less(m, a, b, 1); });
  if (r.coin()) {
    std::reverse(xs.begin(), xs.end());
    for (Vector& x : xs) x = -x;
  }
  Interval iv0 = detail::random_interval(r, m, 0, 2);
  Interval iv1{xs[kC - 1], xs[kC]};
  if (compare(m, xs[kC - 1], xs[kC], 1) != Ordering::Less) return {};
  Witness w = independence_witness(m, iv0, iv1);
  m = w.model;
  xs.insert(xs.begin() + kC, w.element);
  return xs;
}

bool monotone_one_signed(const Model& m, const std::vector<Vector>& xs) {
  const int s = sign(m, xs.front(), 1);
  if (s == 0) return false;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (sign(m, xs[i], 1) != s) return false;
    if (i && !less(m, xs[i - 1], xs[i], 1)) return false;
  }
  return true;
}

bool increasing_values_at(const Model& m, const std::vector<Vector>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!(valuate(m, vs[i]) == Point(vs[i]))) return false;
    if (i && !less(m, vs[i - 1], vs[i], 0)) return false;
  }
  return true;
}

Outcome nonconstant_constant(detail::Run& run, Rng& r) {
  const auto& cfg = run.config();
  Model m = random_hamel(r, static_cast<int>(r.range(1, cfg.max_gens)));
  const Vector beta = m.gen(r.pick(m.values_in_order()));
  const Vector b = random_vector(r, m, cfg.max_support, cfg.scalar_height);
  std::vector<Vector> xs = inserted_ball_sequence(r, m, beta, cfg.scalar_height);
  if (xs.empty()) return Outcome::Retry;
  std::vector<Vector> a;
  for (const Vector& x : xs) a.push_back(b + x);

  std::vector<Vector> d;
  for (const Vector& ai : a) d.push_back(ai - b);
  bool hyp = monotone_one_signed(m, d);
  for (int i = 0; i < kLen && hyp; ++i)
    if (i != kC) hyp = valuate(m, d[i]) == Point(beta);
  if (!hyp) return Outcome::Retry;

  const Point got = valuate(m, a[kC] - b);
  run.check(got == Point(beta),
            render_inputs(m, {{"b", b}, {"beta", beta}}) + " a=" + seq(m, a) + " c=" + std::to_string(kC),
            "v(a_c - b) = " + show(m, beta), show(m, got));
  return Outcome::Done;
}

Outcome nonconstant_nonconstant(detail::Run& run, Rng& r) {
  const auto& cfg = run.config();
  Model m = random_hamel(r, static_cast<int>(r.range(0, cfg.max_gens / 2)));
  const std::vector<Vector> primes = inserted_chain(r, m);
  const Vector b = random_vector(r, m, cfg.max_support, cfg.scalar_height);
  std::vector<Vector> a(kLen);
  for (int i = 0; i < kLen; ++i)
    if (i != kC) a[i] = b + ball_at(r, m, primes[i], cfg.scalar_height);
  a[kC] = a[kC + 1] + ball_at(r, m, primes[kC], cfg.scalar_height);

  bool hyp = increasing_values_at(m, primes);
  for (int i = 0; i < kLen && hyp; ++i) {
    if (i != kC) hyp = valuate(m, a[i] - b) == Point(primes[i]);
    for (int j = i + 1; j < kLen && hyp; ++j) hyp = valuate(m, a[i] - a[j]) == Point(primes[i]);
  }
  if (!hyp) return Outcome::Retry;

  const Point got = valuate(m, a[kC] - b);
  run.check(got == Point(primes[kC]),
            render_inputs(m, {{"b", b}}) + " a=" + seq(m, a) + " a'=" + seq(m, primes) + " c=" + std::to_string(kC),
            "v(a_c - b) = " + show(m, primes[kC]), show(m, got));
  return Outcome::Done;
}

// --- term instances ----------------------------------------------------------

/// Sequence of tuples (value coordinates x1..x_nv, element coordinates after
/// them), parameters p (for g) and q (values or inf, for h).
struct TermCase {
  Model m = Model::hamel();
  int nv = 0;
  int ne = 0;
  std::vector<std::vector<Point>> a;
  std::vector<Point> p, q;
  TermPtr g, h;

  std::string var(int j) const { return "x" + std::to_string(j + 1); }

  Assignment at(int i, bool zero_params = false) const {
    Assignment s;
    for (int j = 0; j < nv + ne; ++j) s[var(j)] = a[i][j];
    for (std::size_t k = 0; k < p.size(); ++k) s["p" + std::to_string(k + 1)] = zero_params ? Point(m.zero()) : p[k];
    for (std::size_t k = 0; k < q.size(); ++k) s["q" + std::to_string(k + 1)] = zero_params ? Point(m.zero()) : q[k];
    return s;
  }

  std::string render() const {
    std::string out = "model{" + inline_model(m) + "} g=" + print_term(*g) + " h=" + print_term(*h);
    for (std::size_t k = 0; k < p.size(); ++k) out += " p" + std::to_string(k + 1) + "=" + show(m, p[k]);
    for (std::size_t k = 0; k < q.size(); ++k) out += " q" + std::to_string(k + 1) + "=" + show(m, q[k]);
    for (int i = 0; i < kLen; ++i) {
      out += " a" + std::to_string(i) + "=(";
      for (int j = 0; j < nv + ne; ++j) out += (j ? ", " : "") + show(m, a[i][j]);
      out += ")";
    }
    return out + " c=" + std::to_string(kC);
  }
};

TermPtr sum_term(const std::vector<std::pair<Scalar, std::string>>& parts) {
  TermPtr t;
  for (const auto& [c, name] : parts) {
    TermPtr piece = c == Scalar(1) ? t_var(name) : t_scale(c, t_var(name));
    t = t ? t_add(t, piece) : piece;
  }
  return t ? t : t_zero();
}

/// Fills element coordinates and g so that g(a_i, p) = target[i]. Value
/// coordinates must already be set in tc.a.
void solve_g(Rng& r, TermCase& tc, const std::vector<Vector>& target, long height, int max_support) {
  const int n = tc.nv + tc.ne;
  const int d = tc.nv + static_cast<int>(r.below(static_cast<std::uint64_t>(tc.ne)));
  std::vector<Scalar> lambda(n);
  for (int j = 0; j < n; ++j) lambda[j] = (j == d) ? r.nonzero_scalar(height) : (r.coin() ? r.scalar(height) : Scalar(0));
  std::vector<Scalar> mu(tc.p.size());
  for (auto& c : mu) c = r.coin() ? r.scalar(height) : Scalar(0);

  std::vector<std::pair<Scalar, std::string>> parts;
  for (int j = 0; j < n; ++j)
    if (!lambda[j].is_zero()) parts.emplace_back(lambda[j], tc.var(j));
  for (std::size_t k = 0; k < mu.size(); ++k)
    if (!mu[k].is_zero()) parts.emplace_back(mu[k], "p" + std::to_string(k + 1));
  tc.g = sum_term(parts);

  for (int i = 0; i < kLen; ++i) {
    for (int j = tc.nv; j < n; ++j)
      if (j != d) tc.a[i][j] = random_vector(r, tc.m, max_support, height);
    Vector rest = target[i];
    for (int j = 0; j < n; ++j)
      if (j != d) rest = rest - lambda[j] * tc.a[i][j].vector();
    for (std::size_t k = 0; k < mu.size(); ++k) rest = rest - mu[k] * tc.p[k].vector();
    tc.a[i][d] = lambda[d].inverse() * rest;
  }
}

TermCase skeleton(Rng& r, const SuiteConfig& cfg) {
  TermCase tc;
  tc.m = random_hamel(r, static_cast<int>(r.range(1, cfg.max_gens / 2 + 1)));
  tc.nv = static_cast<int>(r.range(1, 2));
  tc.ne = static_cast<int>(r.range(1, 2));
  tc.a.assign(kLen, std::vector<Point>(static_cast<std::size_t>(tc.nv + tc.ne), Point(tc.m.zero())));
  const long np = r.range(1, 2);
  for (long k = 0; k < np; ++k) tc.p.emplace_back(random_vector(r, tc.m, cfg.max_support, cfg.scalar_height));
  return tc;
}

/// Value coordinate j: an inserted increasing chain.
void chain_coordinate(Rng& r, TermCase& tc, int j) {
  std::vector<Vector> vals = inserted_chain(r, tc.m);
  for (int i = 0; i < kLen; ++i) tc.a[i][j] = vals[i];
}

std::string var_name(int j) { return "x" + std::to_string(j + 1); }

bool is_value_or_inf(const Model& m, const Point& p) { return p.is_infinite() || valuate(m, p) == p; }

/// Common hypotheses: value coordinates and q lie in v(G) u {inf}, and the
/// criterion identity holds away from kC.
bool base_hypotheses(const TermCase& tc, const Formula& crit) {
  for (const Point& q : tc.q)
    if (!is_value_or_inf(tc.m, q)) return false;
  for (int i = 0; i < kLen; ++i) {
    for (int j = 0; j < tc.nv; ++j)
      if (!is_value_or_inf(tc.m, tc.a[i][j]) || tc.a[i][j].is_infinite()) return false;
    if (i != kC && !evaluate_qf(tc.m, crit, tc.at(i))) return false;
  }
  return true;
}

FormulaPtr criterion(const TermCase& tc) { return f_eq(t_val(tc.g), tc.h); }

/// Case g constant: g(a_i, p) = K for every i.
std::optional<TermCase> constant_g_case(Rng& r, const SuiteConfig& cfg) {
  TermCase tc = skeleton(r, cfg);
  const int shape = static_cast<int>(r.below(3));  // 0: h = q1, 1: h = x_l, 2: K = 0
  Vector k = shape == 2 ? tc.m.zero() : random_vector(r, tc.m, cfg.max_support, cfg.scalar_height);
  if (shape != 2 && k.is_zero()) return std::nullopt;
  const Point vk = valuate(tc.m, k);
  const int l = static_cast<int>(r.below(static_cast<std::uint64_t>(tc.nv)));
  for (int j = 0; j < tc.nv; ++j) {
    if (shape == 1 && j == l) {
      for (int i = 0; i < kLen; ++i) tc.a[i][j] = vk;
    } else {
      chain_coordinate(r, tc, j);
    }
  }
  switch (shape) {
    case 0:
      tc.q = {vk};
      tc.h = t_var("q1");
      break;
    case 1:
      tc.h = t_var(var_name(l));
      break;
    default:
      switch (r.below(3)) {
        case 0: tc.h = t_inf(); break;
        case 1:
          tc.q = {Point::infinity()};
          tc.h = t_var("q1");
          break;
        default: tc.h = t_add(t_var(var_name(l)), t_inf());
      }
  }
  solve_g(r, tc, std::vector<Vector>(kLen, k), cfg.scalar_height, cfg.max_support);
  return tc;
}

bool constant_g_hypotheses(const TermCase& tc, const Formula& crit) {
  if (!base_hypotheses(tc, crit)) return false;
  const Point g0 = evaluate_term(tc.m, *tc.g, tc.at(0));
  const Point g0_free = evaluate_term(tc.m, *tc.g, tc.at(0, true));
  const Point h0_free = evaluate_term(tc.m, *tc.h, tc.at(0, true));
  for (int i = 0; i < kLen; ++i) {
    if (i != kC && !(evaluate_term(tc.m, *tc.g, tc.at(i)) == g0)) return false;
    // parameter-free parts agree along the whole sequence
    if (!(evaluate_term(tc.m, *tc.g, tc.at(i, true)) == g0_free)) return false;
    if (!(evaluate_term(tc.m, *tc.h, tc.at(i, true)) == h0_free)) return false;
  }
  return true;
}

/// g nonconstant, h a fixed value beta: g(a_i, p) ranges over a one-signed
/// <_1-monotone sequence of value beta.
std::optional<TermCase> beta_case(Rng& r, const SuiteConfig& cfg) {
  TermCase tc = skeleton(r, cfg);
  for (int j = 0; j < tc.nv; ++j) chain_coordinate(r, tc, j);
  const Vector beta = tc.m.gen(r.pick(tc.m.values_in_order()));
  std::vector<Vector> target = inserted_ball_sequence(r, tc.m, beta, cfg.scalar_height);
  if (target.empty()) return std::nullopt;
  tc.q = {beta};
  tc.h = t_var("q1");
  solve_g(r, tc, target, cfg.scalar_height, cfg.max_support);
  return tc;
}

bool beta_hypotheses(const TermCase& tc, const Formula& crit) {
  if (!base_hypotheses(tc, crit)) return false;
  std::vector<Vector> gs;
  for (int i = 0; i < kLen; ++i) {
    Point gi = evaluate_term(tc.m, *tc.g, tc.at(i));
    if (gi.is_infinite()) return false;
    gs.push_back(gi.vector());
  }
  return monotone_one_signed(tc.m, gs);
}

/// g nonconstant, h = x_l: v(g(a_i, p)) follows an increasing value chain.
std::optional<TermCase> projection_case(Rng& r, const SuiteConfig& cfg) {
  TermCase tc = skeleton(r, cfg);
  for (int j = 0; j < tc.nv; ++j) chain_coordinate(r, tc, j);
  const int l = static_cast<int>(r.below(static_cast<std::uint64_t>(tc.nv)));
  std::vector<Vector> target(kLen);
  for (int i = 0; i < kLen; ++i)
    if (i != kC) target[i] = ball_at(r, tc.m, tc.a[i][l].vector(), cfg.scalar_height);
  target[kC] = target[kC + 1] + ball_at(r, tc.m, tc.a[kC][l].vector(), cfg.scalar_height);
  tc.h = t_var(var_name(l));
  solve_g(r, tc, target, cfg.scalar_height, cfg.max_support);
  return tc;
}

bool projection_hypotheses(const TermCase& tc, const Formula& crit) {
  if (!base_hypotheses(tc, crit)) return false;
  std::vector<Vector> gs, hs;
  for (int i = 0; i < kLen; ++i) {
    Point gi = evaluate_term(tc.m, *tc.g, tc.at(i));
    Point hi = evaluate_term(tc.m, *tc.h, tc.at(i));
    if (gi.is_infinite() || hi.is_infinite()) return false;
    gs.push_back(gi.vector());
    hs.push_back(hi.vector());
  }
  if (!increasing_values_at(tc.m, hs)) return false;
  for (int i = 0; i < kLen; ++i)
    for (int j = i + 1; j < kLen; ++j)
      if (!(valuate(tc.m, gs[i] - gs[j]) == Point(hs[i]))) return false;
  return true;
}

Outcome term_pattern(detail::Run& run, Rng& r, int which) {
  const auto& cfg = run.config();
  std::optional<TermCase> tc;
  bool (*hyp)(const TermCase&, const Formula&) = nullptr;
  switch (which) {
    case 0:
      tc = constant_g_case(r, cfg);
      hyp = constant_g_hypotheses;
      break;
    case 1:
      tc = beta_case(r, cfg);
      hyp = beta_hypotheses;
      break;
    default:
      tc = projection_case(r, cfg);
      hyp = projection_hypotheses;
  }
  if (!tc) return Outcome::Retry;
  FormulaPtr crit = criterion(*tc);
  if (!hyp(*tc, *crit)) return Outcome::Retry;
  const Assignment s = tc->at(kC);
  run.check(evaluate_qf(tc->m, *crit, s), tc->render(), print_formula(*crit) + " at c",
            "v(g) = " + show(tc->m, valuate(tc->m, evaluate_term(tc->m, *tc->g, s))) +
                ", h = " + show(tc->m, evaluate_term(tc->m, *tc->h, s)));
  return Outcome::Done;
}

}  // namespace

Report run_insertion_suite(const SuiteConfig& cfg) {
  detail::Run run(cfg, "insertion");
  std::array<std::size_t, 3> criterion_cases{};
  std::array<std::size_t, 4> accepted{};
  for (std::size_t pattern = 0; pattern < kPatterns.size(); ++pattern) {
    for (std::size_t t = 0; t < run.trials(); ++t) {
      bool done = false;
      for (std::uint64_t attempt = 0; attempt < 100 && !done; ++attempt) {
        Rng r(cfg.seed, t, pattern * 1000 + attempt);
        Outcome o;
        switch (pattern) {
          case 0: o = nonconstant_constant(run, r); break;
          case 1: o = nonconstant_nonconstant(run, r); break;
          case 2: o = term_pattern(run, r, 0); break;
          default: {
            const int which = static_cast<int>(r.below(3));
            o = term_pattern(run, r, which);
            if (o == Outcome::Done) ++criterion_cases[which];
          }
        }
        done = o == Outcome::Done;
        if (!done) ++run.report().retries;
      }
      if (done) ++accepted[pattern];
      if (!done)
        run.fail(std::string("pattern=") + kPatterns[pattern] + " seed=" + std::to_string(cfg.seed) +
                     " trial=" + std::to_string(t),
                 "a configuration satisfying the hypotheses", "retry cap reached");
    }
  }
  run.report().stat("patterns", std::to_string(kPatterns.size()));
  std::string per;
  for (std::size_t p = 0; p < kPatterns.size(); ++p)
    per += (p ? "," : "") + std::string(kPatterns[p]) + ":" + std::to_string(accepted[p]);
  run.report().stat("accepted", per);
  run.report().stat("criterion_cases", "constant:" + std::to_string(criterion_cases[0]) + ",beta:" +
                                           std::to_string(criterion_cases[1]) + ",projection:" +
                                           std::to_string(criterion_cases[2]));
  return run.finish();
}

}  // namespace hamel::lab
