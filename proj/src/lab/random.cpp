#include "hamel/lab/random.hpp"

namespace hamel::lab {

Rng::Rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(stream)};
  eng_.seed(seq);
}

Scalar Rng::scalar(long height) {
  long num = range(-height, height);
  long den = range(1, height);
  return Scalar(num, den);
}

Scalar Rng::nonzero_scalar(long height) {
  for (;;) {
    Scalar s = scalar(height);
    if (!s.is_zero()) return s;
  }
}

Vector random_vector(Rng& r, const Model& m, int max_support, long height) {
  Vector out = m.zero();
  if (m.size() == 0) return out;
  const int n = static_cast<int>(r.below(max_support + 1));
  for (int i = 0; i < n; ++i) out = out + r.nonzero_scalar(height) * m.gen(r.below(m.size()));
  return out;
}

Point random_point(Rng& r, const Model& m, int max_support) {
  if (r.below(8) == 0) return Point::infinity();
  return Point(random_vector(r, m, max_support));
}

Cut random_cut(Rng& r, const Model& m, int order) {
  switch (r.below(6)) {
    case 0: return Cut::everything(order);
    case 1: return Cut::nothing(order);
    case 2: return Cut::below_strict(order, random_vector(r, m));
    default: return Cut::below_weak(order, random_vector(r, m));
  }
}

Vector random_ball_element(Rng& r, const Model& m, GenId alpha_gen) {
  Vector out = m.zero();
  const std::size_t floor = m.value_rank(alpha_gen);
  for (GenId g = 0; g < m.size(); ++g)
    if (m.value_rank(m.value_gen_of(g)) >= floor && r.below(3) == 0) out = out + r.nonzero_scalar() * m.gen(g);
  return out;
}

namespace {

Model grow(Rng& r, Model m, Step step) {
  const auto& values = m.values_in_order();
  if (step == Step::Any) step = (values.empty() || r.below(5) < 2) ? Step::Value : Step::Ball;
  if (step == Step::Ball && values.empty()) step = Step::Value;
  if (step == Step::Value) return adjoin_value(m, random_cut(r, m, 0)).model;
  const GenId alpha = r.pick(values);
  Vector pivot = r.coin() ? random_ball_element(r, m, alpha) : m.zero();
  return adjoin_ball(m, AlphaCut{m.gen(alpha), pivot, r.coin()}, random_cut(r, m, 0)).model;
}

}  // namespace

Model random_hamel(Rng& r, std::span<const Step> steps) {
  Model m = Model::hamel();
  for (Step s : steps) m = grow(r, m, s);
  return m;
}

Model random_hamel(Rng& r, int size) {
  std::vector<Step> steps(static_cast<std::size_t>(size), Step::Any);
  return random_hamel(r, steps);
}

Model random_plain(Rng& r, int orders, int size) {
  Model m = Model::plain(orders);
  while (static_cast<int>(m.size()) < size) {
    std::vector<Cut> cuts;
    for (int i = 0; i < orders; ++i) cuts.push_back(random_cut(r, m, i));
    m = adjoin_free(m, std::move(cuts)).model;
  }
  return m;
}

Model random_model(std::uint64_t seed, int size) {
  Rng r(seed);
  return random_hamel(r, size);
}

Model random_model(std::uint64_t seed, std::span<const Step> schedule) {
  Rng r(seed);
  return random_hamel(r, schedule);
}

Model random_plain_model(std::uint64_t seed, int orders, int size) {
  Rng r(seed);
  return random_plain(r, orders, size);
}

using namespace logic;

TermPtr random_term(Rng& r, const FormulaShape& shape) {
  TermPtr t;
  const int n = 1 + static_cast<int>(r.below(2));
  for (int i = 0; i < n; ++i) {
    TermPtr piece;
    const auto roll = r.below(10);
    if (roll == 0) {
      piece = t_zero();
    } else if (roll == 1 && shape.allow_inf) {
      piece = t_inf();
    } else {
      piece = t_var(r.pick(shape.vars));
    }
    if (r.below(3) == 0) piece = t_scale(r.scalar(3), piece);
    t = t ? (r.coin() ? t_add(t, piece) : t_sub(t, piece)) : piece;
  }
  return t;
}

namespace {

FormulaPtr random_atom(Rng& r, const FormulaShape& shape) {
  TermPtr a = random_term(r, shape), b = random_term(r, shape);
  const int order = static_cast<int>(r.below(static_cast<std::uint64_t>(shape.orders)));
  switch (r.below(3)) {
    case 0: return f_eq(a, b);
    case 1: return f_lt(order, a, b);
    default: return f_le(order, a, b);
  }
}

FormulaPtr formula_at(Rng& r, const FormulaShape& shape, int depth, int& quantifiers) {
  const auto roll = r.below(10);
  if (depth == 0 || roll < 3) return random_atom(r, shape);
  if (roll < 5 && quantifiers < shape.max_quantifiers) {
    ++quantifiers;
    std::string v = r.pick(shape.vars);
    FormulaPtr body = formula_at(r, shape, depth - 1, quantifiers);
    return r.coin() ? f_exists(v, body) : f_forall(v, body);
  }
  FormulaPtr a = formula_at(r, shape, depth - 1, quantifiers);
  switch (r.below(4)) {
    case 0: return f_not(a);
    case 1: return f_and(a, formula_at(r, shape, depth - 1, quantifiers));
    case 2: return f_or(a, formula_at(r, shape, depth - 1, quantifiers));
    default: return f_implies(a, formula_at(r, shape, depth - 1, quantifiers));
  }
}

}  // namespace

FormulaPtr random_formula(Rng& r, const FormulaShape& shape) {
  int q = 0;
  return formula_at(r, shape, shape.max_depth, q);
}

FormulaPtr random_sentence(Rng& r, const FormulaShape& shape) {
  FormulaShape inner = shape;
  FormulaPtr f = random_formula(r, inner);
  for (const auto& v : free_vars(*f)) f = r.coin() ? f_exists(v, f) : f_forall(v, f);
  return f;
}

}  // namespace hamel::lab
