#include "hamel/tower.hpp"

#include <algorithm>

namespace hamel {

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

namespace {

// Value of an element: the value generator v(x), or nullopt for infinity.
using Value = std::optional<GenId>;

Entries unit_entries(GenId g) { return Entries{{g, Scalar(1)}}; }

// Decision procedures on raw coordinates. Every recursive query made while
// deciding the sign of z concerns only generators strictly below z's
// leading generator, which bounds the recursion by the tower height.
class Engine {
 public:
  explicit Engine(const Model& m) : m_(m) {}

  int sign(const Entries& z, int order) const {
    if (z.empty()) return 0;
    const Entry& top = z.back();
    Entries rest(z.begin(), z.end() - 1);
    // z = rest + c*g_n > 0  iff  (-rest/c in P) xor (c < 0)
    Entries w = scaled(-top.coeff.inverse(), rest);
    const bool member = lower_member(top.gen, order, w);
    return (member != (top.coeff.sign() < 0)) ? 1 : -1;
  }

  bool cut_member(const Cut& cut, const Entries& w) const {
    switch (cut.shape) {
      case Cut::Shape::Everything: return true;
      case Cut::Shape::Nothing: return false;
      case Cut::Shape::BelowStrict:
        return sign(combine(1, w, -1, cut.bound.entries()), cut.order) < 0;
      case Cut::Shape::BelowWeak:
        return sign(combine(1, w, -1, cut.bound.entries()), cut.order) <= 0;
    }
    return false;
  }

  bool alpha_member(const AlphaCut& acut, GenId alpha_gen, const Entries& g) const {
    Entries d = combine(1, g, -1, acut.pivot.entries());
    Value vd = value(d);
    if (!vd || m_.value_rank(*vd) > m_.value_rank(alpha_gen)) return acut.weak;
    return sign(d, 1) < 0;
  }

  // Lower half P_order of the polycut realized by generator n, applied to w.
  bool lower_member(GenId n, int order, const Entries& w) const {
    const GeneratorRecord& rec = m_.record(n);
    if (const auto* f = std::get_if<FreeGen>(&rec.kind)) return cut_member(f->cuts[order], w);
    if (const auto* vg = std::get_if<ValueGen>(&rec.kind)) {
      if (order == 0) return cut_member(vg->cut0, w);
      // P_1 = { g <=_1 0 } u { g : v(g) in Q_0 }
      if (sign(w, 1) <= 0) return true;
      return !cut_member(vg->cut0, unit_entries(*value(w)));
    }
    const auto& bg = std::get<BallGen>(rec.kind);
    if (order == 0) return cut_member(bg.cut0, w);
    // P_1 = { g <_1 closed ball of alpha } u P
    const GenId alpha_gen = m_.value_gen_of(n);
    Value vw = value(w);
    if (vw && m_.value_rank(*vw) < m_.value_rank(alpha_gen)) return sign(w, 1) < 0;
    return alpha_member(bg.acut, alpha_gen, w);
  }

  Value value(const Entries& z) const {
    Value best;
    for (const Entry& e : z) {
      const GenId v = m_.value_gen_of(e.gen);
      if (!best || m_.value_rank(v) < m_.value_rank(*best)) best = v;
    }
    return best;
  }

  Value value_recursive(const Entries& z) const {
    if (z.empty()) return std::nullopt;
    const GenId n = z.back().gen;
    Value vy = value_recursive(Entries(z.begin(), z.end() - 1));
    const GeneratorRecord& rec = m_.record(n);
    if (const auto* vg = std::get_if<ValueGen>(&rec.kind)) {
      // v(g + c h) = v(g) if v(g) in P_0, else h
      if (vy && cut_member(vg->cut0, unit_entries(*vy))) return vy;
      return n;
    }
    // v(g + c h) = min_0(v(g), alpha)
    const auto& bg = std::get<BallGen>(rec.kind);
    const Entries& alpha = bg.acut.alpha.entries();
    if (!vy) return alpha.front().gen;
    return sign(combine(1, unit_entries(*vy), -1, alpha), 0) < 0 ? *vy : alpha.front().gen;
  }

 private:
  const Model& m_;
};

void require_hamel(const Model& m, const char* what) {
  if (!m.is_hamel()) throw ModeError(std::string(what) + " requires a Hamel-mode model");
}

void check_order(const Model& m, int order) {
  if (order < 0 || order >= m.order_count())
    throw DomainError("order index " + std::to_string(order) + " out of range");
}

void check_cut(const Model& m, const Cut& cut, int expected_order) {
  if (cut.order != expected_order)
    throw MalformedCut("cut for order " + std::to_string(expected_order) + " is tagged with order " +
                       std::to_string(cut.order));
  if ((cut.shape == Cut::Shape::BelowStrict || cut.shape == Cut::Shape::BelowWeak) && !m.owns(cut.bound))
    throw MalformedCut("cut bound references generators outside the current tower");
}

Value value_of_point(const Model& m, const Point& p) {
  if (p.is_infinite()) return std::nullopt;
  return Engine(m).value(m.adopt(p.vector()).entries());
}

// Compares two values in <_0 with infinity on top.
int compare_values(const Model& m, Value a, Value b) {
  if (!a || !b) return (a ? -1 : 0) + (b ? 1 : 0);
  if (*a == *b) return 0;
  return m.value_rank(*a) < m.value_rank(*b) ? -1 : 1;
}

}  // namespace

// --- Model ------------------------------------------------------------------

Model Model::plain(int orders) {
  if (orders < 1) throw DomainError("a plain model needs at least one order");
  return Model(Mode::Plain, orders);
}

Model Model::hamel() { return Model(Mode::Hamel, 2); }

std::optional<GenId> Model::find(std::string_view name) const {
  for (GenId g = 0; g < gens_.size(); ++g)
    if (gens_[g]->name == name) return g;
  return std::nullopt;
}

std::string Model::fresh_name(std::string_view prefix) const {
  for (std::size_t i = gens_.size() + 1;; ++i) {
    std::string candidate = std::string(prefix) + std::to_string(i);
    if (!find(candidate)) return candidate;
  }
}

Vector Model::gen(GenId g) const {
  if (g >= size()) throw ModelMismatch("no generator " + std::to_string(g));
  return Vector::unit(anchor_, g);
}

bool Model::owns(const Vector& v) const {
  if (!compatible(v.anchor(), anchor_)) return false;
  return v.anchor().depth() <= anchor_.depth() || v.is_zero();
}

Vector Model::adopt(const Vector& v) const {
  if (!owns(v)) throw ModelMismatch("vector does not belong to this model");
  if (v.is_zero()) return zero();
  return v.rebased(anchor_);
}

Point Model::adopt(const Point& p) const {
  if (p.is_infinite()) return p;
  return Point(adopt(p.vector()));
}

Model Model::appended(GeneratorRecord rec) const {
  Model out = *this;
  out.anchor_ = anchor_.extend();
  const GenId n = gens_.size();
  const bool is_value = std::holds_alternative<ValueGen>(rec.kind);
  GenId value_gen = n;
  if (const auto* bg = std::get_if<BallGen>(&rec.kind)) value_gen = bg->acut.alpha.entries().front().gen;
  out.gens_.push_back(std::make_shared<const GeneratorRecord>(std::move(rec)));
  if (mode_ != Mode::Hamel) return out;

  out.value_of_.push_back(value_gen);
  out.rank_.push_back(0);
  if (is_value) {
    // Insert the new value into the <_0-sorted list; order-0 signs only
    // consult cut data, never ranks, so the engine can run before ranks
    // are final.
    Engine engine(out);
    auto pos = std::partition_point(out.value_order_.begin(), out.value_order_.end(), [&](GenId h) {
      return engine.sign(combine(1, unit_entries(h), -1, unit_entries(n)), 0) < 0;
    });
    out.value_order_.insert(pos, n);
    for (std::size_t i = 0; i < out.value_order_.size(); ++i) out.rank_[out.value_order_[i]] = i;
  }
  return out;
}

// --- decision procedures ------------------------------------------------------

int sign(const Model& m, const Vector& x, int order) {
  check_order(m, order);
  return Engine(m).sign(m.adopt(x).entries(), order);
}

Ordering compare(const Model& m, const Point& x, const Point& y, int order) {
  check_order(m, order);
  if (x.is_infinite() || y.is_infinite()) {
    if (x.is_infinite() && y.is_infinite()) return Ordering::Equal;
    if (y.is_finite()) m.adopt(y);
    if (x.is_finite()) m.adopt(x);
    return x.is_infinite() ? Ordering::Greater : Ordering::Less;
  }
  Vector d = m.adopt(x.vector()) - m.adopt(y.vector());
  return to_ordering(Engine(m).sign(d.entries(), order));
}

Point valuate(const Model& m, const Point& x) {
  require_hamel(m, "valuate");
  Value v = value_of_point(m, x);
  if (!v) return Point::infinity();
  return Point(m.gen(*v));
}

Point valuate_recursive(const Model& m, const Point& x) {
  require_hamel(m, "valuate");
  if (x.is_infinite()) return x;
  Value v = Engine(m).value_recursive(m.adopt(x.vector()).entries());
  if (!v) return Point::infinity();
  return Point(m.gen(*v));
}

Vector generator_value(const Model& m, GenId g) {
  require_hamel(m, "generator_value");
  return m.gen(m.value_gen_of(g));
}

namespace {

GenId check_alpha(const Model& m, const Vector& alpha) {
  if (!m.owns(alpha)) throw MalformedCut("alpha references generators outside the current tower");
  if (alpha.is_zero()) throw MalformedCut("alpha must be a nonzero value");
  Point va = valuate(m, alpha);
  if (!(va == Point(alpha))) throw MalformedCut("alpha is not a fixed point of the valuation");
  return alpha.leading_gen();
}

bool in_closed_ball(const Model& m, const Vector& g, GenId alpha_gen) {
  return compare_values(m, value_of_point(m, g), alpha_gen) >= 0;
}

}  // namespace

Ordering residue_compare(const Model& m, const Vector& x, const Vector& y, const Vector& alpha) {
  require_hamel(m, "residue_compare");
  const GenId a = check_alpha(m, alpha);
  if (!in_closed_ball(m, x, a) || !in_closed_ball(m, y, a))
    throw DomainError("residue_compare arguments must lie in the closed ball of alpha");
  Vector d = m.adopt(x) - m.adopt(y);
  if (compare_values(m, Engine(m).value(d.entries()), a) > 0) return Ordering::Equal;
  return to_ordering(Engine(m).sign(d.entries(), 1));
}

bool cut_contains(const Model& m, const Cut& cut, const Vector& g) {
  check_order(m, cut.order);
  return Engine(m).cut_member(cut, m.adopt(g).entries());
}

bool alpha_cut_contains(const Model& m, const AlphaCut& acut, const Vector& g) {
  require_hamel(m, "alpha_cut_contains");
  const GenId a = check_alpha(m, acut.alpha);
  if (!in_closed_ball(m, g, a)) throw DomainError("element outside the closed ball of alpha");
  return Engine(m).alpha_member(acut, a, m.adopt(g).entries());
}

// --- adjunctions ----------------------------------------------------------------

Adjoined adjoin_free(const Model& m, std::vector<Cut> cuts, std::string name) {
  if (m.is_hamel()) throw ModeError("free generators are only available in plain models");
  if (static_cast<int>(cuts.size()) != m.order_count())
    throw MalformedCut("expected one cut per order (" + std::to_string(m.order_count()) + ")");
  for (int i = 0; i < m.order_count(); ++i) check_cut(m, cuts[i], i);
  if (name.empty()) name = m.fresh_name("f");
  Model out = m.appended({std::move(name), FreeGen{std::move(cuts)}});
  return {std::move(out), m.size()};
}

Adjoined adjoin_value(const Model& m, Cut cut0, std::string name) {
  require_hamel(m, "adjoin_value");
  check_cut(m, cut0, 0);
  if (name.empty()) name = m.fresh_name("h");
  Model out = m.appended({std::move(name), ValueGen{std::move(cut0)}});
  return {std::move(out), m.size()};
}

Adjoined adjoin_ball(const Model& m, AlphaCut acut, Cut cut0, std::string name) {
  require_hamel(m, "adjoin_ball");
  const GenId a = check_alpha(m, acut.alpha);
  if (!m.owns(acut.pivot)) throw MalformedCut("pivot references generators outside the current tower");
  if (!acut.pivot.is_zero() && !in_closed_ball(m, acut.pivot, a))
    throw MalformedCut("pivot lies outside the closed ball of alpha");
  check_cut(m, cut0, 0);
  if (name.empty()) name = m.fresh_name("t");
  Model out = m.appended({std::move(name), BallGen{std::move(acut), std::move(cut0)}});
  return {std::move(out), m.size()};
}

// --- witnesses ------------------------------------------------------------------

bool interval_nonempty(const Model& m, const Interval& iv, int order) {
  using K = Bound::Kind;
  if (iv.lower.kind() == K::PlusInfinity || iv.upper.kind() == K::MinusInfinity) return false;
  if (!iv.lower.is_finite() || !iv.upper.is_finite()) return true;
  return sign(m, m.adopt(iv.upper.vector()) - m.adopt(iv.lower.vector()), order) > 0;
}

bool interval_contains(const Model& m, const Interval& iv, const Vector& x, int order) {
  using K = Bound::Kind;
  if (iv.lower.kind() == K::PlusInfinity || iv.upper.kind() == K::MinusInfinity) return false;
  if (iv.lower.is_finite() && sign(m, m.adopt(x) - m.adopt(iv.lower.vector()), order) <= 0) return false;
  if (iv.upper.is_finite() && sign(m, m.adopt(iv.upper.vector()) - m.adopt(x), order) <= 0) return false;
  return true;
}

namespace {

void require_nonempty(const Model& m, const Interval& iv, int order) {
  if (!interval_nonempty(m, iv, order))
    throw EmptyInterval("empty interval in order " + std::to_string(order));
}

// Cut whose realization sits immediately above the lower end of an interval.
Cut cut_above_lower(const Interval& iv, int order, const Vector& shift) {
  if (!iv.lower.is_finite()) return Cut::nothing(order);
  return Cut::below_weak(order, iv.lower.vector() - shift);
}

Witness hamel_independence(const Model& m, const Interval& iv0, const Interval& iv1) {
  Model cur = m;
  if (cur.size() == 0) cur = adjoin_value(cur, Cut::below_weak(0, cur.zero())).model;

  // Finite <_1 surrogates for infinite ends, using a <_1-positive value.
  const Vector p = generator_value(cur, 0);
  Vector lo, hi;
  if (iv1.lower.is_finite() && iv1.upper.is_finite()) {
    lo = cur.adopt(iv1.lower.vector());
    hi = cur.adopt(iv1.upper.vector());
  } else if (iv1.lower.is_finite()) {
    lo = cur.adopt(iv1.lower.vector());
    hi = lo + p;
  } else if (iv1.upper.is_finite()) {
    hi = cur.adopt(iv1.upper.vector());
    lo = hi - p;
  } else {
    lo = -p;
    hi = p;
  }
  const Vector mid = Scalar(1, 2) * (lo + hi);
  const Vector width = hi - lo;

  // alpha sits just above v(width), so anything of value alpha is
  // infinitesimal against the width and mid + t stays inside (lo, hi)_1.
  const Point vw = valuate(cur, width);
  Adjoined alpha = adjoin_value(cur, Cut::below_weak(0, vw.vector()));
  Adjoined t = adjoin_ball(alpha.model, AlphaCut{alpha.element(), alpha.model.zero(), true},
                           cut_above_lower(iv0, 0, mid));
  return {t.model, t.model.adopt(mid) + t.element()};
}

}  // namespace

Witness independence_witness(const Model& m, std::span<const Interval> per_order) {
  if (m.is_hamel()) {
    if (per_order.size() != 2) throw DomainError("Hamel models have exactly two orders");
    return independence_witness(m, per_order[0], per_order[1]);
  }
  if (static_cast<int>(per_order.size()) != m.order_count())
    throw DomainError("expected one interval per order");
  std::vector<Cut> cuts;
  for (int i = 0; i < m.order_count(); ++i) {
    require_nonempty(m, per_order[i], i);
    cuts.push_back(cut_above_lower(per_order[i], i, m.zero()));
  }
  Adjoined a = adjoin_free(m, std::move(cuts), m.fresh_name("w"));
  return {a.model, a.element()};
}

Witness independence_witness(const Model& m, const Interval& iv0, const Interval& iv1) {
  require_nonempty(m, iv0, 0);
  require_nonempty(m, iv1, 1);
  if (m.is_hamel()) return hamel_independence(m, iv0, iv1);
  std::vector<Interval> ivs{iv0, iv1};
  for (int i = 2; i < m.order_count(); ++i) ivs.push_back({Bound::minus_infinity(), Bound::plus_infinity()});
  return independence_witness(m, std::span<const Interval>(ivs));
}

Witness detail::nonvalue_from_candidate(const Model& m, const Vector& candidate, const Interval& iv0,
                                        const Interval& iv1) {
  const Vector z = m.adopt(candidate);
  if (!(valuate(m, z) == Point(z))) return {m, z};
  // z = v(z) >_1 0: refine inside (z, y0)_0 x (z, min_1(2z, y1))_1; by
  // convexity the refinement keeps value v(z) while differing from it.
  const Vector twice = Scalar(2) * z;
  Vector cap = twice;
  if (iv1.upper.is_finite() && sign(m, m.adopt(iv1.upper.vector()) - twice, 1) < 0)
    cap = m.adopt(iv1.upper.vector());
  return independence_witness(m, Interval{z, iv0.upper}, Interval{z, cap});
}

Witness nonvalue_witness(const Model& m, const Interval& iv0, const Interval& iv1) {
  require_hamel(m, "nonvalue_witness");
  Witness first = independence_witness(m, iv0, iv1);
  return detail::nonvalue_from_candidate(first.model, first.element, iv0, iv1);
}

Witness density_witness(const Model& m, const Vector& a, const Vector& b) {
  require_hamel(m, "density_witness");
  require_nonempty(m, Interval{a, b}, 0);
  Adjoined h = adjoin_value(m, Cut::below_weak(0, a));
  return {h.model, h.element()};
}

Witness dense_pair_witness(const Model& m, const Vector& a, const Vector& b) {
  require_hamel(m, "dense_pair_witness");
  require_nonempty(m, Interval{a, b}, 0);
  Adjoined alpha = adjoin_value(m, Cut::below_weak(0, m.zero()));
  Adjoined s = adjoin_ball(alpha.model, AlphaCut{alpha.element(), alpha.model.zero(), true},
                           Cut::below_weak(0, a));
  return {s.model, s.element()};
}

// --- valuation bases --------------------------------------------------------------

std::vector<Vector> separated_basis(const Model& m, std::span<const Vector> vs) {
  require_hamel(m, "separated_basis");
  struct Row {
    Entries v;
    GenId value;
    GenId pivot;  // a generator of value `value` in v's support
  };
  Engine engine(m);
  std::vector<Row> rows;
  for (const Vector& input : vs) {
    Entries e = m.adopt(input).entries();
    while (!e.empty()) {
      const GenId val = *engine.value(e);
      for (const Row& r : rows) {
        if (r.value != val) continue;
        Scalar c = Vector(m.anchor(), e).coeff(r.pivot);
        if (c.is_zero()) continue;
        Scalar rc = Vector(m.anchor(), r.v).coeff(r.pivot);
        e = combine(1, e, -(c / rc), r.v);
      }
      if (e.empty()) break;
      if (*engine.value(e) == val) {
        auto it = std::find_if(e.begin(), e.end(), [&](const Entry& x) { return m.value_gen_of(x.gen) == val; });
        rows.push_back({e, val, it->gen});
        break;
      }
    }
  }
  std::vector<Vector> out;
  out.reserve(rows.size());
  for (Row& r : rows) out.push_back(m.vector(std::move(r.v)));
  return out;
}

std::vector<Vector> subspace_values(const Model& m, std::span<const Vector> vs) {
  std::vector<GenId> vals;
  Engine engine(m);
  for (const Vector& b : separated_basis(m, vs)) vals.push_back(*engine.value(b.entries()));
  std::sort(vals.begin(), vals.end(), [&](GenId a, GenId b) { return m.value_rank(a) < m.value_rank(b); });
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<Vector> out;
  for (GenId g : vals) out.push_back(m.gen(g));
  return out;
}

}  // namespace hamel
