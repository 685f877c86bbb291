#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hamel/linear.hpp"

namespace hamel {

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

inline Ordering to_ordering(int s) {
  return s < 0 ? Ordering::Less : (s > 0 ? Ordering::Greater : Ordering::Equal);
}
const char* to_string(Ordering o);

/// Principal downward-closed set in one order.
struct Cut {
  enum class Shape { Everything, Nothing, BelowStrict, BelowWeak };

  int order = 0;
  Shape shape = Shape::Everything;
  Vector bound;  // only meaningful for the Below* shapes

  static Cut everything(int order) { return {order, Shape::Everything, {}}; }
  static Cut nothing(int order) { return {order, Shape::Nothing, {}}; }
  /// { g : g < a }: the realizing element sits immediately below a.
  static Cut below_strict(int order, Vector a) { return {order, Shape::BelowStrict, std::move(a)}; }
  /// { g : g <= a }: the realizing element sits immediately above a.
  static Cut below_weak(int order, Vector a) { return {order, Shape::BelowWeak, std::move(a)}; }
};

/// Lift of a principal cut of the residue space G(alpha): the cosets at or
/// below pivot + B(alpha) when `weak`, strictly below otherwise.
struct AlphaCut {
  Vector alpha;
  Vector pivot;
  bool weak = true;
};

struct FreeGen {
  std::vector<Cut> cuts;  // one per order
};

struct ValueGen {
  Cut cut0;
};

struct BallGen {
  AlphaCut acut;
  Cut cut0;
};

struct GeneratorRecord {
  std::string name;
  std::variant<FreeGen, ValueGen, BallGen> kind;
};

/// A finitely presented structure: a tower of adjunction records. Plain
/// models carry k independent orders; Hamel models carry <_0, <_1 and the
/// valuation. Models are immutable; adjunction returns a new model that
/// shares the old prefix.
class Model {
 public:
  enum class Mode { Plain, Hamel };

  static Model plain(int orders);
  static Model hamel();

  Mode mode() const { return mode_; }
  bool is_hamel() const { return mode_ == Mode::Hamel; }
  int order_count() const { return orders_; }
  std::size_t size() const { return gens_.size(); }
  const Anchor& anchor() const { return anchor_; }

  const GeneratorRecord& record(GenId g) const { return *gens_.at(g); }
  const std::string& name(GenId g) const { return record(g).name; }
  std::optional<GenId> find(std::string_view name) const;
  /// `prefix` followed by the new generator's 1-based position, counting
  /// upward past names already taken.
  std::string fresh_name(std::string_view prefix) const;

  Vector gen(GenId g) const;
  Vector vector(Entries entries) const { return Vector(anchor_, std::move(entries)); }
  Vector zero() const { return Vector(anchor_, {}); }

  bool owns(const Vector& v) const;
  /// Re-anchors a vector of this tower or of one of its prefixes; throws
  /// ModelMismatch otherwise.
  Vector adopt(const Vector& v) const;
  Point adopt(const Point& p) const;

  /// Hamel mode: the value generator that is v(g) for generator g.
  GenId value_gen_of(GenId g) const { return value_of_.at(g); }
  /// Hamel mode: position of a value generator in the <_0 order among all
  /// value generators.
  std::size_t value_rank(GenId value_gen) const { return rank_.at(value_gen); }
  /// Hamel mode: value generators sorted by <_0.
  const std::vector<GenId>& values_in_order() const { return value_order_; }

  /// Appends a record without validation. Used by the adjunction operations
  /// after they have checked the cut data.
  Model appended(GeneratorRecord rec) const;

 private:
  Model(Mode mode, int orders) : mode_(mode), orders_(orders), anchor_(Anchor::fresh()) {}

  Mode mode_;
  int orders_;
  Anchor anchor_;
  std::vector<std::shared_ptr<const GeneratorRecord>> gens_;
  // Hamel bookkeeping, maintained by appended().
  std::vector<GenId> value_of_;
  std::vector<std::size_t> rank_;
  std::vector<GenId> value_order_;
};

struct Adjoined {
  Model model;
  GenId gen;
  Vector element() const { return model.gen(gen); }
};

struct Witness {
  Model model;
  Vector element;
};

// --- decision procedures ---------------------------------------------------

/// Sign of x in order i: -1, 0 or +1.
int sign(const Model& m, const Vector& x, int order);
Ordering compare(const Model& m, const Point& x, const Point& y, int order);

inline bool less(const Model& m, const Point& x, const Point& y, int order) {
  return compare(m, x, y, order) == Ordering::Less;
}

/// v(x), computed as the <_0-least generator value over the support.
Point valuate(const Model& m, const Point& x);
/// v(x), computed by unwinding the adjunction case formulas generator by
/// generator. Independent second route used for cross-checking.
Point valuate_recursive(const Model& m, const Point& x);

/// Compares the cosets x + B(alpha) and y + B(alpha) of the residue space.
Ordering residue_compare(const Model& m, const Vector& x, const Vector& y, const Vector& alpha);

bool cut_contains(const Model& m, const Cut& cut, const Vector& g);
/// Membership in the alpha-cut; g must lie in the closed ball of alpha.
bool alpha_cut_contains(const Model& m, const AlphaCut& acut, const Vector& g);

/// Hamel mode: the value v(g_n) of a generator as a vector.
Vector generator_value(const Model& m, GenId g);

// --- adjunctions ------------------------------------------------------------

/// Plain mode: new generator realizing one cut per order.
Adjoined adjoin_free(const Model& m, std::vector<Cut> cuts, std::string name = {});
/// Hamel mode: new value h = v(h) realizing cut0 in <_0.
Adjoined adjoin_value(const Model& m, Cut cut0, std::string name = {});
/// Hamel mode: new element of value alpha realizing cut0 in <_0 and the
/// alpha-cut in the residue space.
Adjoined adjoin_ball(const Model& m, AlphaCut acut, Cut cut0, std::string name = {});

// --- witnesses --------------------------------------------------------------

bool interval_nonempty(const Model& m, const Interval& iv, int order);
bool interval_contains(const Model& m, const Interval& iv, const Vector& x, int order);

/// Hamel mode: value h with a <_0 h <_0 b.
Witness density_witness(const Model& m, const Vector& a, const Vector& b);
/// z lying in iv0 for <_0 and iv1 for <_1.
Witness independence_witness(const Model& m, const Interval& iv0, const Interval& iv1);
/// Plain mode, any number of orders: one interval per order.
Witness independence_witness(const Model& m, std::span<const Interval> per_order);
/// Hamel mode: z in both intervals with v(z) != z.
Witness nonvalue_witness(const Model& m, const Interval& iv0, const Interval& iv1);
/// Hamel mode: s with a <_0 s <_0 b and v(s) >_0 0.
Witness dense_pair_witness(const Model& m, const Vector& a, const Vector& b);

namespace detail {
/// Second half of nonvalue_witness: given a candidate in both intervals,
/// returns it if it is not a value, else refines inside (z', min_1(2z', y1)).
Witness nonvalue_from_candidate(const Model& m, const Vector& candidate, const Interval& iv0,
                                const Interval& iv1);
}  // namespace detail

// --- valuation bases ----------------------------------------------------------

/// Basis B of span(vs) with v(sum l_b b) = min_0 { v(b) : l_b != 0 }.
std::vector<Vector> separated_basis(const Model& m, std::span<const Vector> vs);
/// v(span(vs) \ {0}), sorted by <_0.
std::vector<Vector> subspace_values(const Model& m, std::span<const Vector> vs);

}  // namespace hamel
