#pragma once

#include <cstddef>
#include <memory>
#include <ostream>
#include <utility>
#include <variant>
#include <vector>

#include "hamel/scalar.hpp"

namespace hamel {

/// Index of a generator inside a tower.
using GenId = std::size_t;

/// Identity of a tower prefix. A tower of n generators is a chain of n+1
/// anchor nodes; two anchors are compatible when the shallower one lies on
/// the deeper one's parent chain, i.e. one tower extends the other.
class Anchor {
 public:
  Anchor() = default;

  /// Root of a new, unrelated tower (zero generators).
  static Anchor fresh();
  /// Anchor of the tower obtained by adjoining one generator.
  Anchor extend() const;

  bool valid() const { return node_ != nullptr; }
  std::size_t depth() const { return node_ ? node_->depth : 0; }
  /// Ancestor at the given depth (precondition: depth <= this->depth()).
  Anchor at_depth(std::size_t depth) const;

  /// True when one of the two anchors is a prefix of the other. An invalid
  /// anchor is compatible with everything.
  friend bool compatible(const Anchor& a, const Anchor& b);
  /// The deeper of two compatible anchors.
  friend const Anchor& deeper(const Anchor& a, const Anchor& b) {
    return a.depth() >= b.depth() ? a : b;
  }
  friend bool operator==(const Anchor& a, const Anchor& b) { return a.node_ == b.node_; }

 private:
  struct Node {
    std::shared_ptr<const Node> parent;
    std::size_t depth;
  };
  explicit Anchor(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

/// One coordinate of a sparse combination.
struct Entry {
  GenId gen;
  Scalar coeff;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sorted by `gen`, no zero coefficients.
using Entries = std::vector<Entry>;

/// c1*x + c2*y on raw coordinate lists.
Entries combine(const Scalar& c1, const Entries& x, const Scalar& c2, const Entries& y);
Entries scaled(const Scalar& c, const Entries& x);
/// Sorts, merges duplicate generators and drops zeros.
Entries normalized(Entries e);

/// Finite formal linear combination of tower generators. The default value
/// is the zero vector, which carries no anchor and fits every tower.
class Vector {
 public:
  Vector() = default;
  /// Throws ModelMismatch if a coordinate references a generator beyond the
  /// anchor's depth.
  Vector(Anchor anchor, Entries entries);

  static Vector unit(const Anchor& anchor, GenId gen);

  const Entries& entries() const { return entries_; }
  const Anchor& anchor() const { return anchor_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  Scalar coeff(GenId gen) const;
  /// Highest generator in the support (precondition: nonzero).
  GenId leading_gen() const { return entries_.back().gen; }

  /// Same coordinates, re-tagged to a compatible (deeper) anchor.
  Vector rebased(const Anchor& anchor) const;

  Vector operator-() const;
  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  friend Vector operator*(const Scalar& c, const Vector& v);

  /// Syntactic equality; canonical form makes it semantic equality.
  friend bool operator==(const Vector& a, const Vector& b) { return a.entries_ == b.entries_; }

  friend Vector vec_combine(const Scalar& c1, const Vector& x, const Scalar& c2, const Vector& y);

 private:
  Anchor anchor_;
  Entries entries_;
};

/// Returns c1*x + c2*y. Throws ModelMismatch if x and y come from
/// unrelated towers.
Vector vec_combine(const Scalar& c1, const Vector& x, const Scalar& c2, const Vector& y);

/// Element of G together with the absorbing point at infinity.
class Point {
 public:
  Point() = default;
  Point(Vector v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  static Point infinity() {
    Point p;
    p.v_ = Infinity{};
    return p;
  }

  bool is_infinite() const { return std::holds_alternative<Infinity>(v_); }
  bool is_finite() const { return !is_infinite(); }
  /// Precondition: finite.
  const Vector& vector() const { return std::get<Vector>(v_); }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
    return a.vector() == b.vector();
  }

 private:
  struct Infinity {};
  std::variant<Vector, Infinity> v_;
};

/// c1*x + c2*y with infinity absorbing (also under a zero scalar).
Point point_combine(const Scalar& c1, const Point& x, const Scalar& c2, const Point& y);

/// Interval endpoint: -inf, a vector, or +inf.
class Bound {
 public:
  enum class Kind { MinusInfinity, Finite, PlusInfinity };

  Bound(Vector v) : kind_(Kind::Finite), v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  static Bound minus_infinity() { return Bound(Kind::MinusInfinity); }
  static Bound plus_infinity() { return Bound(Kind::PlusInfinity); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  const Vector& vector() const { return v_; }

 private:
  explicit Bound(Kind k) : kind_(k) {}
  Kind kind_;
  Vector v_;
};

/// Open interval (lower, upper) in one order.
struct Interval {
  Bound lower;
  Bound upper;
};

}  // namespace hamel
