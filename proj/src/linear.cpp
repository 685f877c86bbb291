#include "hamel/linear.hpp"

#include <algorithm>

namespace hamel {

Anchor Anchor::fresh() {
  return Anchor(std::make_shared<const Node>(Node{nullptr, 0}));
}

Anchor Anchor::extend() const {
  return Anchor(std::make_shared<const Node>(Node{node_, depth() + 1}));
}

Anchor Anchor::at_depth(std::size_t depth) const {
  std::shared_ptr<const Node> n = node_;
  while (n && n->depth > depth) n = n->parent;
  return Anchor(n);
}

bool compatible(const Anchor& a, const Anchor& b) {
  if (!a.valid() || !b.valid()) return true;
  if (a.node_ == b.node_) return true;
  const Anchor& deep = a.depth() >= b.depth() ? a : b;
  const Anchor& shallow = a.depth() >= b.depth() ? b : a;
  return deep.at_depth(shallow.depth()).node_ == shallow.node_;
}

Entries normalized(Entries e) {
  std::sort(e.begin(), e.end(), [](const Entry& a, const Entry& b) { return a.gen < b.gen; });
  Entries out;
  out.reserve(e.size());
  for (auto& entry : e) {
    if (!out.empty() && out.back().gen == entry.gen) {
      out.back().coeff += entry.coeff;
    } else {
      out.push_back(std::move(entry));
    }
  }
  std::erase_if(out, [](const Entry& x) { return x.coeff.is_zero(); });
  return out;
}

Entries combine(const Scalar& c1, const Entries& x, const Scalar& c2, const Entries& y) {
  Entries out;
  out.reserve(x.size() + y.size());
  const bool use_x = !c1.is_zero();
  const bool use_y = !c2.is_zero();
  auto xi = x.begin();
  auto yi = y.begin();
  while ((use_x && xi != x.end()) || (use_y && yi != y.end())) {
    const bool take_x = use_x && xi != x.end();
    const bool take_y = use_y && yi != y.end();
    if (take_x && (!take_y || xi->gen < yi->gen)) {
      out.push_back({xi->gen, c1 * xi->coeff});
      ++xi;
    } else if (take_y && (!take_x || yi->gen < xi->gen)) {
      out.push_back({yi->gen, c2 * yi->coeff});
      ++yi;
    } else {
      Scalar c = c1 * xi->coeff + c2 * yi->coeff;
      if (!c.is_zero()) out.push_back({xi->gen, std::move(c)});
      ++xi;
      ++yi;
    }
  }
  return out;
}

Entries scaled(const Scalar& c, const Entries& x) {
  if (c.is_zero()) return {};
  Entries out = x;
  for (auto& e : out) e.coeff *= c;
  return out;
}

Vector::Vector(Anchor anchor, Entries entries)
    : anchor_(std::move(anchor)), entries_(normalized(std::move(entries))) {
  if (!entries_.empty() && entries_.back().gen >= anchor_.depth())
    throw ModelMismatch("generator index " + std::to_string(entries_.back().gen) +
                        " out of range for a tower of " + std::to_string(anchor_.depth()) +
                        " generators");
}

Vector Vector::unit(const Anchor& anchor, GenId gen) {
  return Vector(anchor, Entries{{gen, Scalar(1)}});
}

Scalar Vector::coeff(GenId gen) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), gen,
                             [](const Entry& e, GenId g) { return e.gen < g; });
  return (it != entries_.end() && it->gen == gen) ? it->coeff : Scalar(0);
}

Vector Vector::rebased(const Anchor& anchor) const {
  if (!compatible(anchor_, anchor) || anchor.depth() < anchor_.depth())
    throw ModelMismatch("vector does not belong to this tower");
  Vector out;
  out.anchor_ = anchor;
  out.entries_ = entries_;
  return out;
}

Vector vec_combine(const Scalar& c1, const Vector& x, const Scalar& c2, const Vector& y) {
  if (!compatible(x.anchor(), y.anchor()))
    throw ModelMismatch("cannot combine vectors from different towers");
  Vector out;
  out.anchor_ = deeper(x.anchor(), y.anchor());
  out.entries_ = combine(c1, x.entries_, c2, y.entries_);
  return out;
}

Vector Vector::operator-() const { return vec_combine(Scalar(-1), *this, Scalar(0), Vector()); }
Vector operator+(const Vector& a, const Vector& b) { return vec_combine(1, a, 1, b); }
Vector operator-(const Vector& a, const Vector& b) { return vec_combine(1, a, -1, b); }
Vector operator*(const Scalar& c, const Vector& v) { return vec_combine(c, v, 0, Vector()); }

Point point_combine(const Scalar& c1, const Point& x, const Scalar& c2, const Point& y) {
  if (x.is_infinite() || y.is_infinite()) return Point::infinity();
  return Point(vec_combine(c1, x.vector(), c2, y.vector()));
}

}  // namespace hamel
