#include "hamel/logic/eval.hpp"

#include "hamel/error.hpp"

namespace hamel::logic {

namespace {

// Shared connective walk; the structure supplies atoms.
template <typename AtomFn>
bool walk(const Formula& f, const AtomFn& atom) {
  switch (f.kind) {
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::Eq:
    case Formula::Kind::Lt:
    case Formula::Kind::Le: return atom(f);
    case Formula::Kind::Not: return !walk(*f.a, atom);
    case Formula::Kind::And: return walk(*f.a, atom) && walk(*f.b, atom);
    case Formula::Kind::Or: return walk(*f.a, atom) || walk(*f.b, atom);
    case Formula::Kind::Implies: return !walk(*f.a, atom) || walk(*f.b, atom);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: throw DomainError("formula is not quantifier-free");
  }
  return false;
}

bool decide(Formula::Kind kind, Ordering o) {
  switch (kind) {
    case Formula::Kind::Eq: return o == Ordering::Equal;
    case Formula::Kind::Lt: return o == Ordering::Less;
    default: return o != Ordering::Greater;
  }
}

}  // namespace

Point evaluate_term(const Model& m, const Term& t, const Assignment& s) {
  switch (t.kind) {
    case Term::Kind::Zero: return Point(m.zero());
    case Term::Kind::Inf: return Point::infinity();
    case Term::Kind::Var: {
      if (auto it = s.find(t.name); it != s.end()) return m.adopt(it->second);
      if (auto g = m.find(t.name)) return Point(m.gen(*g));
      throw DomainError("unbound variable '" + t.name + "'");
    }
    case Term::Kind::Add:
      return point_combine(1, evaluate_term(m, *t.lhs, s), 1, evaluate_term(m, *t.rhs, s));
    case Term::Kind::Sub:
      return point_combine(1, evaluate_term(m, *t.lhs, s), -1, evaluate_term(m, *t.rhs, s));
    case Term::Kind::Scale: return point_combine(t.coeff, evaluate_term(m, *t.lhs, s), 0, Point(m.zero()));
    case Term::Kind::Val:
      if (!m.is_hamel()) throw DomainError("v(...) is not available in a plain model");
      return valuate(m, evaluate_term(m, *t.lhs, s));
  }
  return Point(m.zero());
}

bool evaluate_qf(const Model& m, const Formula& f, const Assignment& s) {
  return walk(f, [&](const Formula& a) {
    if (a.kind != Formula::Kind::Eq && a.order >= m.order_count())
      throw DomainError("order index " + std::to_string(a.order) + " out of range");
    const Point x = evaluate_term(m, *a.lhs, s);
    const Point y = evaluate_term(m, *a.rhs, s);
    if (a.kind == Formula::Kind::Eq) return x == y;
    return decide(a.kind, compare(m, x, y, a.order));
  });
}

// --- oracle -----------------------------------------------------------------------

namespace {

using oracle::LeadPoint;
using oracle::LeadVector;

LeadPoint lead_combine(const Scalar& c1, const LeadPoint& x, const Scalar& c2, const LeadPoint& y) {
  if (x.infinite || y.infinite) return LeadPoint::inf();
  return {false, c1 * x.v + c2 * y.v};
}

bool is_basis_name(const std::string& n) {
  return n.size() >= 2 && n[0] == 'e' && n.find_first_not_of("0123456789", 1) == std::string::npos;
}

}  // namespace

LeadPoint evaluate_term(const OracleStructure& o, const Term& t, const LeadAssignment& s) {
  switch (t.kind) {
    case Term::Kind::Zero: return {};
    case Term::Kind::Inf: return LeadPoint::inf();
    case Term::Kind::Var: {
      if (auto it = s.find(t.name); it != s.end()) return it->second;
      if (is_basis_name(t.name)) return {false, LeadVector::basis(Scalar::parse(t.name.substr(1)))};
      throw DomainError("unbound variable '" + t.name + "'");
    }
    case Term::Kind::Add: return lead_combine(1, evaluate_term(o, *t.lhs, s), 1, evaluate_term(o, *t.rhs, s));
    case Term::Kind::Sub: return lead_combine(1, evaluate_term(o, *t.lhs, s), -1, evaluate_term(o, *t.rhs, s));
    case Term::Kind::Scale: return lead_combine(t.coeff, evaluate_term(o, *t.lhs, s), 0, {});
    case Term::Kind::Val: return oracle::lead_valuate(evaluate_term(o, *t.lhs, s));
  }
  return {};
}

bool evaluate_qf(const OracleStructure& o, const Formula& f, const LeadAssignment& s) {
  return walk(f, [&](const Formula& a) {
    const LeadPoint x = evaluate_term(o, *a.lhs, s);
    const LeadPoint y = evaluate_term(o, *a.rhs, s);
    if (a.kind == Formula::Kind::Eq) return x == y;
    if (a.order == 0) return decide(a.kind, oracle::lead_value_compare(x, y));
    if (a.order != 1) throw DomainError("order index " + std::to_string(a.order) + " out of range");
    Ordering c;
    if (x.infinite || y.infinite) {
      c = to_ordering((x.infinite ? 1 : 0) - (y.infinite ? 1 : 0));
    } else {
      c = to_ordering(-static_cast<int>(oracle::lead_sign1(y.v - x.v)));
    }
    return decide(a.kind, c);
  });
}

}  // namespace hamel::logic
