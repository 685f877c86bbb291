#pragma once

#include <map>
#include <set>
#include <string>

#include "hamel/logic/syntax.hpp"

namespace hamel::logic {

/// Linear normal form of a v-free term: sum of c_i * x_i, or infinity.
/// `occurs` remembers every variable of the source term, including those
/// whose coefficient cancelled: 0*x is still infinite when x is.
struct LinearForm {
  std::map<std::string, Scalar> coeffs;  // nonzero entries only
  std::set<std::string> occurs;          // superset of the coefficient keys
  bool inf = false;

  static LinearForm infinity();
  static LinearForm variable(const std::string& name, const Scalar& c = Scalar(1));

  Scalar coeff(const std::string& name) const;
  bool mentions(const std::string& name) const { return occurs.contains(name); }
  /// No variables and not infinite: the constant 0.
  bool is_ground_zero() const { return !inf && occurs.empty(); }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend auto operator<=>(const LinearForm& a, const LinearForm& b) {
    if (a.inf != b.inf) return a.inf <=> b.inf;
    if (auto c = a.occurs <=> b.occurs; c != 0) return c;
    return a.coeffs <=> b.coeffs;
  }
};

LinearForm combine(const Scalar& c1, const LinearForm& a, const Scalar& c2, const LinearForm& b);
/// a with variable x replaced by the form e.
LinearForm substitute(const LinearForm& a, const std::string& x, const LinearForm& e);

/// Throws DomainError on a v(...) subterm.
LinearForm normalize_term(const Term& t);
/// Canonical term for a form, e.g. `2*x - y`, `0*x`, `inf`.
TermPtr to_term(const LinearForm& f);
std::string print_form(const LinearForm& f);

}  // namespace hamel::logic
