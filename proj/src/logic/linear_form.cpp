#include "hamel/logic/linear_form.hpp"

#include "hamel/error.hpp"

namespace hamel::logic {

LinearForm LinearForm::infinity() {
  LinearForm f;
  f.inf = true;
  return f;
}

LinearForm LinearForm::variable(const std::string& name, const Scalar& c) {
  LinearForm f;
  f.occurs.insert(name);
  if (!c.is_zero()) f.coeffs.emplace(name, c);
  return f;
}

Scalar LinearForm::coeff(const std::string& name) const {
  auto it = coeffs.find(name);
  return it == coeffs.end() ? Scalar(0) : it->second;
}

LinearForm combine(const Scalar& c1, const LinearForm& a, const Scalar& c2, const LinearForm& b) {
  if (a.inf || b.inf) return LinearForm::infinity();
  LinearForm out;
  out.occurs = a.occurs;
  out.occurs.insert(b.occurs.begin(), b.occurs.end());
  for (const auto& [v, c] : a.coeffs) {
    Scalar k = c1 * c;
    if (!k.is_zero()) out.coeffs.emplace(v, std::move(k));
  }
  for (const auto& [v, c] : b.coeffs) {
    Scalar k = out.coeff(v) + c2 * c;
    if (k.is_zero()) {
      out.coeffs.erase(v);
    } else {
      out.coeffs[v] = std::move(k);
    }
  }
  return out;
}

LinearForm substitute(const LinearForm& a, const std::string& x, const LinearForm& e) {
  if (a.inf || !a.mentions(x)) return a;
  LinearForm rest = a;
  const Scalar c = rest.coeff(x);
  rest.coeffs.erase(x);
  rest.occurs.erase(x);
  // 0*e still contributes its occurrences
  LinearForm scaled_e = e;
  if (!scaled_e.inf) {
    for (auto it = scaled_e.coeffs.begin(); it != scaled_e.coeffs.end();) {
      it->second *= c;
      it = it->second.is_zero() ? scaled_e.coeffs.erase(it) : std::next(it);
    }
  }
  return combine(1, rest, 1, scaled_e);
}

LinearForm normalize_term(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Zero: return {};
    case Term::Kind::Inf: return LinearForm::infinity();
    case Term::Kind::Var: return LinearForm::variable(t.name);
    case Term::Kind::Add: return combine(1, normalize_term(*t.lhs), 1, normalize_term(*t.rhs));
    case Term::Kind::Sub: return combine(1, normalize_term(*t.lhs), -1, normalize_term(*t.rhs));
    case Term::Kind::Scale: {
      LinearForm inner = normalize_term(*t.lhs);
      return combine(t.coeff, inner, 0, LinearForm{{}, inner.occurs, false});
    }
    case Term::Kind::Val: throw DomainError("v(...) cannot be normalized to a linear form");
  }
  return {};
}

TermPtr to_term(const LinearForm& f) {
  if (f.inf) return t_inf();
  TermPtr acc;
  auto piece = [](const std::string& v, const Scalar& c) {
    return c == Scalar(1) ? t_var(v) : t_scale(c, t_var(v));
  };
  for (const std::string& v : f.occurs) {
    const Scalar c = f.coeff(v);
    if (!acc) {
      acc = piece(v, c);
    } else if (c.sign() < 0) {
      acc = t_sub(acc, piece(v, -c));
    } else {
      acc = t_add(acc, piece(v, c));
    }
  }
  return acc ? acc : t_zero();
}

std::string print_form(const LinearForm& f) { return print_term(*to_term(f)); }

}  // namespace hamel::logic
