#include "hamel/logic/qe.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamel/error.hpp"
#include "hamel/logic/linear_form.hpp"

namespace hamel::logic {

namespace {

// Literal of the internal DNF. Lower/Upper/Equal are bounds on the variable
// under elimination and only live inside exists().
struct Lit {
  enum class Kind { Eq, Lt, Le, IsInf, Fin, Lower, Upper, Equal };

  Kind kind;
  int order = 0;
  LinearForm lhs, rhs;  // bounds keep their term in lhs
  std::string var;      // IsInf, Fin
  std::string key;

  void finish() {
    int group = 0;
    std::string text;
    switch (kind) {
      case Kind::Eq: text = print_form(lhs) + " = " + print_form(rhs); break;
      case Kind::Lt: text = print_form(lhs) + " <" + std::to_string(order) + " " + print_form(rhs); break;
      case Kind::Le: text = print_form(lhs) + " <=" + std::to_string(order) + " " + print_form(rhs); break;
      case Kind::IsInf: group = 1; text = var; break;
      case Kind::Fin: group = 2; text = var; break;
      case Kind::Lower: group = 3; text = std::to_string(order) + ">" + print_form(lhs); break;
      case Kind::Upper: group = 3; text = std::to_string(order) + "<" + print_form(lhs); break;
      case Kind::Equal: group = 3; text = "=" + print_form(lhs); break;
    }
    key = std::to_string(group) + text;
  }

  bool mentions(const std::string& v) const {
    if (kind == Kind::IsInf || kind == Kind::Fin) return var == v;
    return lhs.mentions(v) || rhs.mentions(v);
  }

  friend bool operator<(const Lit& a, const Lit& b) { return a.key < b.key; }
  friend bool operator==(const Lit& a, const Lit& b) { return a.key == b.key; }
};

using Clause = std::vector<Lit>;  // sorted, unique
using Dnf = std::vector<Clause>;

const Dnf kTrue{Clause{}};
const Dnf kFalse{};

Lit make_atom(Lit::Kind kind, int order, LinearForm a, LinearForm b) {
  if (kind == Lit::Kind::Eq) {
    order = 0;
    if (b < a) std::swap(a, b);
  }
  Lit l{kind, order, std::move(a), std::move(b)};
  l.finish();
  return l;
}

Lit make_guard(Lit::Kind kind, std::string var) {
  Lit l{kind};
  l.var = std::move(var);
  l.finish();
  return l;
}

Lit make_bound(Lit::Kind kind, int order, LinearForm e) {
  Lit l{kind, kind == Lit::Kind::Equal ? 0 : order, std::move(e)};
  l.finish();
  return l;
}

Dnf single(Lit l) { return Dnf{Clause{std::move(l)}}; }

// --- clause algebra ---------------------------------------------------------------

Dnf dnf_or(Dnf a, const Dnf& b);
Dnf dnf_and(const Dnf& a, const Dnf& b);
Dnf simplify(Dnf d);

bool complementary(const Lit& a, const Lit& b) {
  using K = Lit::Kind;
  if (a.kind == K::IsInf && b.kind == K::Fin) return a.var == b.var;
  if (a.kind == K::Fin && b.kind == K::IsInf) return a.var == b.var;
  if (a.kind == K::Lt && b.kind == K::Le) return a.order == b.order && a.lhs == b.rhs && a.rhs == b.lhs;
  if (a.kind == K::Le && b.kind == K::Lt) return complementary(b, a);
  return false;
}

bool contradictory(const Lit& a, const Lit& b) {
  using K = Lit::Kind;
  if (complementary(a, b)) return true;
  if (a.kind == K::Lt && b.kind == K::Lt) return a.order == b.order && a.lhs == b.rhs && a.rhs == b.lhs;
  auto lt_eq = [](const Lit& lt, const Lit& eq) {
    return lt.kind == K::Lt && eq.kind == K::Eq &&
           ((lt.lhs == eq.lhs && lt.rhs == eq.rhs) || (lt.lhs == eq.rhs && lt.rhs == eq.lhs));
  };
  return lt_eq(a, b) || lt_eq(b, a);
}

Dnf fin(const LinearForm& f) {
  if (f.inf) return kFalse;
  Clause c;
  for (const auto& v : f.occurs) c.push_back(make_guard(Lit::Kind::Fin, v));
  std::sort(c.begin(), c.end());
  return Dnf{c};
}

Dnf is_inf(const LinearForm& f) {
  if (f.inf) return kTrue;
  Dnf out;
  for (const auto& v : f.occurs) out.push_back(Clause{make_guard(Lit::Kind::IsInf, v)});
  return out;
}

// Truth of an atom whose sides may be infinite; infinity sits on top of
// every order.
Dnf fold_atom(Lit::Kind kind, int order, const LinearForm& s, const LinearForm& t) {
  using K = Lit::Kind;
  if (s.inf && t.inf) return kind == K::Lt ? kFalse : kTrue;
  if (s.inf) return kind == K::Lt ? kFalse : is_inf(t);
  if (t.inf) {
    if (kind == K::Lt) return fin(s);
    if (kind == K::Le) return kTrue;
    return is_inf(s);
  }
  if (s == t) return kind == K::Lt ? kFalse : kTrue;
  return single(make_atom(kind, order, s, t));
}

Dnf fold_bound(Lit::Kind kind, int order, const LinearForm& e) {
  if (e.inf) return kind == Lit::Kind::Upper ? kTrue : kFalse;
  return single(make_bound(kind, order, e));
}

Dnf refold(const Lit& l) {
  switch (l.kind) {
    case Lit::Kind::Eq:
    case Lit::Kind::Lt:
    case Lit::Kind::Le: return fold_atom(l.kind, l.order, l.lhs, l.rhs);
    case Lit::Kind::Lower:
    case Lit::Kind::Upper:
    case Lit::Kind::Equal: return fold_bound(l.kind, l.order, l.lhs);
    default: return single(l);
  }
}

Lit substituted(const Lit& l, const std::string& x, const LinearForm& e) {
  Lit out = l;
  out.lhs = substitute(l.lhs, x, e);
  out.rhs = substitute(l.rhs, x, e);
  return out;
}

// Normalizes one clause into a DNF: drops contradictions and propagates
// x = inf into the other literals.
Dnf normalize_clause(Clause c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (contradictory(c[i], c[j])) return kFalse;
  for (const Lit& g : c) {
    if (g.kind != Lit::Kind::IsInf) continue;
    const bool used = std::any_of(c.begin(), c.end(), [&](const Lit& l) {
      return l.kind != Lit::Kind::IsInf && l.kind != Lit::Kind::Fin && l.mentions(g.var);
    });
    if (!used) continue;
    Dnf acc = single(g);
    for (const Lit& l : c) {
      if (&l == &g) continue;
      acc = dnf_and(acc, l.mentions(g.var) && l.kind != Lit::Kind::Fin
                             ? refold(substituted(l, g.var, LinearForm::infinity()))
                             : single(l));
      if (acc.empty()) return kFalse;
    }
    return acc;
  }
  return Dnf{c};
}

bool subset(const Clause& a, const Clause& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// Guard Fin(v) is implied by a strict inequality with v on the smaller side.
Clause drop_implied_guards(Clause c) {
  Clause out;
  for (const Lit& l : c) {
    if (l.kind == Lit::Kind::Fin) {
      const bool implied = std::any_of(c.begin(), c.end(), [&](const Lit& o) {
        return o.kind == Lit::Kind::Lt && o.lhs.mentions(l.var) && !o.lhs.inf;
      });
      if (implied) continue;
    }
    out.push_back(l);
  }
  return out;
}

Dnf simplify(Dnf d) {
  Dnf work;
  for (Clause& c : d)
    for (Clause& n : normalize_clause(std::move(c))) work.push_back(drop_implied_guards(std::move(n)));
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(work.begin(), work.end(), [](const Clause& a, const Clause& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    work.erase(std::unique(work.begin(), work.end()), work.end());
    Dnf kept;
    for (Clause& c : work) {
      const bool subsumed = std::any_of(kept.begin(), kept.end(), [&](const Clause& k) { return subset(k, c); });
      if (!subsumed) kept.push_back(std::move(c));
    }
    work = std::move(kept);
    // (D & l) | (D & ~l)  ->  D
    for (std::size_t i = 0; i < work.size() && !changed; ++i) {
      for (std::size_t j = 0; j < work.size() && !changed; ++j) {
        if (i == j || work[i].size() != work[j].size()) continue;
        for (std::size_t k = 0; k < work[i].size() && !changed; ++k) {
          for (std::size_t l = 0; l < work[j].size() && !changed; ++l) {
            if (!complementary(work[i][k], work[j][l])) continue;
            Clause ra = work[i], rb = work[j];
            ra.erase(ra.begin() + static_cast<long>(k));
            rb.erase(rb.begin() + static_cast<long>(l));
            if (ra != rb) continue;
            const std::size_t hi = std::max(i, j), lo = std::min(i, j);
            work.erase(work.begin() + static_cast<long>(hi));
            work[lo] = ra;
            changed = true;
          }
        }
      }
    }
  }
  return work;
}

Dnf dnf_or(Dnf a, const Dnf& b) {
  a.insert(a.end(), b.begin(), b.end());
  return simplify(std::move(a));
}

Dnf dnf_and(const Dnf& a, const Dnf& b) {
  Dnf out;
  for (const Clause& x : a)
    for (const Clause& y : b) {
      Clause c = x;
      c.insert(c.end(), y.begin(), y.end());
      out.push_back(std::move(c));
    }
  return simplify(std::move(out));
}

Dnf negate_lit(const Lit& l) {
  using K = Lit::Kind;
  switch (l.kind) {
    case K::Lt: return fold_atom(K::Le, l.order, l.rhs, l.lhs);
    case K::Le: return fold_atom(K::Lt, l.order, l.rhs, l.lhs);
    case K::Eq: return dnf_or(fold_atom(K::Lt, 0, l.lhs, l.rhs), fold_atom(K::Lt, 0, l.rhs, l.lhs));
    case K::IsInf: return single(make_guard(K::Fin, l.var));
    case K::Fin: return single(make_guard(K::IsInf, l.var));
    default: throw Error("internal: negating a bound");
  }
}

Dnf negate(const Dnf& d) {
  Dnf acc = kTrue;
  for (const Clause& c : d) {
    Dnf alt = kFalse;
    for (const Lit& l : c) alt = dnf_or(std::move(alt), negate_lit(l));
    acc = dnf_and(acc, alt);
    if (acc.empty()) break;
  }
  return acc;
}

// --- elimination --------------------------------------------------------------------

std::optional<Scalar> pure_multiple(const LinearForm& f, const std::string& x) {
  if (f.inf || f.occurs.size() != 1 || !f.occurs.contains(x)) return std::nullopt;
  Scalar c = f.coeff(x);
  if (c.is_zero()) return std::nullopt;
  return c;
}

LinearForm scaled(const LinearForm& f, const Scalar& k) { return combine(k, f, 0, LinearForm{}); }

LinearForm without(const LinearForm& f, const std::string& x) {
  LinearForm out = f;
  out.coeffs.erase(x);
  out.occurs.erase(x);
  return out;
}

LinearForm coefficients_only(LinearForm f) {
  f.occurs.clear();
  for (const auto& kv : f.coeffs) f.occurs.insert(kv.first);
  return f;
}

Dnf and_all(std::initializer_list<Dnf> parts) {
  Dnf acc = kTrue;
  for (const Dnf& p : parts) {
    acc = dnf_and(acc, p);
    if (acc.empty()) break;
  }
  return acc;
}

// Rewrites a literal mentioning x, under x != inf, into bounds on x and
// x-free literals.
Dnf expand(const Lit& l, const std::string& x) {
  using K = Lit::Kind;
  const LinearForm& s = l.lhs;
  const LinearForm& t = l.rhs;

  // Native shapes: one side is c*x, the other does not mention x. The other
  // side may be infinite, which the bound semantics handle directly.
  auto ps = pure_multiple(s, x), pt = pure_multiple(t, x);
  const bool cs = !s.mentions(x), ct = !t.mentions(x);
  if (l.kind == K::Eq) {
    if (ps && ct) return single(make_bound(K::Equal, 0, scaled(t, ps->inverse())));
    if (pt && cs) return single(make_bound(K::Equal, 0, scaled(s, pt->inverse())));
  } else {
    const bool weak = l.kind == K::Le;
    if (pt && pt->sign() > 0 && cs) {
      LinearForm e = scaled(s, pt->inverse());
      Dnf d = single(make_bound(K::Lower, l.order, e));
      return weak ? dnf_or(d, single(make_bound(K::Equal, 0, e))) : d;
    }
    if (ps && ps->sign() > 0 && ct) {
      LinearForm e = scaled(t, ps->inverse());
      Dnf d = single(make_bound(K::Upper, l.order, e));
      return weak ? dnf_or(d, single(make_bound(K::Equal, 0, e))) : d;
    }
  }

  // General shape: split on finiteness of both sides, then solve the
  // linear relation among finite values.
  const LinearForm s0 = without(s, x), t0 = without(t, x);
  const Dnf fs = fin(s0), ft = fin(t0), is = is_inf(s0), it = is_inf(t0);
  const LinearForm d = combine(1, s, -1, t);
  const Scalar a = d.coeff(x);
  const LinearForm r = coefficients_only(without(d, x));
  const LinearForm sol = a.is_zero() ? LinearForm{} : scaled(r, -a.inverse());

  auto strict = [&]() -> Dnf {
    Dnf lin;
    if (a.is_zero()) {
      lin = fold_atom(K::Lt, l.order, coefficients_only(without(s, x)), coefficients_only(without(t, x)));
    } else {
      lin = single(make_bound(a.sign() > 0 ? K::Upper : K::Lower, l.order, sol));
    }
    return dnf_or(and_all({fs, it}), and_all({fs, ft, lin}));
  };
  auto equal = [&]() -> Dnf {
    Dnf lin;
    if (a.is_zero()) {
      lin = fold_atom(K::Eq, 0, coefficients_only(without(s, x)), coefficients_only(without(t, x)));
    } else {
      lin = single(make_bound(K::Equal, 0, sol));
    }
    return dnf_or(and_all({is, it}), and_all({fs, ft, lin}));
  };
  switch (l.kind) {
    case K::Lt: return strict();
    case K::Eq: return equal();
    default: return dnf_or(strict(), equal());
  }
}

// Eliminates x from a conjunction of bounds (x finite).
Dnf eliminate_bounds(const std::vector<Lit>& bounds) {
  using K = Lit::Kind;
  auto eq = std::find_if(bounds.begin(), bounds.end(), [](const Lit& b) { return b.kind == K::Equal; });
  Dnf acc = kTrue;
  if (eq != bounds.end()) {
    const LinearForm& e = eq->lhs;
    acc = fin(e);
    for (const Lit& b : bounds) {
      if (&b == &*eq) continue;
      Dnf part;
      if (b.kind == K::Lower) part = fold_atom(K::Lt, b.order, b.lhs, e);
      if (b.kind == K::Upper) part = fold_atom(K::Lt, b.order, e, b.lhs);
      if (b.kind == K::Equal) part = fold_atom(K::Eq, 0, e, b.lhs);
      acc = dnf_and(acc, part);
      if (acc.empty()) return acc;
    }
    return acc;
  }
  for (const Lit& lo : bounds) {
    if (lo.kind != K::Lower) continue;
    bool has_upper = false;
    for (const Lit& up : bounds) {
      if (up.kind != K::Upper || up.order != lo.order) continue;
      has_upper = true;
      acc = dnf_and(acc, fold_atom(K::Lt, lo.order, lo.lhs, up.lhs));
      if (acc.empty()) return acc;
    }
    if (!has_upper) acc = dnf_and(acc, fin(lo.lhs));
    if (acc.empty()) return acc;
  }
  return acc;
}

bool is_bound(const Lit& l) {
  return l.kind == Lit::Kind::Lower || l.kind == Lit::Kind::Upper || l.kind == Lit::Kind::Equal;
}

Dnf exists(const std::string& x, const Dnf& body) {
  using K = Lit::Kind;
  Dnf result = kFalse;
  for (const Clause& c : body) {
    // x = inf
    Dnf at_inf = kTrue;
    for (const Lit& l : c) {
      Dnf part;
      if (l.kind == K::IsInf && l.var == x) {
        part = kTrue;
      } else if (l.kind == K::Fin && l.var == x) {
        part = kFalse;
      } else if (l.mentions(x)) {
        part = refold(substituted(l, x, LinearForm::infinity()));
      } else {
        part = single(l);
      }
      at_inf = dnf_and(at_inf, part);
      if (at_inf.empty()) break;
    }
    result = dnf_or(std::move(result), at_inf);

    // x finite
    Dnf finite = kTrue;
    for (const Lit& l : c) {
      Dnf part;
      if (l.kind == K::IsInf && l.var == x) {
        part = kFalse;
      } else if (l.kind == K::Fin && l.var == x) {
        part = kTrue;
      } else if (l.mentions(x)) {
        part = expand(l, x);
      } else {
        part = single(l);
      }
      finite = dnf_and(finite, part);
      if (finite.empty()) break;
    }
    for (const Clause& fc : finite) {
      std::vector<Lit> bounds;
      Clause rest;
      for (const Lit& l : fc) (is_bound(l) ? bounds : rest).push_back(l);
      result = dnf_or(std::move(result), dnf_and(Dnf{rest}, eliminate_bounds(bounds)));
    }
  }
  return result;
}

// --- formula <-> DNF --------------------------------------------------------------------

Lit::Kind atom_kind(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Eq: return Lit::Kind::Eq;
    case Formula::Kind::Lt: return Lit::Kind::Lt;
    default: return Lit::Kind::Le;
  }
}

Dnf to_dnf(const Formula& f, bool negated) {
  using FK = Formula::Kind;
  switch (f.kind) {
    case FK::True: return negated ? kFalse : kTrue;
    case FK::False: return negated ? kTrue : kFalse;
    case FK::Eq:
    case FK::Lt:
    case FK::Le: {
      Dnf d = fold_atom(atom_kind(f.kind), f.order, normalize_term(*f.lhs), normalize_term(*f.rhs));
      return negated ? negate(d) : d;
    }
    case FK::Not: return to_dnf(*f.a, !negated);
    case FK::And:
      return negated ? dnf_or(to_dnf(*f.a, true), to_dnf(*f.b, true))
                     : dnf_and(to_dnf(*f.a, false), to_dnf(*f.b, false));
    case FK::Or:
      return negated ? dnf_and(to_dnf(*f.a, true), to_dnf(*f.b, true))
                     : dnf_or(to_dnf(*f.a, false), to_dnf(*f.b, false));
    case FK::Implies:
      return negated ? dnf_and(to_dnf(*f.a, false), to_dnf(*f.b, true))
                     : dnf_or(to_dnf(*f.a, true), to_dnf(*f.b, false));
    case FK::Exists: {
      Dnf d = exists(f.var, to_dnf(*f.a, false));
      return negated ? negate(d) : d;
    }
    case FK::Forall: {
      // A x. p  ==  !E x. !p
      Dnf d = exists(f.var, to_dnf(*f.a, true));
      return negated ? d : negate(d);
    }
  }
  return kFalse;
}

FormulaPtr lit_formula(const Lit& l) {
  switch (l.kind) {
    case Lit::Kind::Eq: return f_eq(to_term(l.lhs), to_term(l.rhs));
    case Lit::Kind::Lt: return f_lt(l.order, to_term(l.lhs), to_term(l.rhs));
    case Lit::Kind::Le: return f_le(l.order, to_term(l.lhs), to_term(l.rhs));
    case Lit::Kind::IsInf: return f_eq(t_var(l.var), t_inf());
    case Lit::Kind::Fin: return f_not(f_eq(t_var(l.var), t_inf()));
    default: throw Error("internal: bound literal escaped elimination");
  }
}

FormulaPtr to_formula(const Dnf& d) {
  if (d.empty()) return f_false();
  FormulaPtr out;
  for (const Clause& c : d) {
    FormulaPtr conj;
    for (const Lit& l : c) conj = conj ? f_and(conj, lit_formula(l)) : lit_formula(l);
    if (!conj) return f_true();
    out = out ? f_or(out, conj) : conj;
  }
  return out;
}

void check_input(const Formula& f, int orders) {
  if (orders < 1) throw DomainError("need at least one order");
  if (mentions_val(f)) throw DomainError("quantifier elimination is only available without v(...)");
  try {
    check_formula(f, orders, false);
  } catch (const ParseError& e) {
    throw DomainError(e.message());
  }
}

}  // namespace

FormulaPtr qe(const Formula& f, int orders) {
  check_input(f, orders);
  return to_formula(to_dnf(f, false));
}

bool decide_sentence(const Formula& f, int orders) {
  check_input(f, orders);
  if (auto fv = free_vars(f); !fv.empty()) throw DomainError("sentence has free variable '" + *fv.begin() + "'");
  Dnf d = to_dnf(f, false);
  if (d.empty()) return false;
  if (std::any_of(d.begin(), d.end(), [](const Clause& c) { return c.empty(); })) return true;
  throw Error("internal: ground formula did not reduce to a truth value");
}

}  // namespace hamel::logic
