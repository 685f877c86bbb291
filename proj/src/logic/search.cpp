#include "hamel/logic/search.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hamel/error.hpp"
#include "hamel/logic/linear_form.hpp"

namespace hamel::logic {

namespace {

// Linear form s - t of an atom together with the orders in which its
// sign matters.
struct Crit {
  std::map<std::string, Scalar> coeffs;
  std::set<int> orders;
};

void scale_to_monic(Crit& c) {
  if (c.coeffs.empty()) return;
  const Scalar lead = c.coeffs.begin()->second.inverse();
  for (auto& kv : c.coeffs) kv.second *= lead;
}

void add_crit(std::vector<Crit>& out, Crit c) {
  if (c.coeffs.empty()) return;
  scale_to_monic(c);
  for (Crit& o : out) {
    if (o.coeffs == c.coeffs) {
      o.orders.insert(c.orders.begin(), c.orders.end());
      return;
    }
  }
  out.push_back(std::move(c));
}

class Searcher {
 public:
  explicit Searcher(int orders) : k_(orders) {}

  bool eval(const Model& m, const Formula& f, Assignment& s) {
    using K = Formula::Kind;
    switch (f.kind) {
      case K::True: return true;
      case K::False: return false;
      case K::Eq:
      case K::Lt:
      case K::Le: return evaluate_qf(m, f, s);
      case K::Not: return !eval(m, *f.a, s);
      case K::And: return eval(m, *f.a, s) && eval(m, *f.b, s);
      case K::Or: return eval(m, *f.a, s) || eval(m, *f.b, s);
      case K::Implies: return !eval(m, *f.a, s) || eval(m, *f.b, s);
      case K::Exists: return quantifier(m, f, s, true);
      case K::Forall: return !quantifier(m, f, s, false);
    }
    return false;
  }

 private:
  // Searches for x with body == want_true (exists) or body false (forall).
  bool quantifier(const Model& m, const Formula& q, Assignment& s, bool want_true) {
    const std::string& x = q.var;
    const std::optional<Point> saved = s.contains(x) ? std::optional<Point>(s.at(x)) : std::nullopt;
    auto hit = [&](const Model& mm, const Point& p) {
      s[x] = p;
      return eval(mm, *q.a, s) == want_true;
    };
    auto restore = [&] {
      if (saved) {
        s[x] = *saved;
      } else {
        s.erase(x);
      }
    };

    // Critical points, computed with the outer bindings.
    std::vector<Vector> points;
    std::vector<std::vector<Vector>> per_order(static_cast<std::size_t>(k_));
    for (const Crit& c : closure(q)) {
      auto it = c.coeffs.find(x);
      if (it == c.coeffs.end()) continue;
      Vector rest = m.zero();
      bool infinite = false;
      for (const auto& [v, coeff] : c.coeffs) {
        if (v == x) continue;
        Point p = value_of(m, v, s);
        if (p.is_infinite()) {
          infinite = true;
          break;
        }
        rest = rest + coeff * m.adopt(p.vector());
      }
      if (infinite) continue;
      Vector point = (-it->second.inverse()) * rest;
      if (std::find(points.begin(), points.end(), point) == points.end()) points.push_back(point);
      for (int o : c.orders) {
        auto& list = per_order[static_cast<std::size_t>(o)];
        if (std::find(list.begin(), list.end(), point) == list.end()) list.push_back(point);
      }
    }

    bool found = hit(m, Point::infinity());
    for (std::size_t i = 0; !found && i < points.size(); ++i) found = hit(m, Point(points[i]));

    if (!found) {
      std::vector<std::vector<Interval>> cells(static_cast<std::size_t>(k_));
      for (int o = 0; o < k_; ++o) {
        auto& list = per_order[static_cast<std::size_t>(o)];
        std::sort(list.begin(), list.end(), [&](const Vector& a, const Vector& b) { return sign(m, b - a, o) > 0; });
        Bound lo = Bound::minus_infinity();
        for (const Vector& p : list) {
          cells[static_cast<std::size_t>(o)].push_back({lo, p});
          lo = p;
        }
        cells[static_cast<std::size_t>(o)].push_back({lo, Bound::plus_infinity()});
      }
      std::vector<std::size_t> pick(static_cast<std::size_t>(k_), 0);
      for (;;) {
        std::vector<Interval> ivs;
        for (int o = 0; o < k_; ++o) ivs.push_back(cells[static_cast<std::size_t>(o)][pick[static_cast<std::size_t>(o)]]);
        Witness w = independence_witness(m, std::span<const Interval>(ivs));
        if (hit(w.model, Point(w.element))) {
          found = true;
          break;
        }
        std::size_t o = 0;
        while (o < pick.size() && ++pick[o] == cells[o].size()) pick[o++] = 0;
        if (o == pick.size()) break;
      }
    }
    restore();
    return found;
  }

  static Point value_of(const Model& m, const std::string& v, const Assignment& s) {
    if (auto it = s.find(v); it != s.end()) return it->second;
    if (auto g = m.find(v)) return Point(m.gen(*g));
    throw DomainError("unbound variable '" + v + "'");
  }

  // Critical forms of a quantifier's body with every inner bound variable
  // eliminated by pairwise cancellation, innermost first.
  const std::vector<Crit>& closure(const Formula& q) {
    if (auto it = cache_.find(&q); it != cache_.end()) return it->second;
    std::vector<Crit> forms;
    collect_atoms(*q.a, forms);
    std::vector<std::string> inner;
    inner_vars(*q.a, inner);
    for (const std::string& y : inner) {
      std::vector<Crit> next;
      std::vector<const Crit*> with_y;
      for (const Crit& c : forms) {
        if (c.coeffs.contains(y)) {
          with_y.push_back(&c);
        } else {
          add_crit(next, c);
        }
      }
      for (std::size_t i = 0; i < with_y.size(); ++i)
        for (std::size_t j = i + 1; j < with_y.size(); ++j) {
          const Crit& a = *with_y[i];
          const Crit& b = *with_y[j];
          std::set<int> tags;
          std::set_intersection(a.orders.begin(), a.orders.end(), b.orders.begin(), b.orders.end(),
                                std::inserter(tags, tags.begin()));
          if (tags.empty()) continue;
          const Scalar ca = a.coeffs.at(y), cb = b.coeffs.at(y);
          Crit comb;
          comb.orders = tags;
          for (const auto& [v, c] : a.coeffs) comb.coeffs[v] += cb * c;
          for (const auto& [v, c] : b.coeffs) comb.coeffs[v] -= ca * c;
          std::erase_if(comb.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
          add_crit(next, std::move(comb));
        }
      forms = std::move(next);
    }
    return cache_.emplace(&q, std::move(forms)).first->second;
  }

  void collect_atoms(const Formula& f, std::vector<Crit>& out) const {
    if (f.is_atom()) {
      const LinearForm l = normalize_term(*f.lhs), r = normalize_term(*f.rhs);
      if (l.inf || r.inf) return;
      Crit c;
      c.coeffs = combine(1, l, -1, r).coeffs;
      if (f.kind == Formula::Kind::Eq) {
        // equalities substitute into every order and their negations
        // split in order 0
        for (int o = 0; o < k_; ++o) c.orders.insert(o);
      } else {
        c.orders.insert(f.order);
      }
      add_crit(out, std::move(c));
      return;
    }
    if (f.a) collect_atoms(*f.a, out);
    if (f.b) collect_atoms(*f.b, out);
  }

  // Bound variables of f in post-order (innermost first).
  static void inner_vars(const Formula& f, std::vector<std::string>& out) {
    if (f.a) inner_vars(*f.a, out);
    if (f.b) inner_vars(*f.b, out);
    if (f.is_quantifier()) out.push_back(f.var);
  }

  int k_;
  std::map<const Formula*, std::vector<Crit>> cache_;
};

// Gives every quantifier a distinct variable that cannot clash with free
// variables or generator names.
FormulaPtr rename_apart(const Formula& f, std::map<std::string, std::string>& env, int& counter);

TermPtr rename_term(const Term& t, const std::map<std::string, std::string>& env) {
  switch (t.kind) {
    case Term::Kind::Var: {
      auto it = env.find(t.name);
      return t_var(it == env.end() ? t.name : it->second);
    }
    case Term::Kind::Add: return t_add(rename_term(*t.lhs, env), rename_term(*t.rhs, env));
    case Term::Kind::Sub: return t_sub(rename_term(*t.lhs, env), rename_term(*t.rhs, env));
    case Term::Kind::Scale: return t_scale(t.coeff, rename_term(*t.lhs, env));
    case Term::Kind::Val: return t_val(rename_term(*t.lhs, env));
    default: return std::make_shared<const Term>(t);
  }
}

FormulaPtr rename_apart(const Formula& f, std::map<std::string, std::string>& env, int& counter) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::True:
    case K::False: return std::make_shared<const Formula>(f);
    case K::Eq: return f_eq(rename_term(*f.lhs, env), rename_term(*f.rhs, env));
    case K::Lt: return f_lt(f.order, rename_term(*f.lhs, env), rename_term(*f.rhs, env));
    case K::Le: return f_le(f.order, rename_term(*f.lhs, env), rename_term(*f.rhs, env));
    case K::Not: return f_not(rename_apart(*f.a, env, counter));
    case K::And: return f_and(rename_apart(*f.a, env, counter), rename_apart(*f.b, env, counter));
    case K::Or: return f_or(rename_apart(*f.a, env, counter), rename_apart(*f.b, env, counter));
    case K::Implies: return f_implies(rename_apart(*f.a, env, counter), rename_apart(*f.b, env, counter));
    case K::Exists:
    case K::Forall: {
      const std::string fresh = "%q" + std::to_string(++counter);
      auto old = env.find(f.var);
      const std::optional<std::string> prev = old == env.end() ? std::nullopt : std::optional(old->second);
      env[f.var] = fresh;
      FormulaPtr body = rename_apart(*f.a, env, counter);
      if (prev) {
        env[f.var] = *prev;
      } else {
        env.erase(f.var);
      }
      return f.kind == K::Exists ? f_exists(fresh, body) : f_forall(fresh, body);
    }
  }
  return nullptr;
}

}  // namespace

bool evaluate_by_search(const Model& m, const Formula& f, const Assignment& s) {
  if (m.is_hamel()) throw ModeError("witness search needs a plain model");
  if (mentions_val(f)) throw DomainError("witness search is only available without v(...)");
  std::map<std::string, std::string> env;
  int counter = 0;
  FormulaPtr g = rename_apart(f, env, counter);
  Assignment work = s;
  return Searcher(m.order_count()).eval(m, *g, work);
}

}  // namespace hamel::logic
