#include "hamel/logic/syntax.hpp"

#include "hamel/error.hpp"
#include "hamel/presentation.hpp"
#include "hamel/text.hpp"

namespace hamel::logic {

using text::Cursor;
using text::Tok;

namespace {

TermPtr make_term(Term t) { return std::make_shared<const Term>(std::move(t)); }
FormulaPtr make_formula(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

}  // namespace

TermPtr t_zero() { return make_term({}); }
TermPtr t_inf() { return make_term({Term::Kind::Inf}); }
TermPtr t_var(std::string name) { return make_term({Term::Kind::Var, std::move(name)}); }
TermPtr t_add(TermPtr a, TermPtr b) { return make_term({Term::Kind::Add, {}, {}, std::move(a), std::move(b)}); }
TermPtr t_sub(TermPtr a, TermPtr b) { return make_term({Term::Kind::Sub, {}, {}, std::move(a), std::move(b)}); }
TermPtr t_scale(Scalar c, TermPtr a) { return make_term({Term::Kind::Scale, {}, std::move(c), std::move(a)}); }
TermPtr t_val(TermPtr a) { return make_term({Term::Kind::Val, {}, {}, std::move(a)}); }

FormulaPtr f_true() { return make_formula({Formula::Kind::True}); }
FormulaPtr f_false() { return make_formula({Formula::Kind::False}); }
FormulaPtr f_eq(TermPtr a, TermPtr b) { return make_formula({Formula::Kind::Eq, 0, std::move(a), std::move(b)}); }
FormulaPtr f_lt(int order, TermPtr a, TermPtr b) {
  return make_formula({Formula::Kind::Lt, order, std::move(a), std::move(b)});
}
FormulaPtr f_le(int order, TermPtr a, TermPtr b) {
  return make_formula({Formula::Kind::Le, order, std::move(a), std::move(b)});
}
FormulaPtr f_not(FormulaPtr a) { return make_formula({Formula::Kind::Not, 0, {}, {}, std::move(a)}); }
FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  return make_formula({Formula::Kind::And, 0, {}, {}, std::move(a), std::move(b)});
}
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  return make_formula({Formula::Kind::Or, 0, {}, {}, std::move(a), std::move(b)});
}
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) {
  return make_formula({Formula::Kind::Implies, 0, {}, {}, std::move(a), std::move(b)});
}
FormulaPtr f_exists(std::string var, FormulaPtr body) {
  return make_formula({Formula::Kind::Exists, 0, {}, {}, std::move(body), {}, std::move(var)});
}
FormulaPtr f_forall(std::string var, FormulaPtr body) {
  return make_formula({Formula::Kind::Forall, 0, {}, {}, std::move(body), {}, std::move(var)});
}

bool same(const Term& a, const Term& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Term::Kind::Zero:
    case Term::Kind::Inf: return true;
    case Term::Kind::Var: return a.name == b.name;
    case Term::Kind::Add:
    case Term::Kind::Sub: return same(*a.lhs, *b.lhs) && same(*a.rhs, *b.rhs);
    case Term::Kind::Scale: return a.coeff == b.coeff && same(*a.lhs, *b.lhs);
    case Term::Kind::Val: return same(*a.lhs, *b.lhs);
  }
  return false;
}

bool same(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Formula::Kind::True:
    case Formula::Kind::False: return true;
    case Formula::Kind::Eq:
    case Formula::Kind::Lt:
    case Formula::Kind::Le: return a.order == b.order && same(*a.lhs, *b.lhs) && same(*a.rhs, *b.rhs);
    case Formula::Kind::Not: return same(*a.a, *b.a);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: return same(*a.a, *b.a) && same(*a.b, *b.b);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: return a.var == b.var && same(*a.a, *b.a);
  }
  return false;
}

// --- printing -------------------------------------------------------------------

namespace {

int term_level(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Add:
    case Term::Kind::Sub: return 1;
    case Term::Kind::Scale: return 2;
    default: return 3;
  }
}

std::string print_term_at(const Term& t, int min_level) {
  std::string out;
  switch (t.kind) {
    case Term::Kind::Zero: out = "0"; break;
    case Term::Kind::Inf: out = "inf"; break;
    case Term::Kind::Var: out = t.name; break;
    case Term::Kind::Add: out = print_term_at(*t.lhs, 1) + " + " + print_term_at(*t.rhs, 2); break;
    case Term::Kind::Sub: out = print_term_at(*t.lhs, 1) + " - " + print_term_at(*t.rhs, 2); break;
    case Term::Kind::Scale: out = t.coeff.to_string() + "*" + print_term_at(*t.lhs, 3); break;
    case Term::Kind::Val: out = "v(" + print_term_at(*t.lhs, 1) + ")"; break;
  }
  if (term_level(t) < min_level) return "(" + out + ")";
  return out;
}

int formula_level(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: return 0;
    default: return 4;
  }
}

std::string print_rel(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Eq: return "=";
    case Formula::Kind::Lt: return "<" + std::to_string(f.order);
    default: return "<=" + std::to_string(f.order);
  }
}

std::string print_at(const Formula& f, bool parens);

std::string operand(const Formula& child, int parent_level, bool right_side) {
  const int cl = formula_level(child);
  bool parens = cl < parent_level || child.is_quantifier();
  if (cl == parent_level) {
    // & and | associate to the left, -> to the right
    const bool right_assoc = parent_level == 1;
    parens = right_assoc ? !right_side : right_side;
  }
  return print_at(child, parens);
}

std::string print_at(const Formula& f, bool parens) {
  std::string out;
  switch (f.kind) {
    case Formula::Kind::True: return "true";
    case Formula::Kind::False: return "false";
    case Formula::Kind::Eq:
    case Formula::Kind::Lt:
    case Formula::Kind::Le: return print_term(*f.lhs) + " " + print_rel(f) + " " + print_term(*f.rhs);
    case Formula::Kind::Not: return "!(" + print_at(*f.a, false) + ")";
    case Formula::Kind::And: out = operand(*f.a, 3, false) + " & " + operand(*f.b, 3, true); break;
    case Formula::Kind::Or: out = operand(*f.a, 2, false) + " | " + operand(*f.b, 2, true); break;
    case Formula::Kind::Implies: out = operand(*f.a, 1, false) + " -> " + operand(*f.b, 1, true); break;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      const int bl = formula_level(*f.a);
      out = std::string(f.kind == Formula::Kind::Exists ? "E " : "A ") + f.var + ". " +
            print_at(*f.a, bl >= 1 && bl <= 3);
      break;
    }
  }
  return parens ? "(" + out + ")" : out;
}

}  // namespace

std::string print_term(const Term& t) { return print_term_at(t, 1); }
std::string print_formula(const Formula& f) { return print_at(f, false); }

// --- parsing --------------------------------------------------------------------

namespace {

bool reserved_word(std::string_view s) { return is_reserved_name(s); }

class Parser {
 public:
  explicit Parser(std::string_view text) : c_(text::lex(text)) {}

  TermPtr whole_term() {
    TermPtr t = term();
    finish();
    return t;
  }

  FormulaPtr whole_formula() {
    if (c_.at(Tok::End)) c_.fail("expected formula");
    FormulaPtr f = formula();
    finish();
    return f;
  }

 private:
  void finish() {
    if (!c_.at(Tok::End)) c_.fail(std::string("unexpected ") + text::describe(c_.peek().kind));
  }

  static TermPtr at(std::size_t pos, Term t) {
    t.pos = pos;
    return make_term(std::move(t));
  }
  static FormulaPtr at(std::size_t pos, Formula f) {
    f.pos = pos;
    return make_formula(std::move(f));
  }

  // term := signed (('+' | '-') signed)*
  TermPtr term() {
    TermPtr acc = signed_term();
    for (;;) {
      const std::size_t pos = c_.peek().pos;
      if (c_.accept(Tok::Plus)) {
        acc = at(pos, {Term::Kind::Add, {}, {}, acc, signed_term()});
      } else if (c_.accept(Tok::Minus)) {
        acc = at(pos, {Term::Kind::Sub, {}, {}, acc, signed_term()});
      } else {
        return acc;
      }
    }
  }

  TermPtr signed_term() {
    const std::size_t pos = c_.peek().pos;
    if (c_.at(Tok::Minus)) {
      c_.next();
      if (c_.at(Tok::Int)) return scaled(pos, true);
      return at(pos, {Term::Kind::Scale, {}, Scalar(-1), factor()});
    }
    if (c_.at(Tok::Int)) return scaled(pos, false);
    return factor();
  }

  TermPtr scaled(std::size_t pos, bool negative) {
    Scalar k = c_.rational();
    if (negative) k = -k;
    if (c_.accept(Tok::Star)) return at(pos, {Term::Kind::Scale, {}, k, factor()});
    if (!k.is_zero()) throw ParseError("a constant term must be 0", pos);
    if (negative) throw ParseError("write 0 without a sign", pos);
    return at(pos, {Term::Kind::Zero});
  }

  TermPtr factor() {
    const text::Token t = c_.peek();
    if (c_.accept(Tok::LParen)) {
      TermPtr inner = term();
      c_.expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Int) {
      const Scalar k = c_.rational();
      if (!k.is_zero()) throw ParseError("a constant term must be 0", t.pos);
      return at(t.pos, {Term::Kind::Zero});
    }
    if (t.kind != Tok::Ident) c_.fail("expected term, found " + std::string(text::describe(t.kind)));
    c_.next();
    if (t.text == "inf") return at(t.pos, {Term::Kind::Inf});
    if (t.text == "v") {
      c_.expect(Tok::LParen, "'(' after v");
      TermPtr inner = term();
      c_.expect(Tok::RParen, "')'");
      return at(t.pos, {Term::Kind::Val, {}, {}, inner});
    }
    if (reserved_word(t.text)) c_.fail_at(t, "'" + t.text + "' is reserved");
    return at(t.pos, {Term::Kind::Var, t.text});
  }

  // formula := or ('->' formula)?
  FormulaPtr formula() {
    FormulaPtr lhs = disjunction();
    const std::size_t pos = c_.peek().pos;
    if (c_.accept(Tok::Arrow)) return at(pos, {Formula::Kind::Implies, 0, {}, {}, lhs, formula()});
    return lhs;
  }

  FormulaPtr disjunction() {
    FormulaPtr acc = conjunction();
    for (;;) {
      const std::size_t pos = c_.peek().pos;
      if (!c_.accept(Tok::Bar)) return acc;
      acc = at(pos, {Formula::Kind::Or, 0, {}, {}, acc, conjunction()});
    }
  }

  FormulaPtr conjunction() {
    FormulaPtr acc = unary();
    for (;;) {
      const std::size_t pos = c_.peek().pos;
      if (!c_.accept(Tok::Amp)) return acc;
      acc = at(pos, {Formula::Kind::And, 0, {}, {}, acc, unary()});
    }
  }

  FormulaPtr unary() {
    const text::Token t = c_.peek();
    if (c_.accept(Tok::Bang)) return at(t.pos, {Formula::Kind::Not, 0, {}, {}, unary()});
    if (t.kind == Tok::Ident && (t.text == "E" || t.text == "A")) {
      c_.next();
      const text::Token v = c_.expect(Tok::Ident, "variable after quantifier");
      if (reserved_word(v.text)) c_.fail_at(v, "'" + v.text + "' is reserved");
      c_.expect(Tok::Dot, "'.' after quantified variable");
      Formula q{t.text == "E" ? Formula::Kind::Exists : Formula::Kind::Forall};
      q.var = v.text;
      q.a = formula();
      return at(t.pos, std::move(q));
    }
    return primary();
  }

  FormulaPtr primary() {
    const text::Token t = c_.peek();
    if (t.kind == Tok::Ident && (t.text == "true" || t.text == "false")) {
      c_.next();
      return at(t.pos, {t.text == "true" ? Formula::Kind::True : Formula::Kind::False});
    }
    if (t.kind != Tok::LParen) return atom();
    // '(' opens either a term on the left of an atom or a formula
    const std::size_t m = c_.mark();
    try {
      return atom();
    } catch (const ParseError& as_atom) {
      c_.reset(m);
      try {
        c_.next();
        FormulaPtr inner = formula();
        c_.expect(Tok::RParen, "')'");
        return inner;
      } catch (const ParseError& as_formula) {
        if (as_atom.position() > as_formula.position()) throw as_atom;
        throw;
      }
    }
  }

  FormulaPtr atom() {
    TermPtr lhs = term();
    const text::Token op = c_.peek();
    Formula f;
    switch (op.kind) {
      case Tok::Eq: f.kind = Formula::Kind::Eq; break;
      case Tok::Less: f.kind = Formula::Kind::Lt; break;
      case Tok::LessEq: f.kind = Formula::Kind::Le; break;
      default: c_.fail("expected '=', '<i' or '<=i', found " + std::string(text::describe(op.kind)));
    }
    if (op.kind != Tok::Eq) {
      if (op.order < 0) c_.fail_at(op, "missing order suffix");
      f.order = op.order;
    }
    c_.next();
    f.lhs = lhs;
    f.rhs = term();
    return at(op.pos, std::move(f));
  }

  Cursor c_;
};

}  // namespace

TermPtr parse_term(std::string_view text) { return Parser(text).whole_term(); }
FormulaPtr parse_formula(std::string_view text) { return Parser(text).whole_formula(); }

// --- queries --------------------------------------------------------------------

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Var) out.insert(t.name);
  if (t.lhs) collect_vars(*t.lhs, out);
  if (t.rhs) collect_vars(*t.rhs, out);
}

namespace {

void free_vars_into(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  if (f.is_atom()) {
    std::set<std::string> vs;
    collect_vars(*f.lhs, vs);
    collect_vars(*f.rhs, vs);
    for (const auto& v : vs)
      if (!bound.contains(v)) out.insert(v);
    return;
  }
  if (f.is_quantifier()) {
    const bool fresh = bound.insert(f.var).second;
    free_vars_into(*f.a, bound, out);
    if (fresh) bound.erase(f.var);
    return;
  }
  if (f.a) free_vars_into(*f.a, bound, out);
  if (f.b) free_vars_into(*f.b, bound, out);
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  free_vars_into(f, bound, out);
  return out;
}

bool is_quantifier_free(const Formula& f) {
  if (f.is_quantifier()) return false;
  return (!f.a || is_quantifier_free(*f.a)) && (!f.b || is_quantifier_free(*f.b));
}

bool mentions_val(const Term& t) {
  if (t.kind == Term::Kind::Val) return true;
  return (t.lhs && mentions_val(*t.lhs)) || (t.rhs && mentions_val(*t.rhs));
}

bool mentions_val(const Formula& f) {
  if (f.is_atom()) return mentions_val(*f.lhs) || mentions_val(*f.rhs);
  return (f.a && mentions_val(*f.a)) || (f.b && mentions_val(*f.b));
}

int quantifier_count(const Formula& f) {
  int n = f.is_quantifier() ? 1 : 0;
  if (f.a) n += quantifier_count(*f.a);
  if (f.b) n += quantifier_count(*f.b);
  return n;
}

void check_term(const Term& t, bool allow_val) {
  if (t.kind == Term::Kind::Val && !allow_val)
    throw ParseError("v(...) is not available in a plain structure", t.pos);
  if (t.lhs) check_term(*t.lhs, allow_val);
  if (t.rhs) check_term(*t.rhs, allow_val);
}

void check_formula(const Formula& f, int orders, bool allow_val) {
  if (f.is_atom()) {
    if (f.kind != Formula::Kind::Eq && f.order >= orders)
      throw ParseError("unknown order suffix " + std::to_string(f.order) + " (the structure has " +
                           std::to_string(orders) + " orders)",
                       f.pos);
    check_term(*f.lhs, allow_val);
    check_term(*f.rhs, allow_val);
    return;
  }
  if (f.a) check_formula(*f.a, orders, allow_val);
  if (f.b) check_formula(*f.b, orders, allow_val);
}

}  // namespace hamel::logic
