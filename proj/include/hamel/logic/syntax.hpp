#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "hamel/scalar.hpp"

namespace hamel::logic {

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Term {
  enum class Kind { Zero, Inf, Var, Add, Sub, Scale, Val };

  Kind kind = Kind::Zero;
  std::string name;  // Var
  Scalar coeff;      // Scale
  TermPtr lhs;       // Add, Sub, Scale, Val
  TermPtr rhs;       // Add, Sub
  std::size_t pos = 0;  // source column, 0 when built in code
};

TermPtr t_zero();
TermPtr t_inf();
TermPtr t_var(std::string name);
TermPtr t_add(TermPtr a, TermPtr b);
TermPtr t_sub(TermPtr a, TermPtr b);
TermPtr t_scale(Scalar c, TermPtr a);
TermPtr t_val(TermPtr a);

struct Formula {
  enum class Kind { True, False, Eq, Lt, Le, Not, And, Or, Implies, Exists, Forall };

  Kind kind = Kind::True;
  int order = 0;       // Lt, Le
  TermPtr lhs, rhs;    // atoms
  FormulaPtr a, b;     // connectives; quantifier body in a
  std::string var;     // quantifiers
  std::size_t pos = 0;

  bool is_atom() const { return kind == Kind::Eq || kind == Kind::Lt || kind == Kind::Le; }
  bool is_quantifier() const { return kind == Kind::Exists || kind == Kind::Forall; }
};

FormulaPtr f_true();
FormulaPtr f_false();
FormulaPtr f_eq(TermPtr a, TermPtr b);
FormulaPtr f_lt(int order, TermPtr a, TermPtr b);
FormulaPtr f_le(int order, TermPtr a, TermPtr b);
FormulaPtr f_not(FormulaPtr a);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr f_exists(std::string var, FormulaPtr body);
FormulaPtr f_forall(std::string var, FormulaPtr body);

/// Structural equality, ignoring source positions.
bool same(const Term& a, const Term& b);
bool same(const Formula& a, const Formula& b);

/// Canonical text. print_formula(parse_formula(s)) == s for canonical s.
std::string print_term(const Term& t);
std::string print_formula(const Formula& f);

TermPtr parse_term(std::string_view text);
FormulaPtr parse_formula(std::string_view text);

std::set<std::string> free_vars(const Formula& f);
void collect_vars(const Term& t, std::set<std::string>& out);
bool is_quantifier_free(const Formula& f);
bool mentions_val(const Term& t);
bool mentions_val(const Formula& f);
int quantifier_count(const Formula& f);

/// Well-formedness against a target: order indices below `orders`, and `v`
/// only when `allow_val`. Throws ParseError at the offending position.
void check_formula(const Formula& f, int orders, bool allow_val);
void check_term(const Term& t, bool allow_val);

}  // namespace hamel::logic
