#pragma once

#include "hamel/logic/syntax.hpp"

namespace hamel::logic {

/// Quantifier elimination for the theory of k independent dense orders on
/// a vector space, with the point at infinity on top of every order.
/// Returns a quantifier-free formula over the free variables of f. Throws
/// DomainError when f mentions v(...) or an order index >= k.
FormulaPtr qe(const Formula& f, int orders);

/// Truth value of a closed formula; the theory is complete, so this is the
/// same in every model. Throws DomainError on free variables.
bool decide_sentence(const Formula& f, int orders);

}  // namespace hamel::logic
