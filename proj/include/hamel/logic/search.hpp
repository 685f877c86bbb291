#pragma once

#include "hamel/logic/eval.hpp"

namespace hamel::logic {

/// Truth of a v-free formula, with quantifiers, in the dense independent
/// extensions of a plain model. Each quantifier is decided by trying
/// finitely many candidates: infinity, every critical point of the linear
/// constraints on the bound variable, and one freshly adjoined witness per
/// combination of open cells between critical points (one cell per order).
/// Exponential; meant as a reference for checking qe.
bool evaluate_by_search(const Model& m, const Formula& f, const Assignment& s);

}  // namespace hamel::logic
