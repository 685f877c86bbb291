#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hamel/lab/report.hpp"

namespace hamel::lab {

/// axioms, value_independence, value_growth, witness, insertion,
/// trichotomy, pairs, qe
const std::vector<std::string>& suite_names();
/// Trial count used when SuiteConfig::trials is 0.
std::size_t default_trials(std::string_view suite);

/// Dispatches on cfg.suite; throws DomainError for an unknown name.
Report run_suite(const SuiteConfig& cfg);

/// Hamel axioms, order compatibility and valuate agreement on
/// `axiom_models` random towers with cfg.trials samples each, plus the same
/// axioms in the leading-term structure.
Report run_axiom_suite(const SuiteConfig& cfg);
/// valuate of a combination of distinct generator values is their <_0-min.
Report run_value_independence(const SuiteConfig& cfg);
/// #(v(G0 + C c_1 + ... + C c_m) \ v(G0)) <= m, with forced boundary cases.
Report run_value_growth(const SuiteConfig& cfg);
/// Postconditions and conservativity of the four witness constructions.
Report run_witness_suite(const SuiteConfig& cfg);
/// Insertion lemmas on 5 + 1 + 5 surrogate sequences; cfg.trials per pattern.
Report run_insertion_suite(const SuiteConfig& cfg);
/// Clause shapes of a term evaluated along sequences of values.
Report run_trichotomy(const SuiteConfig& cfg);
/// Value-set / generalized-ball predicates, value gap and the discrete set.
Report run_pair_suite(const SuiteConfig& cfg);
/// qe against witness search, idempotence and completeness across models.
Report run_qe_suite(const SuiteConfig& cfg);

inline constexpr std::size_t axiom_models = 50;

}  // namespace hamel::lab
