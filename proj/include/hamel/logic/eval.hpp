#pragma once

#include <map>
#include <string>

#include "hamel/logic/syntax.hpp"
#include "hamel/oracle.hpp"
#include "hamel/tower.hpp"

namespace hamel::logic {

/// Variable bindings. Identifiers without a binding resolve to generator
/// names of the model (basis elements e<n> for the oracle).
using Assignment = std::map<std::string, Point>;
using LeadAssignment = std::map<std::string, oracle::LeadPoint>;

/// Tag for the leading-term structure: <_1 by leading sign, v by least
/// index, <_0 only between values.
struct OracleStructure {};

Point evaluate_term(const Model& m, const Term& t, const Assignment& s);
/// Throws DomainError on quantifiers, unbound variables, order indices out
/// of range, and v(...) in a plain model.
bool evaluate_qf(const Model& m, const Formula& f, const Assignment& s);

oracle::LeadPoint evaluate_term(const OracleStructure&, const Term& t, const LeadAssignment& s);
/// As above; <_0 between non-values raises DomainError.
bool evaluate_qf(const OracleStructure&, const Formula& f, const LeadAssignment& s);

}  // namespace hamel::logic
