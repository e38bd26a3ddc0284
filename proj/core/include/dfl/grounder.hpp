#pragma once

#include <string>
#include <vector>

#include "dfl/theory.hpp"

namespace dfl {

/// Constants occurring anywhere in the theory, sorted and unique.
std::vector<std::string> constantsOf(const Theory& theory);

/// Variables of a rule in order of first occurrence (antecedent, then head).
std::vector<std::string> variablesOf(const Rule& rule);

/// Replaces every rule that has variables with one instance per substitution
/// of its variables by constants of the theory. Ground rules keep their label;
/// an instance of rule `r` with X=a, Y=b is labelled `r__X_a__Y_b`.
/// Superiority between two rules is replicated to every pair of their
/// instances. The result is re-validated, so a label clash or a cycle throws
/// TheoryError.
Theory ground(const Theory& theory);

}  // namespace dfl
