#pragma once

#include <utility>
#include <vector>

#include "qweyl/polynomial.hpp"

namespace qweyl {

// All rational roots of p with multiplicities, sorted ascending by value.
// Uses the integer divisor test on the primitive integer form of p; throws
// degeneracy_error for the zero polynomial or when a constant term is too
// hard to factor for the divisor enumeration.
std::vector<std::pair<Rational, int>> rational_roots(const Polynomial& p);

}  // namespace qweyl
