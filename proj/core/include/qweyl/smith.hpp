#pragma once

#include <vector>

#include "qweyl/matrix.hpp"

namespace qweyl {

// Diagonalization of a square polynomial matrix by unimodular row and column
// operations: u * m * v = diag(divisors).  Divisors are monic and listed so
// that each one divides its predecessor; any zero divisors come first.
struct SmithResult {
    std::vector<Polynomial> divisors;
    PolyMatrix u;
    PolyMatrix v;
};

SmithResult smith_form(const PolyMatrix& m);

}  // namespace qweyl
