#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qweyl/matrix.hpp"

namespace qweyl {

// Multiplicity data of a polynomial matrix at x = 0, x = infinity, and of its
// invariant factors. Each entry pairs an eigenvalue (or divisor root) with a
// partition; endpoint partitions are the rank-difference profiles of the
// constant and leading coefficient matrices, divisor partitions are the
// conjugates of the root-order profiles across the invariant factors.
struct SpectralType {
    std::vector<std::pair<Rational, std::vector<int>>> at_zero;
    std::vector<std::pair<Rational, std::vector<int>>> at_infinity;
    std::vector<std::pair<Rational, std::vector<int>>> divisor;

    // "(3;3;1,1,1,1,1,1,1,1,1)" style: sections joined by ';', partitions by
    // ',', parts within a partition concatenated (all parts here are < 10)
    std::string str() const;

    friend bool operator==(const SpectralType& a, const SpectralType& b) {
        return a.at_zero == b.at_zero && a.at_infinity == b.at_infinity &&
               a.divisor == b.divisor;
    }
    friend bool operator!=(const SpectralType& a, const SpectralType& b) { return !(a == b); }
};

// Exact spectral type of a square polynomial matrix with nonzero determinant.
// Requires every eigenvalue of a(0) and of the leading coefficient, and every
// root of the invariant factors, to be rational; otherwise degeneracy_error.
SpectralType spectral_type(const PolyMatrix& a);

}  // namespace qweyl
