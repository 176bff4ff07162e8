#pragma once

#include <cstddef>

namespace qweyl::apex {

// one monomial of the apparent-root fraction; exponent order is
// q, kappa, a1, a2, a3, a6, e1, e2, e3, e8, e9
struct ApexTerm {
    int coef;
    int exp[11];
};

struct ApexTable {
    const ApexTerm* terms;
    std::size_t count;
};

ApexTable numerator();
ApexTable denominator();

}  // namespace qweyl::apex
