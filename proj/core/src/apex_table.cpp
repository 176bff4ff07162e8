#include "apex_table.hpp"

namespace qweyl::apex {

namespace {

// exponent order: q, kappa, a1, a2, a3, a6, e1, e2, e3, e8, e9
static const ApexTerm kNumerator[] = {
    {1, {0, 2, 2, 0, 3, 2, 2, 3, 3, 3, 3}},
    {-1, {0, 3, 1, 1, 1, 1, 2, 3, 3, 3, 3}},
    {1, {0, 2, 1, 1, 2, 2, 1, 3, 3, 3, 3}},
    {-1, {0, 3, 2, 0, 1, 0, 2, 3, 3, 2, 3}},
    {1, {0, 2, 2, 0, 2, 1, 1, 3, 3, 2, 3}},
    {-1, {0, 2, 2, 0, 2, 1, 2, 3, 2, 2, 3}},
    {-1, {0, 3, 1, 1, 0, 0, 2, 3, 2, 3, 2}},
    {2, {0, 2, 2, 0, 2, 1, 2, 3, 2, 3, 2}},
    {2, {0, 2, 1, 1, 1, 1, 1, 3, 2, 3, 2}},
    {-1, {1, 2, 2, 0, 2, 1, 2, 3, 3, 2, 2}},
    {1, {0, 2, 2, 0, 1, 0, 1, 3, 2, 2, 2}},
    {-1, {0, 2, 2, 0, 1, 0, 2, 3, 1, 2, 2}},
    {1, {1, 2, 2, 0, 1, 0, 2, 3, 2, 1, 2}},
    {1, {0, 2, 2, 0, 1, 0, 2, 3, 1, 3, 1}},
    {1, {0, 2, 1, 1, 0, 0, 1, 3, 1, 3, 1}},
    {-1, {1, 2, 2, 0, 1, 0, 2, 3, 2, 2, 1}},
    {-2, {0, 2, 1, 1, 2, 2, 2, 2, 3, 3, 3}},
    {1, {0, 3, 0, 2, 0, 1, 2, 2, 3, 3, 3}},
    {-1, {0, 2, 0, 2, 1, 2, 1, 2, 3, 3, 3}},
    {1, {0, 3, 1, 1, 0, 0, 2, 2, 3, 2, 3}},
    {1, {0, 2, 2, 0, 2, 1, 2, 2, 3, 2, 3}},
    {2, {0, 2, 1, 1, 1, 1, 2, 2, 2, 2, 3}},
    {1, {0, 2, 2, 0, 1, 0, 1, 2, 3, 1, 3}},
    {-1, {1, 1, 1, 1, 0, 0, 1, 2, 1, 2, 0}},
    {-2, {0, 2, 1, 1, 1, 1, 2, 2, 2, 3, 2}},
    {-1, {0, 2, 0, 2, 0, 1, 1, 2, 2, 3, 2}},
    {-1, {1, 1, 2, 0, 1, 0, 1, 2, 2, 0, 2}},
    {2, {1, 2, 1, 1, 1, 1, 2, 2, 3, 2, 2}},
    {1, {0, 2, 2, 0, 1, 0, 2, 2, 2, 2, 2}},
    {-1, {0, 1, 1, 1, 1, 1, 0, 2, 2, 2, 2}},
    {-2, {0, 1, 2, 0, 2, 1, 1, 2, 2, 2, 2}},
    {1, {0, 2, 1, 1, 0, 0, 2, 2, 1, 2, 2}},
    {-1, {0, 1, 1, 1, 1, 1, 1, 2, 1, 2, 2}},
    {-1, {1, 2, 1, 1, 0, 0, 2, 2, 2, 1, 2}},
    {-1, {0, 1, 2, 0, 1, 0, 0, 2, 2, 1, 2}},
    {-1, {1, 1, 1, 1, 1, 1, 1, 2, 2, 1, 2}},
    {1, {0, 1, 2, 0, 1, 0, 1, 2, 1, 1, 2}},
    {1, {1, 2, 1, 1, 0, 0, 2, 2, 2, 2, 1}},
    {-1, {1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 1}},
    {-1, {0, 1, 1, 1, 0, 0, 1, 2, 0, 2, 1}},
    {-1, {0, 1, 1, 1, 0, 0, 0, 2, 1, 2, 1}},
    {-2, {0, 1, 2, 0, 1, 0, 1, 2, 1, 2, 1}},
    {1, {1, 1, 2, 0, 1, 0, 1, 2, 2, 1, 1}},
    {1, {1, 1, 1, 1, 0, 0, 1, 2, 1, 1, 1}},
    {1, {0, 2, 0, 2, 1, 2, 2, 1, 3, 3, 3}},
    {-2, {0, 2, 1, 1, 1, 1, 2, 1, 3, 2, 3}},
    {-1, {0, 2, 0, 2, 0, 1, 1, 1, 3, 2, 3}},
    {-1, {0, 2, 0, 2, 0, 1, 2, 1, 2, 2, 3}},
    {-1, {0, 2, 1, 1, 0, 0, 1, 1, 3, 1, 3}},
    {1, {1, 1, 1, 1, 0, 0, 1, 1, 2, 0, 2}},
    {-1, {1, 2, 0, 2, 0, 1, 2, 1, 3, 2, 2}},
    {-1, {0, 2, 1, 1, 0, 0, 2, 1, 2, 2, 2}},
    {1, {0, 1, 0, 2, 0, 1, 0, 1, 2, 2, 2}},
    {3, {0, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2}},
    {1, {0, 1, 0, 2, 0, 1, 1, 1, 1, 2, 2}},
    {1, {0, 1, 1, 1, 0, 0, 0, 1, 2, 1, 2}},
    {-1, {0, 1, 2, 0, 1, 0, 1, 1, 2, 1, 2}},
    {1, {1, 1, 0, 2, 0, 1, 1, 1, 2, 1, 2}},
    {-1, {0, 1, 1, 1, 0, 0, 1, 1, 1, 1, 2}},
    {1, {1, 0, 1, 1, 0, 0, 0, 1, 1, 1, 0}},
    {1, {1, 1, 0, 2, 0, 1, 1, 1, 2, 2, 1}},
    {1, {0, 1, 1, 1, 0, 0, 1, 1, 1, 2, 1}},
    {-1, {1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 1}},
    {-1, {1, 1, 1, 1, 0, 0, 1, 1, 2, 1, 1}},
    {1, {0, 0, 1, 1, 0, 0, 0, 1, 0, 1, 1}},
    {1, {0, 0, 2, 0, 1, 0, 0, 1, 1, 1, 1}},
    {-1, {1, 0, 0, 2, 0, 1, 0, 1, 1, 1, 1}},
    {1, {0, 2, 0, 2, 0, 1, 2, 0, 3, 2, 3}},
    {-1, {0, 1, 0, 2, 0, 1, 1, 0, 2, 2, 2}},
    {1, {0, 1, 1, 1, 0, 0, 1, 0, 2, 1, 2}},
    {-1, {0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 1}},
};

static const ApexTerm kDenominator[] = {
    {-1, {0, 3, 2, 0, 2, 1, 2, 3, 3, 3, 3}},
    {1, {0, 3, 2, 0, 1, 0, 2, 3, 2, 2, 3}},
    {-1, {0, 3, 2, 0, 1, 0, 2, 3, 2, 3, 2}},
    {1, {1, 3, 2, 0, 1, 0, 2, 3, 3, 2, 2}},
    {1, {1, 3, 1, 1, 0, 0, 2, 3, 2, 2, 2}},
    {-1, {1, 2, 1, 1, 1, 1, 1, 3, 2, 2, 2}},
    {-1, {1, 2, 2, 0, 1, 0, 1, 3, 2, 1, 2}},
    {-1, {1, 2, 1, 1, 0, 0, 1, 3, 1, 2, 1}},
    {2, {0, 3, 1, 1, 1, 1, 2, 2, 3, 3, 3}},
    {-1, {0, 3, 1, 1, 0, 0, 2, 2, 2, 2, 3}},
    {-1, {0, 2, 1, 1, 1, 1, 1, 2, 2, 2, 3}},
    {-1, {0, 2, 2, 0, 1, 0, 1, 2, 2, 1, 3}},
    {1, {1, 1, 1, 1, 0, 0, 1, 2, 0, 2, 0}},
    {1, {0, 3, 1, 1, 0, 0, 2, 2, 2, 3, 2}},
    {-1, {0, 2, 1, 1, 1, 1, 1, 2, 2, 3, 2}},
    {1, {1, 1, 2, 0, 1, 0, 0, 2, 2, 0, 2}},
    {-1, {1, 3, 1, 1, 0, 0, 2, 2, 3, 2, 2}},
    {-1, {1, 2, 1, 1, 1, 1, 1, 2, 3, 2, 2}},
    {1, {1, 1, 0, 2, 1, 2, 0, 2, 2, 2, 2}},
    {-1, {1, 2, 1, 1, 1, 1, 2, 2, 2, 2, 2}},
    {1, {1, 1, 1, 1, 2, 2, 1, 2, 2, 2, 2}},
    {1, {0, 2, 2, 0, 1, 0, 1, 2, 2, 2, 2}},
    {-1, {1, 2, 0, 2, 0, 1, 1, 2, 2, 2, 2}},
    {1, {0, 2, 1, 1, 0, 0, 1, 2, 1, 2, 2}},
    {-1, {1, 2, 2, 0, 1, 0, 1, 2, 3, 1, 2}},
    {-1, {1, 2, 2, 0, 1, 0, 2, 2, 2, 1, 2}},
    {2, {1, 1, 1, 1, 1, 1, 0, 2, 2, 1, 2}},
    {-1, {1, 2, 1, 1, 0, 0, 1, 2, 2, 1, 2}},
    {1, {1, 1, 2, 0, 2, 1, 1, 2, 2, 1, 2}},
    {-1, {0, 2, 1, 1, 0, 0, 1, 2, 1, 3, 1}},
    {1, {1, 2, 1, 1, 0, 0, 1, 2, 2, 2, 1}},
    {-1, {1, 2, 1, 1, 0, 0, 2, 2, 1, 2, 1}},
    {1, {1, 1, 0, 2, 0, 1, 0, 2, 1, 2, 1}},
    {2, {1, 1, 1, 1, 1, 1, 1, 2, 1, 2, 1}},
    {1, {1, 1, 1, 1, 0, 0, 0, 2, 1, 1, 1}},
    {1, {1, 1, 2, 0, 1, 0, 1, 2, 1, 1, 1}},
    {-1, {0, 3, 0, 2, 0, 1, 2, 1, 3, 3, 3}},
    {1, {0, 2, 0, 2, 0, 1, 1, 1, 2, 2, 3}},
    {1, {0, 2, 1, 1, 0, 0, 1, 1, 2, 1, 3}},
    {1, {0, 2, 0, 2, 0, 1, 1, 1, 2, 3, 2}},
    {1, {1, 1, 2, 0, 1, 0, 1, 1, 2, 0, 2}},
    {1, {1, 2, 0, 2, 0, 1, 1, 1, 3, 2, 2}},
    {1, {1, 2, 0, 2, 0, 1, 2, 1, 2, 2, 2}},
    {-1, {1, 1, 0, 2, 1, 2, 1, 1, 2, 2, 2}},
    {-1, {0, 2, 1, 1, 0, 0, 1, 1, 2, 2, 2}},
    {-1, {0, 1, 0, 2, 0, 1, 0, 1, 1, 2, 2}},
    {1, {1, 2, 1, 1, 0, 0, 1, 1, 3, 1, 2}},
    {1, {1, 2, 1, 1, 0, 0, 2, 1, 2, 1, 2}},
    {-1, {0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 2}},
    {-1, {1, 0, 1, 1, 0, 0, 0, 1, 0, 1, 0}},
    {-1, {1, 1, 0, 2, 0, 1, 0, 1, 2, 2, 1}},
    {1, {0, 1, 1, 1, 0, 0, 0, 1, 1, 2, 1}},
    {-1, {1, 1, 0, 2, 0, 1, 1, 1, 1, 2, 1}},
    {-1, {1, 0, 2, 0, 1, 0, 0, 1, 1, 0, 1}},
    {-1, {1, 1, 1, 1, 0, 0, 0, 1, 2, 1, 1}},
    {-1, {1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1}},
    {-1, {1, 1, 1, 1, 0, 0, 1, 0, 2, 0, 2}},
    {-1, {1, 1, 0, 2, 0, 1, 1, 0, 2, 1, 2}},
    {1, {1, 0, 1, 1, 0, 0, 0, 0, 1, 0, 1}},
    {1, {1, 0, 0, 2, 0, 1, 0, 0, 1, 1, 1}},
};

}  // namespace

ApexTable numerator() { return {kNumerator, sizeof(kNumerator) / sizeof(ApexTerm)}; }
ApexTable denominator() { return {kDenominator, sizeof(kDenominator) / sizeof(ApexTerm)}; }

}  // namespace qweyl::apex
