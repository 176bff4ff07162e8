#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/cubic.hpp"
#include "qweyl/polynomial.hpp"

namespace qweyl {

// Scalar q-difference operator sum_j P[j](x) T^j, T f(x) = f(qx).
struct ScalarOperator {
    std::vector<Polynomial> P;
    Rational q;

    std::size_t t_order() const { return P.empty() ? 0 : P.size() - 1; }
    // invariants of the rank-3 reduction output
    void validate() const;
};

struct ReductionResult {
    ScalarOperator op;
    Rational f;  // the extra (apparent) root produced by the elimination
};

// Eliminate the second and third vector components of the cubic system: form
// the first rows of A, (TA)A, (T^2A)(TA)A, take the displayed 2x2/3x3 minors,
// strip the common x^3 and (x+e8)(x+e9) factors, apply the Pochhammer gauge
// bookkeeping and normalize the leading operator coefficient monic.
ReductionResult reduce_to_scalar(const CubicSystem& sys);

struct ConfigEntry {
    Rational root;     // base of the chain (outermost member)
    int multiplicity;  // how many identical chains
    int depth;         // chain length k: root, root*q, ..., root*q^(k-1)
                       // (descending powers on the infinity sides)
    friend bool operator==(const ConfigEntry& a, const ConfigEntry& b) {
        return a.root == b.root && a.multiplicity == b.multiplicity && a.depth == b.depth;
    }
};

struct PointConfiguration {
    Rational q;
    std::vector<ConfigEntry> x0, xinf, t0, tinf;
    std::string diagram() const;  // plain-text sketch of the four root lines
};

// Characteristic roots at x=0, x=infinity (from the lowest/highest x-slices
// in T) and at T=0, T=infinity (from P_0, P_N), with geometric chains
// detected through the divisibility cascade on the neighboring slices.
PointConfiguration point_configuration(const ScalarOperator& op);

// The two cross products of the configuration (x0 * tinf, xinf * t0); the
// relation holds exactly when they are equal.
std::pair<Rational, Rational> qfuchs_products(const PointConfiguration& cfg);
bool qfuchs_check(const PointConfiguration& cfg);

// The unique c with P3(f/q) = c P2(f), P2(f/q) = c P1(f), P1(f/q) = c P0(f);
// throws when the three ratios disagree.
Rational apparent_check(const ScalarOperator& op, const Rational& f);

// The transcribed closed form f1/f2 of the apparent root, evaluated exactly.
// accessory = (a1..a6); only a1, a2, a3, a6 enter the fraction.
Rational f_closed_form(const ParamSet& params, const std::array<Rational, 6>& accessory);
Rational f_closed_form(const CubicSystem& sys);

struct ApexTableInfo {
    std::size_t numerator_terms;
    std::size_t denominator_terms;
};
ApexTableInfo apex_table_info();

struct AutonomizeReport {
    bool common_factor;    // every P_j divisible by (x + e7)
    int x_degree;          // max x-degree after the division (before it, if not divisible)
    int t_degree;
    Polynomial remainder;  // first nonzero remainder when not divisible
    ScalarOperator quotient;  // the divided pencil, filled only on success
};

// Bi-degree report for the specialization that turns the operator into a
// polynomial pencil: divide the common (x + e7) factor and measure degrees.
AutonomizeReport autonomize(const ScalarOperator& op, const ParamSet& params);

// Find accessory values whose reduction lands the apparent root exactly at
// -e7: fix a1 = 0, a2 = 1, solve the (linear in a3) root equation, then
// recover (a4, a5) from the determinant conditions.
CubicSystem tune_autonomous(const ParamSet& params);

}  // namespace qweyl
