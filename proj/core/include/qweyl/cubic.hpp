#pragma once

#include <array>
#include <vector>

#include "qweyl/matrix.hpp"
#include "qweyl/mconv.hpp"
#include "qweyl/params.hpp"

namespace qweyl {

// Cubic 3x3 family A(x) = I + A1 x + A2 x^2 + kappa I x^3 with
// det A(x) = kappa^3 (x+e_1)...(x+e_9).
struct CubicSystem {
    ParamSet params;
    RatMatrix a1{3, 3};
    RatMatrix a2{3, 3};
    // the six triangular entries (a_1..a_6) this instance was built from,
    // empty when the system came from a quotient rather than build_system
    std::vector<Rational> accessory;

    PolyMatrix matrix() const;
    void validate() const;
};

// Construct the family member with triangular data a3..a6 free and (a1, a2)
// solved from the two affine conditions that pin det(I + x X2) to
// (1+x/e_4)(1+x/e_5)(1+x/e_6).
CubicSystem build_system(const ParamSet& p, const Rational& a3, const Rational& a4,
                         const Rational& a5, const Rational& a6);

// Same construction from a full accessory tuple a1..a6; the two determinant
// conditions must already hold for these values.
CubicSystem build_from_accessory(const ParamSet& p, const std::array<Rational, 6>& a);

// Residuals of the two determinant conditions at a full accessory tuple;
// both vanish exactly when the tuple is admissible. Affine in (a1, a2) and
// in (a4, a5) separately.
std::array<Rational, 2> accessory_conditions(const ParamSet& p,
                                             const std::array<Rational, 6>& a);

// Residue form at the gauge where the step matrix is A(x)/prod_{i<=3}(1+x/e_i):
// poles -e_1,-e_2,-e_3 and exact partial-fraction residues.
FuchsianSystem to_fuchs(const CubicSystem& sys);

// Inverse of to_fuchs: clear the poles and rescale back to a cubic member
// with the given parameters. Checks A(0) = I, degree 3, leading kappa I and
// the determinant factorization.
CubicSystem from_fuchs(const FuchsianSystem& fsys, const ParamSet& params);

struct S0Result {
    CubicSystem system;
    MCResult witness;  // convolution data underlying the reflection
};

// The non-permuting reflection: convolve the residue form with
// qlam = 1/(kappa e_1 e_2 e_3) and rescale to the reflected parameters.
S0Result s0_action(const CubicSystem& sys);

// Search for constant G with A(x) G = G B(x), exact and basis-normalized.
ConjugacyResult find_conjugator(const CubicSystem& a, const CubicSystem& b);

}  // namespace qweyl
