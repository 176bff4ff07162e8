#pragma once

#include <cstddef>
#include <vector>

#include "qweyl/matrix.hpp"

namespace qweyl {

// Linear q-difference system with simple poles:
//   D_x y = sum_i B_i/(x - t_i) y,
// equivalently y(qx) = Phi(x) y(x) with Phi = I - (1-q) x sum_i B_i/(x - t_i).
struct FuchsianSystem {
    std::vector<Rational> poles;
    std::vector<RatMatrix> residues;
    Rational q;

    std::size_t size() const { return residues.empty() ? 0 : residues[0].rows(); }
    std::size_t npoles() const { return poles.size(); }

    // poles pairwise distinct, residues square of equal size, 0 < q < 1
    void validate() const;

    // Phi(x); throws pole_error when x hits a pole
    RatMatrix step_matrix(const Rational& x) const;

    // sum_i B_i/(x - t_i); throws pole_error when x hits a pole
    RatMatrix residue_sum(const Rational& x) const;

    // prod_i (x - t_i)
    Polynomial pole_product() const;

    // pole_product(x) * Phi(x) as a polynomial matrix
    PolyMatrix cleared_step() const;
};

// Enlarged first-order form: (xI - S/q) D_x Y = (1/q)(B - I) Y with
// S = blockdiag(t_i I) and every block row of B equal to (B_1 ... B_N).
struct OkuboSystem {
    RatMatrix S;
    RatMatrix B;
    Rational q;
};

OkuboSystem to_okubo(const FuchsianSystem& sys);

}  // namespace qweyl
