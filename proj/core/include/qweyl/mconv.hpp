#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qweyl/fuchsian.hpp"
#include "qweyl/linalg.hpp"

namespace qweyl {

// Convolution with multiplier qlam = q^lambda: returns the system of the
// enlarged matrices G_i (size MN), each with a single nonzero block row
// (qlam B_1, ..., qlam B_i + [lambda] I, ..., qlam B_N) where
// [lambda] = (1 - qlam)/(1 - q).  Poles are unchanged.
FuchsianSystem convolution(const FuchsianSystem& sys, const Rational& qlam);

struct InvariantSpaces {
    std::vector<std::vector<Rational>> K_basis;  // direct sum of Ker B_i
    std::vector<std::vector<Rational>> L_basis;  // Ker(G_1 + ... + G_N)
};

// Bases of the two invariant subspaces of the G_i-action; membership of every
// G_i image in their joint span is verified exactly.
InvariantSpaces invariant_spaces(const FuchsianSystem& sys,
                                 const FuchsianSystem& conv);

// Which standard basis vectors are tried first when completing the invariant
// span to a full basis.  Both choices give similar quotients.
enum class ComplementPolicy { low_first, high_first };

struct MCResult {
    FuchsianSystem system;  // quotient action on C^{MN}/(K+L)
    Rational qlam;
    std::vector<std::vector<Rational>> K_basis;
    std::vector<std::vector<Rational>> L_basis;
    RatMatrix R;      // columns: complement | K | retained L
    RatMatrix R_inv;
    std::vector<RatMatrix> G_full;   // pre-quotient G_i
    std::vector<RatMatrix> H;        // lower-right blocks of R^{-1} G_i R
    std::vector<std::size_t> kernel_dims;  // dim Ker B_i
};

MCResult middle_convolution(const FuchsianSystem& sys, const Rational& qlam,
                            ComplementPolicy policy = ComplementPolicy::low_first);

// Move pole j to tj_new, adjusting residues so the transformed system is the
// gauge of the original by a function with multiplier
// (1 - x/t_j)/(1 - x/tj_new).  Requires t_j != 0 and tj_new != 0.
FuchsianSystem addition(const FuchsianSystem& sys, std::size_t j,
                        const Rational& tj_new);

// Gauge by x^alpha at a pole located at 0, parametrized by alpha_mult = q^alpha:
// B_i -> alpha_mult B_i away from 0 and B_j -> alpha_mult B_j + [alpha] I at 0.
FuchsianSystem addition_at_zero(const FuchsianSystem& sys,
                                const Rational& alpha_mult);

// Kernel-intersection condition: for every j the largest B_j-invariant
// subspace of cap_{i != j} Ker B_i is zero.  Decided over the rationals by
// the invariant-subspace shrinking iteration.
bool check_star(const FuchsianSystem& sys);
// The dual image-sum condition, checked on the transposed tuple.
bool check_starstar(const FuchsianSystem& sys);

enum class ConjugacyStatus { found, none, inconclusive };

struct ConjugacyResult {
    ConjugacyStatus status;
    std::optional<RatMatrix> witness;  // invertible G with A_k G = G B_k
};

// Searches for an invertible simultaneous conjugator between two matrix
// tuples of equal length and size.  "none" is definitive (the intertwiner
// space is zero); "inconclusive" means no invertible element was found
// within the search budget.
ConjugacyResult tuple_conjugator(const std::vector<RatMatrix>& a,
                                 const std::vector<RatMatrix>& b);

}  // namespace qweyl
