#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qweyl/rational.hpp"

namespace qweyl {

// Parameter tuple of the cubic family: nine exponents e_1..e_9, the leading
// scalar kappa with kappa^3 prod e_i = 1, and the base q.
struct ParamSet {
    std::array<Rational, 9> e;
    Rational kappa;
    Rational q;

    const Rational& e_at(int i) const { return e.at(static_cast<std::size_t>(i - 1)); }
    Rational& e_at(int i) { return e.at(static_cast<std::size_t>(i - 1)); }

    // product over a 1-based index list
    Rational e_prod(std::initializer_list<int> idx) const;

    // kappa e_1 e_2 e_3, the multiplier that drives the extra reflection
    Rational c123() const { return kappa * e[0] * e[1] * e[2]; }

    void validate() const;
    bool admissible() const;  // validate() without throwing

    friend bool operator==(const ParamSet& a, const ParamSet& b) {
        return a.e == b.e && a.kappa == b.kappa && a.q == b.q;
    }
    friend bool operator!=(const ParamSet& a, const ParamSet& b) { return !(a == b); }
};

// Deterministic random admissible parameters; e_9 is solved from the product
// constraint and the draw is repeated until every guard holds.
ParamSet sample_params(std::uint32_t seed, const Rational& q = Rational(1, 2));

// Neighbor transposition e_i <-> e_{i+1}, i in 1..8.
ParamSet si_params(const ParamSet& p, int i);

// The extra reflection: e_i -> (kappa e1 e2 e3) e_i for i >= 4 and
// kappa -> 1/(kappa (e1 e2 e3)^2).
ParamSet s0_params(const ParamSet& p);

// Apply a word of reflections given as indices 0..8, leftmost acts last.
ParamSet apply_word(const ParamSet& p, const std::vector<int>& word);

struct CoxeterReport {
    bool ok = true;
    int relations_checked = 0;
    std::vector<std::string> failures;  // failed relation or guard description
};

// Exact check of the affine E8 Coxeter presentation on the parameter maps:
// every generator is an involution, (s_i s_j)^3 = id on diagram edges
// (the chain 1-2-...-8 plus the edge 0-3), and (s_i s_j)^2 = id otherwise.
CoxeterReport check_coxeter(const ParamSet& p);

}  // namespace qweyl
