#include "qweyl/cubic.hpp"

#include <array>
#include <string>

#include "qweyl/errors.hpp"
#include "qweyl/linalg.hpp"

namespace qweyl {

namespace {

PolyMatrix linear_factor(const RatMatrix& x) {
    PolyMatrix m(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            m(i, j) = Polynomial::from_coeffs({Rational(i == j ? 1 : 0), x(i, j)});
        }
    }
    return m;
}

RatMatrix upper_factor(const ParamSet& p, const Rational& a1, const Rational& a2,
                       const Rational& a3) {
    RatMatrix m(3, 3);
    m(0, 0) = p.e_at(1).inv();
    m(1, 1) = p.e_at(2).inv();
    m(2, 2) = p.e_at(3).inv();
    m(0, 1) = a1;
    m(0, 2) = a2;
    m(1, 2) = a3;
    return m;
}

RatMatrix lower_factor(const ParamSet& p, const Rational& a4, const Rational& a5,
                       const Rational& a6) {
    RatMatrix m(3, 3);
    m(0, 0) = p.e_at(7).inv();
    m(1, 1) = p.e_at(8).inv();
    m(2, 2) = p.e_at(9).inv();
    m(1, 0) = a4;
    m(2, 0) = a5;
    m(2, 1) = a6;
    return m;
}

Polynomial scaled_root_product(std::initializer_list<Rational> roots) {
    // prod (1 + x/e) over the listed e values
    Polynomial p = Polynomial::from_coeffs({Rational(1)});
    for (const Rational& e : roots) {
        p = p * Polynomial::from_coeffs({Rational(1), e.inv()});
    }
    return p;
}

// coefficients x^1, x^2 of det(I + x X2) - (1+x/e4)(1+x/e5)(1+x/e6),
// an affine function of (a1, a2)
std::array<Rational, 2> middle_conditions(const ParamSet& p, const Rational& a1,
                                          const Rational& a2, const Rational& a3,
                                          const Rational& a4, const Rational& a5,
                                          const Rational& a6) {
    const RatMatrix x1 = upper_factor(p, a1, a2, a3);
    const RatMatrix x3 = lower_factor(p, a4, a5, a6);
    const RatMatrix x2 = p.kappa * (inverse(x1) * inverse(x3));
    const Polynomial d =
        det(linear_factor(x2)) - scaled_root_product({p.e_at(4), p.e_at(5), p.e_at(6)});
    return {d.coeff(1), d.coeff(2)};
}

// builds the triangular product for accessory values already known to
// satisfy both determinant conditions
CubicSystem assemble(const ParamSet& p, const std::array<Rational, 6>& av) {
    const RatMatrix x1 = upper_factor(p, av[0], av[1], av[2]);
    const RatMatrix x3 = lower_factor(p, av[3], av[4], av[5]);
    const RatMatrix x2 = p.kappa * (inverse(x1) * inverse(x3));
    if (det(linear_factor(x2)) != scaled_root_product({p.e_at(4), p.e_at(5), p.e_at(6)})) {
        throw consistency_error("middle factor determinant is off after the solve");
    }
    const PolyMatrix a = linear_factor(x1) * linear_factor(x2) * linear_factor(x3);
    if (degree(a) != 3 || !coefficient_of(a, 0).is_identity() ||
        coefficient_of(a, 3) != p.kappa * RatMatrix::identity(3)) {
        throw consistency_error("triangular product is not a cubic family member");
    }
    CubicSystem sys;
    sys.params = p;
    sys.a1 = coefficient_of(a, 1);
    sys.a2 = coefficient_of(a, 2);
    sys.accessory = {av[0], av[1], av[2], av[3], av[4], av[5]};
    sys.validate();
    return sys;
}

}  // namespace

PolyMatrix CubicSystem::matrix() const {
    PolyMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const Rational unit(i == j ? 1 : 0);
            m(i, j) = Polynomial::from_coeffs({unit, a1(i, j), a2(i, j), unit * params.kappa});
        }
    }
    return m;
}

void CubicSystem::validate() const {
    params.validate();
    if (a1.rows() != 3 || a1.cols() != 3 || a2.rows() != 3 || a2.cols() != 3) {
        throw shape_error("cubic system coefficients must be 3x3");
    }
    std::vector<Rational> roots;
    roots.reserve(9);
    for (int i = 1; i <= 9; ++i) roots.push_back(-params.e_at(i));
    const Polynomial want = pow(params.kappa, 3) * Polynomial::from_roots(roots);
    if (det(matrix()) != want) {
        throw consistency_error("cubic determinant does not factor through the exponents");
    }
}

CubicSystem build_system(const ParamSet& p, const Rational& a3, const Rational& a4,
                         const Rational& a5, const Rational& a6) {
    p.validate();
    const Rational zero(0), one(1);
    const auto f00 = middle_conditions(p, zero, zero, a3, a4, a5, a6);
    const auto f10 = middle_conditions(p, one, zero, a3, a4, a5, a6);
    const auto f01 = middle_conditions(p, zero, one, a3, a4, a5, a6);
    RatMatrix m(2, 2);
    m(0, 0) = f10[0] - f00[0];
    m(0, 1) = f01[0] - f00[0];
    m(1, 0) = f10[1] - f00[1];
    m(1, 1) = f01[1] - f00[1];
    const auto sol = solve_linear(m, {-f00[0], -f00[1]});
    if (!sol || !sol->homogeneous.empty()) {
        throw degeneracy_error("accessory conditions for (a1, a2) are singular");
    }
    const Rational a1v = sol->particular[0];
    const Rational a2v = sol->particular[1];
    const auto residual = middle_conditions(p, a1v, a2v, a3, a4, a5, a6);
    if (!residual[0].is_zero() || !residual[1].is_zero()) {
        throw consistency_error("accessory solve left a nonzero residual");
    }
    return assemble(p, {a1v, a2v, a3, a4, a5, a6});
}

std::array<Rational, 2> accessory_conditions(const ParamSet& p,
                                             const std::array<Rational, 6>& a) {
    return middle_conditions(p, a[0], a[1], a[2], a[3], a[4], a[5]);
}

CubicSystem build_from_accessory(const ParamSet& p, const std::array<Rational, 6>& a) {
    p.validate();
    const auto residual = middle_conditions(p, a[0], a[1], a[2], a[3], a[4], a[5]);
    if (!residual[0].is_zero() || !residual[1].is_zero()) {
        throw degeneracy_error("accessory tuple violates the determinant conditions");
    }
    return assemble(p, a);
}

FuchsianSystem to_fuchs(const CubicSystem& sys) {
    const ParamSet& p = sys.params;
    const Rational e123 = p.e[0] * p.e[1] * p.e[2];
    const Rational qfac = Rational(1) - p.q;
    const PolyMatrix a = sys.matrix();

    FuchsianSystem fs;
    fs.q = p.q;
    for (int i = 1; i <= 3; ++i) {
        Rational denom = qfac * p.e_at(i);
        for (int j = 1; j <= 3; ++j) {
            if (j != i) denom *= p.e_at(j) - p.e_at(i);
        }
        fs.poles.push_back(-p.e_at(i));
        fs.residues.push_back((e123 / denom) * evaluate(a, -p.e_at(i)));
    }
    fs.validate();

    // exact partial fractions: (1-q) x sum_i B_i prod_{j!=i}(x+e_j) = P I - e123 A
    std::vector<Rational> root3(fs.poles.begin(), fs.poles.end());
    const Polynomial pfull = Polynomial::from_roots(root3);
    PolyMatrix lhs(3, 3);
    for (int i = 0; i < 3; ++i) {
        std::vector<Rational> others;
        for (int j = 0; j < 3; ++j) {
            if (j != i) others.push_back(root3[static_cast<std::size_t>(j)]);
        }
        const Polynomial w =
            Polynomial::from_coeffs({Rational(0), qfac}) * Polynomial::from_roots(others);
        PolyMatrix term = promote(fs.residues[static_cast<std::size_t>(i)]);
        for (std::size_t r = 0; r < 3; ++r) {
            for (std::size_t c = 0; c < 3; ++c) term(r, c) = term(r, c) * w;
        }
        lhs += term;
    }
    PolyMatrix rhs(3, 3);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            rhs(r, c) = -e123 * a(r, c);
            if (r == c) rhs(r, c) += pfull;
        }
    }
    if (lhs != rhs) throw consistency_error("residues do not reproduce the step matrix");

    RatMatrix total(3, 3);
    for (const auto& b : fs.residues) total += b;
    if (total != ((Rational(1) - p.kappa * e123) / qfac) * RatMatrix::identity(3)) {
        throw consistency_error("residue sum has the wrong scalar value");
    }
    return fs;
}

CubicSystem from_fuchs(const FuchsianSystem& fsys, const ParamSet& params) {
    fsys.validate();
    params.validate();
    if (fsys.npoles() != 3 || fsys.size() != 3) {
        throw shape_error("from_fuchs expects a 3x3 system with three poles");
    }
    for (int i = 1; i <= 3; ++i) {
        if (fsys.poles[static_cast<std::size_t>(i - 1)] != -params.e_at(i)) {
            throw shape_error("pole " + std::to_string(i) + " does not match -e_i");
        }
    }
    if (fsys.q != params.q) throw shape_error("base q mismatch between system and parameters");

    const Rational scale = (params.e[0] * params.e[1] * params.e[2]).inv();
    PolyMatrix a = fsys.cleared_step();
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) a(r, c) = scale * a(r, c);
    }
    if (degree(a) > 3) throw consistency_error("cleared step exceeds cubic degree");
    if (!coefficient_of(a, 0).is_identity()) {
        throw consistency_error("cleared step is not normalized at x = 0");
    }
    if (coefficient_of(a, 3) != params.kappa * RatMatrix::identity(3)) {
        throw consistency_error("cleared step has the wrong leading coefficient");
    }

    CubicSystem sys;
    sys.params = params;
    sys.a1 = coefficient_of(a, 1);
    sys.a2 = coefficient_of(a, 2);
    sys.validate();
    return sys;
}

S0Result s0_action(const CubicSystem& sys) {
    sys.params.validate();
    const Rational qlam = sys.params.c123().inv();
    const FuchsianSystem fs = to_fuchs(sys);
    MCResult mc = middle_convolution(fs, qlam);
    const std::size_t joint = mc.K_basis.size() + mc.L_basis.size();
    if (joint != 6) {
        throw degeneracy_error("dim K + dim L = " + std::to_string(joint) +
                               ", the reflection needs 6");
    }
    const ParamSet reflected = s0_params(sys.params);
    S0Result out{from_fuchs(mc.system, reflected), std::move(mc)};
    return out;
}

ConjugacyResult find_conjugator(const CubicSystem& a, const CubicSystem& b) {
    const RatMatrix id3 = RatMatrix::identity(3);
    const std::vector<RatMatrix> lhs = {a.a1, a.a2, a.params.kappa * id3};
    const std::vector<RatMatrix> rhs = {b.a1, b.a2, b.params.kappa * id3};
    return tuple_conjugator(lhs, rhs);
}

}  // namespace qweyl
