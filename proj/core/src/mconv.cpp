#include "qweyl/mconv.hpp"

#include <algorithm>
#include <random>

#include "qweyl/errors.hpp"

namespace qweyl {

void FuchsianSystem::validate() const {
    if (poles.size() != residues.size())
        throw shape_error("pole/residue count mismatch");
    if (poles.empty()) throw degeneracy_error("system needs at least one pole");
    if (!(Rational(0) < q && q < Rational(1)))
        throw degeneracy_error("q must satisfy 0 < q < 1");
    const std::size_t m = residues[0].rows();
    for (const auto& b : residues)
        if (!b.is_square() || b.rows() != m)
            throw shape_error("residues must be square matrices of equal size");
    for (std::size_t i = 0; i < poles.size(); ++i)
        for (std::size_t j = i + 1; j < poles.size(); ++j)
            if (poles[i] == poles[j])
                throw degeneracy_error("poles must be pairwise distinct");
}

RatMatrix FuchsianSystem::residue_sum(const Rational& x) const {
    RatMatrix acc(size(), size());
    for (std::size_t i = 0; i < poles.size(); ++i) {
        if (x == poles[i]) throw pole_error("evaluation at pole " + poles[i].str());
        acc += (x - poles[i]).inv() * residues[i];
    }
    return acc;
}

RatMatrix FuchsianSystem::step_matrix(const Rational& x) const {
    RatMatrix phi = RatMatrix::identity(size());
    phi -= ((Rational(1) - q) * x) * residue_sum(x);
    return phi;
}

Polynomial FuchsianSystem::pole_product() const {
    return Polynomial::from_roots(poles);
}

PolyMatrix FuchsianSystem::cleared_step() const {
    const std::size_t m = size();
    PolyMatrix acc = pole_product() * promote(RatMatrix::identity(m));
    const Polynomial pref = Polynomial{Rational(0), -(Rational(1) - q)};  // -(1-q)x
    for (std::size_t i = 0; i < poles.size(); ++i) {
        Polynomial cof = pref;
        for (std::size_t j = 0; j < poles.size(); ++j)
            if (j != i) cof = cof * Polynomial{-poles[j], Rational(1)};
        acc += cof * promote(residues[i]);
    }
    return acc;
}

OkuboSystem to_okubo(const FuchsianSystem& sys) {
    sys.validate();
    const std::size_t m = sys.size(), n = sys.npoles();
    OkuboSystem ok;
    ok.q = sys.q;
    ok.S = RatMatrix(m * n, m * n);
    ok.B = RatMatrix(m * n, m * n);
    for (std::size_t i = 0; i < n; ++i) {
        ok.S.set_block(i * m, i * m, sys.poles[i] * RatMatrix::identity(m));
        for (std::size_t j = 0; j < n; ++j)
            ok.B.set_block(i * m, j * m, sys.residues[j]);
    }
    return ok;
}

FuchsianSystem convolution(const FuchsianSystem& sys, const Rational& qlam) {
    sys.validate();
    if (qlam.is_zero())
        throw degeneracy_error("convolution multiplier must be nonzero");
    const std::size_t m = sys.size(), n = sys.npoles();
    const Rational lam_br = (Rational(1) - qlam) / (Rational(1) - sys.q);
    FuchsianSystem out;
    out.poles = sys.poles;
    out.q = sys.q;
    for (std::size_t i = 0; i < n; ++i) {
        RatMatrix g(m * n, m * n);
        for (std::size_t j = 0; j < n; ++j) {
            RatMatrix blk = qlam * sys.residues[j];
            if (i == j) blk += lam_br * RatMatrix::identity(m);
            g.set_block(i * m, j * m, blk);
        }
        out.residues.push_back(std::move(g));
    }
    return out;
}

namespace {

std::vector<Rational> embed_block(const std::vector<Rational>& v,
                                  std::size_t block, std::size_t m,
                                  std::size_t n) {
    std::vector<Rational> out(m * n, Rational(0));
    for (std::size_t k = 0; k < m; ++k) out[block * m + k] = v[k];
    return out;
}

}  // namespace

InvariantSpaces invariant_spaces(const FuchsianSystem& sys,
                                 const FuchsianSystem& conv) {
    sys.validate();
    conv.validate();
    const std::size_t m = sys.size(), n = sys.npoles();
    if (conv.size() != m * n || conv.npoles() != n)
        throw shape_error("convolution output size mismatch");

    InvariantSpaces out;
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& v : kernel(sys.residues[i]))
            out.K_basis.push_back(embed_block(v, i, m, n));

    RatMatrix gsum(m * n, m * n);
    for (const auto& g : conv.residues) gsum += g;
    out.L_basis = kernel(gsum);

    IncrementalBasis span(m * n);
    for (const auto& v : out.K_basis) span.try_add(v);
    for (const auto& v : out.L_basis) span.try_add(v);
    for (const auto* list : {&out.K_basis, &out.L_basis})
        for (const auto& v : *list)
            for (const auto& g : conv.residues)
                if (!span.in_span(mat_vec(g, v)))
                    throw consistency_error(
                        "invariant subspace not closed under the action");
    return out;
}

MCResult middle_convolution(const FuchsianSystem& sys, const Rational& qlam,
                            ComplementPolicy policy) {
    const FuchsianSystem conv = convolution(sys, qlam);
    InvariantSpaces inv = invariant_spaces(sys, conv);
    const std::size_t m = sys.size(), n = sys.npoles();
    const std::size_t mn = m * n;

    IncrementalBasis ib(mn);
    for (const auto& v : inv.K_basis)
        if (!ib.try_add(v))
            throw consistency_error("kernel blocks are not independent");
    std::vector<std::vector<Rational>> kept_l;
    for (const auto& v : inv.L_basis)
        if (ib.try_add(v)) kept_l.push_back(v);

    const std::size_t span_dim = ib.size();
    std::vector<std::vector<Rational>> complement;
    for (std::size_t step = 0; step < mn && ib.size() < mn; ++step) {
        const std::size_t p =
            policy == ComplementPolicy::low_first ? step : mn - 1 - step;
        std::vector<Rational> e(mn, Rational(0));
        e[p] = Rational(1);
        if (ib.try_add(e)) complement.push_back(std::move(e));
    }
    if (ib.size() != mn)
        throw consistency_error("failed to complete basis");

    MCResult res;
    res.qlam = qlam;
    res.K_basis = std::move(inv.K_basis);
    res.L_basis = std::move(inv.L_basis);
    res.G_full = conv.residues;
    for (std::size_t i = 0; i < n; ++i)
        res.kernel_dims.push_back(kernel(sys.residues[i]).size());

    std::vector<std::vector<Rational>> cols = complement;
    cols.insert(cols.end(), res.K_basis.begin(), res.K_basis.end());
    cols.insert(cols.end(), kept_l.begin(), kept_l.end());
    res.R = RatMatrix::from_columns(cols);
    res.R_inv = inverse(res.R);

    const std::size_t r = mn - span_dim;
    res.system.poles = sys.poles;
    res.system.q = sys.q;
    for (std::size_t i = 0; i < n; ++i) {
        const RatMatrix c = res.R_inv * res.G_full[i] * res.R;
        if (!c.block(0, r, r, mn - r).is_zero())
            throw consistency_error("invariant span is not respected");
        res.system.residues.push_back(c.block(0, 0, r, r));
        res.H.push_back(c.block(r, r, mn - r, mn - r));
    }
    return res;
}

FuchsianSystem addition(const FuchsianSystem& sys, std::size_t j,
                        const Rational& tj_new) {
    sys.validate();
    if (j >= sys.npoles()) throw shape_error("pole index out of range");
    const Rational tj = sys.poles[j];
    if (tj.is_zero())
        throw degeneracy_error("pole at zero: use addition_at_zero");
    if (tj_new.is_zero())
        throw degeneracy_error("target pole must be nonzero");
    for (std::size_t i = 0; i < sys.npoles(); ++i)
        if (i != j && sys.poles[i] == tj_new)
            throw degeneracy_error("target pole collides with an existing pole");
    if (tj_new == tj) return sys;

    const std::size_t m = sys.size();
    const Rational scale = tj_new / tj;
    FuchsianSystem out;
    out.q = sys.q;
    out.poles = sys.poles;
    out.poles[j] = tj_new;
    out.residues.resize(sys.npoles(), RatMatrix(m, m));

    RatMatrix bj = scale * sys.residues[j];
    bj += ((tj - tj_new) / (tj * (Rational(1) - sys.q))) * RatMatrix::identity(m);
    for (std::size_t i = 0; i < sys.npoles(); ++i) {
        if (i == j) continue;
        const Rational ti = sys.poles[i];
        out.residues[i] =
            (scale * (ti - tj) / (ti - tj_new)) * sys.residues[i];
        bj += (scale * (tj_new - tj) / (tj_new - ti)) * sys.residues[i];
    }
    out.residues[j] = std::move(bj);
    return out;
}

FuchsianSystem addition_at_zero(const FuchsianSystem& sys,
                                const Rational& alpha_mult) {
    sys.validate();
    if (alpha_mult.is_zero())
        throw degeneracy_error("gauge multiplier must be nonzero");
    std::size_t j = sys.npoles();
    for (std::size_t i = 0; i < sys.npoles(); ++i)
        if (sys.poles[i].is_zero()) j = i;
    if (j == sys.npoles())
        throw degeneracy_error("system has no pole at zero");

    const Rational lam_br =
        (Rational(1) - alpha_mult) / (Rational(1) - sys.q);
    FuchsianSystem out = sys;
    for (std::size_t i = 0; i < sys.npoles(); ++i) {
        out.residues[i] = alpha_mult * sys.residues[i];
        if (i == j)
            out.residues[i] += lam_br * RatMatrix::identity(sys.size());
    }
    return out;
}

namespace {

// Shrinks the column span of u to the largest b-invariant subspace inside it
// and returns that dimension.
std::size_t largest_invariant_dim(const RatMatrix& b, RatMatrix u) {
    for (;;) {
        if (u.cols() == 0) return 0;
        const auto ann = left_kernel(u);
        if (ann.empty()) return u.cols();  // full space, trivially invariant
        RatMatrix a(ann.size(), u.rows());
        for (std::size_t i = 0; i < ann.size(); ++i)
            for (std::size_t k = 0; k < u.rows(); ++k) a(i, k) = ann[i][k];
        const auto keep = kernel(a * (b * u));
        if (keep.size() == u.cols()) return u.cols();
        if (keep.empty()) return 0;
        u = u * RatMatrix::from_columns(keep);
    }
}

}  // namespace

bool check_star(const FuchsianSystem& sys) {
    sys.validate();
    const std::size_t m = sys.size(), n = sys.npoles();
    for (std::size_t j = 0; j < n; ++j) {
        RatMatrix stacked((n - 1) * m, m);
        std::size_t row = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j) continue;
            stacked.set_block(row * m, 0, sys.residues[i]);
            ++row;
        }
        const auto w = kernel(stacked);
        if (w.empty()) continue;
        if (largest_invariant_dim(sys.residues[j], RatMatrix::from_columns(w)) > 0)
            return false;
    }
    return true;
}

bool check_starstar(const FuchsianSystem& sys) {
    FuchsianSystem t = sys;
    for (auto& b : t.residues) b = b.transpose();
    return check_star(t);
}

namespace {

RatMatrix unvec(const std::vector<Rational>& v, std::size_t n) {
    RatMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = v[i * n + j];
    return g;
}

RatMatrix normalize_first_entry(RatMatrix g) {
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (!g(i, j).is_zero()) {
                const Rational inv_e = g(i, j).inv();
                return inv_e * g;
            }
    return g;
}

}  // namespace

ConjugacyResult tuple_conjugator(const std::vector<RatMatrix>& a,
                                 const std::vector<RatMatrix>& b) {
    if (a.size() != b.size())
        throw shape_error("tuples must have equal length");
    if (a.empty()) throw shape_error("empty tuple");
    const std::size_t n = a[0].rows();
    for (const auto& mlist : {&a, &b})
        for (const auto& mat : *mlist)
            if (!mat.is_square()) throw shape_error("tuple entries must be square");
    if (b[0].rows() != n) return {ConjugacyStatus::none, std::nullopt};

    // A_k G - G B_k = 0 as a linear system in the entries of G
    RatMatrix c(a.size() * n * n, n * n);
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t row = (k * n + i) * n + j;
                for (std::size_t s = 0; s < n; ++s) {
                    c(row, s * n + j) += a[k](i, s);
                    c(row, i * n + s) -= b[k](s, j);
                }
            }
    const auto basis = kernel(c);
    if (basis.empty()) return {ConjugacyStatus::none, std::nullopt};

    std::vector<RatMatrix> gens;
    for (const auto& v : basis) gens.push_back(unvec(v, n));

    auto try_combo = [&](const std::vector<Rational>& coeffs)
        -> std::optional<RatMatrix> {
        RatMatrix g(n, n);
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (!coeffs[i].is_zero()) g += coeffs[i] * gens[i];
        if (det(g).is_zero()) return std::nullopt;
        return normalize_first_entry(g);
    };

    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<Rational> coeffs(gens.size(), Rational(0));
        coeffs[i] = Rational(1);
        if (auto g = try_combo(coeffs)) return {ConjugacyStatus::found, g};
    }
    if (gens.size() >= 2 && gens.size() <= 4) {
        const std::vector<Rational> values = {Rational(0), Rational(1),
                                              Rational(-1), Rational(2)};
        std::vector<std::size_t> idx(gens.size(), 0);
        for (;;) {
            std::vector<Rational> coeffs(gens.size());
            for (std::size_t i = 0; i < gens.size(); ++i)
                coeffs[i] = values[idx[i]];
            if (auto g = try_combo(coeffs)) return {ConjugacyStatus::found, g};
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == values.size())
                idx[pos++] = 0;
            if (pos == idx.size()) break;
        }
    }
    std::mt19937 rng(9001);
    std::uniform_int_distribution<long> dist(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> coeffs(gens.size());
        for (auto& e : coeffs) e = Rational(dist(rng));
        if (auto g = try_combo(coeffs)) return {ConjugacyStatus::found, g};
    }
    return {ConjugacyStatus::inconclusive, std::nullopt};
}

}  // namespace qweyl
