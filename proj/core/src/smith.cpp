#include "qweyl/smith.hpp"

#include <utility>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

void swap_rows(PolyMatrix& m, std::size_t r1, std::size_t r2) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r1, j), m(r2, j));
}

void swap_cols(PolyMatrix& m, std::size_t c1, std::size_t c2) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, c1), m(i, c2));
}

// row_i -= q * row_t
void row_axpy(PolyMatrix& m, std::size_t i, std::size_t t, const Polynomial& q) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= q * m(t, j);
}

// col_j -= q * col_t
void col_axpy(PolyMatrix& m, std::size_t j, std::size_t t, const Polynomial& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) -= q * m(i, t);
}

void row_add(PolyMatrix& m, std::size_t dst, std::size_t src) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += m(src, j);
}

void scale_row(PolyMatrix& m, std::size_t i, const Rational& c) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= c;
}

// Lowest-degree nonzero entry in the trailing block, ties broken by smallest
// (row, col) in row-major order.  Returns false when the block is zero.
bool find_pivot(const PolyMatrix& a, std::size_t t, std::size_t& pr,
                std::size_t& pc) {
    int best = -1;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Polynomial& e = a(i, j);
            if (e.is_zero()) continue;
            if (best < 0 || e.degree() < best) {
                best = e.degree();
                pr = i;
                pc = j;
            }
        }
    return best >= 0;
}

}  // namespace

SmithResult smith_form(const PolyMatrix& m) {
    if (!m.is_square()) throw shape_error("smith form of non-square matrix");
    const std::size_t n = m.rows();
    PolyMatrix a = m;
    PolyMatrix u = PolyMatrix::identity(n);
    PolyMatrix v = PolyMatrix::identity(n);

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            std::size_t pr = t, pc = t;
            if (!find_pivot(a, t, pr, pc)) break;
            if (pr != t) {
                swap_rows(a, t, pr);
                swap_rows(u, t, pr);
            }
            if (pc != t) {
                swap_cols(a, t, pc);
                swap_cols(v, t, pc);
            }
            bool reduced_something = false;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a(i, t).is_zero()) continue;
                Polynomial q, r;
                Polynomial::divmod(a(i, t), a(t, t), q, r);
                row_axpy(a, i, t, q);
                row_axpy(u, i, t, q);
                if (!a(i, t).is_zero()) reduced_something = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j).is_zero()) continue;
                Polynomial q, r;
                Polynomial::divmod(a(t, j), a(t, t), q, r);
                col_axpy(a, j, t, q);
                col_axpy(v, j, t, q);
                if (!a(t, j).is_zero()) reduced_something = true;
            }
            if (reduced_something) continue;
            // pivot now divides its row and column; enforce divisibility of
            // the trailing block by folding a bad row into row t
            bool fixed = false;
            for (std::size_t i = t + 1; i < n && !fixed; ++i)
                for (std::size_t j = t + 1; j < n && !fixed; ++j) {
                    Polynomial q, r;
                    Polynomial::divmod(a(i, j), a(t, t), q, r);
                    if (!r.is_zero()) {
                        row_add(a, t, i);
                        row_add(u, t, i);
                        fixed = true;
                    }
                }
            if (!fixed) break;
        }
        if (!a(t, t).is_zero() && !(a(t, t).lc() == Rational(1))) {
            const Rational c = a(t, t).lc().inv();
            scale_row(a, t, c);
            scale_row(u, t, c);
        }
    }

    // reorder so each divisor divides its predecessor (zeros first)
    SmithResult res;
    res.divisors.resize(n);
    res.u = PolyMatrix(n, n);
    res.v = PolyMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        res.divisors[i] = a(n - 1 - i, n - 1 - i);
        for (std::size_t j = 0; j < n; ++j) {
            res.u(i, j) = u(n - 1 - i, j);
            res.v(j, i) = v(j, n - 1 - i);
        }
    }
    return res;
}

}  // namespace qweyl
