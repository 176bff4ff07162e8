#include "qweyl/linalg.hpp"

#include <utility>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

Rational ring_div(const Rational& a, const Rational& b) { return a / b; }
Polynomial ring_div(const Polynomial& a, const Polynomial& b) {
    return a.exact_div(b);
}

template <typename T>
void swap_rows(Matrix<T>& m, std::size_t r1, std::size_t r2) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r1, j), m(r2, j));
}

// Bareiss one-step fraction-free elimination.  Every division is exact in the
// coefficient ring, so the routine works unchanged over Rational and over
// Polynomial.
template <typename T>
T bareiss_det(Matrix<T> a) {
    if (!a.is_square()) throw shape_error("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return T(1);
    T prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k).is_zero()) ++piv;
        if (piv == n) return T(0);
        if (piv != k) {
            swap_rows(a, k, piv);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = ring_div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
            a(i, k) = T(0);
        }
        prev = a(k, k);
    }
    T d = a(n - 1, n - 1);
    return negate ? T(0) - d : d;
}

}  // namespace

Rational det(const RatMatrix& m) { return bareiss_det(m); }
Polynomial det(const PolyMatrix& m) { return bareiss_det(m); }

RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row) swap_rows(m, row, piv);
        const Rational inv_p = m(row, col).inv();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv_p;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(row, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++row;
    }
    return m;
}

std::size_t rank(const RatMatrix& m) {
    std::vector<std::size_t> pivots;
    rref(m, &pivots);
    return pivots.size();
}

std::vector<std::vector<Rational>> kernel(const RatMatrix& m) {
    std::vector<std::size_t> pivots;
    const RatMatrix r = rref(m, &pivots);
    std::vector<std::vector<Rational>> basis;
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < m.cols(); ++col) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        std::vector<Rational> v(m.cols(), Rational(0));
        v[col] = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r(i, col);
        std::size_t lead = 0;
        while (v[lead].is_zero()) ++lead;
        const Rational inv_l = v[lead].inv();
        for (auto& e : v) e *= inv_l;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Rational>> left_kernel(const RatMatrix& m) {
    return kernel(m.transpose());
}

std::optional<LinearSolution> solve_linear(const RatMatrix& a,
                                           const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw shape_error("rhs length mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    aug.set_block(0, 0, a);
    for (std::size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
    std::vector<std::size_t> pivots;
    const RatMatrix r = rref(aug, &pivots);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    LinearSolution sol;
    sol.particular.assign(a.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        sol.particular[pivots[i]] = r(i, a.cols());
    sol.homogeneous = kernel(a);
    return sol;
}

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw shape_error("inverse of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::size_t> pivots;
    const RatMatrix r = rref(RatMatrix::hstack(m, RatMatrix::identity(n)), &pivots);
    if (pivots.size() != n || (n && pivots[n - 1] != n - 1))
        throw singular_error("matrix is singular");
    return r.block(0, n, n, n);
}

std::vector<Rational> mat_vec(const RatMatrix& m, const std::vector<Rational>& v) {
    if (v.size() != m.cols()) throw shape_error("vector length mismatch");
    std::vector<Rational> out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

bool IncrementalBasis::try_add(const std::vector<Rational>& v) {
    if (v.size() != dim_) throw shape_error("vector dimension mismatch");
    std::vector<Rational> red = reduce(v);
    std::size_t lead = 0;
    while (lead < dim_ && red[lead].is_zero()) ++lead;
    if (lead == dim_) return false;
    const Rational inv_l = red[lead].inv();
    for (auto& e : red) e *= inv_l;
    // keep echelon rows ordered by pivot so reduce() stays a single sweep
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    echelon_.insert(echelon_.begin() + static_cast<long>(pos), std::move(red));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), lead);
    vecs_.push_back(v);
    return true;
}

bool IncrementalBasis::in_span(const std::vector<Rational>& v) const {
    if (v.size() != dim_) throw shape_error("vector dimension mismatch");
    const std::vector<Rational> red = reduce(v);
    for (const auto& e : red)
        if (!e.is_zero()) return false;
    return true;
}

std::vector<Rational> IncrementalBasis::reduce(std::vector<Rational> v) const {
    for (std::size_t k = 0; k < echelon_.size(); ++k) {
        const Rational& c = v[pivots_[k]];
        if (c.is_zero()) continue;
        const Rational f = c;
        for (std::size_t j = pivots_[k]; j < dim_; ++j)
            v[j] -= f * echelon_[k][j];
    }
    return v;
}

}  // namespace qweyl
