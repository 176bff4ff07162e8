#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qweyl/matrix.hpp"

namespace qweyl {

// Fraction-free determinant (Bareiss).  Exact over both coefficient rings.
Rational det(const RatMatrix& m);
Polynomial det(const PolyMatrix& m);

// Reduced row echelon form.  Pivot choice is the first nonzero entry in each
// column, scanning rows top to bottom, so the result is deterministic.
RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank(const RatMatrix& m);

// Basis of the right null space.  Free columns are taken in increasing order
// and each vector is scaled so its first nonzero entry equals 1.
std::vector<std::vector<Rational>> kernel(const RatMatrix& m);
std::vector<std::vector<Rational>> left_kernel(const RatMatrix& m);

struct LinearSolution {
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> homogeneous;
};

// General solution of a*x = b, or nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear(const RatMatrix& a,
                                           const std::vector<Rational>& b);

RatMatrix inverse(const RatMatrix& m);  // throws singular_error

std::vector<Rational> mat_vec(const RatMatrix& m, const std::vector<Rational>& v);

// Maintains a growing independent set of vectors of fixed dimension.
// try_add keeps the original vector and returns false on linear dependence.
class IncrementalBasis {
public:
    explicit IncrementalBasis(std::size_t dim) : dim_(dim) {}

    bool try_add(const std::vector<Rational>& v);
    bool in_span(const std::vector<Rational>& v) const;

    std::size_t size() const { return vecs_.size(); }
    std::size_t dim() const { return dim_; }
    const std::vector<std::vector<Rational>>& vectors() const { return vecs_; }

private:
    std::vector<Rational> reduce(std::vector<Rational> v) const;

    std::size_t dim_;
    std::vector<std::vector<Rational>> vecs_;
    std::vector<std::vector<Rational>> echelon_;   // leading 1, sorted by pivot
    std::vector<std::size_t> pivots_;
};

}  // namespace qweyl
