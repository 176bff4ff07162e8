#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "qweyl/errors.hpp"
#include "qweyl/linalg.hpp"
#include "qweyl/matrix.hpp"
#include "qweyl/polynomial.hpp"
#include "qweyl/rational.hpp"
#include "qweyl/smith.hpp"

using namespace qweyl;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

// Independent determinant oracle: cofactor expansion along the first row.
template <typename T>
T oracle_det(const Matrix<T>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    if (n == 1) return m(0, 0);
    T acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix<T> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(i - 1, cc++) = m(i, c);
            }
        }
        T term = m(0, j) * oracle_det(minor);
        if (j % 2)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

// Independent rank oracle: largest k admitting a nonzero k x k minor.
std::size_t oracle_rank(const RatMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    auto combinations = [](std::size_t total, std::size_t k) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            out.push_back(idx);
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == total - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        return out;
    };
    for (std::size_t k = std::min(r, c); k >= 1; --k) {
        for (const auto& ri : combinations(r, k))
            for (const auto& ci : combinations(c, k)) {
                RatMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        sub(i, j) = m(ri[i], ci[j]);
                if (!oracle_det(sub).is_zero()) return k;
            }
    }
    return 0;
}

RatMatrix random_rat_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<long> dist(-3, 3);
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = R(dist(rng));
    return m;
}

PolyMatrix random_poly_matrix(std::mt19937& rng, std::size_t n, int maxdeg) {
    std::uniform_int_distribution<long> dist(-2, 2);
    std::uniform_int_distribution<int> ddist(0, maxdeg);
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> cs(static_cast<std::size_t>(ddist(rng)) + 1);
            for (auto& x : cs) x = R(dist(rng));
            m(i, j) = Polynomial::from_coeffs(cs);
        }
    return m;
}

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
    CHECK(R(1, 2) + R(1, 3) == R(5, 6));
    CHECK(R(2, 4) == R(1, 2));
    CHECK(R(-6, -4) == R(3, 2));
    CHECK(R(7, 3) * R(3, 7) == R(1));
    CHECK(R(1, 2) / R(1, 4) == R(2));
    CHECK(Rational::parse("22/7") == R(22, 7));
    CHECK(Rational::parse("-5") == R(-5));
    CHECK(pow(R(2, 3), 3) == R(8, 27));
    CHECK(pow(R(2, 3), -2) == R(9, 4));
    CHECK(pow(R(5), 0) == R(1));
    CHECK(R(-3, 4).abs() == R(3, 4));
    CHECK(R(0).is_zero());
    CHECK(R(4, 4).is_one());
    CHECK(R(6, 3).is_integer());
    CHECK_FALSE(R(1, 3).is_integer());
    CHECK(R(-2).sign() == -1);
    CHECK_THROWS_AS(R(1).operator/=(R(0)), division_error);
    CHECK_THROWS_AS(Rational(1, 0), division_error);
    CHECK_THROWS_AS(Rational::parse("abc"), parse_error);
    CHECK(R(3, 7).inv() == R(7, 3));
    CHECK(R(1, 2) < R(2, 3));
    CHECK(R(22, 7).to_double() == doctest::Approx(22.0 / 7.0));
}

TEST_CASE("polynomial construction and evaluation") {
    const Polynomial p{R(1), R(-2), R(1)};  // 1 - 2x + x^2
    CHECK(p.degree() == 2);
    CHECK(p(R(1)) == R(0));
    CHECK(p(R(3)) == R(4));
    CHECK(p == Polynomial::from_roots({R(1), R(1)}));
    CHECK(Polynomial::x().degree() == 1);
    CHECK(Polynomial(R(0)).is_zero());
    CHECK(Polynomial(R(0)).degree() == -1);
    CHECK(Polynomial::monomial(R(3), 4).coeff(4) == R(3));
    CHECK(Polynomial::monomial(R(3), 4).coeff(2) == R(0));
    CHECK(p.coeff(17) == R(0));

    // trailing zero coefficients must be trimmed
    CHECK(Polynomial::from_coeffs({R(1), R(0), R(0)}).degree() == 0);

    const Polynomial q = p.scale_arg(R(2));  // p(2x) = 1 - 4x + 4x^2
    CHECK(q(R(1, 2)) == p(R(1)));
    CHECK(q.coeff(1) == R(-4));
    CHECK(q.coeff(2) == R(4));
}

TEST_CASE("polynomial ring operations") {
    std::mt19937 rng(7001);
    std::uniform_int_distribution<long> dist(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> ac(5), bc(3);
        for (auto& x : ac) x = R(dist(rng));
        for (auto& x : bc) x = R(dist(rng));
        const Polynomial a = Polynomial::from_coeffs(ac);
        Polynomial b = Polynomial::from_coeffs(bc);
        if (b.is_zero()) b = Polynomial{R(1), R(2)};
        Polynomial quo, rem;
        Polynomial::divmod(a, b, quo, rem);
        CHECK(quo * b + rem == a);
        CHECK(rem.degree() < b.degree());
        CHECK((a * b).exact_div(b) == a);
    }
    const Polynomial low{R(1), R(1)};
    const Polynomial high{R(1), R(0), R(1)};
    CHECK_THROWS_AS(low.exact_div(high), division_error);
    Polynomial q2, r2;
    CHECK_THROWS_AS(Polynomial::divmod(Polynomial(R(1)), Polynomial(R(0)), q2, r2),
                    division_error);

    const Polynomial f = Polynomial::from_roots({R(1), R(2), R(2)});
    const Polynomial g = Polynomial::from_roots({R(2), R(5)}) * R(3);
    CHECK(Polynomial::gcd(f, g) == Polynomial::from_roots({R(2)}));
    CHECK(Polynomial::gcd(f, Polynomial(R(0))) == f.monic());

    CHECK(f.root_order(R(2)) == 2);
    CHECK(f.root_order(R(1)) == 1);
    CHECK(f.root_order(R(7)) == 0);
    CHECK((g * R(2)).monic().lc() == R(1));

    const Polynomial h{R(2), R(1)};
    CHECK(h.pow(3) == h * h * h);
    CHECK(h.pow(0) == Polynomial(R(1)));
}

TEST_CASE("matrix shape and block operations") {
    RatMatrix a{{R(1), R(2)}, {R(3), R(4)}};
    RatMatrix b{{R(0), R(1)}, {R(1), R(0)}};
    CHECK((a * b) == RatMatrix{{R(2), R(1)}, {R(4), R(3)}});
    CHECK((a + b - b) == a);
    CHECK(a.transpose()(0, 1) == R(3));
    CHECK(RatMatrix::identity(2).is_identity());
    CHECK((a - a).is_zero());
    CHECK((-a)(0, 0) == R(-1));
    CHECK((R(2) * a)(1, 1) == R(8));

    const RatMatrix h = RatMatrix::hstack(a, b);
    CHECK(h.cols() == 4);
    CHECK(h.block(0, 2, 2, 2) == b);
    const RatMatrix v = RatMatrix::vstack(a, b);
    CHECK(v.rows() == 4);
    CHECK(v.block(2, 0, 2, 2) == b);
    RatMatrix z(3, 3);
    z.set_block(1, 1, RatMatrix{{R(5)}});
    CHECK(z(1, 1) == R(5));
    CHECK(z(0, 0) == R(0));

    CHECK_THROWS_AS(a * RatMatrix(3, 3), shape_error);
    CHECK_THROWS_AS(a + RatMatrix(3, 3), shape_error);
    CHECK_THROWS_AS(a.block(1, 1, 2, 2), shape_error);
    CHECK_THROWS_AS(a(2, 0), shape_error);

    const RatMatrix fc = RatMatrix::from_columns({{R(1), R(2)}, {R(3), R(4)}});
    CHECK(fc(0, 1) == R(3));
    CHECK(fc.column_vector(1) == std::vector<Rational>{R(3), R(4)});

    const PolyMatrix pm = promote(a);
    CHECK(evaluate(pm, R(10)) == a);
    CHECK(degree(pm) == 0);
    PolyMatrix xm(1, 1);
    xm(0, 0) = Polynomial{R(1), R(1), R(1)};
    CHECK(degree(xm) == 2);
    CHECK(coefficient_of(xm, 2)(0, 0) == R(1));
    CHECK(scale_arg(xm, R(2))(0, 0).coeff(2) == R(4));
}

TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937 rng(7002);
    for (int trial = 0; trial < 20; ++trial) {
        const RatMatrix m = random_rat_matrix(rng, 4, 4);
        CHECK(det(m) == oracle_det(m));
    }
    for (int trial = 0; trial < 8; ++trial) {
        const PolyMatrix m = random_poly_matrix(rng, 3, 2);
        const Polynomial d = det(m);
        CHECK(d == oracle_det(m));
        // cross-check through evaluation at scattered points
        for (long x = -3; x <= 3; ++x)
            CHECK(d(R(x)) == det(evaluate(m, R(x))));
    }
    // Vandermonde determinant in closed form
    const std::vector<Rational> xs = {R(1, 2), R(-1), R(3)};
    RatMatrix vmat(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) vmat(i, j) = pow(xs[i], (long)j);
    Rational expect(1);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) expect *= xs[j] - xs[i];
    CHECK(det(vmat) == expect);
    CHECK_THROWS_AS(det(RatMatrix(2, 3)), shape_error);
}

TEST_CASE("rank agrees with largest nonzero minor") {
    std::mt19937 rng(7003);
    for (int trial = 0; trial < 25; ++trial) {
        const RatMatrix m = random_rat_matrix(rng, 4, 5);
        CHECK(rank(m) == oracle_rank(m));
        CHECK(rank(m.transpose()) == rank(m));
    }
    CHECK(rank(RatMatrix(3, 3)) == 0);
    CHECK(rank(RatMatrix::identity(4)) == 4);
}

TEST_CASE("kernel vectors annihilate the matrix") {
    std::mt19937 rng(7004);
    for (int trial = 0; trial < 25; ++trial) {
        const RatMatrix m = random_rat_matrix(rng, 3, 5);
        const auto basis = kernel(m);
        CHECK(basis.size() == m.cols() - rank(m));
        IncrementalBasis ib(m.cols());
        for (const auto& v : basis) {
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Rational dot(0);
                for (std::size_t j = 0; j < m.cols(); ++j) dot += m(i, j) * v[j];
                CHECK(dot.is_zero());
            }
            std::size_t lead = 0;
            while (lead < v.size() && v[lead].is_zero()) ++lead;
            REQUIRE(lead < v.size());
            CHECK(v[lead] == R(1));
            CHECK(ib.try_add(v));
        }
        // left kernel rows annihilate from the left
        for (const auto& w : left_kernel(m)) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                Rational dot(0);
                for (std::size_t i = 0; i < m.rows(); ++i) dot += w[i] * m(i, j);
                CHECK(dot.is_zero());
            }
        }
    }
    // kernel output must not depend on call order: rerun gives same basis
    const RatMatrix fixed{{R(1), R(2), R(3)}, {R(2), R(4), R(6)}};
    CHECK(kernel(fixed) == kernel(fixed));
    CHECK(kernel(fixed).size() == 2);
}

TEST_CASE("linear solve returns particular plus homogeneous") {
    std::mt19937 rng(7005);
    for (int trial = 0; trial < 20; ++trial) {
        const RatMatrix a = random_rat_matrix(rng, 3, 4);
        std::vector<Rational> x0(4);
        std::uniform_int_distribution<long> dist(-3, 3);
        for (auto& e : x0) e = R(dist(rng));
        std::vector<Rational> b(3, R(0));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) b[i] += a(i, j) * x0[j];
        const auto sol = solve_linear(a, b);
        REQUIRE(sol.has_value());
        for (std::size_t i = 0; i < 3; ++i) {
            Rational dot(0);
            for (std::size_t j = 0; j < 4; ++j) dot += a(i, j) * sol->particular[j];
            CHECK(dot == b[i]);
        }
        CHECK(sol->homogeneous.size() == 4 - rank(a));
    }
    // inconsistent system
    const RatMatrix a{{R(1), R(1)}, {R(1), R(1)}};
    CHECK_FALSE(solve_linear(a, {R(0), R(1)}).has_value());
    CHECK(solve_linear(a, {R(1), R(1)}).has_value());
}

TEST_CASE("inverse roundtrip and singular detection") {
    std::mt19937 rng(7006);
    int invertible_seen = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const RatMatrix m = random_rat_matrix(rng, 3, 3);
        if (det(m).is_zero()) {
            CHECK_THROWS_AS(inverse(m), singular_error);
            continue;
        }
        ++invertible_seen;
        const RatMatrix mi = inverse(m);
        CHECK((m * mi).is_identity());
        CHECK((mi * m).is_identity());
    }
    CHECK(invertible_seen > 5);
}

TEST_CASE("incremental basis rejects dependent vectors") {
    IncrementalBasis ib(3);
    CHECK(ib.try_add({R(1), R(2), R(3)}));
    CHECK(ib.try_add({R(0), R(1), R(1)}));
    CHECK_FALSE(ib.try_add({R(1), R(3), R(4)}));  // sum of the first two
    CHECK(ib.in_span({R(2), R(5), R(7)}));
    CHECK_FALSE(ib.in_span({R(0), R(0), R(1)}));
    CHECK(ib.try_add({R(0), R(0), R(1)}));
    CHECK(ib.size() == 3);
    CHECK_FALSE(ib.try_add({R(5), R(5), R(5)}));
    CHECK(ib.vectors()[0] == std::vector<Rational>{R(1), R(2), R(3)});
}

TEST_CASE("smith form diagonalizes with unimodular factors") {
    auto check_smith = [](const PolyMatrix& m) {
        const SmithResult s = smith_form(m);
        const std::size_t n = m.rows();
        PolyMatrix d(n, n);
        for (std::size_t i = 0; i < n; ++i) d(i, i) = s.divisors[i];
        CHECK(s.u * m * s.v == d);
        CHECK(det(s.u).degree() == 0);
        CHECK(det(s.v).degree() == 0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            // each divisor is a multiple of the next
            if (s.divisors[i + 1].is_zero()) {
                CHECK(s.divisors[i].is_zero());
                continue;
            }
            Polynomial q, r;
            Polynomial::divmod(s.divisors[i], s.divisors[i + 1], q, r);
            CHECK(r.is_zero());
        }
        for (const auto& p : s.divisors)
            if (!p.is_zero()) CHECK(p.lc() == R(1));
        return s;
    };

    // diag(x, x^2 - x) -> divisors x(x-1), x
    PolyMatrix m1(2, 2);
    m1(0, 0) = Polynomial::from_roots({R(0)});
    m1(1, 1) = Polynomial::from_roots({R(0), R(1)});
    const SmithResult s1 = check_smith(m1);
    CHECK(s1.divisors[0] == Polynomial::from_roots({R(0), R(1)}));
    CHECK(s1.divisors[1] == Polynomial::from_roots({R(0)}));

    // x*I - J for a nilpotent Jordan block: divisors x^2, 1
    PolyMatrix m2(2, 2);
    m2(0, 0) = Polynomial::x();
    m2(0, 1) = Polynomial(R(-1));
    m2(1, 1) = Polynomial::x();
    const SmithResult s2 = check_smith(m2);
    CHECK(s2.divisors[0] == Polynomial::x() * Polynomial::x());
    CHECK(s2.divisors[1] == Polynomial(R(1)));

    // singular polynomial matrix: one zero divisor, listed first
    PolyMatrix m3(2, 2);
    m3(0, 0) = Polynomial::x();
    m3(0, 1) = Polynomial::x();
    m3(1, 0) = Polynomial::x();
    m3(1, 1) = Polynomial::x();
    const SmithResult s3 = check_smith(m3);
    CHECK(s3.divisors[0].is_zero());
    CHECK(s3.divisors[1] == Polynomial::x());

    std::mt19937 rng(7007);
    for (int trial = 0; trial < 10; ++trial)
        check_smith(random_poly_matrix(rng, 3, 2));
}
