#include "qweyl/spectral.hpp"

#include <algorithm>
#include <sstream>

#include "qweyl/errors.hpp"
#include "qweyl/linalg.hpp"
#include "qweyl/roots.hpp"
#include "qweyl/smith.hpp"

namespace qweyl {

namespace {

Polynomial char_poly(const RatMatrix& m) {
    PolyMatrix c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            c(i, j) = Polynomial::from_coeffs({-m(i, j), Rational(i == j ? 1 : 0)});
        }
    }
    return det(c);
}

// rank-difference partition per rational eigenvalue, eigenvalues ascending
std::vector<std::pair<Rational, std::vector<int>>> endpoint_partitions(const RatMatrix& m) {
    const std::size_t n = m.rows();
    const auto roots = rational_roots(char_poly(m));
    std::size_t covered = 0;
    for (const auto& [root, mult] : roots) covered += static_cast<std::size_t>(mult);
    if (covered != n) {
        throw degeneracy_error("spectral_type: endpoint matrix has an irrational eigenvalue");
    }
    std::vector<std::pair<Rational, std::vector<int>>> out;
    for (const auto& [root, mult] : roots) {
        const RatMatrix shifted = m - root * RatMatrix::identity(n);
        std::vector<int> part;
        RatMatrix power = RatMatrix::identity(n);
        std::size_t prev = n;
        while (true) {
            power = power * shifted;
            const std::size_t cur = rank(power);
            if (cur == prev) break;
            part.push_back(static_cast<int>(prev - cur));
            prev = cur;
        }
        out.emplace_back(root, std::move(part));
    }
    return out;
}

std::vector<int> conjugate_partition(const std::vector<int>& part) {
    std::vector<int> conj;
    if (part.empty()) return conj;
    for (int j = 1; j <= part.front(); ++j) {
        int count = 0;
        for (int v : part) {
            if (v >= j) ++count;
        }
        conj.push_back(count);
    }
    return conj;
}

std::string section_str(const std::vector<std::pair<Rational, std::vector<int>>>& s) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [value, part] : s) {
        if (!first) os << ",";
        first = false;
        for (int v : part) os << v;
    }
    return os.str();
}

}  // namespace

std::string SpectralType::str() const {
    return "(" + section_str(at_zero) + ";" + section_str(at_infinity) + ";" +
           section_str(divisor) + ")";
}

SpectralType spectral_type(const PolyMatrix& a) {
    if (!a.is_square() || a.empty()) throw shape_error("spectral_type: square matrix required");
    const int d = degree(a);
    if (d < 0) throw degeneracy_error("spectral_type: zero matrix");

    SpectralType st;
    st.at_zero = endpoint_partitions(evaluate(a, Rational(0)));
    st.at_infinity = endpoint_partitions(coefficient_of(a, static_cast<std::size_t>(d)));

    const SmithResult smith = smith_form(a);
    if (smith.divisors.front().is_zero()) {
        throw degeneracy_error("spectral_type: determinant vanishes identically");
    }
    int divisor_degree = 0;
    for (const Polynomial& dk : smith.divisors) divisor_degree += dk.degree();
    const auto roots = rational_roots(smith.divisors.front());
    int covered = 0;
    for (const auto& [root, mult] : roots) {
        std::vector<int> orders;
        for (const Polynomial& dk : smith.divisors) {
            const int o = dk.root_order(root);
            if (o == 0) break;
            orders.push_back(o);
            covered += o;
        }
        st.divisor.emplace_back(root, conjugate_partition(orders));
    }
    if (covered != divisor_degree) {
        throw degeneracy_error("spectral_type: invariant factors have irrational roots");
    }
    return st;
}

}  // namespace qweyl
