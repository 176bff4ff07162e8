#include "qweyl/roots.hpp"

#include <gmpxx.h>

#include <algorithm>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

// positive divisors of n > 0; trial division up to 1e6, then one
// pseudoprime remainder is accepted
std::vector<mpz_class> divisors_of(mpz_class n) {
    std::vector<std::pair<mpz_class, int>> factors;
    auto take = [&](const mpz_class& p) {
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k > 0) factors.emplace_back(p, k);
    };
    take(2);
    for (mpz_class d = 3; d <= 1000000 && d * d <= n; d += 2) take(d);
    if (n > 1) {
        if (!mpz_probab_prime_p(n.get_mpz_t(), 40)) {
            throw degeneracy_error("rational_roots: coefficient is too composite to factor");
        }
        factors.emplace_back(n, 1);
    }
    std::vector<mpz_class> divs{mpz_class(1)};
    for (const auto& [p, k] : factors) {
        const std::size_t base = divs.size();
        mpz_class pw(1);
        for (int e = 1; e <= k; ++e) {
            pw *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
        }
        if (divs.size() > 200000) {
            throw degeneracy_error("rational_roots: divisor set is too large");
        }
    }
    return divs;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw degeneracy_error("rational_roots: zero polynomial");
    std::vector<std::pair<Rational, int>> found;
    Polynomial work = p;

    // strip the root at zero first
    int zero_mult = 0;
    while (work.degree() > 0 && work.coeff(0).is_zero()) {
        work = work.exact_div(Polynomial::monomial(Rational(1), 1));
        ++zero_mult;
    }
    if (zero_mult > 0) found.emplace_back(Rational(0), zero_mult);
    if (work.degree() < 1) {
        return found;
    }

    // primitive integer form
    mpz_class den_lcm(1);
    for (const Rational& c : work.coeffs()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den().get_mpz_t());
    }
    std::vector<mpz_class> ic;
    mpz_class content(0);
    for (const Rational& c : work.coeffs()) {
        mpz_class v = c.raw().get_num() * (den_lcm / c.raw().get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ic.push_back(std::move(v));
    }
    for (auto& v : ic) v /= content;

    const mpz_class a0 = abs(ic.front());
    const mpz_class an = abs(ic.back());
    for (const mpz_class& dp : divisors_of(a0)) {
        for (const mpz_class& dq : divisors_of(an)) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), dp.get_mpz_t(), dq.get_mpz_t());
            if (g != 1) continue;
            for (int sign : {1, -1}) {
                const Rational cand(mpq_class(sign * dp, dq));
                if (!work(cand).is_zero()) continue;
                found.emplace_back(cand, work.root_order(cand));
            }
        }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return found;
}

}  // namespace qweyl
