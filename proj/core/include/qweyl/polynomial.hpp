#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "qweyl/rational.hpp"

namespace qweyl {

// Dense univariate polynomial over Rational. Coefficients are stored in
// ascending degree order with no trailing zeros; the zero polynomial has an
// empty coefficient vector and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c) { c_.push_back(c); trim(); }
    Polynomial(int c) : Polynomial(Rational(c)) {}
    Polynomial(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }

    static Polynomial from_coeffs(std::vector<Rational> ascending) {
        Polynomial p;
        p.c_ = std::move(ascending);
        p.trim();
        return p;
    }
    // c * x^k
    static Polynomial monomial(const Rational& c, std::size_t k) {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return from_coeffs(std::move(v));
    }
    static Polynomial x() { return monomial(1, 1); }
    // prod (x - r) over the given roots
    static Polynomial from_roots(const std::vector<Rational>& roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Coefficient of x^k (zero beyond the degree).
    const Rational& coeff(std::size_t k) const {
        static const Rational zero(0);
        return k < c_.size() ? c_[k] : zero;
    }
    // Leading coefficient (zero for the zero polynomial).
    Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator()(const Rational& x) const;  // evaluation (Horner)

    // p(s * x): substitute a scalar multiple of the variable.
    Polynomial scale_arg(const Rational& s) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(const Polynomial& a) { return a * Rational(-1); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Euclidean division: a = q*b + r with deg r < deg b. Throws
    // division_error if b is zero.
    static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
    // Division that must leave remainder zero; throws division_error otherwise.
    Polynomial exact_div(const Polynomial& b) const;

    // Monic greatest common divisor (zero if both inputs are zero).
    static Polynomial gcd(Polynomial a, Polynomial b);

    Polynomial monic() const;
    Polynomial pow(unsigned e) const;

    // Multiplicity of the root a (zero if p(a) != 0; throws on zero polynomial).
    int root_order(const Rational& a) const;

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace qweyl
