#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "qweyl/errors.hpp"

namespace qweyl {

// Arbitrary-precision rational number, always kept in canonical reduced form
// with positive denominator. Thin value wrapper over GMP's mpq_class; the
// rest of the library only sees this type.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw division_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Parses "p" or "p/q" in base 10 (optional leading '-').
    static Rational parse(const std::string& s) {
        mpq_class v;
        if (s.empty() || v.set_str(s, 10) != 0)
            throw parse_error("Rational: cannot parse '" + s + "'");
        if (v.get_den() == 0) throw division_error("Rational: zero denominator in '" + s + "'");
        v.canonicalize();
        return Rational(std::move(v));
    }

    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inv() const {
        if (is_zero()) throw division_error("Rational: inverse of zero");
        mpq_class r;
        mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
        return Rational(std::move(r));
    }

    Rational num() const { return Rational(mpq_class(v_.get_num())); }
    Rational den() const { return Rational(mpq_class(v_.get_den())); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw division_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    mpq_class v_;
};

// b^e for integer e (negative e inverts, so b must be nonzero then).
inline Rational pow(const Rational& b, long e) {
    if (e < 0) return pow(b.inv(), -e);
    Rational acc(1), base = b;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace qweyl
