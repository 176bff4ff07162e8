#include "qweyl/polynomial.hpp"

#include <ostream>
#include <sstream>

#include "qweyl/errors.hpp"

namespace qweyl {

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
    Polynomial p(Rational(1));
    for (const auto& r : roots) p *= Polynomial{-r, Rational(1)};
    return p;
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::scale_arg(const Rational& s) const {
    std::vector<Rational> v(c_);
    Rational p(1);
    for (std::size_t k = 1; k < v.size(); ++k) {
        p *= s;
        v[k] *= p;
    }
    return from_coeffs(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return from_coeffs(std::move(v));
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
    if (b.is_zero()) throw division_error("Polynomial: division by zero polynomial");
    q = Polynomial();
    r = a;
    const Rational blc = b.lc();
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - db);
        const Rational c = r.lc() / blc;
        q += monomial(c, shift);
        // r -= c * x^shift * b, written out to avoid a temporary product
        for (std::size_t k = 0; k < b.c_.size(); ++k) r.c_[k + shift] -= c * b.c_[k];
        r.trim();
    }
}

Polynomial Polynomial::exact_div(const Polynomial& b) const {
    Polynomial q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero())
        throw division_error("Polynomial: non-exact division (remainder of degree " +
                             std::to_string(r.degree()) + ")");
    return q;
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw division_error("Polynomial: monic of zero polynomial");
    return *this * lc().inv();
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial acc(Rational(1)), base = *this;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

int Polynomial::root_order(const Rational& a) const {
    if (is_zero()) throw division_error("Polynomial: root order in zero polynomial");
    const Polynomial lin{-a, Rational(1)};
    Polynomial p = *this;
    int m = 0;
    while (p(a).is_zero()) {
        p = p.exact_div(lin);
        ++m;
        if (p.is_zero()) break;
    }
    return m;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = a.is_one() && k > 0;
        if (!unit) os << a.str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace qweyl
