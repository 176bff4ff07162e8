#include "qweyl/qcalc.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace qweyl {

namespace {

using VecFn = std::function<std::vector<Complex>(Complex)>;

double vnorm(const std::vector<Complex>& v) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
}

// One ray of a Jackson sum: (1-q) * sum over the lattice tau*q^n.  For a
// finite endpoint n runs over 0,1,2,...; an infinite endpoint adds the
// outward side n = -1,-2,... which must pass a decay probe.
std::vector<Complex> ray_sum(const VecFn& f, std::size_t dim, const Endpoint& e,
                             const QContext& ctx, double* last_term) {
    std::vector<Complex> acc(dim, Complex(0.0));
    if (last_term) *last_term = 0.0;
    if (std::abs(e.tau) == 0.0) return acc;

    auto run_side = [&](Complex factor) {
        Complex node = e.tau;
        if (factor != Complex(1.0)) node *= factor;  // outward side starts at tau/q
        int small_streak = 0;
        double prev_mag = -1.0;
        for (int n = 0; n < ctx.max_terms; ++n) {
            std::vector<Complex> val = f(node);
            double mag = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                val[i] *= node;
                mag = std::max(mag, std::abs(val[i]));
                acc[i] += val[i];
            }
            if (last_term) *last_term = mag;
            if (factor != Complex(1.0)) {
                // decay probe for the unbounded side
                if (n >= 8 && prev_mag >= 0.0 && mag > prev_mag)
                    throw truncation_error("integrand grows along infinite ray",
                                           mag);
                prev_mag = mag;
            }
            if (mag < ctx.trunc_tol * (1.0 + vnorm(acc))) {
                if (++small_streak >= 2) return;
            } else {
                small_streak = 0;
            }
            node *= (factor == Complex(1.0)) ? ctx.q : factor;
        }
        throw truncation_error("Jackson sum did not converge within max_terms",
                               last_term ? *last_term : 0.0);
    };

    run_side(Complex(1.0));                 // tau, tau q, tau q^2, ...
    if (e.infinite) run_side(1.0 / ctx.q);  // tau/q, tau/q^2, ...

    const Complex pref = Complex(1.0) - ctx.q;
    for (auto& z : acc) z *= pref;
    return acc;
}

Complex limit_along(const ScalarFn& h, Complex tau, Complex step,
                    const QContext& ctx) {
    Complex node = tau * step;
    Complex prev = h(node);
    for (int n = 1; n < ctx.max_terms; ++n) {
        node *= step;
        const Complex cur = h(node);
        if (std::abs(cur - prev) < ctx.trunc_tol * (1.0 + std::abs(cur)))
            return cur;
        prev = cur;
    }
    throw truncation_error("boundary limit did not settle", std::abs(prev));
}

// Bracket contribution of a single ray [0, e].
Complex ray_bracket(const ScalarFn& h, const Endpoint& e, const QContext& ctx) {
    if (std::abs(e.tau) == 0.0) return Complex(0.0);
    const Complex at_zero = limit_along(h, e.tau, ctx.q, ctx);
    const Complex outer =
        e.infinite ? limit_along(h, e.tau, 1.0 / ctx.q, ctx) : h(e.tau);
    return outer - at_zero;
}

std::string complex_str(Complex z) {
    std::ostringstream os;
    os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
    return os.str();
}

}  // namespace

void QContext::validate() const {
    const double a = std::abs(q);
    if (!(a > 0.0) || !(a < 1.0))
        throw degeneracy_error("q must satisfy 0 < |q| < 1");
    if (!(trunc_tol > 0.0)) throw degeneracy_error("trunc_tol must be positive");
    if (max_terms <= 0) throw degeneracy_error("max_terms must be positive");
}

JacksonPath JacksonPath::zero_to(Complex tau) {
    JacksonPath p;
    p.terms_.push_back({Complex(1.0), {Complex(0.0), false}, {tau, false}});
    return p;
}

JacksonPath JacksonPath::zero_to_inf(Complex tau) {
    JacksonPath p;
    p.terms_.push_back({Complex(1.0), {Complex(0.0), false}, {tau, true}});
    return p;
}

JacksonPath JacksonPath::segment(Complex a, Complex b) {
    JacksonPath p;
    p.terms_.push_back({Complex(1.0), {a, false}, {b, false}});
    return p;
}

JacksonPath JacksonPath::scaled(Complex c) const {
    if (std::abs(c) == 0.0 || !std::isfinite(std::abs(c)))
        throw degeneracy_error("path coefficient must be finite and nonzero");
    JacksonPath p = *this;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

JacksonPath operator+(JacksonPath a, const JacksonPath& b) {
    a.terms_.insert(a.terms_.end(), b.terms_.begin(), b.terms_.end());
    return a;
}

JacksonPath operator-(JacksonPath a, const JacksonPath& b) {
    return a + b.scaled(Complex(-1.0));
}

std::vector<Complex> jackson_integral(const VecFn& f, std::size_t dim,
                                      const JacksonPath& path,
                                      const QContext& ctx, double* last_term) {
    ctx.validate();
    std::vector<Complex> acc(dim, Complex(0.0));
    double worst = 0.0;
    for (const auto& term : path.terms()) {
        double lt = 0.0;
        const std::vector<Complex> up = ray_sum(f, dim, term.upper, ctx, &lt);
        worst = std::max(worst, lt);
        const std::vector<Complex> lo = ray_sum(f, dim, term.lower, ctx, &lt);
        worst = std::max(worst, lt);
        for (std::size_t i = 0; i < dim; ++i)
            acc[i] += term.coeff * (up[i] - lo[i]);
    }
    if (last_term) *last_term = worst;
    return acc;
}

Complex jackson_integral(const ScalarFn& f, const JacksonPath& path,
                         const QContext& ctx, double* last_term) {
    const VecFn vf = [&f](Complex t) { return std::vector<Complex>{f(t)}; };
    return jackson_integral(vf, 1, path, ctx, last_term)[0];
}

Complex qpochhammer_inf(Complex x, const QContext& ctx) {
    ctx.validate();
    Complex prod(1.0);
    Complex z = x;
    for (int k = 0; k < ctx.max_terms; ++k) {
        if (std::abs(z) < ctx.trunc_tol) return prod;
        prod *= Complex(1.0) - z;
        z *= ctx.q;
    }
    throw truncation_error("q-Pochhammer product did not converge",
                           std::abs(z));
}

Complex euler_kernel(Complex t, Complex x, Complex qlam, const QContext& ctx) {
    ctx.validate();
    const Complex z_num = (ctx.q / qlam) * (t / x);
    const Complex z_den = ctx.q * (t / x);
    // expanded product so a vanishing denominator factor can be reported
    Complex den(1.0);
    Complex z = z_den;
    for (int k = 0; k < ctx.max_terms; ++k) {
        if (std::abs(z) < ctx.trunc_tol) break;
        const Complex factor = Complex(1.0) - z;
        if (std::abs(factor) < 1e-13)
            throw pole_error("kernel pole at node t = " + complex_str(t));
        den *= factor;
        z *= ctx.q;
    }
    return qpochhammer_inf(z_num, ctx) / den;
}

Complex euler_transform(const ScalarFn& f, Complex qlam,
                        const JacksonPath& path, Complex x, const QContext& ctx,
                        bool apply_prefactor) {
    const ScalarFn integrand = [&](Complex t) {
        return f(t) * euler_kernel(t, x, qlam, ctx);
    };
    Complex value = jackson_integral(integrand, path, ctx);
    if (apply_prefactor) {
        const Complex lambda = std::log(qlam) / std::log(ctx.q);
        value *= std::exp(lambda * std::log(x));
    }
    return value;
}

Complex boundary_bracket(const ScalarFn& h, const JacksonPath& path,
                         const QContext& ctx) {
    ctx.validate();
    Complex acc(0.0);
    for (const auto& term : path.terms())
        acc += term.coeff *
               (ray_bracket(h, term.upper, ctx) - ray_bracket(h, term.lower, ctx));
    return acc;
}

LemmaId lemma_from_name(const std::string& name) {
    if (name == "q_leibniz") return LemmaId::q_leibniz;
    if (name == "jackson_D") return LemmaId::jackson_D;
    if (name == "jackson_T") return LemmaId::jackson_T;
    if (name == "euler_T") return LemmaId::euler_T;
    if (name == "euler_D") return LemmaId::euler_D;
    throw parse_error("unknown lemma name: " + name);
}

std::string lemma_name(LemmaId id) {
    switch (id) {
        case LemmaId::q_leibniz: return "q_leibniz";
        case LemmaId::jackson_D: return "jackson_D";
        case LemmaId::jackson_T: return "jackson_T";
        case LemmaId::euler_T: return "euler_T";
        case LemmaId::euler_D: return "euler_D";
    }
    throw parse_error("unknown lemma id");
}

double verify_lemma(LemmaId id, const ScalarFn& f, const JacksonPath& path,
                    const QContext& ctx, Complex qlam,
                    const std::optional<ScalarFn>& g) {
    ctx.validate();
    const Complex q = ctx.q;
    const Complex one(1.0);

    const ScalarFn shift_f = [&](Complex t) { return f(q * t); };
    const ScalarFn diff_f = [&](Complex t) {
        return (f(t) - f(q * t)) / ((one - q) * t);
    };

    switch (id) {
        case LemmaId::q_leibniz: {
            const ScalarFn& gg = g ? *g : f;
            std::mt19937 rng(424242);
            std::uniform_real_distribution<double> dist(-3.0, 3.0);
            double worst = 0.0;
            for (int k = 0; k < 20; ++k) {
                Complex x(dist(rng), dist(rng));
                if (std::abs(x) < 0.1) x += Complex(1.0, 1.0);
                const Complex lhs =
                    (f(x) * gg(x) - f(q * x) * gg(q * x)) / ((one - q) * x);
                const Complex dg = (gg(x) - gg(q * x)) / ((one - q) * x);
                const Complex df = (f(x) - f(q * x)) / ((one - q) * x);
                const Complex rhs = f(q * x) * dg + gg(x) * df;
                worst = std::max(worst, std::abs(lhs - rhs));
            }
            return worst;
        }
        case LemmaId::jackson_D: {
            const Complex lhs = jackson_integral(diff_f, path, ctx);
            const Complex rhs = boundary_bracket(f, path, ctx);
            return std::abs(lhs - rhs);
        }
        case LemmaId::jackson_T: {
            const Complex lhs = jackson_integral(shift_f, path, ctx);
            const ScalarFn tf = [&](Complex t) { return t * f(t); };
            const Complex rhs = jackson_integral(f, path, ctx) / q -
                                ((one - q) / q) * boundary_bracket(tf, path, ctx);
            return std::abs(lhs - rhs);
        }
        case LemmaId::euler_T:
        case LemmaId::euler_D: {
            static const std::vector<Complex> grid = {
                {2.17, 0.0}, {-1.13, 0.0}, {5.31, 0.0},
                {1.3, 0.7},  {-0.4, -1.2}, {0.9, -2.1}};
            double worst = 0.0;
            for (const Complex& x : grid) {
                const ScalarFn ratio = [&](Complex t) {
                    return (one - t / (qlam * x)) / (one - t / x) * f(t) *
                           euler_kernel(t, x, qlam, ctx);
                };
                Complex lhs, rhs;
                if (id == LemmaId::euler_T) {
                    lhs = euler_transform(shift_f, qlam, path, x, ctx);
                    const ScalarFn h = [&](Complex t) { return t * ratio(t); };
                    rhs = euler_transform(f, qlam, path, q * x, ctx) / q -
                          ((one - q) / q) * boundary_bracket(h, path, ctx);
                } else {
                    lhs = euler_transform(diff_f, qlam, path, x, ctx);
                    rhs = (euler_transform(f, qlam, path, x, ctx) / qlam -
                           euler_transform(f, qlam, path, q * x, ctx)) /
                              ((one - q) * x) +
                          boundary_bracket(ratio, path, ctx);
                }
                worst = std::max(worst, std::abs(lhs - rhs));
            }
            return worst;
        }
    }
    throw parse_error("unknown lemma id");
}

}  // namespace qweyl
