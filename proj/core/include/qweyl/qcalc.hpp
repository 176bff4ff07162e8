#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/errors.hpp"

namespace qweyl {

using Complex = std::complex<double>;
using ScalarFn = std::function<Complex(Complex)>;

// Numeric context for Jackson sums: base q, relative truncation tolerance,
// and a hard cap on the number of summed terms.
struct QContext {
    Complex q;
    double trunc_tol = 1e-12;
    int max_terms = 1000000;

    void validate() const;  // requires 0 < |q| < 1 and trunc_tol > 0
};

// One endpoint of an integration ray from 0: a finite point tau, or the
// ray through tau extended to infinity (two-sided lattice tau*q^n, n in Z).
struct Endpoint {
    Complex tau;
    bool infinite = false;
};

// Weighted interval; [lower, upper] stands for [0,upper] - [0,lower].
struct PathTerm {
    Complex coeff;
    Endpoint lower;
    Endpoint upper;
};

// Formal combination of q-intervals used as an integration contour.
class JacksonPath {
public:
    static JacksonPath zero_to(Complex tau);
    static JacksonPath zero_to_inf(Complex tau);
    static JacksonPath segment(Complex a, Complex b);

    JacksonPath scaled(Complex c) const;
    friend JacksonPath operator+(JacksonPath a, const JacksonPath& b);
    friend JacksonPath operator-(JacksonPath a, const JacksonPath& b);

    const std::vector<PathTerm>& terms() const { return terms_; }

private:
    std::vector<PathTerm> terms_;
};

// Truncated Jackson sum of f over the path.  Scalar and vector forms; the
// vector form truncates on the max-norm of the term.  last_term, when given,
// receives the magnitude of the last included term.
Complex jackson_integral(const ScalarFn& f, const JacksonPath& path,
                         const QContext& ctx, double* last_term = nullptr);
std::vector<Complex> jackson_integral(
    const std::function<std::vector<Complex>(Complex)>& f, std::size_t dim,
    const JacksonPath& path, const QContext& ctx, double* last_term = nullptr);

// prod_{k>=0} (1 - x q^k), truncated once |x q^k| < trunc_tol.
Complex qpochhammer_inf(Complex x, const QContext& ctx);

// Kernel ratio of the q-Euler transform, parametrized by qlam = q^lambda.
// Throws pole_error naming t when a denominator factor vanishes.
Complex euler_kernel(Complex t, Complex x, Complex qlam, const QContext& ctx);

// q-Euler transform of f evaluated at x.  By default the x^lambda prefactor
// is omitted (all verified identities are homogeneous in it); pass
// apply_prefactor = true to multiply by exp(lambda log x) with the principal
// branch of lambda = log(qlam)/log(q).
Complex euler_transform(const ScalarFn& f, Complex qlam,
                        const JacksonPath& path, Complex x, const QContext& ctx,
                        bool apply_prefactor = false);

// [h(t)] evaluated over the boundary of the path: for [0,tau] this is
// h(tau) - lim h(tau q^n); rays extend the limit on both ends.
Complex boundary_bracket(const ScalarFn& h, const JacksonPath& path,
                         const QContext& ctx);

enum class LemmaId { q_leibniz, jackson_D, jackson_T, euler_T, euler_D };

LemmaId lemma_from_name(const std::string& name);  // throws parse_error
std::string lemma_name(LemmaId id);

// Max over an internal sample grid of |LHS - RHS| for the named identity,
// boundary terms included.  q_leibniz uses g as the second factor (default:
// g = f); the other identities integrate over the given path.
double verify_lemma(LemmaId id, const ScalarFn& f, const JacksonPath& path,
                    const QContext& ctx, Complex qlam,
                    const std::optional<ScalarFn>& g = std::nullopt);

}  // namespace qweyl
