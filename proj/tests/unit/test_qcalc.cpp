#include <cmath>
#include <complex>

#include "doctest.h"
#include "qweyl/errors.hpp"
#include "qweyl/qcalc.hpp"

using namespace qweyl;

namespace {

QContext ctx03() { return QContext{Complex(0.3), 1e-13, 1000000}; }

const ScalarFn f_id = [](Complex t) { return t; };
const ScalarFn f_poly = [](Complex t) { return t * t + Complex(1.0); };
const ScalarFn f_zero = [](Complex) { return Complex(0.0); };

}  // namespace

TEST_CASE("context validation") {
    QContext bad{Complex(1.5), 1e-12, 100};
    CHECK_THROWS_AS(bad.validate(), degeneracy_error);
    bad.q = Complex(0.0);
    CHECK_THROWS_AS(bad.validate(), degeneracy_error);
    bad.q = Complex(0.5);
    bad.trunc_tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), degeneracy_error);
    bad.trunc_tol = 1e-12;
    bad.max_terms = 0;
    CHECK_THROWS_AS(bad.validate(), degeneracy_error);
    bad.max_terms = 10;
    CHECK_NOTHROW(bad.validate());
}

TEST_CASE("jackson integral closed forms") {
    const QContext ctx = ctx03();
    const JacksonPath c = JacksonPath::zero_to(Complex(1.0));

    // geometric series: (1-q) sum q^{2n} = 1/(1+q)
    const Complex v = jackson_integral(f_id, c, ctx);
    CHECK(std::abs(v - Complex(1.0 / 1.3)) < 1e-12);

    CHECK(std::abs(jackson_integral(f_zero, c, ctx)) == 0.0);

    // integrating the q-difference of t^2 telescopes to 1
    const ScalarFn d_tsq = [&](Complex t) {
        const Complex q = ctx.q;
        return (t * t - q * q * t * t) / ((Complex(1.0) - q) * t);
    };
    CHECK(std::abs(jackson_integral(d_tsq, c, ctx) - Complex(1.0)) < 1e-12);

    // scaling the endpoint: integral over [0,tau] of t is tau^2/(1+q)
    const Complex v2 =
        jackson_integral(f_id, JacksonPath::zero_to(Complex(2.0)), ctx);
    CHECK(std::abs(v2 - Complex(4.0 / 1.3)) < 1e-12);

    // segment [a,b] = [0,b] - [0,a]
    const Complex vs =
        jackson_integral(f_id, JacksonPath::segment(Complex(1.0), Complex(2.0)), ctx);
    CHECK(std::abs(vs - Complex(3.0 / 1.3)) < 1e-12);

    double last = 1.0;
    jackson_integral(f_id, c, ctx, &last);
    CHECK(last < 1e-12);
}

TEST_CASE("jackson integral linearity and path additivity") {
    const QContext ctx = ctx03();
    const JacksonPath c1 = JacksonPath::zero_to(Complex(1.0));
    const JacksonPath c2 = JacksonPath::zero_to(Complex(0.5));
    const Complex a(2.0, 1.0), b(-1.0, 0.5);

    const ScalarFn combo = [&](Complex t) { return a * f_id(t) + b * f_poly(t); };
    const Complex lhs = jackson_integral(combo, c1, ctx);
    const Complex rhs = a * jackson_integral(f_id, c1, ctx) +
                        b * jackson_integral(f_poly, c1, ctx);
    CHECK(std::abs(lhs - rhs) < 1e-12);

    // combining weighted paths reproduces the weighted sum bitwise
    const JacksonPath both = c1.scaled(a) + c2.scaled(b);
    const Complex vc = jackson_integral(f_poly, both, ctx);
    const Complex vm = a * jackson_integral(f_poly, c1, ctx) +
                       b * jackson_integral(f_poly, c2, ctx);
    CHECK(vc == vm);

    CHECK_THROWS_AS(c1.scaled(Complex(0.0)), degeneracy_error);
}

TEST_CASE("jackson integral failure modes") {
    QContext tiny = ctx03();
    tiny.max_terms = 3;
    CHECK_THROWS_AS(
        jackson_integral(f_id, JacksonPath::zero_to(Complex(1.0)), tiny),
        truncation_error);

    // terms grow outward on the infinite ray for f(t) = t
    CHECK_THROWS_AS(
        jackson_integral(f_id, JacksonPath::zero_to_inf(Complex(1.0)), ctx03()),
        truncation_error);

    try {
        jackson_integral(f_id, JacksonPath::zero_to(Complex(1.0)), tiny);
        CHECK(false);
    } catch (const truncation_error& e) {
        CHECK(e.last_term > 0.0);
    }
}

TEST_CASE("two sided ray with decaying integrand") {
    const QContext ctx = ctx03();
    const ScalarFn decay = [](Complex t) {
        return 1.0 / (Complex(1.0) + t * t);
    };
    // telescoping over the full lattice: limit at infinity minus limit at 0
    const double res = verify_lemma(LemmaId::jackson_D, decay,
                                    JacksonPath::zero_to_inf(Complex(1.0)),
                                    ctx, Complex(0.7));
    CHECK(res < 1e-10);
    const Complex br = boundary_bracket(decay, JacksonPath::zero_to_inf(Complex(1.0)), ctx);
    CHECK(std::abs(br - Complex(-1.0)) < 1e-10);
}

TEST_CASE("q pochhammer product") {
    const QContext ctx{Complex(0.5), 1e-13, 1000000};
    CHECK(qpochhammer_inf(Complex(0.0), ctx) == Complex(1.0));
    CHECK(std::abs(qpochhammer_inf(Complex(1.0), ctx)) == 0.0);

    // independent 200-term product
    Complex expect(1.0);
    Complex z(0.5);
    for (int k = 0; k < 200; ++k) {
        expect *= Complex(1.0) - z;
        z *= 0.5;
    }
    CHECK(std::abs(qpochhammer_inf(Complex(0.5), ctx) - expect) < 1e-13);
    CHECK(std::abs(qpochhammer_inf(Complex(0.5), ctx) - Complex(0.2887880951)) <
          1e-9);
}

TEST_CASE("euler kernel behavior") {
    const QContext ctx = ctx03();
    // at qlam = 1 the kernel ratio collapses to 1 on every node
    for (double t : {0.9, 0.27, -0.5, 1e-4})
        CHECK(std::abs(euler_kernel(Complex(t), Complex(2.17), Complex(1.0), ctx) -
                       Complex(1.0)) < 1e-14);
    CHECK(std::abs(euler_kernel(Complex(0.0), Complex(2.0), Complex(0.7), ctx) -
                   Complex(1.0)) < 1e-14);
    // denominator factor hits zero when t/x = q^{-k-1}
    CHECK_THROWS_AS(
        euler_kernel(Complex(1.0), Complex(0.3), Complex(0.7), ctx), pole_error);
}

TEST_CASE("euler transform reduces to jackson integral at qlam 1") {
    const QContext ctx = ctx03();
    const JacksonPath c = JacksonPath::zero_to(Complex(1.0));
    const Complex et = euler_transform(f_poly, Complex(1.0), c, Complex(2.17), ctx);
    const Complex ji = jackson_integral(f_poly, c, ctx);
    CHECK(std::abs(et - ji) < 1e-13);

    CHECK(std::abs(euler_transform(f_zero, Complex(0.7), c, Complex(2.17), ctx)) ==
          0.0);

    // prefactor with qlam = q is multiplication by x
    const Complex x(1.7);
    const Complex bare = euler_transform(f_id, ctx.q, c, x, ctx, false);
    const Complex with = euler_transform(f_id, ctx.q, c, x, ctx, true);
    CHECK(std::abs(with - x * bare) < 1e-12);
}

TEST_CASE("difference and transform identities hold") {
    const QContext ctx = ctx03();
    const Complex qlam(0.7);
    const JacksonPath c1 = JacksonPath::zero_to(Complex(1.0));
    const JacksonPath cm =
        JacksonPath::zero_to(Complex(1.0)) - JacksonPath::zero_to(Complex(0.5));

    const ScalarFn g = [](Complex t) { return t * t * t; };
    const ScalarFn fsq = [](Complex t) { return t * t; };
    CHECK(verify_lemma(LemmaId::q_leibniz, fsq, c1, ctx, qlam, g) < 1e-12);
    CHECK(verify_lemma(LemmaId::q_leibniz, f_poly, c1, ctx, qlam) < 1e-12);

    for (const JacksonPath* path : {&c1, &cm}) {
        for (const ScalarFn* f : {&f_id, &f_poly}) {
            CHECK(verify_lemma(LemmaId::jackson_D, *f, *path, ctx, qlam) < 1e-10);
            CHECK(verify_lemma(LemmaId::jackson_T, *f, *path, ctx, qlam) < 1e-10);
            CHECK(verify_lemma(LemmaId::euler_T, *f, *path, ctx, qlam) < 1e-10);
            CHECK(verify_lemma(LemmaId::euler_D, *f, *path, ctx, qlam) < 1e-10);
        }
    }
}

TEST_CASE("lemma names round trip") {
    for (LemmaId id : {LemmaId::q_leibniz, LemmaId::jackson_D, LemmaId::jackson_T,
                       LemmaId::euler_T, LemmaId::euler_D})
        CHECK(lemma_from_name(lemma_name(id)) == id);
    CHECK_THROWS_AS(lemma_from_name("nope"), parse_error);
}
