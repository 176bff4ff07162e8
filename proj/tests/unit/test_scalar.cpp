#include <doctest.h>

#include <algorithm>
#include <array>
#include <vector>

#include "qweyl/cubic.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/linalg.hpp"
#include "qweyl/params.hpp"
#include "qweyl/scalar.hpp"

using namespace qweyl;

namespace {

CubicSystem sample_system(std::uint32_t seed) {
    const ParamSet p = sample_params(seed);
    return build_system(p, Rational(1), Rational(1, 2), Rational(2), Rational(1, 3));
}

// the 3x3 elimination determinant, recomputed without the library pipeline
Polynomial lowest_minor(const CubicSystem& sys) {
    const Rational& q = sys.params.q;
    const PolyMatrix a = sys.matrix();
    const PolyMatrix m2 = scale_arg(a, q) * a;
    const PolyMatrix m3 = scale_arg(a, q * q) * m2;
    PolyMatrix rows(3, 3);
    for (std::size_t j = 0; j < 3; ++j) {
        rows(0, j) = a(0, j);
        rows(1, j) = m2(0, j);
        rows(2, j) = m3(0, j);
    }
    return -det(rows);
}

std::vector<ConfigEntry> sorted_entries(std::vector<ConfigEntry> v) {
    std::sort(v.begin(), v.end(), [](const ConfigEntry& a, const ConfigEntry& b) {
        if (a.root != b.root) return a.root < b.root;
        return a.depth < b.depth;
    });
    return v;
}

bool has_entry(const std::vector<ConfigEntry>& v, const Rational& root, int mult, int depth) {
    const ConfigEntry want{root, mult, depth};
    return std::find(v.begin(), v.end(), want) != v.end();
}

Rational rat(int n, int d) { return Rational(n, d); }

}  // namespace

TEST_CASE("lowest elimination minor is divisible by the system determinant") {
    for (std::uint32_t seed : {3u, 7u, 19u}) {
        const CubicSystem sys = sample_system(seed);
        const Polynomial p0 = lowest_minor(sys);
        const Polynomial da = det(sys.matrix());
        CHECK_NOTHROW((void)p0.exact_div(da));
    }
}

TEST_CASE("reduction produces four degree-7 coefficients with pinned root sets") {
    const CubicSystem sys = sample_system(5);
    const ParamSet& p = sys.params;
    const Rational& q = p.q;
    const ReductionResult rr = reduce_to_scalar(sys);
    const ScalarOperator& op = rr.op;

    CHECK(op.P.size() == 4);
    for (const auto& poly : op.P) CHECK(poly.degree() == 7);
    CHECK(op.q == q);

    // the new root joins both boundary coefficients: P3(f) = 0, P0(f/q) = 0
    const Rational pf = op.P[3](rr.f);
    const Rational pq = op.P[0](rr.f / q);
    CHECK(pf == Rational(0));
    CHECK(pq == Rational(0));

    // leading coefficient: monic with roots f and -e_i/q, -e_i/q^2 (i <= 3)
    std::vector<Rational> top_roots{rr.f};
    for (int i = 1; i <= 3; ++i) {
        top_roots.push_back(-p.e_at(i) / q);
        top_roots.push_back(-p.e_at(i) / (q * q));
    }
    const Polynomial top = Polynomial::from_roots(top_roots);
    CHECK(op.P[3] == top);

    // lowest coefficient: roots -e_4..-e_7, -e_8/q, -e_9/q and f/q
    std::vector<Rational> low_roots;
    for (int i = 4; i <= 7; ++i) low_roots.push_back(-p.e_at(i));
    low_roots.push_back(-p.e_at(8) / q);
    low_roots.push_back(-p.e_at(9) / q);
    low_roots.push_back(rr.f / q);
    const Polynomial low = Polynomial::from_roots(low_roots);
    CHECK(op.P[0].monic() == low);
}

TEST_CASE("reduction is invariant under diagonal gauge of the factor data") {
    const ParamSet p = sample_params(11);
    const CubicSystem sys = build_system(p, Rational(2), Rational(1, 3), Rational(-1), Rational(3, 2));
    const std::vector<Rational>& a = sys.accessory;
    REQUIRE(a.size() == 6);

    const Rational d1(2), d2(3), d3(5);
    const std::array<Rational, 6> gauged = {a[0] * d1 / d2, a[1] * d1 / d3, a[2] * d2 / d3,
                                            a[3] * d2 / d1, a[4] * d3 / d1, a[5] * d3 / d2};
    const CubicSystem twin = build_from_accessory(p, gauged);

    const ReductionResult r1 = reduce_to_scalar(sys);
    const ReductionResult r2 = reduce_to_scalar(twin);
    CHECK(r1.f == r2.f);
    for (int j = 0; j < 4; ++j) CHECK(r1.op.P[j] == r2.op.P[j]);

    // the closed form sees only a1, a2, a3, a6 and must agree across the gauge
    CHECK(f_closed_form(sys) == f_closed_form(twin));
}

TEST_CASE("point configuration of a reduced member") {
    const CubicSystem sys = sample_system(5);
    const ParamSet& p = sys.params;
    const Rational& q = p.q;
    const ReductionResult rr = reduce_to_scalar(sys);
    const PointConfiguration cfg = point_configuration(rr.op);

    // x = 0: one chain 1, q, q^2
    REQUIRE(cfg.x0.size() == 1);
    CHECK(cfg.x0[0].root == Rational(1));
    CHECK(cfg.x0[0].multiplicity == 1);
    CHECK(cfg.x0[0].depth == 3);

    // x = infinity: one chain based at kappa e1 e2 e3 descending through q
    REQUIRE(cfg.xinf.size() == 1);
    CHECK(cfg.xinf[0].root == p.c123());
    CHECK(cfg.xinf[0].depth == 3);

    // T = 0: seven simple roots
    REQUIRE(cfg.t0.size() == 7);
    for (int i = 4; i <= 7; ++i) CHECK(has_entry(cfg.t0, -p.e_at(i), 1, 1));
    CHECK(has_entry(cfg.t0, -p.e_at(8) / q, 1, 1));
    CHECK(has_entry(cfg.t0, -p.e_at(9) / q, 1, 1));
    CHECK(has_entry(cfg.t0, rr.f / q, 1, 1));

    // T = infinity: three chains of depth 2 and the apparent root alone
    REQUIRE(cfg.tinf.size() == 4);
    for (int i = 1; i <= 3; ++i) CHECK(has_entry(cfg.tinf, -p.e_at(i) / q, 1, 2));
    CHECK(has_entry(cfg.tinf, rr.f, 1, 1));

    CHECK(cfg.diagram().find("chain 3") != std::string::npos);

    // both cross products equal f (e1 e2 e3)^2 / q^6
    const Rational want = rr.f * pow(p.e_at(1) * p.e_at(2) * p.e_at(3), 2) / pow(q, 6);
    const auto prods = qfuchs_products(cfg);
    CHECK(prods.first == want);
    CHECK(prods.second == want);
    CHECK(qfuchs_check(cfg));
}

TEST_CASE("configuration chains need the divisibility cascade, not just membership") {
    const Rational q(1, 2);
    const Polynomial p0 = Polynomial::from_roots({Rational(1), q});

    ScalarOperator chained;
    chained.q = q;
    chained.P.push_back(p0);
    chained.P.push_back(Polynomial::from_roots({Rational(1), Rational(7)}));
    PointConfiguration cfg = point_configuration(chained);
    REQUIRE(cfg.t0.size() == 1);
    CHECK(cfg.t0[0].root == Rational(1));
    CHECK(cfg.t0[0].depth == 2);

    ScalarOperator broken;
    broken.q = q;
    broken.P.push_back(p0);
    broken.P.push_back(Polynomial::from_roots({Rational(7), Rational(5)}));
    cfg = point_configuration(broken);
    const auto t0 = sorted_entries(cfg.t0);
    REQUIRE(t0.size() == 2);
    CHECK(has_entry(t0, Rational(1), 1, 1));
    CHECK(has_entry(t0, q, 1, 1));
}

TEST_CASE("configuration of a constant-coefficient operator") {
    const Rational a(3, 4);
    ScalarOperator op;
    op.q = Rational(1, 2);
    op.P.push_back(Polynomial(-a));
    op.P.push_back(Polynomial(Rational(1)));
    const PointConfiguration cfg = point_configuration(op);
    REQUIRE(cfg.x0.size() == 1);
    CHECK(cfg.x0[0].root == a);
    REQUIRE(cfg.xinf.size() == 1);
    CHECK(cfg.xinf[0].root == a);
    CHECK(cfg.t0.empty());
    CHECK(cfg.tinf.empty());
    CHECK(qfuchs_check(cfg));
}

TEST_CASE("configuration rejects irregular corners and irrational roots") {
    const Rational q(1, 2);
    ScalarOperator op;
    op.q = q;
    op.P.push_back(Polynomial::from_roots({Rational(0), Rational(1)}));  // P0(0) = 0
    op.P.push_back(Polynomial::from_roots({Rational(2), Rational(3)}));
    CHECK_THROWS_AS((void)point_configuration(op), degeneracy_error);

    ScalarOperator irr;
    irr.q = q;
    irr.P.push_back(Polynomial{Rational(-2), Rational(0), Rational(1)});  // x^2 - 2
    irr.P.push_back(Polynomial::from_roots({Rational(2), Rational(3)}));
    CHECK_THROWS_AS((void)point_configuration(irr), reduction_error);
}

TEST_CASE("cross products of a hand-built fifteen-point configuration") {
    // generic values for the four sides of a degree-4 operator layout
    const Rational q(1, 3);
    std::array<Rational, 16> e;
    for (int i = 1; i <= 15; ++i) e[i] = rat(2 * i + 1, i + 3);

    PointConfiguration cfg;
    cfg.q = q;
    cfg.x0 = {ConfigEntry{e[1], 1, 1}, ConfigEntry{e[2], 1, 1}, ConfigEntry{e[3], 1, 2}};
    cfg.xinf = {ConfigEntry{e[4], 1, 1}, ConfigEntry{e[5], 1, 1}, ConfigEntry{e[6], 1, 1},
                ConfigEntry{e[7], 1, 1}};
    cfg.t0 = {ConfigEntry{e[8], 1, 1}, ConfigEntry{e[9], 1, 1}, ConfigEntry{e[10], 1, 2},
              ConfigEntry{e[11], 1, 2}};
    cfg.tinf = {ConfigEntry{e[12], 1, 1}, ConfigEntry{e[13], 1, 1}, ConfigEntry{e[14], 1, 1},
                ConfigEntry{e[15], 1, 3}};

    const Rational left = e[1] * e[2] * e[3] * e[3] * q * e[12] * e[13] * e[14] *
                          pow(e[15], 3) / pow(q, 3);
    const Rational right = e[4] * e[5] * e[6] * e[7] * e[8] * e[9] * e[10] * e[10] * q *
                           e[11] * e[11] * q;
    const auto prods = qfuchs_products(cfg);
    CHECK(prods.first == left);
    CHECK(prods.second == right);
    CHECK_FALSE(qfuchs_check(cfg));  // generic values do not balance
}

TEST_CASE("apparent root passes the three-ratio test") {
    const CubicSystem sys = sample_system(9);
    const ReductionResult rr = reduce_to_scalar(sys);
    const Rational c = apparent_check(rr.op, rr.f);

    const Rational fq = rr.f / rr.op.q;
    CHECK(rr.op.P[3](fq) == c * rr.op.P[2](rr.f));
    CHECK(rr.op.P[2](fq) == c * rr.op.P[1](rr.f));
    CHECK(rr.op.P[1](fq) == c * rr.op.P[0](rr.f));

    // overall scaling changes nothing
    ScalarOperator scaled = rr.op;
    for (auto& poly : scaled.P) poly *= Rational(3, 7);
    CHECK(apparent_check(scaled, rr.f) == c);

    // a perturbed middle coefficient breaks the proportionality
    ScalarOperator bad = rr.op;
    bad.P[2] += Polynomial::monomial(Rational(1), 3);
    CHECK_THROWS_AS((void)apparent_check(bad, rr.f), reduction_error);
}

TEST_CASE("transcribed closed form matches the elimination on many members") {
    const ApexTableInfo info = apex_table_info();
    CHECK(info.numerator_terms == 71);
    CHECK(info.denominator_terms == 60);

    int checked = 0;
    for (std::uint32_t seed = 1; seed <= 12; ++seed) {
        const ParamSet p = sample_params(seed);
        const CubicSystem sys =
            build_system(p, Rational(1, 2), Rational(-1), Rational(3), Rational(2, 5));
        const ReductionResult rr = reduce_to_scalar(sys);
        CHECK(f_closed_form(sys) == rr.f);
        ++checked;
    }
    CHECK(checked == 12);
}

TEST_CASE("autonomous tuning lands the apparent root on -e7") {
    const ParamSet p = sample_params(4);
    const CubicSystem sys = tune_autonomous(p);
    CHECK(sys.accessory[0] == Rational(0));
    CHECK(sys.accessory[1] == Rational(1));

    const ReductionResult rr = reduce_to_scalar(sys);
    CHECK(rr.f == -p.e_at(7));

    // with generic multiplicative parameters the tuned root reaches only the
    // boundary coefficients: P0 and P3 pick up (x + e7), P1 picks up the
    // shifted root forced through the apparency chain, P2 stays clear
    const Polynomial at_e7 = Polynomial::from_roots({-p.e_at(7)});
    const Polynomial at_e7q = Polynomial::from_roots({-p.e_at(7) / p.q});
    Polynomial quo, rem;
    Polynomial::divmod(rr.op.P[0], at_e7, quo, rem);
    CHECK(rem.is_zero());
    Polynomial::divmod(rr.op.P[3], at_e7, quo, rem);
    CHECK(rem.is_zero());
    Polynomial::divmod(rr.op.P[1], at_e7q, quo, rem);
    CHECK(rem.is_zero());
    CHECK_FALSE(rr.op.P[1](-p.e_at(7)).is_zero());
    CHECK_FALSE(rr.op.P[2](-p.e_at(7)).is_zero());

    const AutonomizeReport part = autonomize(rr.op, p);
    CHECK_FALSE(part.common_factor);
    CHECK_FALSE(part.remainder.is_zero());
    CHECK(part.x_degree == 7);

    // a generic untuned member leaves a remainder as well
    const ReductionResult generic = reduce_to_scalar(sample_system(4));
    const AutonomizeReport neg = autonomize(generic.op, p);
    CHECK_FALSE(neg.common_factor);
    CHECK_FALSE(neg.remainder.is_zero());
    CHECK(neg.x_degree == 7);
}

TEST_CASE("merged seventh parameter turns the tuned operator into a pencil") {
    // e7 set equal to e1; the tuned root then heads a full geometric ladder
    // inside P3 and every coefficient divides by (x + e7)
    ParamSet p;
    p.q = Rational(1, 2);
    p.kappa = Rational(3, 5);
    const long ev[8] = {2, 3, 5, 7, 11, 13, 2, 17};
    Rational prod = pow(p.kappa, 3);
    for (int i = 1; i <= 8; ++i) {
        p.e_at(i) = Rational(ev[i - 1]);
        prod *= p.e_at(i);
    }
    p.e_at(9) = prod.inv();
    REQUIRE(p.e_at(7) == p.e_at(1));
    REQUIRE_NOTHROW(p.validate());

    const CubicSystem sys = tune_autonomous(p);
    const ReductionResult rr = reduce_to_scalar(sys);
    CHECK(rr.f == -p.e_at(7));

    const AutonomizeReport rep = autonomize(rr.op, p);
    CHECK(rep.common_factor);
    CHECK(rep.remainder.is_zero());
    CHECK(rep.x_degree == 6);
    CHECK(rep.t_degree == 3);

    // the divided pencil carries the eleven-point layout: geometric triples
    // at both corners, six simple roots at T=0, three doubles at T=infinity
    const PointConfiguration cfg = point_configuration(rep.quotient);
    REQUIRE(cfg.x0.size() == 1);
    CHECK(cfg.x0[0] == ConfigEntry{Rational(1), 1, 3});
    REQUIRE(cfg.xinf.size() == 1);
    CHECK(cfg.xinf[0] == ConfigEntry{p.c123(), 1, 3});

    std::vector<Rational> simple;
    for (const auto& entry : cfg.t0) {
        CHECK(entry.depth == 1);
        for (int m = 0; m < entry.multiplicity; ++m) simple.push_back(entry.root);
    }
    std::vector<Rational> expected = {-p.e_at(4),       -p.e_at(5),       -p.e_at(6),
                                      -p.e_at(1) / p.q, -p.e_at(8) / p.q, -p.e_at(9) / p.q};
    std::sort(simple.begin(), simple.end());
    std::sort(expected.begin(), expected.end());
    CHECK(simple == expected);

    REQUIRE(cfg.tinf.size() == 3);
    for (const auto& entry : cfg.tinf) {
        CHECK(entry.depth == 2);
        CHECK(entry.multiplicity == 1);
    }
    CHECK(qfuchs_check(cfg));
}

TEST_CASE("operator validate guards its invariants") {
    const ReductionResult rr = reduce_to_scalar(sample_system(2));
    CHECK_NOTHROW(rr.op.validate());

    ScalarOperator bad = rr.op;
    bad.P.pop_back();
    CHECK_THROWS_AS(bad.validate(), shape_error);

    bad = rr.op;
    bad.P[1] += Polynomial::monomial(Rational(1), 9);
    CHECK_THROWS_AS(bad.validate(), consistency_error);

    bad = rr.op;
    bad.q = Rational(2);
    CHECK_THROWS_AS(bad.validate(), degeneracy_error);
}
