#include "qweyl/scalar.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "apex_table.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/linalg.hpp"
#include "qweyl/roots.hpp"

namespace qweyl {

namespace {

// prod_{i<=3} (1 + s x / e_i), the gauge factor with the argument scaled by s
Polynomial gauge_factor(const ParamSet& p, const Rational& s) {
    Polynomial r(Rational(1));
    for (int i = 1; i <= 3; ++i) {
        const Rational ratio = s / p.e_at(i);
        r *= Polynomial{Rational(1), ratio};
    }
    return r;
}

// strip an exact x^3 factor
Polynomial strip_cube(const Polynomial& p, const char* label) {
    if (p.is_zero()) return p;
    const auto& c = p.coeffs();
    if (c.size() < 4 || !c[0].is_zero() || !c[1].is_zero() || !c[2].is_zero()) {
        throw consistency_error(std::string("elimination minor ") + label +
                                " is missing the x^3 factor");
    }
    return Polynomial::from_coeffs(std::vector<Rational>(c.begin() + 3, c.end()));
}

Polynomial strip_root(const Polynomial& p, const Rational& root, const char* label) {
    if (p.is_zero()) return p;
    if (!p(root).is_zero()) {
        throw consistency_error(std::string("elimination minor ") + label +
                                " does not vanish at the shared root " + root.str());
    }
    return p.exact_div(Polynomial::from_roots({root}));
}

bool divides(const Polynomial& d, const Polynomial& p) {
    if (p.is_zero()) return true;
    if (p.degree() < d.degree()) return false;
    Polynomial quo, rem;
    Polynomial::divmod(p, d, quo, rem);
    return rem.is_zero();
}

// Characteristic roots of one boundary side: the roots of slices[0] grouped
// into geometric chains base, base*step, ..., base*step^(k-1). Depth k is
// accepted when for every 1 <= i < k the slice i is divisible by
// prod_{m=0}^{k-1-i} (X - base*step^m); missing slices count as zero.
std::vector<ConfigEntry> side_entries(const std::vector<Polynomial>& slices,
                                      const Rational& step, const char* where,
                                      const char* var) {
    const Polynomial& top = slices.front();
    const auto roots = rational_roots(top);
    int found = 0;
    Polynomial leftover = top;
    for (const auto& rm : roots) {
        found += rm.second;
        for (int m = 0; m < rm.second; ++m)
            leftover = leftover.exact_div(Polynomial::from_roots({rm.first}));
    }
    if (found != top.degree()) {
        throw reduction_error(std::string("characteristic roots at ") + where +
                              " are not all rational; leftover factor " + leftover.str(var));
    }

    std::map<Rational, int> bag;
    for (const auto& rm : roots) bag[rm.first] += rm.second;

    std::vector<ConfigEntry> out;
    while (!bag.empty()) {
        // smallest root whose predecessor is absent starts the next chain
        auto it = bag.begin();
        while (it != bag.end() && bag.count(it->first / step) > 0) ++it;
        if (it == bag.end())
            throw consistency_error(std::string("no chain base among the roots at ") + where);
        const Rational base = it->first;

        int k = 1;
        while (bag.count(base * pow(step, k)) > 0) ++k;
        for (; k > 1; --k) {
            bool ok = true;
            for (int i = 1; i < k && ok; ++i) {
                if (i >= static_cast<int>(slices.size()) || slices[i].is_zero()) continue;
                std::vector<Rational> members;
                for (int m = 0; m + i <= k - 1; ++m) members.push_back(base * pow(step, m));
                ok = divides(Polynomial::from_roots(members), slices[i]);
            }
            if (ok) break;
        }

        for (int m = 0; m < k; ++m) {
            auto jt = bag.find(base * pow(step, m));
            if (--(jt->second) == 0) bag.erase(jt);
        }
        if (!out.empty() && out.back().root == base && out.back().depth == k)
            ++out.back().multiplicity;
        else
            out.push_back(ConfigEntry{base, 1, k});
    }
    return out;
}

Rational side_product(const std::vector<ConfigEntry>& entries, const Rational& step) {
    Rational prod(1);
    for (const auto& e : entries)
        for (int m = 0; m < e.depth; ++m)
            prod = prod * pow(e.root * pow(step, m), e.multiplicity);
    return prod;
}

void append_side(std::ostringstream& os, const char* name,
                 const std::vector<ConfigEntry>& entries) {
    os << name << ":";
    for (const auto& e : entries) {
        os << "  " << e.root.str();
        if (e.depth > 1) os << " (chain " << e.depth << ")";
        if (e.multiplicity > 1) os << " x" << e.multiplicity;
    }
    os << "\n";
}

// value order of the transcription: q, kappa, a1, a2, a3, a6, e1, e2, e3, e8, e9
std::array<Rational, 11> apex_values(const ParamSet& p, const std::array<Rational, 6>& a) {
    return {p.q,      p.kappa,  a[0],     a[1],     a[2],    a[5],
            p.e_at(1), p.e_at(2), p.e_at(3), p.e_at(8), p.e_at(9)};
}

Rational eval_table(const apex::ApexTable& t, const std::array<Rational, 11>& vals) {
    Rational sum(0);
    for (std::size_t i = 0; i < t.count; ++i) {
        Rational term(t.terms[i].coef);
        for (int v = 0; v < 11; ++v) {
            const int e = t.terms[i].exp[v];
            if (e > 0) term = term * pow(vals[v], e);
        }
        sum = sum + term;
    }
    return sum;
}

// same sum with the a3 slot (index 4) left symbolic
Polynomial eval_table_in_a3(const apex::ApexTable& t, const std::array<Rational, 11>& vals) {
    Polynomial sum;
    for (std::size_t i = 0; i < t.count; ++i) {
        Rational term(t.terms[i].coef);
        for (int v = 0; v < 11; ++v) {
            if (v == 4) continue;
            const int e = t.terms[i].exp[v];
            if (e > 0) term = term * pow(vals[v], e);
        }
        sum += Polynomial::monomial(term, t.terms[i].exp[4]);
    }
    return sum;
}

}  // namespace

void ScalarOperator::validate() const {
    if (P.size() != 4) throw shape_error("scalar operator must have T-order 3");
    if (!(Rational(0) < q) || !(q < Rational(1)))
        throw degeneracy_error("scalar operator needs 0 < q < 1");
    for (std::size_t j = 0; j < P.size(); ++j) {
        if (P[j].degree() != 7) {
            std::ostringstream os;
            os << "reduced coefficient P" << j << " has degree " << P[j].degree()
               << ", expected 7";
            throw consistency_error(os.str());
        }
    }
}

ReductionResult reduce_to_scalar(const CubicSystem& sys) {
    sys.validate();
    const ParamSet& p = sys.params;
    const Rational& q = p.q;

    const PolyMatrix a = sys.matrix();
    const PolyMatrix m2 = scale_arg(a, q) * a;
    const PolyMatrix m3 = scale_arg(a, q * q) * m2;

    // first rows of A, (TA)A, (T^2 A)(TA)A
    const Polynomial b1 = a(0, 0), b2 = a(0, 1), b3 = a(0, 2);
    const Polynomial c1 = m2(0, 0), c2 = m2(0, 1), c3 = m2(0, 2);
    const Polynomial d1 = m3(0, 0), d2 = m3(0, 1), d3 = m3(0, 2);

    std::array<Polynomial, 4> pr;
    pr[3] = b2 * c3 - b3 * c2;
    pr[2] = -(b2 * d3 - b3 * d2);
    pr[1] = c2 * d3 - c3 * d2;
    pr[0] = -(b1 * (c2 * d3 - c3 * d2) - b2 * (c1 * d3 - c3 * d1) + b3 * (c1 * d2 - c2 * d1));
    if (pr[3].is_zero())
        throw degeneracy_error("the elimination minors degenerate: P3 vanishes identically");

    static const char* labels[4] = {"p0", "p1", "p2", "p3"};
    for (int j = 0; j < 4; ++j) {
        pr[j] = strip_cube(pr[j], labels[j]);
        pr[j] = strip_root(pr[j], -p.e_at(8), labels[j]);
        pr[j] = strip_root(pr[j], -p.e_at(9), labels[j]);
    }

    if (pr[3].degree() != 1)
        throw degeneracy_error("the reduced leading coefficient is not linear in x");
    const Rational f = -pr[3].coeff(0) / pr[3].coeff(1);
    const Rational unit = pr[3].coeff(1).inv();
    for (auto& poly : pr) poly *= unit;

    // gauge bookkeeping: one factor prod_i (1 + q^m x/e_i) per T-power, the
    // shared copy in front of P0 cancelled
    const Polynomial gauge = gauge_factor(p, Rational(1));
    for (int i = 1; i <= 3; ++i)
        pr[0] = strip_root(pr[0], -p.e_at(i), labels[0]);
    std::vector<Polynomial> big(4);
    big[0] = pr[0] * (p.e_at(1) * p.e_at(2) * p.e_at(3));
    big[1] = pr[1];
    big[2] = pr[2] * gauge.scale_arg(q);
    big[3] = pr[3] * gauge.scale_arg(q) * gauge.scale_arg(q * q);

    const Rational lead = big[3].lc().inv();
    for (auto& poly : big) poly *= lead;

    ScalarOperator op{big, q};
    op.validate();

    // exact shape of the boundary coefficients
    const Polynomial p3_expected = Polynomial::from_roots(
        {f, -p.e_at(1) / q, -p.e_at(2) / q, -p.e_at(3) / q, -p.e_at(1) / (q * q),
         -p.e_at(2) / (q * q), -p.e_at(3) / (q * q)});
    if (op.P[3] != p3_expected)
        throw consistency_error("reduced P3 does not match its root product");
    const Polynomial p0_expected = Polynomial::from_roots(
        {-p.e_at(4), -p.e_at(5), -p.e_at(6), -p.e_at(7), -p.e_at(8) / q, -p.e_at(9) / q, f / q});
    if (op.P[0].monic() != p0_expected)
        throw consistency_error("reduced P0 does not match its root product");

    return ReductionResult{op, f};
}

PointConfiguration point_configuration(const ScalarOperator& op) {
    if (op.P.empty()) throw shape_error("empty operator");
    if (!(Rational(0) < op.q) || !(op.q < Rational(1)))
        throw degeneracy_error("point configuration needs 0 < q < 1");
    const std::size_t n = op.t_order();
    if (n == 0) throw shape_error("the operator has T-order 0");
    int m = 0;
    for (const auto& poly : op.P) m = std::max(m, poly.degree());

    // Fuchsian corners: both extreme x-slices of P0 and PN must be nonzero
    if (op.P.front()(Rational(0)).is_zero() || op.P.back()(Rational(0)).is_zero() ||
        op.P.front().coeff(m).is_zero() || op.P.back().coeff(m).is_zero()) {
        throw degeneracy_error("the operator is not regular at the four corners");
    }

    // x-slices: L_i(T) = sum_j coeff(P_j, i) T^j
    std::vector<Polynomial> xlow, xhigh;
    for (int i = 0; i <= m; ++i) {
        std::vector<Rational> c;
        for (std::size_t j = 0; j <= n; ++j) c.push_back(op.P[j].coeff(i));
        xlow.push_back(Polynomial::from_coeffs(c));
    }
    for (int i = m; i >= 0; --i) xhigh.push_back(xlow[i]);

    std::vector<Polynomial> tlow(op.P.begin(), op.P.end());
    std::vector<Polynomial> thigh(op.P.rbegin(), op.P.rend());

    const Rational qs = op.q;
    const Rational qi = op.q.inv();
    PointConfiguration cfg;
    cfg.q = op.q;
    cfg.x0 = side_entries(xlow, qs, "x = 0", "T");
    cfg.xinf = side_entries(xhigh, qi, "x = infinity", "T");
    cfg.t0 = side_entries(tlow, qs, "T = 0", "x");
    cfg.tinf = side_entries(thigh, qi, "T = infinity", "x");

    // each side must account for the full slice degree
    const auto weight = [](const std::vector<ConfigEntry>& v) {
        int w = 0;
        for (const auto& e : v) w += e.multiplicity * e.depth;
        return w;
    };
    if (weight(cfg.x0) != static_cast<int>(n) || weight(cfg.xinf) != static_cast<int>(n) ||
        weight(cfg.t0) != op.P.front().degree() || weight(cfg.tinf) != op.P.back().degree()) {
        throw consistency_error("chain weights do not add up to the side degrees");
    }
    return cfg;
}

std::string PointConfiguration::diagram() const {
    std::ostringstream os;
    append_side(os, "x=0   ", x0);
    append_side(os, "x=∞   ", xinf);
    append_side(os, "T_x=0 ", t0);
    append_side(os, "T_x=∞ ", tinf);
    return os.str();
}

std::pair<Rational, Rational> qfuchs_products(const PointConfiguration& cfg) {
    const Rational qs = cfg.q;
    const Rational qi = cfg.q.inv();
    const Rational left = side_product(cfg.x0, qs) * side_product(cfg.tinf, qi);
    const Rational right = side_product(cfg.xinf, qi) * side_product(cfg.t0, qs);
    return {left, right};
}

bool qfuchs_check(const PointConfiguration& cfg) {
    const auto pr = qfuchs_products(cfg);
    return pr.first == pr.second;
}

Rational apparent_check(const ScalarOperator& op, const Rational& f) {
    if (op.P.size() != 4) throw shape_error("apparent-root check expects T-order 3");
    const Rational fq = f / op.q;
    const std::array<Rational, 3> lhs = {op.P[3](fq), op.P[2](fq), op.P[1](fq)};
    const std::array<Rational, 3> rhs = {op.P[2](f), op.P[1](f), op.P[0](f)};
    if (rhs[0].is_zero() && rhs[1].is_zero() && rhs[2].is_zero())
        throw degeneracy_error("all three reference values vanish at the candidate root");

    bool have = false;
    Rational c(0);
    std::ostringstream seen;
    for (int i = 0; i < 3; ++i) {
        if (rhs[i].is_zero()) {
            if (!lhs[i].is_zero())
                throw reduction_error("the candidate root is not apparent: a ratio is infinite");
            continue;
        }
        const Rational cand = lhs[i] / rhs[i];
        seen << (have ? ", " : "") << cand.str();
        if (!have) {
            c = cand;
            have = true;
        } else if (cand != c) {
            throw reduction_error("the candidate root is not apparent: ratios " + seen.str() +
                                  " disagree");
        }
    }
    return c;
}

Rational f_closed_form(const ParamSet& params, const std::array<Rational, 6>& accessory) {
    const auto vals = apex_values(params, accessory);
    const Rational den = eval_table(apex::denominator(), vals);
    if (den.is_zero())
        throw degeneracy_error("the closed form of the apparent root has a vanishing denominator");
    return eval_table(apex::numerator(), vals) / den;
}

Rational f_closed_form(const CubicSystem& sys) {
    if (sys.accessory.size() != 6)
        throw shape_error("system carries no full accessory tuple");
    std::array<Rational, 6> a;
    for (int i = 0; i < 6; ++i) a[i] = sys.accessory[i];
    return f_closed_form(sys.params, a);
}

ApexTableInfo apex_table_info() {
    return {apex::numerator().count, apex::denominator().count};
}

AutonomizeReport autonomize(const ScalarOperator& op, const ParamSet& params) {
    const Polynomial factor = Polynomial::from_roots({-params.e_at(7)});
    AutonomizeReport rep;
    rep.common_factor = true;
    rep.t_degree = static_cast<int>(op.t_order());
    rep.x_degree = -1;
    std::vector<Polynomial> reduced;
    for (const auto& poly : op.P) {
        Polynomial quo, rem;
        Polynomial::divmod(poly, factor, quo, rem);
        if (!rem.is_zero()) {
            rep.common_factor = false;
            rep.remainder = rem;
            break;
        }
        reduced.push_back(quo);
    }
    const auto& coeffs = rep.common_factor ? reduced : op.P;
    for (const auto& poly : coeffs) rep.x_degree = std::max(rep.x_degree, poly.degree());
    int tdeg = -1;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (!coeffs[j].is_zero()) tdeg = static_cast<int>(j);
    rep.t_degree = tdeg;
    if (rep.common_factor) rep.quotient = ScalarOperator{std::move(reduced), op.q};
    return rep;
}

CubicSystem tune_autonomous(const ParamSet& params) {
    params.validate();
    const Rational e7 = params.e_at(7);
    static const Rational a6_pool[] = {Rational(1),      Rational(2),  Rational(1, 2),
                                       Rational(3),      Rational(1, 3), Rational(-1),
                                       Rational(-2),     Rational(5),  Rational(1, 5),
                                       Rational(-1, 2),  Rational(7),  Rational(-3)};

    for (const Rational& a6 : a6_pool) {
        // a1 = 0 keeps the root equation linear in a3; a2 = 1 keeps it nonzero
        std::array<Rational, 6> acc = {Rational(0), Rational(1), Rational(0),
                                       Rational(0), Rational(0), a6};
        const auto vals = apex_values(params, acc);
        const Polynomial g = eval_table_in_a3(apex::numerator(), vals) +
                             e7 * eval_table_in_a3(apex::denominator(), vals);
        if (g.degree() != 1) continue;
        acc[2] = -g.coeff(0) / g.coeff(1);
        if (eval_table(apex::denominator(), apex_values(params, acc)).is_zero()) continue;

        // the two determinant conditions are affine in (a4, a5)
        const auto at = [&](const Rational& a4, const Rational& a5) {
            std::array<Rational, 6> probe = acc;
            probe[3] = a4;
            probe[4] = a5;
            return accessory_conditions(params, probe);
        };
        const auto f00 = at(Rational(0), Rational(0));
        const auto f10 = at(Rational(1), Rational(0));
        const auto f01 = at(Rational(0), Rational(1));
        RatMatrix m(2, 2);
        m(0, 0) = f10[0] - f00[0];
        m(0, 1) = f01[0] - f00[0];
        m(1, 0) = f10[1] - f00[1];
        m(1, 1) = f01[1] - f00[1];
        const auto sol = solve_linear(m, {-f00[0], -f00[1]});
        if (!sol || !sol->homogeneous.empty()) continue;
        acc[3] = sol->particular[0];
        acc[4] = sol->particular[1];
        const auto resid = at(acc[3], acc[4]);
        if (!resid[0].is_zero() || !resid[1].is_zero()) continue;

        const CubicSystem sys = build_from_accessory(params, acc);
        const ReductionResult rr = reduce_to_scalar(sys);
        if (rr.f != -e7)
            throw consistency_error("tuned reduction missed the target root " + (-e7).str());
        return sys;
    }
    throw reduction_error("no rational tuning reaches an autonomous point for these parameters");
}

}  // namespace qweyl
