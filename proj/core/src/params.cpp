#include "qweyl/params.hpp"

#include <random>
#include <sstream>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

std::string guard_failure(const ParamSet& p) {
    const Rational one(1);
    if (!(p.q > Rational(0) && p.q < one)) return "q outside (0,1)";
    if (p.kappa.is_zero()) return "kappa = 0";
    for (int i = 1; i <= 9; ++i) {
        if (p.e_at(i).is_zero()) {
            return "e_" + std::to_string(i) + " = 0";
        }
    }
    // only the distinctness the construction itself needs: the three pole
    // positions of the residue form, and the two shifted determinant roots
    // stripped separately during scalar reduction
    for (int i = 1; i <= 3; ++i) {
        for (int j = i + 1; j <= 3; ++j) {
            if (p.e_at(i) == p.e_at(j)) {
                return "e_" + std::to_string(i) + " = e_" + std::to_string(j);
            }
        }
    }
    if (p.e_at(8) == p.e_at(9)) return "e_8 = e_9";
    Rational prod = pow(p.kappa, 3);
    for (const auto& ei : p.e) prod *= ei;
    if (prod != one) return "kappa^3 e_1...e_9 != 1";
    for (int i = 1; i <= 9; ++i) {
        for (int j = i + 1; j <= 9; ++j) {
            for (int k = j + 1; k <= 9; ++k) {
                if (p.kappa * p.e_at(i) * p.e_at(j) * p.e_at(k) == one) {
                    return "kappa e_" + std::to_string(i) + " e_" + std::to_string(j) +
                           " e_" + std::to_string(k) + " = 1";
                }
            }
        }
    }
    if (p.c123() * p.q == one) return "kappa e_1 e_2 e_3 = 1/q";
    return "";
}

}  // namespace

Rational ParamSet::e_prod(std::initializer_list<int> idx) const {
    Rational r(1);
    for (int i : idx) r *= e_at(i);
    return r;
}

void ParamSet::validate() const {
    const std::string why = guard_failure(*this);
    if (!why.empty()) throw degeneracy_error("inadmissible parameters: " + why);
}

bool ParamSet::admissible() const { return guard_failure(*this).empty(); }

ParamSet sample_params(std::uint32_t seed, const Rational& q) {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    auto draw = [&]() {
        int n = 0;
        while (n == 0) n = num(gen);
        return Rational(n, den(gen));
    };
    for (int attempt = 0; attempt < 1000; ++attempt) {
        ParamSet p;
        p.q = q;
        p.kappa = draw();
        Rational prod = pow(p.kappa, 3);
        for (int i = 0; i < 8; ++i) {
            p.e[static_cast<std::size_t>(i)] = draw();
            prod *= p.e[static_cast<std::size_t>(i)];
        }
        if (prod.is_zero()) continue;
        p.e[8] = prod.inv();
        if (!p.admissible()) continue;
        // sampled tuples stay fully generic: nine pairwise distinct roots
        bool collision = false;
        for (int i = 1; i <= 9 && !collision; ++i) {
            for (int j = i + 1; j <= 9; ++j) {
                if (p.e_at(i) == p.e_at(j)) collision = true;
            }
        }
        if (collision) continue;
        // also reject draws whose reflection orbit lands on a guard, so the
        // Coxeter words can be followed from any sampled point
        const CoxeterReport rep = check_coxeter(p);
        bool guard_hit = false;
        for (const auto& f : rep.failures) {
            if (f.find("guard") != std::string::npos) guard_hit = true;
        }
        if (!guard_hit) return p;
    }
    throw sampling_error("no admissible parameter tuple found after 1000 draws");
}

ParamSet si_params(const ParamSet& p, int i) {
    if (i < 1 || i > 8) throw shape_error("si_params: index must be in 1..8");
    ParamSet r = p;
    std::swap(r.e_at(i), r.e_at(i + 1));
    r.validate();
    return r;
}

ParamSet s0_params(const ParamSet& p) {
    p.validate();
    const Rational c = p.c123();
    ParamSet r = p;
    for (int i = 4; i <= 9; ++i) r.e_at(i) = c * p.e_at(i);
    r.kappa = Rational(1) / (p.kappa * pow(p.e[0] * p.e[1] * p.e[2], 2));
    r.validate();
    return r;
}

ParamSet apply_word(const ParamSet& p, const std::vector<int>& word) {
    ParamSet r = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        r = (*it == 0) ? s0_params(r) : si_params(r, *it);
    }
    return r;
}

namespace {

bool is_edge(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i == 0) return j == 3;
    return j == i + 1;
}

std::string word_str(int i, int j, int m) {
    std::ostringstream os;
    os << "(s" << i << " s" << j << ")^" << m;
    return os.str();
}

}  // namespace

CoxeterReport check_coxeter(const ParamSet& p) {
    CoxeterReport rep;
    auto apply_gen = [](const ParamSet& q, int g) {
        return g == 0 ? s0_params(q) : si_params(q, g);
    };
    auto check_word = [&](int i, int j, int m, const std::string& label) {
        ++rep.relations_checked;
        ParamSet cur = p;
        try {
            for (int step = 0; step < m; ++step) {
                cur = apply_gen(cur, j);
                cur = apply_gen(cur, i);
            }
        } catch (const degeneracy_error& err) {
            rep.ok = false;
            rep.failures.push_back(label + " hit a guard: " + err.what());
            return;
        }
        if (cur != p) {
            rep.ok = false;
            rep.failures.push_back(label + " does not return to the start");
        }
    };
    for (int i = 0; i <= 8; ++i) {
        ++rep.relations_checked;
        ParamSet cur = p;
        try {
            cur = apply_gen(apply_gen(cur, i), i);
            if (cur != p) {
                rep.ok = false;
                rep.failures.push_back("s" + std::to_string(i) + "^2 is not the identity");
            }
        } catch (const degeneracy_error& err) {
            rep.ok = false;
            rep.failures.push_back("s" + std::to_string(i) + "^2 hit a guard: " + err.what());
        }
    }
    for (int i = 0; i <= 8; ++i) {
        for (int j = i + 1; j <= 8; ++j) {
            const int m = is_edge(i, j) ? 3 : 2;
            check_word(i, j, m, word_str(i, j, m));
        }
    }
    return rep;
}

}  // namespace qweyl
