// Batch front-end for the qweyl library: builds family members, runs the
// reflection / Coxeter / braid verification sweeps, reduces to scalar form
// and evaluates the numeric integral identities.  Every run emits one JSON
// report; rationals are serialized as "num/den" strings so nothing is lost
// on the wire.
//
// Exit codes: 0 all checks pass, 1 at least one failure, 2 no failures but
// at least one inconclusive check, 3 usage or input errors.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <regex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qweyl/cubic.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/mconv.hpp"
#include "qweyl/params.hpp"
#include "qweyl/qcalc.hpp"
#include "qweyl/scalar.hpp"
#include "qweyl/spectral.hpp"

using nlohmann::json;
using namespace qweyl;

namespace {

// ---------------------------------------------------------------------------
// serialization helpers

Rational parse_rat(const std::string& s) {
    static const std::regex shape(R"([+-]?\d+(/[1-9]\d*)?)");
    if (!std::regex_match(s, shape)) throw parse_error("not a rational: '" + s + "'");
    mpq_class v(s);
    v.canonicalize();
    return Rational(std::move(v));
}

json rat_json(const Rational& r) { return r.str(); }

json poly_json(const Polynomial& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(rat_json(c));
    return a;  // ascending degree
}

json matrix_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json poly_matrix_json(const PolyMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json params_json(const ParamSet& p) {
    json e = json::array();
    for (const auto& ei : p.e) e.push_back(rat_json(ei));
    return json{{"q", rat_json(p.q)}, {"kappa", rat_json(p.kappa)}, {"e", std::move(e)}};
}

ParamSet params_from_json(const json& j) {
    ParamSet p;
    try {
        p.q = parse_rat(j.at("q").get<std::string>());
        p.kappa = parse_rat(j.at("kappa").get<std::string>());
        const auto& e = j.at("e");
        if (!e.is_array() || e.size() != 9)
            throw parse_error("field 'e' must list nine rationals");
        for (int i = 0; i < 9; ++i)
            p.e[static_cast<std::size_t>(i)] = parse_rat(e[static_cast<std::size_t>(i)].get<std::string>());
    } catch (const json::exception& ex) {
        throw parse_error(std::string("parameter file: ") + ex.what());
    }
    p.validate();
    return p;
}

std::string fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ---------------------------------------------------------------------------
// run configuration shared by the subcommands

struct RunConfig {
    std::string command;
    std::uint32_t seed = 1;
    int samples = 1;
    std::optional<ParamSet> params;  // explicit tuple instead of sampling
    std::array<Rational, 4> accessory = {Rational(1), Rational(1, 2), Rational(2),
                                         Rational(1, 3)};  // a3..a6 for built members
    int word_length = 24;   // orbit
    double q_numeric = 0.3;  // lemmas
    double qlam_numeric = 0.7;
    double tol = 1e-10;
    std::string report_path;
};

ParamSet instance_params(const RunConfig& cfg, int k) {
    if (cfg.params) return *cfg.params;
    return sample_params(cfg.seed + static_cast<std::uint32_t>(k));
}

CubicSystem instance_system(const RunConfig& cfg, int k) {
    const ParamSet p = instance_params(cfg, k);
    return build_system(p, cfg.accessory[0], cfg.accessory[1], cfg.accessory[2],
                        cfg.accessory[3]);
}

std::string input_digest(const RunConfig& cfg) {
    std::string s = cfg.command;
    s += '|' + std::to_string(cfg.seed) + '|' + std::to_string(cfg.samples);
    if (cfg.params) s += '|' + params_json(*cfg.params).dump();
    for (const auto& a : cfg.accessory) s += '|' + a.str();
    s += '|' + std::to_string(cfg.word_length);
    s += '|' + std::to_string(cfg.q_numeric) + '|' + std::to_string(cfg.qlam_numeric);
    s += '|' + std::to_string(cfg.tol);
    return fnv1a(s);
}

json check_entry(const std::string& name, const std::string& status) {
    return json{{"name", name}, {"status", status}};
}

// per-instance output assembled by the workers and merged in index order
struct SampleOut {
    std::vector<json> checks;
    json witness;  // null when the command has nothing to record
};

int worker_count() {
    const char* env = std::getenv("QWEYL_WORKERS");
    if (!env) return 1;
    int n = std::atoi(env);
    if (n < 1) return 1;
    return std::min(n, 64);
}

template <typename Fn>
std::vector<SampleOut> sweep(int n, Fn&& fn) {
    std::vector<SampleOut> out(static_cast<std::size_t>(n));
    const int workers = std::min(worker_count(), n);
    auto run_one = [&](int k) {
        try {
            out[static_cast<std::size_t>(k)] = fn(k);
        } catch (const qweyl_error& ex) {
            SampleOut s;
            json c = check_entry("sample " + std::to_string(k), "fail");
            c["error"] = ex.what();
            s.checks.push_back(std::move(c));
            out[static_cast<std::size_t>(k)] = std::move(s);
        }
    };
    if (workers <= 1) {
        for (int k = 0; k < n; ++k) run_one(k);
        return out;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (int k = next++; k < n; k = next++) run_one(k);
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

// ---------------------------------------------------------------------------
// subcommand bodies: each returns the merged check list plus witnesses

using CommandBody = std::vector<SampleOut> (*)(const RunConfig&);

std::vector<SampleOut> run_build(const RunConfig& cfg) {
    return sweep(cfg.samples, [&](int k) {
        SampleOut s;
        const CubicSystem sys = instance_system(cfg, k);
        sys.validate();
        s.checks.push_back(check_entry("sample " + std::to_string(k) + ": member valid", "pass"));
        s.witness = json{{"params", params_json(sys.params)},
                         {"a1", matrix_json(sys.a1)},
                         {"a2", matrix_json(sys.a2)}};
        return s;
    });
}

std::vector<SampleOut> run_s0(const RunConfig& cfg) {
    return sweep(cfg.samples, [&](int k) {
        SampleOut s;
        const std::string tag = "sample " + std::to_string(k) + ": ";
        const CubicSystem sys = instance_system(cfg, k);
        const S0Result res = s0_action(sys);
        res.system.validate();
        s.checks.push_back(check_entry(tag + "reflected member valid", "pass"));

        json c = check_entry(tag + "parameter map", res.system.params == s0_params(sys.params)
                                                        ? "pass"
                                                        : "fail");
        if (c["status"] == "fail") c["residual"] = params_json(res.system.params);
        s.checks.push_back(std::move(c));

        json dims = check_entry(tag + "invariant spaces have dimensions (3,3)",
                                res.witness.K_basis.size() == 3 && res.witness.L_basis.size() == 3
                                    ? "pass"
                                    : "fail");
        dims["dim_K"] = res.witness.K_basis.size();
        dims["dim_L"] = res.witness.L_basis.size();
        s.checks.push_back(std::move(dims));

        s.witness = json{{"reflected_params", params_json(res.system.params)},
                         {"multiplier", rat_json(res.witness.qlam)},
                         {"a1", matrix_json(res.system.a1)},
                         {"a2", matrix_json(res.system.a2)}};
        return s;
    });
}

std::vector<SampleOut> run_orbit(const RunConfig& cfg) {
    return sweep(cfg.samples, [&](int k) {
        SampleOut s;
        const std::string tag = "sample " + std::to_string(k) + ": ";
        ParamSet cur = instance_params(cfg, k);
        std::mt19937 gen(cfg.seed + static_cast<std::uint32_t>(k) * 7919u);
        std::uniform_int_distribution<int> letter(0, 8);

        json word = json::array();
        bool guard = false;
        std::string guard_note;
        for (int step = 0; step < cfg.word_length && !guard; ++step) {
            const int i = letter(gen);
            word.push_back(i);
            try {
                cur = (i == 0) ? s0_params(cur) : si_params(cur, i);
            } catch (const degeneracy_error& ex) {
                guard = true;
                guard_note = "step " + std::to_string(step) + ": " + ex.what();
            }
        }
        if (guard) {
            json c = check_entry(tag + "orbit walk", "inconclusive");
            c["note"] = guard_note;
            s.checks.push_back(std::move(c));
        } else {
            s.checks.push_back(check_entry(tag + "orbit walk stays admissible", "pass"));
            Rational prod = pow(cur.kappa, 3);
            for (const auto& ei : cur.e) prod *= ei;
            json c = check_entry(tag + "normalization preserved along the walk",
                                 prod == Rational(1) ? "pass" : "fail");
            if (c["status"] == "fail") c["residual"] = rat_json(prod - Rational(1));
            s.checks.push_back(std::move(c));
        }
        s.witness = json{{"word", std::move(word)}, {"final_params", params_json(cur)}};
        return s;
    });
}

std::vector<SampleOut> run_coxeter(const RunConfig& cfg) {
    return sweep(cfg.samples, [&](int k) {
        SampleOut s;
        const ParamSet p = instance_params(cfg, k);
        const CoxeterReport rep = check_coxeter(p);
        std::string status = "pass";
        if (!rep.ok) {
            status = "fail";
            for (const auto& f : rep.failures)
                if (f.find("guard") != std::string::npos) status = "inconclusive";
        }
        json c = check_entry("sample " + std::to_string(k) + ": presentation relations", status);
        c["relations_checked"] = rep.relations_checked;
        if (!rep.failures.empty()) c["residual"] = rep.failures;
        s.checks.push_back(std::move(c));
        return s;
    });
}

std::vector<SampleOut> run_braid(const RunConfig& cfg) {
    return sweep(cfg.samples, [&](int k) {
        SampleOut s;
        const std::string tag = "sample " + std::to_string(k) + ": ";
        const CubicSystem sys = instance_system(cfg, k);

        const FuchsianSystem fs = to_fuchs(sys);
        s.checks.push_back(check_entry(tag + "kernel and image conditions",
                                       check_star(fs) && check_starstar(fs) ? "pass"
                                                                            : "inconclusive"));

        auto record = [&](const std::string& name, const CubicSystem& lhs,
                          const CubicSystem& rhs) {
            const ConjugacyResult conj = find_conjugator(lhs, rhs);
            if (conj.status == ConjugacyStatus::inconclusive) {
                s.checks.push_back(check_entry(tag + name, "inconclusive"));
                return;
            }
            if (conj.status == ConjugacyStatus::none) {
                json c = check_entry(tag + name, "fail");
                c["residual"] = "intertwiner space is zero";
                s.checks.push_back(std::move(c));
                return;
            }
            const PolyMatrix res =
                lhs.matrix() * promote(*conj.witness) - promote(*conj.witness) * rhs.matrix();
            json c = check_entry(tag + name, res.is_zero() ? "pass" : "fail");
            if (!res.is_zero()) c["residual"] = poly_matrix_json(res);
            s.checks.push_back(std::move(c));
        };

        for (int i : {1, 2, 4, 5, 6, 7, 8}) {
            CubicSystem swapped = sys;
            swapped.params = si_params(sys.params, i);
            swapped.validate();
            const S0Result lhs = s0_action(swapped);

            const S0Result reflected = s0_action(sys);
            CubicSystem rhs = reflected.system;
            rhs.params = si_params(reflected.system.params, i);
            rhs.validate();

            record("reflection commutes with swap " + std::to_string(i), lhs.system, rhs);
        }

        const S0Result once = s0_action(sys);
        const S0Result twice = s0_action(once.system);
        record("reflection squared returns a conjugate", twice.system, sys);
        return s;
    });
}

std::vector<SampleOut> run_reduce(const RunConfig& cfg) {
    return sweep(cfg.samples, [&](int k) {
        SampleOut s;
        const std::string tag = "sample " + std::to_string(k) + ": ";
        const CubicSystem sys = instance_system(cfg, k);
        const ReductionResult rr = reduce_to_scalar(sys);

        bool deg7 = true;
        for (const auto& p : rr.op.P) deg7 = deg7 && p.degree() == 7;
        s.checks.push_back(check_entry(tag + "coefficients have degree 7", deg7 ? "pass" : "fail"));

        json cw;
        try {
            const Rational c = apparent_check(rr.op, rr.f);
            cw = rat_json(c);
            s.checks.push_back(check_entry(tag + "apparent-root ratios agree", "pass"));
        } catch (const qweyl_error& ex) {
            json c = check_entry(tag + "apparent-root ratios agree", "fail");
            c["residual"] = ex.what();
            s.checks.push_back(std::move(c));
        }

        json fcheck = check_entry(tag + "closed form of the extra root",
                                  f_closed_form(sys) == rr.f ? "pass" : "fail");
        if (fcheck["status"] == "fail") fcheck["residual"] = rat_json(f_closed_form(sys) - rr.f);
        s.checks.push_back(std::move(fcheck));

        const PointConfiguration cfg_pts = point_configuration(rr.op);
        const auto [left, right] = qfuchs_products(cfg_pts);
        json qf = check_entry(tag + "boundary product identity", left == right ? "pass" : "fail");
        if (left != right) qf["residual"] = rat_json(left - right);
        s.checks.push_back(std::move(qf));

        json coeffs = json::array();
        for (const auto& p : rr.op.P) coeffs.push_back(poly_json(p));
        s.witness = json{{"f", rat_json(rr.f)},
                         {"apparent_c", std::move(cw)},
                         {"P", std::move(coeffs)},
                         {"products", json::array({rat_json(left), rat_json(right)})},
                         {"diagram", cfg_pts.diagram()}};
        return s;
    });
}

std::vector<SampleOut> run_spectral(const RunConfig& cfg) {
    return sweep(cfg.samples, [&](int k) {
        SampleOut s;
        const CubicSystem sys = instance_system(cfg, k);
        const SpectralType st = spectral_type(sys.matrix());
        const std::string got = st.str();
        json c = check_entry("sample " + std::to_string(k) + ": multiplicity profile",
                             got == "(3;3;1,1,1,1,1,1,1,1,1)" ? "pass" : "fail");
        if (c["status"] == "fail") c["residual"] = got;
        s.checks.push_back(std::move(c));
        s.witness = json{{"spectral_type", got}};
        return s;
    });
}

std::vector<SampleOut> run_lemmas(const RunConfig& cfg) {
    // one synthetic "sample": the residual table over identities x paths x
    // integrands; kept serial so the table order is stable
    SampleOut s;
    const QContext ctx{Complex(cfg.q_numeric), 1e-13, 1000000};
    ctx.validate();
    const Complex qlam(cfg.qlam_numeric);

    const ScalarFn f_id = [](Complex t) { return t; };
    const ScalarFn f_poly = [](Complex t) { return t * t * t - 2.0 * t * t + 1.0; };
    const ScalarFn g_cube = [](Complex t) { return t * t * t; };
    const std::pair<const char*, const ScalarFn*> fns[] = {{"t", &f_id},
                                                           {"t^3-2t^2+1", &f_poly}};

    const JacksonPath whole = JacksonPath::zero_to(Complex(1.0));
    const JacksonPath split =
        JacksonPath::zero_to(Complex(1.0)) - JacksonPath::zero_to(Complex(0.5));
    const std::pair<const char*, const JacksonPath*> paths[] = {{"[0,1]", &whole},
                                                                {"[0,1]-[0,1/2]", &split}};

    json table = json::array();
    for (LemmaId id : {LemmaId::q_leibniz, LemmaId::jackson_D, LemmaId::jackson_T,
                       LemmaId::euler_T, LemmaId::euler_D}) {
        for (const auto& [pname, path] : paths) {
            for (const auto& [fname, fn] : fns) {
                const double res =
                    id == LemmaId::q_leibniz
                        ? verify_lemma(id, *fn, *path, ctx, qlam, g_cube)
                        : verify_lemma(id, *fn, *path, ctx, qlam);
                const bool ok = res < cfg.tol;
                json row{{"identity", lemma_name(id)},
                         {"path", pname},
                         {"integrand", fname},
                         {"residual", res}};
                table.push_back(row);
                json c = check_entry(lemma_name(id) + std::string(" on ") + pname + " with " +
                                         fname,
                                     ok ? "pass" : "fail");
                if (!ok) c["residual"] = res;
                s.checks.push_back(std::move(c));
            }
        }
    }
    s.witness = json{{"table", std::move(table)},
                     {"truncation", json{{"relative_tol", ctx.trunc_tol},
                                         {"max_terms", ctx.max_terms}}}};
    return {std::move(s)};
}

// ---------------------------------------------------------------------------

int finish(const RunConfig& cfg, const std::vector<SampleOut>& outs,
           std::chrono::steady_clock::time_point t0) {
    json checks = json::array();
    json witnesses = json::array();
    int fails = 0, inconclusive = 0;
    for (const auto& s : outs) {
        for (const auto& c : s.checks) {
            const std::string st = c.at("status").get<std::string>();
            if (st == "fail") ++fails;
            if (st == "inconclusive") ++inconclusive;
            checks.push_back(c);
        }
        if (!s.witness.is_null()) witnesses.push_back(s.witness);
    }

    json input{{"seed", cfg.seed}, {"samples", cfg.samples}, {"digest", input_digest(cfg)}};
    if (cfg.params) input["params"] = params_json(*cfg.params);

    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    json report{{"command", cfg.command},
                {"input", std::move(input)},
                {"checks", std::move(checks)},
                {"witnesses", std::move(witnesses)},
                {"timing_ms", ms}};

    const std::string text = report.dump(2) + "\n";
    if (cfg.report_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.report_path);
        if (!out) {
            std::cerr << "cannot open report path: " << cfg.report_path << "\n";
            return 3;
        }
        out << text;
    }
    if (fails > 0) return 1;
    if (inconclusive > 0) return 2;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification runs for the rank-3 q-difference family"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string params_path;
    std::array<std::string, 4> acc_text = {"1", "1/2", "2", "1/3"};

    struct Entry {
        CLI::App* sub;
        CommandBody body;
        int default_samples;
    };
    std::vector<Entry> entries;

    auto add = [&](const std::string& name, const std::string& help, CommandBody body,
                   int default_samples) -> CLI::App* {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--seed", cfg.seed, "base seed for sampled parameter tuples");
        sub->add_option("--samples", cfg.samples, "number of sampled instances");
        sub->add_option("--params", params_path, "JSON file with an explicit parameter tuple");
        sub->add_option("--report-path", cfg.report_path, "write the JSON report here");
        entries.push_back({sub, body, default_samples});
        return sub;
    };

    auto with_accessory = [&](CLI::App* sub) {
        sub->add_option("--a3", acc_text[0], "accessory entry a3");
        sub->add_option("--a4", acc_text[1], "accessory entry a4");
        sub->add_option("--a5", acc_text[2], "accessory entry a5");
        sub->add_option("--a6", acc_text[3], "accessory entry a6");
    };

    with_accessory(add("build", "construct a family member and validate its shape", run_build, 1));
    with_accessory(add("s0", "apply the convolution reflection and verify the result", run_s0, 1));
    CLI::App* orbit =
        add("orbit", "random walk through the nine parameter reflections", run_orbit, 10);
    orbit->add_option("--length", cfg.word_length, "word length of each walk");
    add("coxeter", "verify the presentation relations on parameter tuples", run_coxeter, 25);
    with_accessory(
        add("braid", "verify the reflection commutes with the swaps up to conjugacy", run_braid,
            10));
    with_accessory(
        add("reduce", "eliminate to a scalar operator and verify its layout", run_reduce, 1));
    CLI::App* lemmas =
        add("lemmas", "numeric residuals of the integral and difference identities", run_lemmas,
            1);
    lemmas->add_option("--q", cfg.q_numeric, "numeric base of the lattice");
    lemmas->add_option("--qlam", cfg.qlam_numeric, "numeric multiplier of the transform");
    lemmas->add_option("--tol", cfg.tol, "residual tolerance");
    with_accessory(add("spectral", "multiplicity profile of a built member", run_spectral, 1));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        for (const auto& entry : entries) {
            if (!entry.sub->parsed()) continue;
            cfg.command = entry.sub->get_name();
            if (entry.sub->count("--samples") == 0) cfg.samples = entry.default_samples;
            if (cfg.samples < 1) throw parse_error("--samples must be positive");
            for (int i = 0; i < 4; ++i)
                cfg.accessory[static_cast<std::size_t>(i)] =
                    parse_rat(acc_text[static_cast<std::size_t>(i)]);
            if (!params_path.empty()) {
                std::ifstream in(params_path);
                if (!in) throw parse_error("cannot read parameter file: " + params_path);
                json j;
                in >> j;
                cfg.params = params_from_json(j);
            }
            return finish(cfg, entry.body(cfg), t0);
        }
    } catch (const parse_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const json::exception& ex) {
        std::cerr << "error: parameter file: " << ex.what() << "\n";
        return 3;
    } catch (const qweyl_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 3;
}
