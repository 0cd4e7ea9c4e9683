// Command-line surface: exact Gauss sums, epsilon factors, Rankin-Selberg
// gamma factors (closed-form and Bessel routes), the worked-example
// reproduction, and the verification sweeps.
//
// Exit codes: 0 success, 1 usage error, 2 precondition violation,
// 3 assertion failure (a mathematical identity failed to hold).

#include <glneps/json_io.hpp>
#include <glneps/verify.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <numeric>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace glneps;

struct Options {
    long q = 3;
    long ambient_degree = 0;  // 0 = derive from the inputs
    std::string modulus;      // comma-separated c0,c1,...
    long psi_a = 1;
    std::string alpha, beta, gamma;
    std::vector<std::string> lambda, mu;
    bool no_crosscheck = false;
    long jobs = 1;
    std::string format = "pretty";
    std::string route = "epsilon";
    std::uint64_t seed = 20260824;
    long max_degree = 4;
    long max_n = 0;
};

long parse_level_exp(const std::string& spec, long& level) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("character spec must be level:exponent, got '" + spec + "'");
    level = std::stol(spec.substr(0, colon));
    return std::stol(spec.substr(colon + 1));
}

std::vector<long> parse_modulus(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
    return out;
}

// lambda spec: level:exponent[:p1+p2+...], partition defaulting to (1)
void add_lambda_entry(PartitionFn& fn, const std::string& spec) {
    auto c1 = spec.find(':');
    auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos)
        throw CLI::ValidationError("orbit spec must be level:exponent[:parts], got '" + spec + "'");
    long level = std::stol(spec.substr(0, c1));
    long exponent = std::stol(spec.substr(c1 + 1, c2 == std::string::npos ? std::string::npos
                                                                          : c2 - c1 - 1));
    Partition p = {1};
    if (c2 != std::string::npos) {
        p.clear();
        std::stringstream ss(spec.substr(c2 + 1));
        std::string tok;
        while (std::getline(ss, tok, '+')) p.push_back(std::stol(tok));
    }
    fn.add(GammaChar{fn.q(), level, exponent}, p);
}

// Field and relabeling resolution.  A supplied modulus of the full ambient
// degree is used directly; a smaller one is anchored inside the default
// field and the character labels are translated accordingly.
struct Context {
    std::unique_ptr<AmbientField> field;
    std::optional<CharRelabel> relabel;

    GammaChar make_char(long q, long level, long exponent) const {
        if (relabel) return GammaChar{q, level, relabel->apply(*field, level, exponent)};
        return GammaChar{q, level, exponent};
    }
};

Context build_context(const Options& opt, long needed_level) {
    Context ctx;
    long L = needed_level;
    if (opt.ambient_degree > 0) {
        if (opt.ambient_degree % L != 0)
            throw precondition_error("--ambient-degree must be a multiple of the levels in use");
        L = opt.ambient_degree;
    }
    if (opt.modulus.empty()) {
        ctx.field = std::make_unique<AmbientField>(opt.q, L);
        return ctx;
    }
    std::vector<long> coeffs = parse_modulus(opt.modulus);
    long n0 = static_cast<long>(coeffs.size()) - 1;
    if (n0 % L == 0) {
        // the modulus field itself contains every needed level
        ctx.field = std::make_unique<AmbientField>(opt.q, n0, coeffs);
    } else if (L % n0 == 0) {
        ctx.field = std::make_unique<AmbientField>(opt.q, L);
        ctx.relabel = anchor_relabel(*ctx.field, coeffs);
    } else {
        throw precondition_error("modulus degree " + std::to_string(n0) +
                                 " is incompatible with the required level " + std::to_string(L));
    }
    return ctx;
}

struct Assertion {
    std::string name;
    bool pass;
    std::string expected, actual;
};

void emit(const Options& opt, const std::string& command, const nlohmann::json& result,
          const std::vector<Assertion>& assertions) {
    nlohmann::json amap = nlohmann::json::array();
    for (const auto& a : assertions)
        amap.push_back({{"name", a.name},
                        {"pass", a.pass},
                        {"expected", a.expected},
                        {"actual", a.actual}});
    nlohmann::json out{{"command", command},
                       {"config",
                        {{"q", opt.q},
                         {"modulus", opt.modulus},
                         {"psi_a", opt.psi_a},
                         {"format", opt.format}}},
                       {"result", result},
                       {"assertions", amap}};
    if (opt.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << command << ":\n";
        if (result.contains("re"))
            std::printf("  approx: %.10f %+.10fi\n", result["re"].get<double>(),
                        result["im"].get<double>());
        if (result.contains("conductor"))
            std::cout << "  conductor: " << result["conductor"] << "\n";
        for (const auto& a : assertions)
            std::cout << "  [" << (a.pass ? "ok" : "FAIL") << "] " << a.name << "\n";
    }
    for (const auto& a : assertions)
        if (!a.pass)
            throw assertion_failure(a.name + ": expected " + a.expected + ", got " + a.actual);
}

void emit_suite(const Options& opt, const SuiteReport& rep) {
    if (opt.format == "json") {
        nlohmann::json fails = nlohmann::json::array();
        for (const auto& f : rep.failures)
            fails.push_back({{"name", f.name},
                             {"expected", f.expected},
                             {"actual", f.actual},
                             {"replay", f.replay}});
        std::cout << nlohmann::json{{"suite", rep.suite},
                                    {"cases", rep.cases},
                                    {"failures", fails}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << rep.suite << ": " << (rep.cases - static_cast<long>(rep.failures.size()))
                  << "/" << rep.cases << " checks passed\n";
        for (const auto& f : rep.failures)
            std::cout << "  FAIL " << f.name << " expected=" << f.expected
                      << " actual=" << f.actual << " replay: " << f.replay << "\n";
    }
    if (!rep.all_pass())
        throw assertion_failure("suite " + rep.suite + " failed " +
                                std::to_string(rep.failures.size()) + " of " +
                                std::to_string(rep.cases) + " checks");
}

int run(const Options& opt, const std::string& command) {
    if (command == "gauss-sum") {
        long level = 0;
        long exponent = parse_level_exp(opt.gamma, level);
        Context c = build_context(opt, level);
        GaussContext gctx(*c.field, AdditiveChar{opt.psi_a});
        GammaChar g = c.make_char(opt.q, level, exponent);
        Cyclotomic tau = gctx.gauss_sum(g.level, g.exponent);
        std::vector<Assertion> as;
        if (!is_trivial(g)) {
            Cyclotomic sq = tau.abs_square();
            bool ok = sq == Cyclotomic(rational_power(opt.q, level));
            as.push_back({"abs-square-q^n", ok, "q^" + std::to_string(level), sq.to_string()});
        }
        emit(opt, command, to_json(tau), as);
        return 0;
    }
    if (command == "epsilon0") {
        PartitionFn lambda(opt.q);
        for (const auto& s : opt.lambda) add_lambda_entry(lambda, s);
        long L = 1;
        for (const auto& e : lambda.entries()) L = std::lcm(L, e.rep.level);
        Context c = build_context(opt, L);
        if (c.relabel) throw precondition_error("epsilon0 does not support anchored moduli");
        GaussContext gctx(*c.field, AdditiveChar{opt.psi_a});
        QHalfScalar eps = epsilon0(gctx, lambda);
        emit(opt, command, to_json(eps), {});
        return 0;
    }
    if (command == "epsilon0-tensor" || command == "epsilon0-wedge2" || command == "rs-gamma" ||
        command == "rs-gamma-bessel" || command == "nien-zhang") {
        long la = 0, lb = 0;
        long ea = parse_level_exp(opt.alpha, la);
        long eb = 0;
        bool needs_beta = command != "epsilon0-wedge2";
        if (needs_beta) eb = parse_level_exp(opt.beta, lb);
        long L = needs_beta ? std::lcm(la, lb) : la;
        if (command == "nien-zhang") L = la * lb;
        Context c = build_context(opt, L);
        GaussContext gctx(*c.field, AdditiveChar{opt.psi_a});
        FOrbit f = frobenius_orbit(c.make_char(opt.q, la, ea));
        FOrbit g =
            needs_beta ? frobenius_orbit(c.make_char(opt.q, lb, eb)) : FOrbit{};
        std::vector<Assertion> as;
        if (command == "epsilon0-tensor") {
            QHalfScalar closed = epsilon0_tensor_cuspidal(gctx, f, g);
            if (!opt.no_crosscheck) {
                QHalfScalar generic =
                    epsilon0_generic(gctx, ms_tensor(orbit_multiset(f), orbit_multiset(g)));
                as.push_back({"closed-form-vs-generic", closed.equals(generic),
                              generic.to_string(), closed.to_string()});
            }
            emit(opt, command, to_json(closed), as);
        } else if (command == "epsilon0-wedge2") {
            QHalfScalar closed = epsilon0_wedge2_cuspidal(gctx, f);
            if (!opt.no_crosscheck) {
                QHalfScalar generic = epsilon0_generic(gctx, ms_wedge2(orbit_multiset(f)));
                as.push_back({"closed-form-vs-generic", closed.equals(generic),
                              generic.to_string(), closed.to_string()});
            }
            emit(opt, command, to_json(closed), as);
        } else if (command == "nien-zhang") {
            QHalfScalar v = nien_zhang_rhs(gctx, f, g);
            emit(opt, command, to_json(v), {});
        } else {
            // rs-gamma / rs-gamma-bessel
            bool bessel = command == "rs-gamma-bessel" || opt.route == "bessel";
            auto t0 = std::chrono::steady_clock::now();
            if (bessel) {
                Cyclotomic v = rs_gamma_bessel(*c.field, f, g, AdditiveChar{opt.psi_a});
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
                nlohmann::json j = to_json(v);
                j["runtime_ms"] = ms;
                if (!opt.no_crosscheck) {
                    QHalfScalar eps = rs_gamma_via_epsilon(gctx, f, g);
                    as.push_back({"bessel-vs-epsilon",
                                  QHalfScalar::from_cyclotomic(opt.q, v).equals(eps),
                                  eps.to_string(), v.to_string()});
                }
                emit(opt, command, j, as);
            } else {
                QHalfScalar v = rs_gamma_via_epsilon(gctx, f, g);
                emit(opt, command, to_json(v), as);
            }
        }
        return 0;
    }
    if (command == "reproduce-example") {
        std::vector<long> anchor =
            opt.modulus.empty() ? paperdata::quartic_modulus() : parse_modulus(opt.modulus);
        emit_suite(opt, reproduce_example(anchor, opt.psi_a));
        return 0;
    }
    throw CLI::ValidationError("unknown command " + command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Gauss sums, epsilon factors, and Rankin-Selberg gamma factors for "
                 "finite general linear groups"};
    app.require_subcommand(1);
    Options opt;

    std::string verify_suite;
    for (const char* name :
         {"gauss-sum", "epsilon0", "epsilon0-tensor", "epsilon0-wedge2", "rs-gamma",
          "rs-gamma-bessel", "nien-zhang", "reproduce-example", "verify"}) {
        CLI::App* s = app.add_subcommand(name);
        s->add_option("--q", opt.q, "prime base field size");
        s->add_option("--ambient-degree", opt.ambient_degree,
                      "ambient extension degree (default: derived from the inputs)");
        s->add_option("--modulus", opt.modulus,
                      "modulus coefficients c0,c1,... (constant term first); character labels "
                      "are relative to its root");
        s->add_option("--psi-a", opt.psi_a, "additive character twist a (psi(x) = zeta_q^(a x))");
        s->add_option("--alpha", opt.alpha, "first character, level:exponent");
        s->add_option("--beta", opt.beta, "second character, level:exponent");
        s->add_option("--gamma", opt.gamma, "character, level:exponent");
        s->add_option("--lambda", opt.lambda,
                      "orbit entries level:exponent[:p1+p2+...] of a partition-valued function");
        s->add_option("--mu", opt.mu, "orbit entries of the second partition-valued function");
        s->add_flag("--no-crosscheck", opt.no_crosscheck,
                    "skip the generic-engine cross-check of closed forms");
        s->add_option("--jobs", opt.jobs, "worker threads for sweeps");
        s->add_option("--format", opt.format, "output format: json | pretty");
        s->add_option("--route", opt.route, "rs-gamma route: epsilon | bessel");
        s->add_option("--seed", opt.seed, "seed for randomized sweep cases");
        s->add_option("--max-degree", opt.max_degree, "sweep bound on orbit degrees");
        s->add_option("--max-n", opt.max_n, "sweep bound on n");
        if (std::string(name) == "verify")
            s->add_option("suite", verify_suite,
                          "hasse-davenport | oracle-equivalence | thm44-sweep | "
                          "character-orthogonality | degenerate-wedge2 | gauss-basics")
                ->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        std::string command = app.get_subcommands().front()->get_name();
        if (command == "verify") {
            SuiteReport rep;
            if (verify_suite == "hasse-davenport")
                rep = glneps::verify_hasse_davenport();
            else if (verify_suite == "oracle-equivalence")
                rep = glneps::verify_oracle_equivalence({2, 3}, opt.max_degree, 12, opt.seed,
                                                        opt.jobs);
            else if (verify_suite == "thm44-sweep")
                rep = glneps::verify_thm44_sweep({2, 3}, opt.max_n > 0 ? opt.max_n : 3);
            else if (verify_suite == "character-orthogonality")
                rep = glneps::verify_character_gates();
            else if (verify_suite == "degenerate-wedge2")
                rep = glneps::verify_degenerate_wedge2();
            else if (verify_suite == "gauss-basics")
                rep = glneps::verify_gauss_basics();
            else
                throw CLI::ValidationError("unknown suite " + verify_suite);
            emit_suite(opt, rep);
            return 0;
        }
        return run(opt, command);
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const glneps::internal_mismatch& e) {
        std::cerr << "assertion failure: " << e.what() << "\n";
        return 3;
    } catch (const glneps::assertion_failure& e) {
        std::cerr << "assertion failure: " << e.what() << "\n";
        return 3;
    } catch (const glneps::precondition_error& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
