// Command-line front end. Every subcommand prints one JSON document
// (machine output, stdout or --json-out) and a one-line human summary on
// stderr. All randomness derives from --seed, and per-task seeds are
// stable hashes of (seed, task label), so identical argv gives
// byte-identical JSON.
//
// Exit codes: 0 success; 1 theorem contradiction or invariant violation;
// 2 usage or parse error.

#include "matpoly/report_json.hpp"
#include "matpoly/selftest.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace matpoly;

constexpr const char* kVersion = "1.0.0";

struct CommonOptions {
    std::uint64_t seed = 0;
    std::int64_t box = 10;
    unsigned trials = 20;
    std::uint64_t budget = 10'000'000;
    bool allow_sampling = false;
    std::string json_out;
};

void add_common(CLI::App* cmd, CommonOptions& opt, unsigned default_trials = 20) {
    opt.trials = default_trials;
    cmd->add_option("--seed", opt.seed, "global random seed")->capture_default_str();
    cmd->add_option("--box", opt.box, "sampling box: integer entries in [-box, box]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--trials", opt.trials, "number of random trials")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--budget", opt.budget, "maximum unit assignments per scan")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_flag("--allow-sampling", opt.allow_sampling,
                  "allow strided sampling when the scan space exceeds the budget");
    cmd->add_option("--json-out", opt.json_out, "write the JSON report to this file instead of stdout");
}

json config_json(const CommonOptions& opt) {
    return json{{"seed", opt.seed},
                {"box", opt.box},
                {"trials", opt.trials},
                {"scan_budget", opt.budget}};
}

int emit(const std::string& command, const CommonOptions& opt, json config, json result,
         std::vector<std::string> warnings, const std::string& summary, int exit_code = 0) {
    json doc{{"command", command},
             {"config", std::move(config)},
             {"result", std::move(result)},
             {"warnings", warnings},
             {"version", kVersion}};
    std::string text = doc.dump(2) + "\n";
    if (opt.json_out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.json_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file " + opt.json_out);
        out << text;
    }
    std::cerr << command << ": " << summary << "\n";
    return exit_code;
}

UnitAssignment parse_units(const std::string& text, unsigned n) {
    // Comma-separated "i.j" pairs, e.g. "1.2,2.1".
    UnitAssignment a;
    a.n = n;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t dot = item.find('.');
        if (dot == std::string::npos)
            throw ParseError("unit must look like i.j", pos);
        unsigned i = static_cast<unsigned>(std::stoul(item.substr(0, dot)));
        unsigned j = static_cast<unsigned>(std::stoul(item.substr(dot + 1)));
        if (i == 0 || j == 0 || i > n || j > n)
            throw ParseError("unit index out of range 1.." + std::to_string(n), pos);
        a.units.push_back({i, j});
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return a;
}

DiagonalVector parse_diagonal(const std::string& text, unsigned n) {
    DiagonalVector d;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        d.push_back(Cyclotomic::parse(item, n));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return d;
}

int run_classify(const std::string& command, const std::string& poly_text, unsigned n,
                 const CommonOptions& opt) {
    NcPolynomial p = polynomial_from_text(poly_text);
    ImageReport report =
        classify_image(p, n, opt.trials, opt.seed, opt.box, opt.budget, opt.allow_sampling);
    json config = config_json(opt);
    config["poly"] = p.str();
    config["n"] = n;
    std::string summary = to_string(report.classification) +
                          ", dim_lower_bound=" + std::to_string(report.dim_lower_bound);
    return emit(command, opt, std::move(config), json(report), report.warnings, summary);
}

int run_scan_units(const std::string& poly_text, unsigned n, const CommonOptions& opt) {
    NcPolynomial p = polynomial_from_text(poly_text);
    ScanReport report = scan_units(p, n, opt.budget, opt.allow_sampling);
    json config = config_json(opt);
    config["poly"] = p.str();
    config["n"] = n;
    std::vector<std::string> warnings;
    if (!report.exhaustive) warnings.push_back("scan-not-exhaustive");
    std::string summary = "total=" + std::to_string(report.total) + " zero=" + std::to_string(report.zero) +
                          " diagonal=" + std::to_string(report.diagonal) +
                          " unit_multiple=" + std::to_string(report.unit_multiple);
    return emit("scan-units", opt, std::move(config), json(report), warnings, summary);
}

int run_power_central(const std::string& poly_text, unsigned n, std::optional<unsigned> nu,
                      unsigned nu_max, bool no_filters, const CommonOptions& opt) {
    NcPolynomial p = polynomial_from_text(poly_text);
    json config = config_json(opt);
    config["poly"] = p.str();
    config["n"] = n;
    if (nu) {
        config["nu"] = *nu;
        ProbeVerdict verdict = power_central_probe(p, n, *nu, opt.trials, opt.seed, opt.box);
        std::string summary = verdict.kind == ProbeKind::ProbablyCentral
                                  ? "probably central, failure bound " + verdict.failure_bound.str()
                                  : "not central (witness found)";
        return emit("power-central", opt, std::move(config), json(verdict), {}, summary);
    }
    config["nu_max"] = nu_max;
    OrderSearchResult result = order_search(p, n, nu_max, opt.trials, opt.seed, opt.box,
                                            !no_filters, opt.budget, opt.allow_sampling);
    std::string summary = result.nu ? "nu = " + std::to_string(*result.nu)
                                    : "no power-central order up to nu_max";
    return emit("power-central", opt, std::move(config), json(result), {}, summary);
}

int run_chi_f(const std::string& poly_text, unsigned n, const std::string& units_text,
              const CommonOptions& opt) {
    NcPolynomial p = polynomial_from_text(poly_text);
    json config = config_json(opt);
    config["poly"] = p.str();
    config["n"] = n;

    std::optional<UnitAssignment> spectrum_base, delta_base;
    if (!units_text.empty()) {
        UnitAssignment base = parse_units(units_text, n);
        if (base.units.size() != p.num_vars())
            throw std::invalid_argument("--units length must match the variable count");
        UnitValueClass cls = classify_value(evaluate_on_units(p, base));
        if (cls.kind == UnitValueKind::UnitMultiple)
            spectrum_base = base;
        else
            delta_base = base;
        config["units"] = base;
    } else {
        ScanReport scan = scan_units(p, n, opt.budget, opt.allow_sampling);
        for (const auto& [target, witness] : scan.unit_witnesses) {
            long long disp = (static_cast<long long>(target.second) - target.first) %
                             static_cast<long long>(n);
            if (disp < 0) disp += n;
            if (disp == 1) {
                spectrum_base = witness;
                break;
            }
        }
        delta_base = scan.diag_nonscalar_witness;
    }

    json result;
    std::string summary;
    if (spectrum_base) {
        unsigned valid = 0, holds = 0;
        Rational alpha_example;
        bool have_alpha = false;
        for (unsigned trial = 0; trial < opt.trials; ++trial) {
            Rng rng(derive_seed(derive_seed(opt.seed, "chi-f/spectrum"), trial));
            TParameters<Rational> t =
                random_integer_tparams(rng, n, spectrum_base->units.size(), opt.box);
            Matrix<Rational> f = build_f(p, *spectrum_base, t);
            bool starred = true;
            for (auto [i, j] : cycle_support(n))
                if (f(i, j).is_zero()) starred = false;
            if (!starred) continue;
            ++valid;
            SpectrumCheck<Rational> sc = verify_cyclic_spectrum(f);
            if (sc.holds) {
                ++holds;
                if (!have_alpha && !sc.alpha.is_zero()) {
                    alpha_example = sc.alpha;
                    have_alpha = true;
                }
            }
        }
        result["spectrum"] = json{{"base", *spectrum_base},
                                  {"trials_with_nonzero_star", valid},
                                  {"char_poly_is_lambda_n_minus_alpha", valid > 0 && holds == valid},
                                  {"alpha_example", have_alpha ? json(alpha_example) : json(nullptr)}};
        summary += "spectrum holds " + std::to_string(holds) + "/" + std::to_string(valid) + "; ";
    } else {
        result["spectrum"] = nullptr;
    }
    if (delta_base) {
        std::size_t delta = f_differential_rank(p, *delta_base, opt.trials,
                                                derive_seed(opt.seed, "chi-f/delta"), opt.box);
        result["delta"] = json{{"base", *delta_base}, {"delta", delta}};
        summary += "delta = " + std::to_string(delta);
    } else {
        result["delta"] = nullptr;
        summary += "no diagonal witness";
    }
    return emit("chi-f", opt, std::move(config), std::move(result), {}, summary);
}

int run_harmonic(unsigned n, const std::string& diag_text, const CommonOptions& opt) {
    DiagonalVector d = parse_diagonal(diag_text, n);
    if (d.size() != n)
        throw std::invalid_argument("--diag must have exactly n entries");
    DftResult dft = dft_decompose(d);
    json config = config_json(opt);
    config["n"] = n;
    config["diag"] = d;
    std::string summary = "support size " + std::to_string(dft.support.size());
    return emit("harmonic", opt, std::move(config), json(dft), {}, summary);
}

int run_verify_2pol0(const std::string& a_text, const std::string& b_text,
                     const std::string& alpha_text, const CommonOptions& opt) {
    Quaternion a = Quaternion::parse(a_text);
    Quaternion b = Quaternion::parse(b_text);
    Rational alpha = Rational::parse(alpha_text);
    QuatMatrix2 m = build_square_central(a, b, alpha);
    QuatMatrix2 sq = m * m;
    SquareCentralCheck check = verify_square_central_form(m);
    bool square_ok = sq == QuatMatrix2::scalar(alpha);
    json config = config_json(opt);
    config["a"] = a;
    config["b"] = b;
    config["alpha"] = alpha;
    json result{{"matrix", m},
                {"square", sq},
                {"square_is_alpha_identity", square_ok},
                {"form_check", json{{"is_form", check.is_form},
                                    {"alpha", check.alpha ? json(*check.alpha) : json(nullptr)}}}};
    if (!square_ok || !check.is_form)
        throw TheoremContradiction("square-central form failed to square to alpha*I");
    return emit("verify-2pol0", opt, std::move(config), std::move(result), {},
                "A^2 = alpha*I with alpha = " + alpha.str());
}

int run_selftest(const CommonOptions& opt) {
    std::vector<CriterionResult> results = run_acceptance(opt.seed);
    json arr = json::array();
    bool all = true;
    for (const auto& r : results) {
        arr.push_back(json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        std::cerr << "[" << (r.passed ? "PASS" : "FAIL") << "] " << r.id << " " << r.title << " - "
                  << r.detail << "\n";
        all = all && r.passed;
    }
    json config = config_json(opt);
    return emit("selftest", opt, std::move(config), std::move(arr), {},
                all ? "all criteria passed" : "FAILURES present", all ? 0 : 1);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for multilinear polynomial images on matrix algebras"};
    app.require_subcommand(1);

    std::string poly_text, units_text, diag_text, a_text, b_text, alpha_text;
    unsigned n = 2, nu_max = 8;
    std::optional<unsigned> nu;
    bool no_filters = false;

    CommonOptions classify_opt, scan_opt, imagedim_opt, power_opt, chi_opt, harmonic_opt,
        quat_opt, selftest_opt;

    auto* classify = app.add_subcommand("classify", "classify Image p as PI / Central / NonCentral");
    classify->add_option("--poly", poly_text, "polynomial text or builtin name")->required();
    classify->add_option("--n", n, "matrix size")->check(CLI::PositiveNumber)->required();
    add_common(classify, classify_opt, 8);

    auto* scan = app.add_subcommand("scan-units", "exhaustive matrix-unit scan with value classes");
    scan->add_option("--poly", poly_text, "polynomial text or builtin name")->required();
    scan->add_option("--n", n, "matrix size")->check(CLI::PositiveNumber)->required();
    add_common(scan, scan_opt);

    auto* imagedim = app.add_subcommand("image-dim", "lower bound for dim of the closure of Image p");
    imagedim->add_option("--poly", poly_text, "polynomial text or builtin name")->required();
    imagedim->add_option("--n", n, "matrix size")->check(CLI::PositiveNumber)->required();
    add_common(imagedim, imagedim_opt, 8);

    auto* power = app.add_subcommand("power-central", "probe nu-centrality / search the order");
    power->add_option("--poly", poly_text, "polynomial text or builtin name")->required();
    power->add_option("--n", n, "matrix size")->check(CLI::PositiveNumber)->required();
    power->add_option("--nu", nu, "probe exactly this power");
    power->add_option("--nu-max", nu_max, "largest power for the order search")->capture_default_str();
    power->add_flag("--no-filters", no_filters, "disable the gcd and order filters");
    add_common(power, power_opt);

    auto* chif = app.add_subcommand("chi-f", "chi-orbit construction: cyclic spectrum and delta");
    chif->add_option("--poly", poly_text, "polynomial text or builtin name")->required();
    chif->add_option("--n", n, "matrix size")->check(CLI::PositiveNumber)->required();
    chif->add_option("--units", units_text, "base assignment as i.j pairs, e.g. 1.2,2.1");
    add_common(chif, chi_opt);

    auto* harmonic = app.add_subcommand("harmonic", "DFT decomposition of a diagonal in the e basis");
    harmonic->add_option("--n", n, "order (vector length)")->check(CLI::PositiveNumber)->required();
    harmonic->add_option("--diag", diag_text, "comma-separated entries, e.g. 1,e,-1,-e")->required();
    add_common(harmonic, harmonic_opt);

    auto* quat = app.add_subcommand("verify-2pol0", "build and check the square-central 2x2 quaternion form");
    quat->add_option("--a", a_text, "quaternion, e.g. 1-2*i+3/2*j")->required();
    quat->add_option("--b", b_text, "nonzero quaternion")->required();
    quat->add_option("--alpha", alpha_text, "rational")->required();
    add_common(quat, quat_opt);

    auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
    add_common(selftest, selftest_opt);

    try {
        app.parse(argc, argv);
        if (classify->parsed()) return run_classify("classify", poly_text, n, classify_opt);
        if (scan->parsed()) return run_scan_units(poly_text, n, scan_opt);
        if (imagedim->parsed()) return run_classify("image-dim", poly_text, n, imagedim_opt);
        if (power->parsed())
            return run_power_central(poly_text, n, nu, nu_max, no_filters, power_opt);
        if (chif->parsed()) return run_chi_f(poly_text, n, units_text, chi_opt);
        if (harmonic->parsed()) return run_harmonic(n, diag_text, harmonic_opt);
        if (quat->parsed()) return run_verify_2pol0(a_text, b_text, alpha_text, quat_opt);
        if (selftest->parsed()) return run_selftest(selftest_opt);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cout << matpoly::json{{"command", "parse"},
                                   {"error", json{{"message", e.what()}}},
                                   {"version", kVersion}}
                         .dump(2)
                  << "\n";
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const matpoly::ParseError& e) {
        std::cout << matpoly::json{{"command", "parse"},
                                   {"error", json{{"message", e.what()}, {"position", e.position()}}},
                                   {"version", kVersion}}
                         .dump(2)
                  << "\n";
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const matpoly::LemmaGraphViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const matpoly::TheoremContradiction& e) {
        std::cerr << "theorem contradiction: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cout << matpoly::json{{"command", "parse"},
                                   {"error", json{{"message", e.what()}}},
                                   {"version", kVersion}}
                         .dump(2)
                  << "\n";
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cout << matpoly::json{{"command", "parse"},
                                   {"error", json{{"message", e.what()}}},
                                   {"version", kVersion}}
                         .dump(2)
                  << "\n";
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << matpoly::json{{"command", "parse"},
                                   {"error", json{{"message", e.what()}}},
                                   {"version", kVersion}}
                         .dump(2)
                  << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
