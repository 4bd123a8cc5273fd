// Command-line front end: evaluate extended zeta objects, complementary
// sequences and closed forms, verify structural identities, and tabulate
// Bessel zeros and polynomial roots.
//
// Exit codes: 0 success / all identities passed, 1 usage or domain error,
// 2 convergence failure or any failed identity.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ezeta/closedforms.hpp"
#include "ezeta/complementary.hpp"
#include "ezeta/errors.hpp"
#include "ezeta/identities.hpp"
#include "ezeta/report_io.hpp"
#include "ezeta/specialfn.hpp"

namespace {

using namespace ezeta;

struct CliOptions {
    std::string seq_name = "natural";
    double a = 1.0;
    double nu = 0.0;
    int degree = 1;
    std::vector<double> values;
    std::string format = "human";
    double rel_tol = 1e-10;
    std::int64_t max_terms = 1'000'000;
    std::string config_file;
    std::optional<SequenceSpec> config_sequence;
};

OutputFormat parse_format(const std::string& f) {
    if (f == "human") return OutputFormat::Human;
    if (f == "json") return OutputFormat::Json;
    if (f == "csv") return OutputFormat::Csv;
    throw DomainError("unknown output format '" + f + "'");
}

SequenceSpec spec_from_options(const CliOptions& opt) {
    if (opt.config_sequence) return *opt.config_sequence;
    if (opt.seq_name == "natural") return SequenceSpec::natural();
    if (opt.seq_name == "odd") return SequenceSpec::odd();
    if (opt.seq_name == "shifted_linear") return SequenceSpec::shifted_linear(opt.a);
    if (opt.seq_name == "half_integer") return SequenceSpec::half_integer();
    if (opt.seq_name == "squares") return SequenceSpec::squares();
    if (opt.seq_name == "pronic") return SequenceSpec::pronic();
    if (opt.seq_name == "bessel_zeros") return SequenceSpec::bessel_zeros(opt.nu);
    if (opt.seq_name == "bessel_poly_roots") return SequenceSpec::bessel_poly_roots(opt.degree);
    if (opt.seq_name == "explicit") {
        std::vector<Complex> vals;
        for (double v : opt.values) vals.emplace_back(v, 0.0);
        return SequenceSpec::explicit_list(std::move(vals));
    }
    throw DomainError("unknown sequence family '" + opt.seq_name + "'");
}

SummationConfig summation_config(const CliOptions& opt) {
    SummationConfig cfg;
    cfg.rel_tol = opt.rel_tol;
    cfg.max_terms_per_axis = opt.max_terms;
    return cfg;
}

void apply_config_file(CliOptions& opt, const CLI::App& cmd) {
    if (opt.config_file.empty()) return;
    std::ifstream in(opt.config_file);
    if (!in) throw DomainError("cannot open config file '" + opt.config_file + "'");
    nlohmann::json j;
    in >> j;
    // Flags given on the command line take precedence over the file.
    const auto given = [&cmd](const std::string& name) {
        const auto* o = cmd.get_option_no_throw(name);
        return o != nullptr && o->count() > 0;
    };
    if (j.contains("rel_tol") && !given("--rel-tol")) opt.rel_tol = j["rel_tol"].get<double>();
    if (j.contains("max_terms") && !given("--max-terms"))
        opt.max_terms = j["max_terms"].get<std::int64_t>();
    if (j.contains("format") && !given("--format")) opt.format = j["format"].get<std::string>();
    if (j.contains("sequence") && !given("--seq"))
        opt.config_sequence = sequence_spec_from_json(j["sequence"].dump());
}

void print_eval(const EvalResult& r, OutputFormat format) {
    switch (format) {
        case OutputFormat::Human:
            std::cout << "value = " << format_complex(r.value) << "\n"
                      << "abs_error_estimate = " << format_double(r.abs_error_estimate) << "\n"
                      << "terms_used = " << r.terms_used << "\n"
                      << "converged = " << (r.converged ? "true" : "false") << "\n";
            break;
        case OutputFormat::Json: std::cout << to_json(r) << "\n"; break;
        case OutputFormat::Csv:
            std::cout << "value,abs_error_estimate,terms_used,converged\n"
                      << format_complex(r.value) << ',' << format_double(r.abs_error_estimate)
                      << ',' << r.terms_used << ',' << (r.converged ? "true" : "false") << "\n";
            break;
    }
}

int finish_reports(const std::vector<IdentityReport>& reports, OutputFormat format) {
    print_reports(std::cout, reports, format);
    for (const auto& r : reports)
        if (!r.passed) return 2;
    return 0;
}

void add_sequence_flags(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--seq", opt.seq_name,
                    "sequence family: natural, odd, shifted_linear, half_integer, squares, "
                    "pronic, bessel_zeros, bessel_poly_roots, explicit");
    cmd->add_option("--a", opt.a, "shifted_linear offset a in (0,1]");
    cmd->add_option("--nu", opt.nu, "bessel_zeros order nu > -1");
    cmd->add_option("--n", opt.degree, "bessel_poly_roots degree n >= 1");
    cmd->add_option("--values", opt.values, "explicit sequence values (comma separated)")
        ->delimiter(',');
}

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--format", opt.format, "output format: human, json, csv");
    cmd->add_option("--rel-tol", opt.rel_tol, "target relative tolerance (default 1e-10)");
    cmd->add_option("--max-terms", opt.max_terms, "term budget per summation axis");
    cmd->add_option("--config", opt.config_file, "JSON config file; flags override it");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extended multiple zeta values, complementary zeta functions, "
                 "closed forms and identity verification"};
    app.require_subcommand(1);
    CliOptions opt;

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an extended (star) MZV or "
                                                "complementary zeta value");
    std::vector<double> comp_exponents;
    bool star = false, complementary = false;
    int higher_r = 2;
    eval_cmd->add_option("--comp", comp_exponents, "composition exponents s1,s2,...")
        ->delimiter(',')
        ->required();
    eval_cmd->add_flag("--star", star, "weak-inequality (star) sum");
    eval_cmd->add_flag("--complementary", complementary,
                       "complementary zeta at s = first exponent");
    eval_cmd->add_option("--higher-r", higher_r,
                         "order r of the complementary sequence (with --complementary)");
    add_sequence_flags(eval_cmd, opt);
    add_common_flags(eval_cmd, opt);

    // complement
    auto* comp_cmd = app.add_subcommand("complement", "print 1/z~_k for a sequence");
    std::int64_t comp_k = 1;
    std::int64_t comp_kmax = 0;
    int comp_r = 2;
    comp_cmd->add_option("--k", comp_k, "index k >= 1");
    comp_cmd->add_option("--kmax", comp_kmax, "print all indices 1..kmax");
    comp_cmd->add_option("--r", comp_r, "complementary order r >= 1 (default 2)");
    add_sequence_flags(comp_cmd, opt);
    add_common_flags(comp_cmd, opt);

    // closed-form
    auto* cf_cmd = app.add_subcommand("closed-form", "evaluate a closed-form complementary zeta");
    std::string which;
    int cf_s = 3;
    int cf_two_s = 2;
    std::string variant = "default";
    cf_cmd->add_option("--which", which,
                       "shifted_linear, half_integer, half_integer_odd, squares, pronic, "
                       "bessel, bessel_small, bessel_poly")
        ->required();
    cf_cmd->add_option("--s", cf_s, "argument s");
    cf_cmd->add_option("--two-s", cf_two_s, "argument 2s for bessel_small (2, 4 or 6)");
    cf_cmd->add_option("--variant", variant,
                       "index-drift variant: default, statement, proof_limits, derived, printed");
    add_sequence_flags(cf_cmd, opt);
    add_common_flags(cf_cmd, opt);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify structural identities");
    std::string identity_id;
    std::string suite_name;
    double vs = 3.0, vt = 2.0, vx_re = 0.0, vx_im = 0.0;
    int vr = 2, vn = 2;
    verify_cmd->add_option("identity", identity_id,
                           "identity id: reflection, euler, rational, taylor_sum, "
                           "general_rational, sum_formula, reduction, hirose, bessel, "
                           "bessel_poly");
    verify_cmd->add_option("--suite", suite_name, "run a named suite: default");
    verify_cmd->add_option("--s", vs, "parameter s");
    verify_cmd->add_option("--t", vt, "parameter t");
    verify_cmd->add_option("--x", vx_re, "shift x (real part)");
    verify_cmd->add_option("--x-im", vx_im, "shift x (imaginary part)");
    verify_cmd->add_option("--r", vr, "depth r");
    verify_cmd->add_option("--poly-n", vn, "Bessel polynomial degree");
    add_sequence_flags(verify_cmd, opt);
    add_common_flags(verify_cmd, opt);

    // bessel
    auto* bessel_cmd = app.add_subcommand("bessel", "Bessel zeros and polynomial roots");
    auto* zeros_cmd = bessel_cmd->add_subcommand("zeros", "positive zeros of J_nu");
    std::int64_t count = 10;
    zeros_cmd->add_option("--nu", opt.nu, "order nu > -1")->required();
    zeros_cmd->add_option("--count", count, "how many zeros");
    zeros_cmd->add_option("--format", opt.format, "output format");
    auto* roots_cmd = bessel_cmd->add_subcommand("poly-roots", "roots of the Bessel polynomial");
    roots_cmd->add_option("--n", opt.degree, "degree n >= 1")->required();
    roots_cmd->add_option("--format", opt.format, "output format");
    auto* poly_cmd = bessel_cmd->add_subcommand("poly", "Bessel polynomial coefficients");
    poly_cmd->add_option("--n", opt.degree, "degree n >= 0")->required();
    bessel_cmd->require_subcommand(1);

    // suite
    auto* suite_cmd = app.add_subcommand("suite", "run the default verification suite");
    add_common_flags(suite_cmd, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        const auto parsed = app.get_subcommands();
        if (!parsed.empty()) apply_config_file(opt, *parsed.front());
        const OutputFormat format = parse_format(opt.format);
        const SummationConfig cfg = summation_config(opt);

        if (eval_cmd->parsed()) {
            const SequencePtr seq = make_sequence(spec_from_options(opt));
            EvalResult r;
            if (complementary) {
                if (comp_exponents.size() != 1)
                    throw DomainError("--complementary expects a single exponent");
                r = higher_complementary_zeta(seq, higher_r, comp_exponents[0], cfg);
            } else if (star) {
                r = extended_star_mzv(seq, Composition{comp_exponents}, cfg);
            } else {
                r = extended_mzv(seq, Composition{comp_exponents}, cfg);
            }
            print_eval(r, format);
            return r.converged ? 0 : 2;
        }

        if (comp_cmd->parsed()) {
            const SequencePtr seq = make_sequence(spec_from_options(opt));
            const std::int64_t lo = comp_kmax > 0 ? 1 : comp_k;
            const std::int64_t hi = comp_kmax > 0 ? comp_kmax : comp_k;
            if (format == OutputFormat::Csv) std::cout << "k,z_k,inv_ztilde_k,abs_error\n";
            for (std::int64_t k = lo; k <= hi; ++k) {
                const auto res = higher_complementary_term(seq, k, comp_r, cfg);
                const std::string z = format_complex(seq->term(k));
                const std::string inv = format_complex(res.inv_value);
                switch (format) {
                    case OutputFormat::Human:
                        std::cout << "k=" << k << "  z_k=" << z << "  1/z~_k=" << inv
                                  << "  err=" << format_double(res.abs_error_estimate) << "\n";
                        break;
                    case OutputFormat::Json: {
                        nlohmann::ordered_json j;
                        j["k"] = k;
                        j["z_k"] = z;
                        j["inv_ztilde_k"] = inv;
                        j["abs_error"] = res.abs_error_estimate;
                        std::cout << j.dump() << "\n";
                        break;
                    }
                    case OutputFormat::Csv:
                        std::cout << k << ',' << z << ',' << inv << ','
                                  << format_double(res.abs_error_estimate) << "\n";
                        break;
                }
            }
            return 0;
        }

        if (cf_cmd->parsed()) {
            EvalResult r;
            if (which == "shifted_linear") {
                r = cf_shifted_linear(opt.a, cf_s, cfg);
            } else if (which == "half_integer") {
                r = cf_half_integer(cf_s, cfg,
                                    variant == "proof_limits" ? HalfIntegerVariant::ProofLimits
                                                              : HalfIntegerVariant::Statement);
            } else if (which == "half_integer_odd") {
                r = cf_half_integer_odd(cf_s, cfg,
                                        variant == "printed" ? HalfIntegerOddVariant::Printed
                                                             : HalfIntegerOddVariant::Derived);
            } else if (which == "squares") {
                r = cf_squares(cf_s, cfg);
            } else if (which == "pronic") {
                r.value = cf_pronic(cf_s);
                r.converged = true;
                r.abs_error_estimate = 1e-15 * std::abs(r.value.real());
            } else if (which == "bessel") {
                r = cf_bessel_complementary(opt.nu, cf_s, cfg);
            } else if (which == "bessel_small") {
                r.value = cf_bessel_small(opt.nu, cf_two_s);
                r.converged = true;
            } else if (which == "bessel_poly") {
                r = cf_besselpoly_complementary(opt.degree, cf_s, cfg);
            } else {
                throw DomainError("unknown closed form '" + which + "'");
            }
            print_eval(r, format);
            return r.converged ? 0 : 2;
        }

        if (verify_cmd->parsed()) {
            if (!suite_name.empty()) {
                if (suite_name != "default")
                    throw DomainError("unknown suite '" + suite_name + "'");
                return finish_reports(run_suite(default_suite(), cfg), format);
            }
            if (identity_id.empty())
                throw DomainError("verify: give an identity id or --suite default");
            SuiteItem item;
            item.identity_id = identity_id;
            item.sequence = spec_from_options(opt);
            item.parameters["s"] = vs;
            item.parameters["t"] = vt;
            item.parameters["x_re"] = vx_re;
            item.parameters["x_im"] = vx_im;
            item.parameters["r"] = vr;
            item.parameters["nu"] = opt.nu;
            item.parameters["n"] = vn;
            return finish_reports(run_suite({item}, cfg), format);
        }

        if (zeros_cmd->parsed()) {
            if (format == OutputFormat::Csv) std::cout << "k,x\n";
            for (std::int64_t k = 1; k <= count; ++k) {
                const double x = bessel_zero(opt.nu, k);
                if (format == OutputFormat::Json) {
                    nlohmann::ordered_json j;
                    j["k"] = k;
                    j["x"] = x;
                    std::cout << j.dump() << "\n";
                } else if (format == OutputFormat::Csv) {
                    std::cout << k << ',' << format_double(x) << "\n";
                } else {
                    std::cout << k << "  " << format_double(x) << "\n";
                }
            }
            return 0;
        }
        if (roots_cmd->parsed()) {
            const auto roots = bessel_poly_roots(opt.degree);
            if (format == OutputFormat::Csv) std::cout << "j,re,im\n";
            for (size_t j = 0; j < roots.size(); ++j) {
                if (format == OutputFormat::Json) {
                    nlohmann::ordered_json obj;
                    obj["j"] = j + 1;
                    obj["re"] = roots[j].real();
                    obj["im"] = roots[j].imag();
                    std::cout << obj.dump() << "\n";
                } else if (format == OutputFormat::Csv) {
                    std::cout << (j + 1) << ',' << format_double(roots[j].real()) << ','
                              << format_double(roots[j].imag()) << "\n";
                } else {
                    std::cout << (j + 1) << "  " << format_complex(roots[j]) << "\n";
                }
            }
            return 0;
        }
        if (poly_cmd->parsed()) {
            const auto poly = bessel_poly(opt.degree);
            std::cout << "degree " << poly.degree << ", coefficients (ascending powers):";
            for (long long c : poly.coefficients) std::cout << " " << c;
            std::cout << "\n";
            return 0;
        }

        if (suite_cmd->parsed())
            return finish_reports(run_suite(default_suite(), cfg), format);

        std::cerr << "no subcommand given\n";
        return 1;
    } catch (const DivergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
