// ellq command-line front end: pointwise evaluation, property scans, the full
// verification suite, and the identity sub-suite.
//
// Exit codes: 0 success / all checks passed, 1 verification failure,
// 2 usage error, 3 evaluation domain or pole error.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ellq/elliptic.hpp"
#include "ellq/qbinomials.hpp"
#include "ellq/qnumbers.hpp"
#include "ellq/sigma.hpp"
#include "ellq/theta.hpp"
#include "ellq/verifier.hpp"

namespace {

using ellq::Nome;
using ellq::ParamSet;
using ellq::PrecisionPolicy;
namespace verifier = ellq::verifier;

// ---------------------------------------------------------------------------
// eval registry

struct Args {
    std::map<std::string, double> kv;

    double get(const std::string& name) const {
        auto it = kv.find(name);
        if (it == kv.end()) throw CLI::ValidationError("missing parameter " + name);
        return it->second;
    }
    int get_int(const std::string& name) const {
        const double v = get(name);
        if (v != static_cast<long long>(v))
            throw CLI::ValidationError("parameter " + name + " must be an integer");
        return static_cast<int>(v);
    }
};

struct EvalEntry {
    std::vector<std::string> params;
    std::function<double(const Args&, const PrecisionPolicy&)> fn;
};

ParamSet params_of(const Args& a, double p = 0.0) {
    return ParamSet{a.get("q"), a.get("a"), a.get("b"), Nome(p)};
}

const std::map<std::string, EvalEntry>& eval_registry() {
    static const std::map<std::string, EvalEntry> reg = {
        {"q_number", {{"x", "q"}, [](const Args& a, const PrecisionPolicy&) {
                          return ellq::q_number(a.get("x"), a.get("q"));
                      }}},
        {"quantum_number", {{"x", "q"}, [](const Args& a, const PrecisionPolicy&) {
                                return ellq::quantum_number(a.get("x"), a.get("q"));
                            }}},
        {"aq_number", {{"x", "a", "q"}, [](const Args& a, const PrecisionPolicy&) {
                           return ellq::aq_number(a.get("x"), a.get("a"), a.get("q"));
                       }}},
        {"bq_number", {{"x", "b", "q"}, [](const Args& a, const PrecisionPolicy&) {
                           return ellq::bq_number(a.get("x"), a.get("b"), a.get("q"));
                       }}},
        {"abq_number", {{"x", "q", "a", "b"}, [](const Args& a, const PrecisionPolicy&) {
                            return ellq::abq_number(a.get("x"), params_of(a));
                        }}},
        {"abq_weight", {{"x", "q", "a", "b"}, [](const Args& a, const PrecisionPolicy&) {
                            return ellq::abq_weight(a.get("x"), params_of(a));
                        }}},
        {"abq_number_negative",
         {{"x", "q", "a", "b"}, [](const Args& a, const PrecisionPolicy&) {
              return ellq::abq_number_negative(a.get("x"), params_of(a));
          }}},
        {"theta", {{"x", "p"}, [](const Args& a, const PrecisionPolicy& pol) {
                       return ellq::theta(a.get("x"), Nome(a.get("p")), pol);
                   }}},
        {"q_pochhammer_inf", {{"a", "q"}, [](const Args& a, const PrecisionPolicy& pol) {
                                  return ellq::q_pochhammer_inf(a.get("a"), a.get("q"), pol);
                              }}},
        {"q_pochhammer", {{"a", "q", "k"}, [](const Args& a, const PrecisionPolicy& pol) {
                              return ellq::q_pochhammer(a.get("a"), a.get("q"), a.get("k"), pol);
                          }}},
        {"theta_pochhammer",
         {{"a", "q", "p", "k"}, [](const Args& a, const PrecisionPolicy& pol) {
              return ellq::theta_pochhammer(a.get("a"), a.get("q"), Nome(a.get("p")),
                                            a.get_int("k"), pol);
          }}},
        {"sigma", {{"t", "p"}, [](const Args& a, const PrecisionPolicy& pol) {
                       ellq::SigmaContext ctx(Nome(a.get("p")), pol);
                       return ellq::sigma(a.get("t"), ctx, pol);
                   }}},
        {"zeta_w", {{"t", "p"}, [](const Args& a, const PrecisionPolicy& pol) {
                        ellq::SigmaContext ctx(Nome(a.get("p")), pol);
                        return ellq::zeta_w(a.get("t"), ctx, pol);
                    }}},
        {"wp", {{"t", "p"}, [](const Args& a, const PrecisionPolicy& pol) {
                    ellq::SigmaContext ctx(Nome(a.get("p")), pol);
                    return ellq::wp(a.get("t"), ctx, pol);
                }}},
        {"continuous_binomial", {{"x", "k"}, [](const Args& a, const PrecisionPolicy&) {
                                     return ellq::continuous_binomial(a.get("x"), a.get("k"));
                                 }}},
        {"q_binomial", {{"x", "k", "q"}, [](const Args& a, const PrecisionPolicy& pol) {
                            return ellq::q_binomial(a.get("x"), a.get("k"), a.get("q"), pol);
                        }}},
        {"aq_binomial",
         {{"x", "k", "a", "q"}, [](const Args& a, const PrecisionPolicy& pol) {
              return ellq::aq_binomial(a.get("x"), a.get("k"), a.get("a"), a.get("q"), pol);
          }}},
        {"bq_binomial",
         {{"x", "k", "b", "q"}, [](const Args& a, const PrecisionPolicy& pol) {
              return ellq::bq_binomial(a.get("x"), a.get("k"), a.get("b"), a.get("q"), pol);
          }}},
        {"abq_binomial",
         {{"x", "k", "q", "a", "b"}, [](const Args& a, const PrecisionPolicy& pol) {
              return ellq::abq_binomial(a.get("x"), a.get("k"), params_of(a), pol);
          }}},
        {"elliptic_number",
         {{"x", "q", "a", "b", "p"}, [](const Args& a, const PrecisionPolicy& pol) {
              return ellq::elliptic_number(a.get("x"), params_of(a, a.get("p")), pol);
          }}},
        {"elliptic_weight",
         {{"x", "q", "a", "b", "p"}, [](const Args& a, const PrecisionPolicy& pol) {
              return ellq::elliptic_weight(a.get("x"), params_of(a, a.get("p")), pol);
          }}},
        {"elliptic_binomial",
         {{"x", "k", "q", "a", "b", "p"}, [](const Args& a, const PrecisionPolicy& pol) {
              return ellq::elliptic_binomial(a.get("x"), a.get_int("k"),
                                             params_of(a, a.get("p")), pol);
          }}},
        {"f_kernel", {{"u", "x", "r", "q"}, [](const Args& a, const PrecisionPolicy&) {
                          ellq::KernelSpec spec(a.get("x"), a.get("r"), a.get("q"));
                          return ellq::f_kernel(a.get("u"), spec);
                      }}},
        {"f_kernel_d1", {{"u", "x", "r", "q"}, [](const Args& a, const PrecisionPolicy&) {
                             ellq::KernelSpec spec(a.get("x"), a.get("r"), a.get("q"));
                             return ellq::f_kernel_d1(a.get("u"), spec);
                         }}},
        {"f_kernel_d2", {{"u", "x", "r", "q"}, [](const Args& a, const PrecisionPolicy&) {
                             ellq::KernelSpec spec(a.get("x"), a.get("r"), a.get("q"));
                             return ellq::f_kernel_d2(a.get("u"), spec);
                         }}},
        {"theta_kernel",
         {{"u", "x", "r", "q", "p"}, [](const Args& a, const PrecisionPolicy& pol) {
              ellq::ThetaKernelSpec spec(a.get("x"), a.get("r"), a.get("q"), Nome(a.get("p")));
              return ellq::theta_kernel(a.get("u"), spec, pol);
          }}},
        {"theta_kernel_d1",
         {{"u", "x", "r", "q", "p"}, [](const Args& a, const PrecisionPolicy& pol) {
              ellq::ThetaKernelSpec spec(a.get("x"), a.get("r"), a.get("q"), Nome(a.get("p")));
              return ellq::theta_kernel_d1_closed(a.get("u"), spec, pol);
          }}},
        {"theta_kernel_d2",
         {{"u", "x", "r", "q", "p"}, [](const Args& a, const PrecisionPolicy& pol) {
              ellq::ThetaKernelSpec spec(a.get("x"), a.get("r"), a.get("q"), Nome(a.get("p")));
              return ellq::theta_kernel_d2(a.get("u"), spec, pol);
          }}},
    };
    return reg;
}

// ---------------------------------------------------------------------------
// shared CLI option plumbing

struct CommonOpts {
    PrecisionPolicy precision{};
    int threads = 0;
    bool timing = false;
    std::string out;
    std::string format = "json";
};

void add_precision_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--tail-bound", o.precision.product_tail_bound,
                    "relative tail of truncated infinite products");
    cmd->add_option("--eta-terms", o.precision.eta_terms, "minimum eta series terms");
    cmd->add_option("--fd-step", o.precision.fd_step, "finite-difference base step");
    cmd->add_option("--report-tol", o.precision.report_tol, "identity residual tolerance");
}

void add_output_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("-o,--out", o.out, "report file (default: stdout)");
    cmd->add_option("--format", o.format, "report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--timing", o.timing,
                  "embed wall-clock timings in report files (breaks byte-for-byte "
                  "reproducibility)");
    cmd->add_option("--threads", o.threads, "worker threads (0 = ELLQ_THREADS/auto)");
    cmd->set_config("--config", "", "read options from a key=value file");
}

void write_reports(const std::vector<verifier::VerificationReport>& reports,
                   const CommonOpts& o, bool single) {
    std::string payload;
    if (o.format == "csv")
        payload = verifier::reports_to_csv(reports, o.timing);
    else if (single && reports.size() == 1)
        payload = verifier::report_to_json(reports.front(), o.timing);
    else
        payload = verifier::reports_to_json(reports, o.timing);
    if (o.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw CLI::ValidationError("cannot open output file " + o.out);
        f << payload;
    }
}

void print_summary_line(const verifier::VerificationReport& r, std::ostream& os) {
    os << (r.passed() ? "[PASS] " : "[FAIL] ") << r.property_id << ": violations="
       << r.violations << "/" << r.points_tested;
    if (r.violations_expected) os << " (violations expected)";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", r.min_slack);
    os << " min_slack=" << buf << " skips=" << r.domain_skips;
    if (r.noise_reclassified) os << " noise=" << r.noise_reclassified;
    os << "\n";
}

struct SuiteEntry {
    const char* id;
    int grid;
    long long random;
};

/// Default sampling budget per property: every theorem scan covers at least
/// 10^4 in-domain points.
const std::vector<SuiteEntry>& suite_plan() {
    static const std::vector<SuiteEntry> plan = {
        {"check_prop_1factor", 4, 15000},
        {"check_aq_numbers", 4, 15000},
        {"check_bq_numbers", 4, 15000},
        {"check_abq_shifted", 4, 15000},
        {"check_abq_direct", 4, 15000},
        {"check_cont_binomial", 4, 15000},
        {"check_aq_binomial_lower", 4, 15000},
        {"check_abq_binomial_upper", 4, 15000},
        {"check_ell_shifted", 4, 15000},
        {"check_ell_direct", 4, 15000},
        {"check_ell_binomial_upper", 4, 15000},
        {"neg_abq_direct_swapped", 3, 8000},
        {"neg_bq_binomial_lower", 3, 8000},
        {"identity_theta_inversion", 6, 2000},
        {"identity_theta_quasiperiod", 6, 2000},
        {"identity_theta_addition", 3, 2000},
        {"identity_sigma_addition", 3, 1000},
        {"identity_zeta_diff0", 3, 500},
        {"identity_zeta_diff2", 4, 500},
        {"identity_wp_relation", 4, 500},
        {"identity_abq_addition", 4, 10000},
        {"identity_ell_addition", 3, 10000},
        {"identity_binom_dual_forms", 3, 3000},
        {"identity_k1_reductions", 3, 3000},
        {"identity_negative_argument", 4, 3000},
        {"identity_bq_difference", 4, 5000},
    };
    return plan;
}

int run_plan(const std::vector<SuiteEntry>& plan, std::uint64_t base_seed, bool quick,
             const CommonOpts& opts) {
    std::vector<verifier::VerificationReport> reports;
    bool all_pass = true;
    std::uint64_t offset = 0;
    for (const SuiteEntry& entry : plan) {
        verifier::ScanSpec spec;
        spec.property_id = entry.id;
        spec.grid_points = quick ? 3 : entry.grid;
        spec.random_points = quick ? std::max<long long>(200, entry.random / 20)
                                   : entry.random;
        spec.seed = base_seed + offset++;
        spec.precision = opts.precision;
        spec.threads = opts.threads;
        verifier::VerificationReport rep = verifier::run_scan(spec);
        print_summary_line(rep, opts.out.empty() ? std::cerr : std::cout);
        all_pass = all_pass && rep.passed();
        reports.push_back(std::move(rep));
    }
    write_reports(reports, opts, false);
    return all_pass ? 0 : 1;
}

std::vector<SuiteEntry> identity_plan() {
    std::vector<SuiteEntry> plan;
    for (const SuiteEntry& e : suite_plan())
        if (std::string_view(e.id).starts_with("identity_")) plan.push_back(e);
    return plan;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized q- and elliptic numbers, binomials, and a "
                 "numerical certification harness for their log-concavity "
                 "properties"};
    app.require_subcommand(1);

    // --- eval ---------------------------------------------------------------
    auto* eval_cmd = app.add_subcommand("eval", "evaluate one library operation");
    std::string expr_id;
    std::vector<std::string> assignments;
    CommonOpts eval_opts;
    eval_cmd->add_option("expr", expr_id, "operation name (see --list)")->required(false);
    eval_cmd->add_option("args", assignments, "key=value parameter assignments");
    bool list_exprs = false;
    eval_cmd->add_flag("--list", list_exprs, "list available operations");
    add_precision_opts(eval_cmd, eval_opts);

    // --- scan ---------------------------------------------------------------
    auto* scan_cmd = app.add_subcommand("scan", "scan one property of the catalog");
    verifier::ScanSpec scan_spec;
    CommonOpts scan_opts;
    std::vector<std::string> domain_tokens;
    double scan_tol = -1.0;
    bool list_props = false;
    scan_cmd->add_option("--property", scan_spec.property_id, "property id")
        ->required(false);
    scan_cmd->add_option("--grid", scan_spec.grid_points, "grid points per axis (0 or >=2)");
    scan_cmd->add_option("--random", scan_spec.random_points, "random points");
    scan_cmd->add_option("--seed", scan_spec.seed, "RNG seed");
    scan_cmd->add_option("--slack-tol", scan_tol, "violation threshold on slack");
    scan_cmd->add_option("--domain", domain_tokens,
                         "domain override: 'var=lo:hi' or 'a>b' (complement order)");
    scan_cmd->add_flag("--list", list_props, "list catalog properties");
    add_precision_opts(scan_cmd, scan_opts);
    add_output_opts(scan_cmd, scan_opts);

    // --- suite --------------------------------------------------------------
    auto* suite_cmd = app.add_subcommand(
        "suite", "run the full catalog: theorems, identities, negative controls");
    CommonOpts suite_opts;
    std::uint64_t suite_seed = 20240809;
    bool quick = false;
    suite_cmd->add_option("--seed", suite_seed, "base seed");
    suite_cmd->add_flag("--quick", quick, "reduced sample counts");
    add_precision_opts(suite_cmd, suite_opts);
    add_output_opts(suite_cmd, suite_opts);

    // --- identities ---------------------------------------------------------
    auto* id_cmd = app.add_subcommand("identities", "run only the identity checks");
    CommonOpts id_opts;
    std::uint64_t id_seed = 20240809;
    bool id_quick = false;
    id_cmd->add_option("--seed", id_seed, "base seed");
    id_cmd->add_flag("--quick", id_quick, "reduced sample counts");
    add_precision_opts(id_cmd, id_opts);
    add_output_opts(id_cmd, id_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval_cmd->parsed()) {
            if (list_exprs) {
                for (const auto& [name, entry] : eval_registry()) {
                    std::cout << name << "(";
                    for (std::size_t i = 0; i < entry.params.size(); ++i)
                        std::cout << (i ? ", " : "") << entry.params[i];
                    std::cout << ")\n";
                }
                return 0;
            }
            if (expr_id.empty()) {
                std::cerr << "error: missing operation name (try eval --list)\n";
                return 2;
            }
            auto it = eval_registry().find(expr_id);
            if (it == eval_registry().end()) {
                std::cerr << "error: unknown operation '" << expr_id << "'\n";
                return 2;
            }
            Args args;
            for (const std::string& tok : assignments) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos) {
                    std::cerr << "error: expected key=value, got '" << tok << "'\n";
                    return 2;
                }
                const std::string key = tok.substr(0, eq);
                bool known = false;
                for (const auto& p : it->second.params) known = known || p == key;
                if (!known) {
                    std::cerr << "error: unknown parameter '" << key << "' for "
                              << expr_id << "\n";
                    return 2;
                }
                try {
                    args.kv[key] = std::stod(tok.substr(eq + 1));
                } catch (const std::exception&) {
                    std::cerr << "error: cannot parse value in '" << tok << "'\n";
                    return 2;
                }
            }
            eval_opts.precision.validate();
            const double value = it->second.fn(args, eval_opts.precision);
            std::printf("%.15g\n", value);
            const auto& pol = eval_opts.precision;
            std::printf("precision: product_tail_bound=%g eta_terms=%d fd_step=%g "
                        "report_tol=%g\n",
                        pol.product_tail_bound, pol.eta_terms, pol.fd_step, pol.report_tol);
            return 0;
        }

        if (scan_cmd->parsed()) {
            if (list_props) {
                for (const auto& info : verifier::catalog()) {
                    std::cout << info.id << (info.negative_control ? " [negative control]" : "")
                              << (info.identity ? " [identity]" : "") << "\n    "
                              << info.summary << "\n";
                }
                return 0;
            }
            if (scan_spec.property_id.empty()) {
                std::cerr << "error: --property is required (try scan --list)\n";
                return 2;
            }
            for (const std::string& tok : domain_tokens) {
                if (tok == "a>b") {
                    scan_spec.swap_ab_order = true;
                    continue;
                }
                const auto eq = tok.find('=');
                const auto colon = tok.find(':', eq == std::string::npos ? 0 : eq);
                if (eq == std::string::npos || colon == std::string::npos) {
                    std::cerr << "error: bad --domain token '" << tok
                              << "' (expected var=lo:hi or a>b)\n";
                    return 2;
                }
                try {
                    scan_spec.range_overrides[tok.substr(0, eq)] = {
                        std::stod(tok.substr(eq + 1, colon - eq - 1)),
                        std::stod(tok.substr(colon + 1))};
                } catch (const std::exception&) {
                    std::cerr << "error: cannot parse range in '" << tok << "'\n";
                    return 2;
                }
            }
            if (scan_tol > 0) scan_spec.slack_tol = scan_tol;
            scan_spec.precision = scan_opts.precision;
            scan_spec.threads = scan_opts.threads;

            try {
                if (scan_spec.property_id == "check_identity_suite") {
                    std::vector<verifier::VerificationReport> reports;
                    bool all_pass = true;
                    std::uint64_t offset = 0;
                    for (const std::string& id : verifier::identity_property_ids()) {
                        verifier::ScanSpec sub = scan_spec;
                        sub.property_id = id;
                        sub.seed = scan_spec.seed + offset++;
                        auto rep = verifier::run_scan(sub);
                        print_summary_line(rep, scan_opts.out.empty() ? std::cerr : std::cout);
                        all_pass = all_pass && rep.passed();
                        reports.push_back(std::move(rep));
                    }
                    write_reports(reports, scan_opts, false);
                    return all_pass ? 0 : 1;
                }

                auto rep = verifier::run_scan(scan_spec);
                print_summary_line(rep, scan_opts.out.empty() ? std::cerr : std::cout);
                write_reports({rep}, scan_opts, true);
                return rep.passed() ? 0 : 1;
            } catch (const ellq::domain_error& e) {
                // invalid scan specs (unknown property, bad grid, empty domain)
                // are usage errors
                std::cerr << "error: invalid scan: " << e.what() << "\n";
                return 2;
            }
        }

        if (suite_cmd->parsed())
            return run_plan(suite_plan(), suite_seed, quick, suite_opts);

        if (id_cmd->parsed())
            return run_plan(identity_plan(), id_seed, id_quick, id_opts);
    } catch (const ellq::pole_error& e) {
        std::cerr << "error: pole: " << e.what() << "\n";
        return 3;
    } catch (const ellq::domain_error& e) {
        std::cerr << "error: domain: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
