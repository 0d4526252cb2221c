// hgm: command-line front end.
//
//   hgm verify --suite all|<name> [--trials N] [--dims a..b] [--m M|a..b] [--seed S]
//              [--density d[,d...]] [--weights sum1|sumge1] [--tol t] [--out path]
//   hgm kernels --kernels gauss,rational --suite thm44 --grids 16,32,64 [--out path] [--csv path]
//   hgm counterexample [--alpha a] [--corrupt]
//   hgm check --suite <name> --matrices a.json,b.json [--alpha a] [--beta b] [--weight-values w,...]
//   hgm numrad [--budget N] [--n n] [--m m] [--seed S]
//   hgm list
//
// Exit codes: 0 all asserted verdicts pass, 1 some inequality failed, 2 bad
// configuration or input.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hgm/errors.hpp"
#include "hgm/io.hpp"
#include "hgm/kernels.hpp"
#include "hgm/runner.hpp"
#include "hgm/spectral.hpp"
#include "hgm/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::pair<std::size_t, std::size_t> parse_range(const std::string& s, const char* what) {
    auto to_size = [&](const std::string& t) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(t, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (t.empty() || pos != t.size()) throw hgm::ConfigError(std::string("bad ") + what + " '" + s + "'");
        return static_cast<std::size_t>(v);
    };
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const auto v = to_size(s);
        return {v, v};
    }
    return {to_size(s.substr(0, dots)), to_size(s.substr(dots + 2))};
}

std::vector<std::string> split(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, sep);)
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<double> parse_doubles(const std::string& s, const char* what) {
    std::vector<double> out;
    for (const auto& item : split(s)) {
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (*end != '\0' || !std::isfinite(v)) throw hgm::ConfigError(std::string("bad ") + what + " '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw hgm::ConfigError(std::string("empty ") + what);
    return out;
}

void print_digest(const hgm::InstanceDigest& d) {
    std::cout << "    seed=" << d.seed << " n=" << d.n << " m=" << d.m << " k=" << d.k
              << " density=" << hgm::format_double(d.density);
    if (!d.weights.empty()) {
        std::cout << " weights=[";
        for (std::size_t i = 0; i < d.weights.size(); ++i)
            std::cout << (i ? "," : "") << hgm::format_double(d.weights[i]);
        std::cout << "]";
    }
    for (const auto& [k, v] : d.params) std::cout << " " << k << "=" << hgm::format_double(v);
    std::cout << "\n";
}

void print_failures(const hgm::SuiteRun& run, std::size_t limit = 5) {
    std::size_t shown = 0;
    for (std::size_t t = 0; t < run.trials.size() && shown < limit; ++t) {
        const auto& r = run.trials[t];
        if (r.passed()) continue;
        ++shown;
        std::cout << "  FAIL trial " << t << "\n";
        print_digest(r.digest);
        if (r.error) std::cout << "    error: " << *r.error << "\n";
        for (const auto& v : r.verdicts) {
            if (v.pass || !v.asserted) continue;
            std::cout << "    " << v.left << " <= " << v.right << " violated by " << hgm::format_double(-v.slack)
                      << "\n";
        }
    }
}

// Returns the exit code for a set of runs and prints a summary line per suite.
int summarize(const std::vector<hgm::SuiteRun>& runs) {
    bool ok = true;
    for (const auto& run : runs) {
        std::cout << run.suite << ": " << run.pass_count() << " pass, " << run.fail_count() << " fail\n";
        if (run.fail_count() != 0) {
            ok = false;
            print_failures(run);
        }
    }
    return ok ? kExitPass : kExitFail;
}

struct VerifyArgs {
    std::string suite = "all";
    std::size_t trials = 100;
    std::string dims = "2..8";
    std::string m = "2..5";
    std::uint64_t seed = 1;
    std::string density = "0.3,0.7,1.0";
    std::string weights;
    double tol = 1e-7;
    double abs_tol = 1e-12;
    std::string out;
    std::string format = "json";
};

int cmd_verify(const VerifyArgs& a) {
    hgm::SweepConfig c;
    c.trials = a.trials;
    c.seed = a.seed;
    std::tie(c.n_min, c.n_max) = parse_range(a.dims, "--dims");
    std::tie(c.m_min, c.m_max) = parse_range(a.m, "--m");
    c.densities = parse_doubles(a.density, "--density");
    if (a.weights == "sum1") c.weight_mode = hgm::WeightConstraint::SumOne;
    else if (a.weights == "sumge1") c.weight_mode = hgm::WeightConstraint::SumAtLeastOne;
    else if (!a.weights.empty()) throw hgm::ConfigError("--weights must be sum1 or sumge1");
    c.tol = {a.tol, a.abs_tol};
    const auto format = hgm::parse_report_format(a.format);

    std::vector<hgm::SuiteRun> runs;
    if (a.suite == "all") runs = hgm::run_all(c);
    else runs.push_back(hgm::run_suite(a.suite, c));

    if (!a.out.empty()) hgm::write_report(runs, a.out, format);
    return summarize(runs);
}

struct KernelArgs {
    std::string kernels = "gauss,rational";
    std::string suite = "thm44";
    std::string grids = "16,32,64";
    std::string out;
    std::string csv;
    std::optional<double> alpha;
    std::optional<double> beta;
    bool trend = false;
    double tol = 1e-7;
};

int cmd_kernels(const KernelArgs& a) {
    std::vector<hgm::KernelSpec> specs;
    for (const auto& k : split(a.kernels)) specs.push_back(hgm::KernelSpec::parse(k));
    if (specs.empty()) throw hgm::ConfigError("--kernels is empty");
    std::vector<std::size_t> grids;
    for (const auto& g : split(a.grids)) grids.push_back(parse_range(g, "--grids").first);

    hgm::RefineOptions opt;
    opt.alpha = a.alpha;
    opt.beta = a.beta;
    opt.tol.rel = a.tol;
    const auto result = hgm::refine_and_check(specs, a.suite, grids, opt);

    if (!a.out.empty()) hgm::write_report({result.as_suite_run()}, a.out, hgm::ReportFormat::Json);
    if (!a.csv.empty()) hgm::write_text(result.to_csv(), a.csv);

    int code = kExitPass;
    for (const auto& level : result.levels) {
        const bool ok = level.report.passed();
        std::cout << result.suite << " grid " << level.grid_n << ": " << (ok ? "pass" : "FAIL") << "\n";
        if (!ok) code = kExitFail;
    }
    if (a.trend) {
        const auto bad = hgm::convergence_trend(result);
        for (const auto& v : bad) {
            std::cout << "trend violated for " << v.label << ": " << hgm::format_double(v.fine_change) << " > 1.1 * "
                      << hgm::format_double(v.coarse_change) << "\n";
        }
        std::cout << "convergence trend: " << (bad.empty() ? "ok" : "FAIL") << "\n";
        if (!bad.empty()) code = kExitFail;
    }
    return code;
}

void print_matrix(const char* name, const hgm::NonNegativeMatrix& m) {
    std::cout << name << " =";
    for (const auto& row : m.rows()) {
        std::cout << " [";
        for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
        std::cout << "]";
    }
    std::cout << "\n";
}

int cmd_counterexample(double alpha, bool corrupt) {
    const auto r = hgm::run_counterexample(alpha, corrupt);
    print_matrix("A", hgm::NonNegativeMatrix::from_rows({{0, 1}, {corrupt ? 1.0 : 0.0, 1}}));
    print_matrix("B", hgm::NonNegativeMatrix::from_rows({{1, 1}, {0, 0}}));
    const double lhs = r.at("||A^(a) o B^(a) o A^(a)||");
    const double rhs = r.at("||ABA||^a");
    std::cout << "alpha = " << hgm::format_double(alpha) << "\n"
              << "lhs ||A^(a) o B^(a) o A^(a)||_2 = " << hgm::format_double(lhs) << "\n"
              << "rhs ||ABA||_2^a = " << hgm::format_double(rhs) << "\n";
    const bool reproduced = std::fabs(lhs - 1.0) <= 1e-12 && std::fabs(rhs) <= 1e-12;
    std::cout << (reproduced ? "violation reproduced: lhs = 1 > 0 = rhs" : "values deviate from lhs = 1, rhs = 0")
              << "\n";
    return reproduced ? kExitPass : kExitFail;
}

struct CheckArgs {
    std::string suite;
    std::string matrices;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::string weight_values;
    bool sum_at_least_one = false;
    double tol = 1e-7;
    std::string out;
};

int cmd_check(const CheckArgs& a) {
    const auto& suite = hgm::find_suite(a.suite);
    std::vector<hgm::NonNegativeMatrix> mats;
    for (const auto& path : split(a.matrices)) mats.push_back(hgm::load_matrix(path));
    if (mats.empty()) throw hgm::ConfigError("--matrices is empty");

    hgm::SuiteParams p;
    p.alpha = a.alpha;
    p.beta = a.beta;
    if (suite.weights != hgm::WeightNeed::None) {
        std::vector<double> w = a.weight_values.empty()
                                    ? std::vector<double>(mats.size(), 1.0 / static_cast<double>(mats.size()))
                                    : parse_doubles(a.weight_values, "--weight-values");
        const auto c = suite.weights == hgm::WeightNeed::SumAtLeastOne ? hgm::WeightConstraint::SumAtLeastOne
                                                                        : hgm::WeightConstraint::SumOne;
        p.weights = hgm::WeightVector(std::move(w), c);
    }
    const hgm::Tolerance tol{a.tol, 1e-12};
    hgm::InequalityReport r = suite.evaluate(mats, p, tol);
    r.digest.n = mats.front().n();
    r.digest.m = mats.size();
    r.digest.k = 1;
    if (p.weights) r.digest.weights.assign(p.weights->values().begin(), p.weights->values().end());

    for (const auto& q : r.quantities) std::cout << q.label << " = " << hgm::format_double(q.value) << "\n";
    hgm::SuiteRun run{std::string(suite.name), {r}};
    if (!a.out.empty()) hgm::write_report({run}, a.out, hgm::ReportFormat::Json);
    return summarize({run});
}

int cmd_numrad(const hgm::NumradSearchConfig& c) {
    const auto found = hgm::search_numrad_violation(c);
    if (!found) {
        std::cout << "no violation of w(B_1...B_m) <= prod w(P_j)^a_j in " << c.budget << " trials\n";
        return kExitPass;
    }
    std::cout << "violation at trial " << found->trial << ": w(B_1...B_m) = " << hgm::format_double(found->lhs)
              << " > " << hgm::format_double(found->rhs) << " = prod w(P_j)^a_j\nweights =";
    for (double w : found->weights) std::cout << " " << hgm::format_double(w);
    std::cout << "\n";
    for (std::size_t j = 0; j < found->mats.size(); ++j) std::cout << hgm::matrix_to_json(found->mats[j]);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hadamard geometric mean inequality checker"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run seeded random trials of one or all suites");
    verify->add_option("--suite", va.suite, "suite name or 'all'");
    verify->add_option("--trials", va.trials, "trials per suite");
    verify->add_option("--dims", va.dims, "dimension n or range a..b");
    verify->add_option("--m", va.m, "operator count m or range a..b");
    verify->add_option("--seed", va.seed, "master seed");
    verify->add_option("--density", va.density, "comma-separated densities in (0,1]");
    verify->add_option("--weights", va.weights, "sum1 or sumge1");
    verify->add_option("--tol", va.tol, "relative tolerance");
    verify->add_option("--abs-tol", va.abs_tol, "absolute tolerance");
    verify->add_option("--out", va.out, "report path");
    verify->add_option("--format", va.format, "json or csv");

    KernelArgs ka;
    auto* kernels = app.add_subcommand("kernels", "discretize kernels and run a suite across grid levels");
    kernels->add_option("--kernels", ka.kernels, "comma-separated name[:param] list");
    kernels->add_option("--suite", ka.suite, "suite name");
    kernels->add_option("--grids", ka.grids, "comma-separated grid sizes");
    kernels->add_option("--out", ka.out, "report JSON path");
    kernels->add_option("--csv", ka.csv, "per-level CSV path");
    kernels->add_option("--alpha", ka.alpha, "exponent for alpha suites");
    kernels->add_option("--beta", ka.beta, "second exponent (cor43)");
    kernels->add_flag("--trend", ka.trend, "also require the convergence trend");
    kernels->add_option("--tol", ka.tol, "relative tolerance");

    double ce_alpha = 1.0 / 3.0;
    bool ce_corrupt = false;
    auto* counter = app.add_subcommand("counterexample", "reproduce ||A o B o A|| = 1 > 0 = ||ABA||");
    counter->add_option("--alpha", ce_alpha, "Hadamard exponent");
    counter->add_flag("--corrupt", ce_corrupt, "self-test: perturb A so that ABA != 0");

    CheckArgs ca;
    auto* check = app.add_subcommand("check", "run one suite on matrices loaded from JSON files");
    check->add_option("--suite", ca.suite, "suite name")->required();
    check->add_option("--matrices", ca.matrices, "comma-separated matrix JSON files")->required();
    check->add_option("--alpha", ca.alpha, "exponent for alpha suites");
    check->add_option("--beta", ca.beta, "second exponent (cor43)");
    check->add_option("--weight-values", ca.weight_values, "comma-separated weights");
    check->add_option("--tol", ca.tol, "relative tolerance");
    check->add_option("--out", ca.out, "report JSON path");

    hgm::NumradSearchConfig nc;
    auto* numrad = app.add_subcommand("numrad", "search for a numerical-radius product-bound violation");
    numrad->add_option("--budget", nc.budget, "number of random instances");
    numrad->add_option("--n", nc.n, "dimension");
    numrad->add_option("--m", nc.m, "operator count");
    numrad->add_option("--seed", nc.seed, "seed");
    numrad->add_option("--density", nc.density, "density");

    auto* list = app.add_subcommand("list", "list the registered suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*verify) return cmd_verify(va);
        if (*kernels) return cmd_kernels(ka);
        if (*counter) return cmd_counterexample(ce_alpha, ce_corrupt);
        if (*check) return cmd_check(ca);
        if (*numrad) return cmd_numrad(nc);
        if (*list) {
            for (const auto& s : hgm::suite_registry()) std::cout << s.name << "  " << s.summary << "\n";
            return kExitPass;
        }
    } catch (const hgm::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const hgm::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
