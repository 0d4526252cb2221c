// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: hgm_acceptance <path to hgm CLI> <scratch dir>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hgm/kernels.hpp"
#include "hgm/random.hpp"
#include "hgm/runner.hpp"
#include "hgm/spectral.hpp"
#include "hgm/suites.hpp"

using namespace hgm;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string cli_path;
std::string scratch_dir;

int run_command(const std::string& cmd) {
    const int status = std::system((cmd + " > /dev/null 2>&1").c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// 1. ||A o B o A|| = 1 and ||ABA|| = 0 to 1e-12, through the library and the CLI, in under 1 s.
Outcome counterexample() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (double alpha : {1.0 / 3.0, 0.5, 1.0}) {
        const auto r = run_counterexample(alpha);
        worst = std::max({worst, std::fabs(r.at("||A o B o A||") - 1.0),
                          std::fabs(r.at("||A^(a) o B^(a) o A^(a)||") - 1.0), std::fabs(r.at("||ABA||^a"))});
    }
    const int code = run_command(cli_path + " counterexample");
    const int code_alpha1 = run_command(cli_path + " counterexample --alpha 1");
    const int code_corrupt = run_command(cli_path + " counterexample --corrupt");
    const double dt = seconds_since(t0);
    const bool ok = worst <= 1e-12 && code == 0 && code_alpha1 == 0 && code_corrupt == 1 && dt < 1.0;
    return {ok, "max |error| " + fmt("%.3g", worst) + ", cli exit " + std::to_string(code) + "/" +
                    std::to_string(code_alpha1) + ", corrupted exit " + std::to_string(code_corrupt) + ", " +
                    fmt("%.3f", dt) + " s"};
}

// 2. cor49 at A = B = I: all chain quantities equal to 1e-12.
Outcome sharpness() {
    double worst = 0.0;
    bool passed = true;
    for (double alpha : {1.0 / 3.0, 0.5, 1.0}) {
        for (std::size_t n : {1u, 2u, 5u}) {
            const auto r = check_cor49_jordan(identity(n), identity(n), alpha);
            passed = passed && r.passed();
            for (const auto& p : r.quantities)
                for (const auto& q : r.quantities) worst = std::max(worst, std::fabs(p.value - q.value));
        }
    }
    return {passed && worst <= 1e-12, "max spread " + fmt("%.3g", worst)};
}

// 3. 1000 trials of every suite, rel tol 1e-7, zero failures, < 120 s.
Outcome sweep() {
    SweepConfig c;
    c.trials = 1000;
    c.seed = 2024;
    const auto t0 = Clock::now();
    const auto runs = run_all(c);
    const double dt = seconds_since(t0);
    std::size_t fails = 0, total = 0;
    std::string which;
    for (const auto& r : runs) {
        fails += r.fail_count();
        total += r.trials.size();
        if (r.fail_count()) which += " " + r.suite + "(" + std::to_string(r.fail_count()) + ")";
    }
    return {fails == 0 && runs.size() == suite_registry().size() && dt < 120.0,
            std::to_string(runs.size()) + " suites, " + std::to_string(total) + " trials, " +
                std::to_string(fails) + " failures" + which + ", " + fmt("%.1f", dt) + " s"};
}

// 4. Engine vs exact-polynomial oracle on 10,000 matrices with n <= 5.
Outcome oracle() {
    std::size_t structured = 0, bad = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < 10000; ++i) {
        Rng rng(derive_seed(4, stable_hash("oracle"), i));
        const std::size_t n = rng.integer(1, 5);
        DenseMatrix d = random_matrix(rng, n, i % 2 ? 0.5 : 1.0).dense();
        switch (i % 5) {
            case 2: {  // zero rows
                const std::size_t zeros = rng.integer(1, n);
                for (std::size_t z = 0; z < zeros; ++z) d.row(static_cast<Eigen::Index>(rng.integer(0, n - 1))).setZero();
                ++structured;
                break;
            }
            case 3:
            case 4: {  // weighted or plain permutation
                std::vector<std::size_t> perm(n);
                for (std::size_t k = 0; k < n; ++k) perm[k] = k;
                for (std::size_t k = n; k > 1; --k) std::swap(perm[k - 1], perm[rng.integer(0, k - 1)]);
                d.setZero();
                for (std::size_t k = 0; k < n; ++k)
                    d(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(perm[k])) = i % 5 == 3 ? 1.0 : rng.uniform(0.1, 2.0);
                ++structured;
                break;
            }
            default:
                break;
        }
        const NonNegativeMatrix a(d);
        const double r = spectral_radius(a).value;
        const double err = std::fabs(r - spectral_radius_oracle(a)) / std::max(1.0, r);
        worst = std::max(worst, err);
        if (!(err <= 1e-8)) ++bad;
    }
    return {bad == 0 && structured >= 1000, "10000 matrices (" + std::to_string(structured) +
                                                 " zero-row/permutation), worst scaled error " + fmt("%.3g", worst)};
}

double rel_diff(double x, double y) {
    const double scale = std::max(std::fabs(x), std::fabs(y));
    return scale == 0.0 ? 0.0 : std::fabs(x - y) / scale;
}

// 5. rho(AB) = rho(BA) and ||A||_2^2 = rho(A^T A) = rho(A A^T) on 5000 pairs.
Outcome identities() {
    double worst = 0.0;
    for (std::size_t i = 0; i < 5000; ++i) {
        Rng rng(derive_seed(5, stable_hash("identities"), i));
        const std::size_t n = rng.integer(1, 8);
        const double density = i % 3 == 0 ? 0.3 : (i % 3 == 1 ? 0.7 : 1.0);
        const auto a = random_matrix(rng, n, density);
        const auto b = random_matrix(rng, n, density);
        const double nrm = operator_norm(a, NormKind::L2);
        worst = std::max({worst, rel_diff(rho(matmul(a, b)), rho(matmul(b, a))),
                          rel_diff(nrm * nrm, rho(matmul(transpose(a), a))),
                          rel_diff(nrm * nrm, rho(matmul(a, transpose(a))))});
    }
    return {worst <= 1e-8, "5000 pairs, worst relative difference " + fmt("%.3g", worst)};
}

// 6. A <= B entrywise => rho, all three norms and w are monotone.
Outcome monotonicity() {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < 5000; ++i) {
        Rng rng(derive_seed(6, stable_hash("monotone"), i));
        const std::size_t n = rng.integer(1, 8);
        const auto b = random_matrix(rng, n, i % 2 ? 0.5 : 1.0);
        DenseMatrix d = b.dense();
        for (Eigen::Index r = 0; r < d.rows(); ++r)
            for (Eigen::Index c = 0; c < d.cols(); ++c) d(r, c) *= rng.uniform();
        const NonNegativeMatrix a(d);
        auto leq = [](double x, double y) { return x <= y + 1e-10 * std::max(1.0, y); };
        bool ok = leq(rho(a), rho(b)) && leq(numerical_radius(a), numerical_radius(b));
        for (NormKind k : {NormKind::L1, NormKind::L2, NormKind::LInf})
            ok = ok && leq(operator_norm(a, k), operator_norm(b, k));
        if (!ok) ++bad;
    }
    return {bad == 0, "5000 pairs, " + std::to_string(bad) + " violations"};
}

// 7. Product of Hadamard means <= Hadamard mean of products, entrywise at 1e-10.
Outcome basic2() {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < 2000; ++i) {
        Rng rng(derive_seed(7, stable_hash("basic2"), i));
        const std::size_t k = rng.integer(1, 4), m = rng.integer(1, 4), n = rng.integer(1, 8);
        const double density = i % 3 == 0 ? 0.3 : (i % 3 == 1 ? 0.7 : 1.0);
        const WeightVector w(random_sum_one_weights(rng, m), WeightConstraint::SumOne);
        MatrixGrid grid(k);
        for (auto& row : grid)
            for (std::size_t j = 0; j < m; ++j) row.push_back(random_matrix(rng, n, density));
        std::vector<NonNegativeMatrix> means, cols;
        for (const auto& row : grid) means.push_back(weighted_geometric_mean(row, w));
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<NonNegativeMatrix> col;
            for (const auto& row : grid) col.push_back(row[j]);
            cols.push_back(product(col));
        }
        if (!entrywise_leq(product(means), weighted_geometric_mean(cols, w), 1e-10).holds) ++bad;
    }
    return {bad == 0, "2000 grids, " + std::to_string(bad) + " violations"};
}

// 8. (gauss, rational) through thm44 and cor35 on grids 16..128 with the trend check, < 30 s.
Outcome kernels() {
    const auto t0 = Clock::now();
    const std::vector<KernelSpec> ks{KernelSpec::parse("gauss"), KernelSpec::parse("rational")};
    std::string detail;
    bool ok = true;
    for (const char* suite : {"thm44", "cor35"}) {
        const auto res = refine_and_check(ks, suite, {16, 32, 64, 128});
        const auto trend = convergence_trend(res);
        ok = ok && res.all_passed() && trend.empty();
        detail += std::string(suite) + (res.all_passed() ? " pass" : " FAIL") + ", trend " +
                  (trend.empty() ? "ok" : std::to_string(trend.size()) + " violations (" + trend.front().label + ")") +
                  "; ";
    }
    const double dt = seconds_since(t0);
    return {ok && dt < 30.0, detail + fmt("%.2f", dt) + " s"};
}

// 9. Same report bytes with different HML_THREADS.
Outcome determinism() {
    const std::string a = scratch_dir + "/determinism_t1.json";
    const std::string b = scratch_dir + "/determinism_t4.json";
    const std::string args = " verify --suite all --trials 100 --seed 7 --out ";
    const int ca = run_command("HML_THREADS=1 " + cli_path + args + a);
    const int cb = run_command("HML_THREADS=4 " + cli_path + args + b);
    const std::string ra = slurp(a), rb = slurp(b);
    const bool ok = ca == 0 && cb == 0 && !ra.empty() && ra == rb;
    return {ok, "exit " + std::to_string(ca) + "/" + std::to_string(cb) + ", " + std::to_string(ra.size()) +
                    " bytes, " + (ra == rb ? "identical" : "DIFFERENT")};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <hgm cli> <scratch dir>\n", argv[0]);
        return 2;
    }
    cli_path = argv[1];
    scratch_dir = argv[2];

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"counterexample reproduction", counterexample},
        {"sharpness at A = B = I", sharpness},
        {"full suite sweep", sweep},
        {"oracle equivalence", oracle},
        {"identity suite", identities},
        {"monotonicity suite", monotonicity},
        {"entrywise basic2", basic2},
        {"kernel refinement", kernels},
        {"determinism across HML_THREADS", determinism},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o{false, ""};
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s  %zu  %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    return failed ? 1 : 0;
}
