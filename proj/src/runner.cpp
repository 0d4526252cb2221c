#include "hgm/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "hgm/errors.hpp"
#include "hgm/random.hpp"

namespace hgm {

void SweepConfig::validate() const {
    if (n_min < 1 || n_min > n_max || n_max > kMaxDimension) throw ConfigError("invalid dimension range");
    if (m_min < 1 || m_min > m_max) throw ConfigError("invalid operator-count range");
    if (k_min < 1 || k_min > k_max) throw ConfigError("invalid grid row range");
    if (densities.empty()) throw ConfigError("no densities given");
    for (double d : densities) {
        if (!(d > 0.0 && d <= 1.0)) throw ConfigError("density must lie in (0, 1]");
    }
    if (!(tol.rel >= 0.0) || !(tol.abs >= 0.0)) throw ConfigError("tolerances must be nonnegative");
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("HML_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void check_compatible(const SuiteInfo& suite, const SweepConfig& config) {
    if (suite.weights == WeightNeed::SumOne && config.weight_mode == WeightConstraint::SumAtLeastOne) {
        throw ConfigError(std::string(suite.name) + " requires weights summing to 1; sumge1 is not allowed");
    }
}

namespace {

// Exponents for the alpha-parametrized suites. One trial in ten sits on the
// lower end of the admissible range.
void draw_exponents(const SuiteInfo& suite, std::size_t m, Rng& rng, SuiteParams& p) {
    const bool boundary = rng.uniform() < 0.1;
    const double u = rng.uniform();
    switch (suite.alpha) {
        case AlphaRule::None:
            return;
        case AlphaRule::UnitInterval:
            p.alpha = boundary ? 0.0 : u;
            return;
        case AlphaRule::AtLeastHalf:
            p.alpha = boundary ? 0.5 : 0.5 + u;
            return;
        case AlphaRule::AtLeastReciprocalM: {
            const double lo = 1.0 / static_cast<double>(m);
            p.alpha = boundary ? lo : lo + u;
            return;
        }
        case AlphaRule::AtLeastThird:
            p.alpha = boundary ? 1.0 / 3.0 : 1.0 / 3.0 + u;
            return;
        case AlphaRule::WithBeta: {
            const double alpha = 1.0 - u;  // (0, 1]
            const double extra = 1.0 - rng.uniform();
            p.alpha = alpha;
            p.beta = boundary ? 1.0 - alpha + 1e-300 : (1.0 - alpha) + extra;
            if (*p.beta <= 0.0) p.beta = extra;
            return;
        }
    }
}

std::size_t operator_count(const SuiteInfo& suite, const SweepConfig& c, Rng& rng) {
    if (suite.max_operators() != 0) return suite.max_operators();
    return rng.integer(std::max(c.m_min, suite.min_operators()), std::max(c.m_max, suite.min_operators()));
}

}  // namespace

TrialInstance generate_trial(const SuiteInfo& suite, const SweepConfig& config, std::size_t index) {
    const std::uint64_t seed = derive_seed(config.seed, stable_hash(suite.name), index);
    Rng rng(seed);
    TrialInstance t;
    const std::size_t n = rng.integer(config.n_min, config.n_max);
    const std::size_t m = operator_count(suite, config, rng);
    const std::size_t k = suite.shape == SuiteShape::Grid ? rng.integer(config.k_min, config.k_max) : 1;
    const double density = config.densities[rng.integer(0, config.densities.size() - 1)];

    if (suite.weights != WeightNeed::None) {
        std::vector<double> w = random_sum_one_weights(rng, m);
        WeightConstraint c = WeightConstraint::SumOne;
        const bool scale = suite.weights == WeightNeed::SumAtLeastOne &&
                           config.weight_mode.value_or(WeightConstraint::SumAtLeastOne) ==
                               WeightConstraint::SumAtLeastOne;
        if (suite.weights == WeightNeed::SumAtLeastOne) c = WeightConstraint::SumAtLeastOne;
        if (scale) {
            const double factor = rng.uniform(1.0, 2.0);
            for (auto& x : w) x *= factor;
        }
        t.digest.weights = w;
        t.params.weights = WeightVector(std::move(w), c);
    }
    draw_exponents(suite, m, rng, t.params);

    t.grid.resize(k);
    for (auto& row : t.grid) {
        row.reserve(m);
        for (std::size_t j = 0; j < m; ++j) row.push_back(random_matrix(rng, n, density));
    }

    t.digest.seed = seed;
    t.digest.n = n;
    t.digest.m = m;
    t.digest.k = k;
    t.digest.density = density;
    t.digest.params.emplace_back("index", static_cast<double>(index));
    if (t.params.alpha) t.digest.params.emplace_back("alpha", *t.params.alpha);
    if (t.params.beta) t.digest.params.emplace_back("beta", *t.params.beta);
    return t;
}

InequalityReport run_trial(const SuiteInfo& suite, const SweepConfig& config, std::size_t index) {
    TrialInstance t = generate_trial(suite, config, index);
    InequalityReport r;
    try {
        if (suite.shape == SuiteShape::Grid) {
            r = suite.evaluate_grid(t.grid, *t.params.weights, config.tol);
        } else {
            r = suite.evaluate(t.grid.front(), t.params, config.tol);
        }
    } catch (const std::exception& e) {
        r = InequalityReport{};
        r.suite_name = std::string(suite.name);
        r.tolerance = config.tol;
        r.error = e.what();
    }
    r.digest = std::move(t.digest);
    return r;
}

SuiteRun run_suite(const SuiteInfo& suite, const SweepConfig& config) {
    config.validate();
    check_compatible(suite, config);
    SuiteRun run{std::string(suite.name), std::vector<InequalityReport>(config.trials)};
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(
        config.threads ? config.threads : default_thread_count(), std::max<std::size_t>(config.trials, 1)));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < config.trials; i = next++) run.trials[i] = run_trial(suite, config, i);
    };
    if (workers <= 1) {
        work();
        return run;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    return run;
}

SuiteRun run_suite(std::string_view name, const SweepConfig& config) {
    return run_suite(find_suite(name), config);
}

std::vector<SuiteRun> run_all(const SweepConfig& config) {
    config.validate();
    for (const auto& s : suite_registry()) check_compatible(s, config);
    std::vector<SuiteRun> runs;
    for (const auto& s : suite_registry()) runs.push_back(run_suite(s, config));
    return runs;
}

}  // namespace hgm
