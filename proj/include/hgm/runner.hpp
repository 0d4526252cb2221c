#pragma once

// Seeded randomized sweeps over the suite registry.
//
// Trial i of suite s draws everything from derive_seed(seed, stable_hash(s), i),
// so a report depends only on (suite, config, i) and never on how trials are
// spread over threads.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hgm/matrix.hpp"
#include "hgm/report.hpp"
#include "hgm/suites.hpp"

namespace hgm {

struct SweepConfig {
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    std::size_t n_min = 2;
    std::size_t n_max = 8;
    /// Operator-count range for suites that take a variable number of
    /// operators. Pair and triple suites ignore it.
    std::size_t m_min = 2;
    std::size_t m_max = 5;
    /// Row count range for grid suites.
    std::size_t k_min = 1;
    std::size_t k_max = 4;
    std::vector<double> densities{0.3, 0.7, 1.0};
    /// Forces the weight draw. SumAtLeastOne on a suite that needs weights
    /// summing to one is a ConfigError.
    std::optional<WeightConstraint> weight_mode;
    Tolerance tol{};
    /// 0 = use HML_THREADS, else the hardware concurrency.
    unsigned threads = 0;

    /// Throws ConfigError on empty ranges, densities outside (0, 1] and the like.
    void validate() const;
};

/// One generated instance.
struct TrialInstance {
    MatrixGrid grid;  ///< k rows; non-grid suites use a single row
    SuiteParams params;
    InstanceDigest digest;
};

/// Worker count: HML_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned default_thread_count();

TrialInstance generate_trial(const SuiteInfo& suite, const SweepConfig& config, std::size_t index);

/// Generates and evaluates trial `index`. Evaluation failures (for example a
/// ConvergenceError) are recorded in the report's `error` field.
InequalityReport run_trial(const SuiteInfo& suite, const SweepConfig& config, std::size_t index);

SuiteRun run_suite(const SuiteInfo& suite, const SweepConfig& config);
SuiteRun run_suite(std::string_view name, const SweepConfig& config);

/// Every registered suite, in registry order.
std::vector<SuiteRun> run_all(const SweepConfig& config);

/// Throws ConfigError when `config` cannot drive `suite` (weight mode mismatch).
void check_compatible(const SuiteInfo& suite, const SweepConfig& config);

}  // namespace hgm
