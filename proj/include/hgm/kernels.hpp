#pragma once

// Positive kernels on [0,1]^2 and their midpoint discretization
//   M_ij = a(x_i, x_j) h,  x_i = (i - 1/2) h,  h = 1/n.
// The common factor h passes through Hadamard means with weights summing to
// one (h^a h^(1-a) = h), so discretized means are means of discretizations.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgm/matrix.hpp"
#include "hgm/report.hpp"
#include "hgm/suites.hpp"

namespace hgm {

enum class KernelFamily { Gauss, Rational, Bilinear, Constant };

/// gauss:    exp(-p (x - y)^2), p >= 0, default 1
/// rational: 1 / (p + x + y),   p > 0,  default 1
/// bilinear: x y (no parameter)
/// constant: p,                 p >= 0, default 1
struct KernelSpec {
    KernelFamily family = KernelFamily::Constant;
    double param = 1.0;
    std::size_t grid_n = 16;

    double operator()(double x, double y) const;
    std::string name() const;

    /// Parses "name" or "name:param". Throws ConfigError on unknown names or
    /// parameters that would make the kernel negative or undefined.
    static KernelSpec parse(std::string_view text, std::size_t grid_n = 16);
};

/// Throws ConfigError if grid_n < 2 and std::invalid_argument if the kernel is
/// negative or non-finite at a node.
NonNegativeMatrix discretize(const KernelSpec& k);

/// Midpoint nodes (i + 1/2)/n.
std::vector<double> midpoint_nodes(std::size_t n);

struct RefinementLevel {
    std::size_t grid_n = 0;
    InequalityReport report;
};

struct RefinementResult {
    std::string suite;
    std::vector<std::string> kernels;
    std::vector<RefinementLevel> levels;

    bool all_passed() const;
    /// Per-level table: header "grid_n,<labels...>", one row per level.
    std::string to_csv() const;
    SuiteRun as_suite_run() const;
};

struct RefineOptions {
    /// Exponent for alpha-parametrized suites; unset = the suite's default.
    std::optional<double> alpha;
    std::optional<double> beta;
    Tolerance tol{};
};

/// Runs `suite` on the discretized kernels at each grid size. The kernel
/// count must fit the suite (pair suites take two, cor48 three). Weighted
/// suites use equal weights 1/m. Throws ConfigError for unknown suites and
/// bad arity.
RefinementResult refine_and_check(const std::vector<KernelSpec>& kernels, std::string_view suite,
                                  const std::vector<std::size_t>& grids,
                                  const RefineOptions& options = {});

struct TrendViolation {
    std::string label;
    double coarse_change = 0.0;  ///< |q(level i+1) - q(level i)|
    double fine_change = 0.0;    ///< |q(level i+2) - q(level i+1)|
};

/// For every quantity on the three finest levels, requires
///   |q_fine - q_mid| <= factor * |q_mid - q_coarse| + floor.
/// Fewer than three levels yield no violations.
/// `floor` absorbs quantities that are already converged to rounding level.
std::vector<TrendViolation> convergence_trend(const RefinementResult& r, double factor = 1.1,
                                              double floor = 1e-12);

}  // namespace hgm
