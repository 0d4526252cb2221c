#pragma once

// Inequality checkers. Each one evaluates every quantity of an inequality
// chain on concrete matrices and records pairwise verdicts with slack.
//
// Norm chains that hold in any Banach function space are checked in l1, l2
// and l-infinity; numerical-radius chains and statements about A^T A are
// l2-only. Precondition violations (wrong weight constraint, exponent out of
// range, wrong operator count) throw ConfigError; they are never reported as
// inequality failures.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hgm/matrix.hpp"
#include "hgm/report.hpp"

namespace hgm {

/// k x m operators A_ij; row i is one Hadamard mean in the product.
using MatrixGrid = std::vector<std::vector<NonNegativeMatrix>>;

/// A = prod_i (o_j A_ij^(a_j)) and C_j = A_1j ... A_kj.
/// A <= o_j C_j^(a_j) entrywise; ||A|| <= prod ||C_j||^a_j; rho and w alike.
InequalityReport check_thm21(const MatrixGrid& grid, const WeightVector& w,
                             const Tolerance& tol = {});

/// Same setting with the Hadamard mean of the column products inserted as
/// the middle link of the norm, rho and w chains.
InequalityReport check_thm23_refined(const MatrixGrid& grid, const WeightVector& w,
                                     const Tolerance& tol = {});

/// Matrix case with sum(a_j) >= 1: entrywise bound plus the refined norm and
/// rho chains. No numerical-radius claim.
InequalityReport check_thm24_sum_ge1(const MatrixGrid& grid, const WeightVector& w,
                                     const Tolerance& tol = {});

/// rho(B_1 ... B_m) <= rho(A_1 ... A_m), with B_i from cyclic_factor_B.
InequalityReport check_thm31(std::span<const NonNegativeMatrix> mats, const WeightVector& w,
                             const Tolerance& tol = {});

/// rho(B_1...B_m) <= rho(o_j P_j^(a_j)) <= rho(A_1...A_m), plus the norm and
/// w chains ending in prod ||P_j||^a_j and prod w(P_j)^a_j.
InequalityReport check_thm32(std::span<const NonNegativeMatrix> mats, const WeightVector& w,
                             const Tolerance& tol = {});

/// Equal weights 1/m: rho(o A_j^(1/m)) <= rho(o P_j^(1/m))^(1/m) <= rho(A_1...A_m)^(1/m)
/// and the m-th power norm and w chains.
InequalityReport check_cor33(std::span<const NonNegativeMatrix> mats, const Tolerance& tol = {});

/// Two operators, alpha in [0, 1]: the alpha-weighted and the 1/2 chains for
/// rho, every norm, and w.
InequalityReport check_cor35(const NonNegativeMatrix& a, const NonNegativeMatrix& b, double alpha,
                             const Tolerance& tol = {});

/// sum(a_j) = alpha >= 1: rho chain ending in rho(A_1...A_m)^alpha, the norm
/// chain, and only the first link of the w chain. The w product bound is
/// reported unasserted since it does not hold in general.
InequalityReport check_thm36(std::span<const NonNegativeMatrix> mats, const WeightVector& w,
                             const Tolerance& tol = {});

/// S_j = A_j^T A_j, Q_j = S_j ... S_{j-1}.
/// ||o A_j^(1/m)|| <= rho(o S_j^(1/m))^(1/2) <= rho(o Q_j^(1/m))^(1/2m) <= rho(S_1...S_m)^(1/2m)
/// and ||o A_j^(a_j)|| <= rho(o S_j^(a_j))^(1/2) <= prod ||A_j||^a_j (l2).
InequalityReport check_thm41(std::span<const NonNegativeMatrix> mats, const WeightVector& w,
                             const Tolerance& tol = {});

/// The second l2 chain of check_thm41 with sum(a_j) >= 1.
InequalityReport check_thm42(std::span<const NonNegativeMatrix> mats, const WeightVector& w,
                             const Tolerance& tol = {});

/// Two-operator l2 chains built from A^T A and B^T B. The 1/2 chain ends in
/// rho(A^T A B^T B)^(1/4) = ||A B^T||^(1/2) <= ||A||^(1/2) ||B||^(1/2).
/// alpha in (0, 1] drives the (alpha, 1 - alpha) chain; (alpha, beta) with
/// beta > 0 and alpha + beta >= 1 drives the last one.
InequalityReport check_cor43(const NonNegativeMatrix& a, const NonNegativeMatrix& b, double alpha,
                             double beta, const Tolerance& tol = {});

/// ||A^(1/2) o B^(1/2)|| <= rho((A^T B)^(1/2) o (B^T A)^(1/2))^(1/2) <= rho(A^T B)^(1/2)
/// = rho(A B^T)^(1/2) <= ||A B^T||^(1/2) <= ||A||^(1/2) ||B||^(1/2), and the
/// alpha >= 1/2 chain ending in rho(A^T B)^alpha.
InequalityReport check_thm44(const NonNegativeMatrix& a, const NonNegativeMatrix& b, double alpha,
                             const Tolerance& tol = {});

/// alpha >= 1/m. Even m: ||o A_j^(alpha)|| <= rho(B_alpha)^(1/m)
/// <= (rho(A_1^T A_2 ... A_m) rho(A_m A_{m-1}^T ... A_1^T))^(alpha/2).
/// Odd m: ||o A_j^(alpha)|| <= rho(C_alpha)^(1/2m)
/// <= rho(A_1 A_2^T A_3 ... A_m^T)^(alpha/2) over the length-2m product.
InequalityReport check_thm45_47(std::span<const NonNegativeMatrix> mats, double alpha,
                                const Tolerance& tol = {});

/// The m = 3 chain written out factor by factor.
InequalityReport check_cor48(const NonNegativeMatrix& a1, const NonNegativeMatrix& a2,
                             const NonNegativeMatrix& a3, double alpha, const Tolerance& tol = {});

/// Jordan triple product: ||A^(alpha) o (B^T)^(alpha) o A^(alpha)||
/// <= rho(three-factor mean)^(1/6) <= ||ABA||^alpha, alpha >= 1/3.
InequalityReport check_cor49_jordan(const NonNegativeMatrix& a, const NonNegativeMatrix& b,
                                    double alpha, const Tolerance& tol = {});

/// ||A^(alpha) o B^(alpha) o A^(alpha)|| vs ||ABA||^alpha for
/// A = [[0,1],[0,1]], B = [[1,1],[0,0]], where the left side is 1 and the
/// right side 0. The comparison is reported unasserted. With `corrupt`, A's
/// lower-left entry is set to 1 so that ABA != 0 (self-test).
InequalityReport run_counterexample(double alpha = 1.0 / 3.0, bool corrupt = false);

struct NumradSearchConfig {
    std::uint64_t seed = 1;
    std::size_t budget = 1000;
    std::size_t n = 2;
    std::size_t m = 2;
    double density = 1.0;
    /// Fixed weights; when empty, each trial draws a SumOne vector and scales
    /// it by U[sum_min, sum_max].
    std::vector<double> weights;
    double sum_min = 1.0;
    double sum_max = 2.0;
    Tolerance tol{};
};

struct NumradViolation {
    std::size_t trial = 0;
    std::vector<NonNegativeMatrix> mats;
    std::vector<double> weights;
    double lhs = 0.0;  ///< w(B_1 ... B_m)
    double rhs = 0.0;  ///< prod w(P_j)^a_j
};

/// Randomized search for w(B_1...B_m) > prod w(P_j)^a_j when sum(a_j) > 1.
/// Returns the first violation, or nothing once the budget is spent.
std::optional<NumradViolation> search_numrad_violation(const NumradSearchConfig& config);

// ---------------------------------------------------------------------------
// Registry

enum class SuiteShape { Grid, Operators, Pair, Triple };
enum class WeightNeed { None, SumOne, SumAtLeastOne };
enum class AlphaRule { None, UnitInterval, AtLeastHalf, AtLeastReciprocalM, AtLeastThird, WithBeta };

struct SuiteParams {
    std::optional<WeightVector> weights;
    std::optional<double> alpha;
    std::optional<double> beta;
};

struct SuiteInfo {
    std::string_view name;
    std::string_view summary;
    SuiteShape shape;
    WeightNeed weights;
    AlphaRule alpha;
    /// Evaluates on a flat operator list; grid suites use a single row.
    InequalityReport (*evaluate)(std::span<const NonNegativeMatrix>, const SuiteParams&,
                                 const Tolerance&);
    /// Grid suites only.
    InequalityReport (*evaluate_grid)(const MatrixGrid&, const WeightVector&, const Tolerance&);

    std::size_t min_operators() const;
    /// 0 = unbounded.
    std::size_t max_operators() const;
};

/// All checkers, in a fixed order: thm21 thm23 thm24 thm31 thm32 cor33 cor35
/// thm36 thm41 thm42 cor43 thm44 thm4547 cor48 cor49.
const std::vector<SuiteInfo>& suite_registry();

/// Throws ConfigError for an unknown name.
const SuiteInfo& find_suite(std::string_view name);

/// Exponent used when SuiteParams leaves alpha unset.
double default_alpha(const SuiteInfo& suite, std::size_t m);

}  // namespace hgm
