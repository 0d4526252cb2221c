#pragma once

#include <string_view>

#include "hgm/matrix.hpp"

namespace hgm {

/// Perron root estimate with its Collatz-Wielandt certificate.
struct SpectralEstimate {
    double value = 0.0;
    double cw_lower = 0.0;
    double cw_upper = 0.0;
    int iterations = 0;
    /// Additive regularization folded into the bracket. The block
    /// decomposition makes this zero for every input the engine accepts.
    double epsilon_used = 0.0;
    bool converged = true;
};

enum class NormKind { L1, L2, LInf };

std::string_view to_string(NormKind k);

inline constexpr double kDefaultSpectralTolerance = 1e-13;
inline constexpr int kIterationCap = 50000;

/// Spectral radius of a nonnegative matrix.
///
/// The matrix is split into its strongly connected components (Frobenius
/// normal form); rho(A) is the largest Perron root among the irreducible
/// diagonal blocks, and trivial 1x1 blocks contribute their diagonal entry.
/// Each irreducible block is solved by Noda's shifted inverse iteration:
/// with x > 0 and sigma = max_i (Mx)_i / x_i, the next iterate solves
/// (sigma I - M) y = x. For irreducible M and sigma > rho the resolvent is
/// entrywise positive, so the iterates stay positive and the Collatz-Wielandt
/// ratios min_i (Mx)_i/x_i <= rho <= max_i (Mx)_i/x_i bracket the root and
/// close superlinearly.
///
/// `value` is within tol * max(1, rho) of the Perron root when `converged`.
SpectralEstimate spectral_radius(const NonNegativeMatrix& a,
                                 double tol = kDefaultSpectralTolerance);

/// Independent check of spectral_radius for n <= 5: exact rational
/// characteristic polynomial by cofactor expansion, exact square-free
/// reduction, then Durand-Kerner with Newton polishing on the simple roots.
/// Returns the largest root modulus. Throws DimensionError for n > 5.
double spectral_radius_oracle(const NonNegativeMatrix& a);

/// Induced operator norm on l1 (max column sum), l-infinity (max row sum) or
/// l2 (sqrt of rho(A^T A)). Throws ConvergenceError if the l2 route fails.
double operator_norm(const NonNegativeMatrix& a, NormKind k);

/// Numerical radius on l2.
///
/// For A >= 0, w(A) is the supremum of <Af, f> over nonnegative unit f, and
/// <Af, f> = <Hf, f> with H = (A + A^T)/2. H is symmetric and nonnegative, so
/// its largest eigenvalue is its Perron root and is attained at a nonnegative
/// eigenvector; hence w(A) = rho(H).
double numerical_radius(const NonNegativeMatrix& a);

/// rho(A) as a plain value; throws ConvergenceError when the engine does not
/// certify the bracket.
double rho(const NonNegativeMatrix& a);

}  // namespace hgm
