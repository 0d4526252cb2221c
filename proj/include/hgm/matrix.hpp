#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace hgm {

using DenseMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr std::size_t kMaxDimension = 256;

/// Square matrix with finite, nonnegative entries. The finite-dimensional
/// stand-in for a positive kernel operator. Immutable once built.
class NonNegativeMatrix {
public:
    /// Throws DimensionError for non-square or oversized input and
    /// std::invalid_argument for negative or non-finite entries.
    explicit NonNegativeMatrix(DenseMatrix entries);

    static NonNegativeMatrix from_rows(const std::vector<std::vector<double>>& rows);
    static NonNegativeMatrix zero(std::size_t n);
    static NonNegativeMatrix ones(std::size_t n);

    std::size_t n() const { return static_cast<std::size_t>(entries_.rows()); }
    double operator()(std::size_t i, std::size_t j) const {
        return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    const DenseMatrix& dense() const { return entries_; }
    std::vector<std::vector<double>> rows() const;

    friend bool operator==(const NonNegativeMatrix& a, const NonNegativeMatrix& b) {
        return a.entries_ == b.entries_;
    }

private:
    DenseMatrix entries_;
};

enum class WeightConstraint { SumOne, SumAtLeastOne };

/// Strictly positive exponents for a Hadamard weighted geometric mean,
/// tagged with the constraint the caller relies on.
class WeightVector {
public:
    static constexpr double kSumTolerance = 1e-12;

    WeightVector(std::vector<double> weights, WeightConstraint constraint);

    /// alpha_j = 1/m.
    static WeightVector uniform(std::size_t m);

    std::span<const double> values() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t j) const { return weights_[j]; }
    double sum() const;
    WeightConstraint constraint() const { return constraint_; }

private:
    std::vector<double> weights_;
    WeightConstraint constraint_;
};

NonNegativeMatrix identity(std::size_t n);
NonNegativeMatrix transpose(const NonNegativeMatrix& a);
NonNegativeMatrix matmul(const NonNegativeMatrix& a, const NonNegativeMatrix& b);

/// Ordered product mats[0] * mats[1] * ... ; an empty list is rejected.
NonNegativeMatrix product(std::span<const NonNegativeMatrix> mats);

/// a^k by repeated multiplication (k >= 0; a^0 = I).
NonNegativeMatrix matrix_power(const NonNegativeMatrix& a, unsigned k);

NonNegativeMatrix hadamard_product(const NonNegativeMatrix& a, const NonNegativeMatrix& b);

/// Entrywise a_ij^alpha with 0^0 = 1, so alpha = 0 gives the all-ones matrix.
NonNegativeMatrix hadamard_power(const NonNegativeMatrix& a, double alpha);

/// Entrywise prod_j mats[j]^(exponents[j]) for arbitrary nonnegative exponents.
NonNegativeMatrix hadamard_mean(std::span<const NonNegativeMatrix> mats,
                                std::span<const double> exponents);

/// Hadamard weighted geometric mean of mats under weights w.
NonNegativeMatrix weighted_geometric_mean(std::span<const NonNegativeMatrix> mats,
                                          const WeightVector& w);

/// B_i = A_i^(a_1) o A_{i+1}^(a_2) o ... o A_{i-1}^(a_m); the weights stay in
/// place while the operators rotate. i is 0-based.
NonNegativeMatrix cyclic_factor_B(std::span<const NonNegativeMatrix> mats,
                                  const WeightVector& w, std::size_t i);

/// P_j = A_j A_{j+1} ... A_m A_1 ... A_{j-1}; j is 0-based.
NonNegativeMatrix cyclic_product_P(std::span<const NonNegativeMatrix> mats, std::size_t j);

/// S = A^T A.
NonNegativeMatrix gram_S(const NonNegativeMatrix& a);

/// Product of `length` factors taken cyclically from mats starting at index
/// `start`: factor k is mats[(start + k) % m], transposed when k is even if
/// `transpose_first`, when k is odd otherwise.
NonNegativeMatrix alternating_product(std::span<const NonNegativeMatrix> mats,
                                      std::size_t start, std::size_t length,
                                      bool transpose_first);

// For m even:
//   B_alpha = o_{i} (A_i^T A_{i+1} A_{i+2}^T ... A_{i-1})^(alpha)
// and for m odd the factors are the length-2m alternating products
//   C_alpha = o_{i} (A_i^T A_{i+1} A_{i+2}^T ... A_{i-1}^T ... A_{i-1})^(alpha),
// i.e. each factor walks the list twice starting at A_i with the transpose on
// every other operator. B and C are the alpha = 1/m cases.
NonNegativeMatrix build_B_even(std::span<const NonNegativeMatrix> mats);
NonNegativeMatrix build_C_odd(std::span<const NonNegativeMatrix> mats);
NonNegativeMatrix build_B_alpha(std::span<const NonNegativeMatrix> mats, double alpha);
NonNegativeMatrix build_C_alpha(std::span<const NonNegativeMatrix> mats, double alpha);

struct EntrywiseComparison {
    bool holds = true;
    /// max_ij (a_ij - b_ij), floored at 0.
    double max_violation = 0.0;
    /// min_ij (b_ij - a_ij); negative when some entry of a exceeds b.
    double min_slack = 0.0;
};

/// a <= b entrywise, accepting a_ij <= b_ij + tol * max(1, b_ij).
EntrywiseComparison entrywise_leq(const NonNegativeMatrix& a, const NonNegativeMatrix& b,
                                  double tol);

}  // namespace hgm
