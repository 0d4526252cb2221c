#include "hgm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hgm/errors.hpp"

namespace hgm {

namespace {

void require_same_dimension(const NonNegativeMatrix& a, const NonNegativeMatrix& b,
                            const char* op) {
    if (a.n() != b.n()) {
        throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a.n()) +
                             " vs " + std::to_string(b.n()) + ")");
    }
}

void require_common_dimension(std::span<const NonNegativeMatrix> mats, const char* op) {
    if (mats.empty()) {
        throw std::invalid_argument(std::string(op) + ": empty operator list");
    }
    for (const auto& m : mats) {
        require_same_dimension(mats.front(), m, op);
    }
}

// 0^0 = 1 and 0^a = 0 for a > 0, both exact.
double entry_power(double x, double alpha) {
    if (alpha == 0.0) return 1.0;
    if (x == 0.0) return 0.0;
    if (alpha == 1.0) return x;
    return std::pow(x, alpha);
}

}  // namespace

NonNegativeMatrix::NonNegativeMatrix(DenseMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw DimensionError("matrix is not square (" + std::to_string(entries_.rows()) + "x" +
                             std::to_string(entries_.cols()) + ")");
    }
    if (entries_.rows() < 1) {
        throw DimensionError("matrix dimension must be at least 1");
    }
    if (static_cast<std::size_t>(entries_.rows()) > kMaxDimension) {
        throw DimensionError("matrix dimension " + std::to_string(entries_.rows()) +
                             " exceeds the cap of " + std::to_string(kMaxDimension));
    }
    for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
        for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
            const double v = entries_(i, j);
            if (!std::isfinite(v) || v < 0.0) {
                throw std::invalid_argument("entry (" + std::to_string(i) + "," +
                                            std::to_string(j) + ") = " + std::to_string(v) +
                                            " is not a finite nonnegative number");
            }
        }
    }
}

NonNegativeMatrix NonNegativeMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    DenseMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (static_cast<Eigen::Index>(row.size()) != n) {
            throw DimensionError("row " + std::to_string(i) + " has " +
                                 std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(n));
        }
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = row[static_cast<std::size_t>(j)];
    }
    return NonNegativeMatrix(std::move(m));
}

NonNegativeMatrix NonNegativeMatrix::zero(std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    return NonNegativeMatrix(DenseMatrix::Zero(k, k));
}

NonNegativeMatrix NonNegativeMatrix::ones(std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    return NonNegativeMatrix(DenseMatrix::Ones(k, k));
}

std::vector<std::vector<double>> NonNegativeMatrix::rows() const {
    std::vector<std::vector<double>> out(n(), std::vector<double>(n()));
    for (std::size_t i = 0; i < n(); ++i)
        for (std::size_t j = 0; j < n(); ++j) out[i][j] = (*this)(i, j);
    return out;
}

WeightVector::WeightVector(std::vector<double> weights, WeightConstraint constraint)
    : weights_(std::move(weights)), constraint_(constraint) {
    if (weights_.empty()) throw ConfigError("weight vector is empty");
    for (double w : weights_) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw ConfigError("weights must be strictly positive and finite");
        }
    }
    const double s = sum();
    if (constraint_ == WeightConstraint::SumOne && std::abs(s - 1.0) > kSumTolerance) {
        throw ConfigError("weights must sum to 1 (got " + std::to_string(s) + ")");
    }
    if (constraint_ == WeightConstraint::SumAtLeastOne && s < 1.0 - kSumTolerance) {
        throw ConfigError("weights must sum to at least 1 (got " + std::to_string(s) + ")");
    }
}

WeightVector WeightVector::uniform(std::size_t m) {
    if (m == 0) throw ConfigError("weight vector is empty");
    return WeightVector(std::vector<double>(m, 1.0 / static_cast<double>(m)),
                        WeightConstraint::SumOne);
}

double WeightVector::sum() const {
    return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

NonNegativeMatrix identity(std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    return NonNegativeMatrix(DenseMatrix::Identity(k, k));
}

NonNegativeMatrix transpose(const NonNegativeMatrix& a) {
    return NonNegativeMatrix(a.dense().transpose());
}

NonNegativeMatrix matmul(const NonNegativeMatrix& a, const NonNegativeMatrix& b) {
    require_same_dimension(a, b, "matmul");
    return NonNegativeMatrix(a.dense() * b.dense());
}

NonNegativeMatrix product(std::span<const NonNegativeMatrix> mats) {
    require_common_dimension(mats, "product");
    DenseMatrix acc = mats.front().dense();
    for (std::size_t k = 1; k < mats.size(); ++k) acc = acc * mats[k].dense();
    return NonNegativeMatrix(std::move(acc));
}

NonNegativeMatrix matrix_power(const NonNegativeMatrix& a, unsigned k) {
    DenseMatrix acc = DenseMatrix::Identity(a.dense().rows(), a.dense().cols());
    for (unsigned i = 0; i < k; ++i) acc = acc * a.dense();
    return NonNegativeMatrix(std::move(acc));
}

NonNegativeMatrix hadamard_product(const NonNegativeMatrix& a, const NonNegativeMatrix& b) {
    require_same_dimension(a, b, "hadamard_product");
    return NonNegativeMatrix(a.dense().cwiseProduct(b.dense()));
}

NonNegativeMatrix hadamard_power(const NonNegativeMatrix& a, double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw ConfigError("Hadamard exponent must be a finite nonnegative number");
    }
    DenseMatrix out = a.dense().unaryExpr([alpha](double x) { return entry_power(x, alpha); });
    return NonNegativeMatrix(std::move(out));
}

NonNegativeMatrix hadamard_mean(std::span<const NonNegativeMatrix> mats,
                                std::span<const double> exponents) {
    require_common_dimension(mats, "hadamard_mean");
    if (exponents.size() != mats.size()) {
        throw DimensionError("hadamard_mean: " + std::to_string(mats.size()) + " operators but " +
                             std::to_string(exponents.size()) + " exponents");
    }
    for (double e : exponents) {
        if (!(e >= 0.0) || !std::isfinite(e)) {
            throw ConfigError("Hadamard exponent must be a finite nonnegative number");
        }
    }
    const auto n = mats.front().dense().rows();
    DenseMatrix out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            double v = 1.0;
            for (std::size_t k = 0; k < mats.size(); ++k) {
                v *= entry_power(mats[k].dense()(i, j), exponents[k]);
            }
            out(i, j) = v;
        }
    }
    return NonNegativeMatrix(std::move(out));
}

NonNegativeMatrix weighted_geometric_mean(std::span<const NonNegativeMatrix> mats,
                                          const WeightVector& w) {
    return hadamard_mean(mats, w.values());
}

NonNegativeMatrix cyclic_factor_B(std::span<const NonNegativeMatrix> mats,
                                  const WeightVector& w, std::size_t i) {
    const std::size_t m = mats.size();
    if (w.size() != m) {
        throw DimensionError("cyclic_factor_B: " + std::to_string(m) + " operators but " +
                             std::to_string(w.size()) + " weights");
    }
    if (i >= m) {
        throw ConfigError("cyclic_factor_B: index " + std::to_string(i) + " out of range for m = " +
                          std::to_string(m));
    }
    std::vector<NonNegativeMatrix> rotated;
    rotated.reserve(m);
    for (std::size_t k = 0; k < m; ++k) rotated.push_back(mats[(i + k) % m]);
    return hadamard_mean(rotated, w.values());
}

NonNegativeMatrix cyclic_product_P(std::span<const NonNegativeMatrix> mats, std::size_t j) {
    const std::size_t m = mats.size();
    if (j >= m) {
        throw ConfigError("cyclic_product_P: index " + std::to_string(j) +
                          " out of range for m = " + std::to_string(m));
    }
    require_common_dimension(mats, "cyclic_product_P");
    DenseMatrix acc = mats[j].dense();
    for (std::size_t k = 1; k < m; ++k) acc = acc * mats[(j + k) % m].dense();
    return NonNegativeMatrix(std::move(acc));
}

NonNegativeMatrix gram_S(const NonNegativeMatrix& a) {
    DenseMatrix s = a.dense().transpose() * a.dense();
    // Enforce exact symmetry; the two triangles can differ in the last bit.
    s = (s + s.transpose().eval()) * 0.5;
    return NonNegativeMatrix(std::move(s));
}

NonNegativeMatrix alternating_product(std::span<const NonNegativeMatrix> mats,
                                      std::size_t start, std::size_t length,
                                      bool transpose_first) {
    require_common_dimension(mats, "alternating_product");
    if (length == 0) throw ConfigError("alternating_product: empty product");
    const std::size_t m = mats.size();
    auto factor = [&](std::size_t k) -> DenseMatrix {
        const auto& a = mats[(start + k) % m].dense();
        const bool t = (k % 2 == 0) == transpose_first;
        return t ? DenseMatrix(a.transpose()) : a;
    };
    DenseMatrix acc = factor(0);
    for (std::size_t k = 1; k < length; ++k) acc = acc * factor(k);
    return NonNegativeMatrix(std::move(acc));
}

namespace {

NonNegativeMatrix alternating_mean(std::span<const NonNegativeMatrix> mats, double alpha,
                                   std::size_t factor_length) {
    std::vector<NonNegativeMatrix> factors;
    factors.reserve(mats.size());
    for (std::size_t i = 0; i < mats.size(); ++i) {
        factors.push_back(alternating_product(mats, i, factor_length, true));
    }
    const std::vector<double> exponents(mats.size(), alpha);
    return hadamard_mean(factors, exponents);
}

void require_alpha_at_least_reciprocal(std::size_t m, double alpha, const char* op) {
    // Relative slack so that alpha = 1/m computed as 1.0/m is accepted.
    const double bound = 1.0 / static_cast<double>(m);
    if (!(alpha >= bound * (1.0 - 1e-12))) {
        throw ConfigError(std::string(op) + ": exponent must be at least 1/m = " +
                          std::to_string(bound));
    }
}

}  // namespace

NonNegativeMatrix build_B_alpha(std::span<const NonNegativeMatrix> mats, double alpha) {
    const std::size_t m = mats.size();
    if (m < 2 || m % 2 != 0) {
        throw ConfigError("build_B: operator count must be even and at least 2 (got " +
                          std::to_string(m) + ")");
    }
    require_alpha_at_least_reciprocal(m, alpha, "build_B");
    return alternating_mean(mats, alpha, m);
}

NonNegativeMatrix build_C_alpha(std::span<const NonNegativeMatrix> mats, double alpha) {
    const std::size_t m = mats.size();
    if (m % 2 != 1) {
        throw ConfigError("build_C: operator count must be odd (got " + std::to_string(m) + ")");
    }
    require_alpha_at_least_reciprocal(m, alpha, "build_C");
    return alternating_mean(mats, alpha, 2 * m);
}

NonNegativeMatrix build_B_even(std::span<const NonNegativeMatrix> mats) {
    if (mats.empty()) throw ConfigError("build_B: empty operator list");
    return build_B_alpha(mats, 1.0 / static_cast<double>(mats.size()));
}

NonNegativeMatrix build_C_odd(std::span<const NonNegativeMatrix> mats) {
    if (mats.empty()) throw ConfigError("build_C: empty operator list");
    return build_C_alpha(mats, 1.0 / static_cast<double>(mats.size()));
}

EntrywiseComparison entrywise_leq(const NonNegativeMatrix& a, const NonNegativeMatrix& b,
                                  double tol) {
    require_same_dimension(a, b, "entrywise_leq");
    EntrywiseComparison out;
    out.min_slack = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.n(); ++i) {
        for (std::size_t j = 0; j < a.n(); ++j) {
            const double x = a(i, j);
            const double y = b(i, j);
            out.min_slack = std::min(out.min_slack, y - x);
            out.max_violation = std::max(out.max_violation, x - y);
            if (x > y + tol * std::max(1.0, y)) out.holds = false;
        }
    }
    return out;
}

}  // namespace hgm
