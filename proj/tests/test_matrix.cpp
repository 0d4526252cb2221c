#include <doctest.h>

#include <cmath>
#include <vector>

#include "hgm/errors.hpp"
#include "hgm/matrix.hpp"
#include "hgm/random.hpp"

using namespace hgm;

namespace {

NonNegativeMatrix M(std::vector<std::vector<double>> rows) { return NonNegativeMatrix::from_rows(rows); }

bool close(const NonNegativeMatrix& a, const NonNegativeMatrix& b, double rel) {
    if (a.n() != b.n()) return false;
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j)
            if (std::fabs(a(i, j) - b(i, j)) > rel * std::max(1.0, std::fabs(b(i, j)))) return false;
    return true;
}

// Plain triple loop, kept independent of the Eigen path.
NonNegativeMatrix naive_mul(const NonNegativeMatrix& a, const NonNegativeMatrix& b) {
    const std::size_t n = a.n();
    std::vector<std::vector<double>> r(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) r[i][j] += a(i, k) * b(k, j);
    return M(r);
}

NonNegativeMatrix naive_t(const NonNegativeMatrix& a) {
    const std::size_t n = a.n();
    std::vector<std::vector<double>> r(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = a(j, i);
    return M(r);
}

NonNegativeMatrix chain(std::initializer_list<NonNegativeMatrix> fs) {
    auto it = fs.begin();
    NonNegativeMatrix out = *it;
    for (++it; it != fs.end(); ++it) out = naive_mul(out, *it);
    return out;
}

// Entrywise prod_j x_j^e_j with 0^0 = 1, evaluated one scalar at a time.
NonNegativeMatrix scalar_mean(const std::vector<NonNegativeMatrix>& xs, const std::vector<double>& es) {
    const std::size_t n = xs.front().n();
    std::vector<std::vector<double>> r(n, std::vector<double>(n, 1.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < xs.size(); ++k) {
                const double x = xs[k](i, j);
                r[i][j] *= (es[k] == 0.0) ? 1.0 : (x == 0.0 ? 0.0 : std::exp(es[k] * std::log(x)));
            }
    return M(r);
}

std::vector<NonNegativeMatrix> random_mats(std::uint64_t seed, std::size_t m, std::size_t n, double density = 1.0) {
    Rng rng(seed);
    std::vector<NonNegativeMatrix> out;
    for (std::size_t j = 0; j < m; ++j) out.push_back(random_matrix(rng, n, density));
    return out;
}

}  // namespace

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(NonNegativeMatrix(DenseMatrix(2, 3)), DimensionError);
    CHECK_THROWS_AS(NonNegativeMatrix(DenseMatrix(0, 0)), DimensionError);
    CHECK_THROWS_AS(NonNegativeMatrix(DenseMatrix::Zero(257, 257)), DimensionError);
    CHECK_THROWS_AS(M({{1, -1e-300}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(M({{1, NAN}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(M({{1, 2}, {3}}), DimensionError);
    CHECK(M({{0, 1}, {2, 3}})(1, 0) == 2.0);
}

TEST_CASE("weight vectors") {
    CHECK_NOTHROW(WeightVector({0.5, 0.5}, WeightConstraint::SumOne));
    CHECK_THROWS_AS(WeightVector({0.5, 0.6}, WeightConstraint::SumOne), ConfigError);
    CHECK_THROWS_AS(WeightVector({0.5, 0.4}, WeightConstraint::SumAtLeastOne), ConfigError);
    CHECK_NOTHROW(WeightVector({1.0, 1.0}, WeightConstraint::SumAtLeastOne));
    CHECK_THROWS_AS(WeightVector({1.0, 0.0}, WeightConstraint::SumOne), ConfigError);
    CHECK_THROWS_AS(WeightVector({}, WeightConstraint::SumOne), ConfigError);
    CHECK(WeightVector::uniform(3).sum() == doctest::Approx(1.0));
}

TEST_CASE("hadamard power conventions") {
    const auto a = M({{0, 4}, {9, 0}});
    CHECK(hadamard_power(a, 0.0) == NonNegativeMatrix::ones(2));
    CHECK(hadamard_power(a, 0.5) == M({{0, 2}, {3, 0}}));
    CHECK(hadamard_power(a, 1.0) == a);
    CHECK(hadamard_power(a, 1e-9)(0, 0) == 0.0);
    CHECK_THROWS_AS(hadamard_power(a, -0.5), ConfigError);
}

TEST_CASE("hadamard power composes") {
    for (const auto& a : random_mats(101, 10, 5, 0.7)) {
        for (double s : {0.3, 1.0, 2.5})
            for (double t : {0.2, 0.5, 1.7})
                CHECK(close(hadamard_power(hadamard_power(a, s), t), hadamard_power(a, s * t), 1e-12));
    }
}

TEST_CASE("weighted geometric mean") {
    const auto a = M({{1, 4}, {9, 16}});
    const auto b = M({{4, 1}, {1, 4}});
    const WeightVector half({0.5, 0.5}, WeightConstraint::SumOne);
    const std::vector<NonNegativeMatrix> ab{a, b};
    CHECK(weighted_geometric_mean(ab, half) == M({{2, 2}, {3, 8}}));

    const std::vector<NonNegativeMatrix> aa{a, a};
    CHECK(close(weighted_geometric_mean(aa, half), a, 1e-15));

    const auto xs = random_mats(7, 3, 4);
    const WeightVector third = WeightVector::uniform(3);
    const auto g = weighted_geometric_mean(xs, third);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(g(i, j) == doctest::Approx(std::cbrt(xs[0](i, j) * xs[1](i, j) * xs[2](i, j))).epsilon(1e-13));

    // Weighted AM-GM: the mean never exceeds the arithmetic combination.
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        const auto w = random_sum_one_weights(rng, 3);
        const auto ms = random_mats(seed + 1000, 3, 5, 0.7);
        const auto mean = weighted_geometric_mean(ms, WeightVector(w, WeightConstraint::SumOne));
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) {
                const double am = w[0] * ms[0](i, j) + w[1] * ms[1](i, j) + w[2] * ms[2](i, j);
                CHECK(mean(i, j) <= am * (1 + 1e-12) + 1e-15);
            }
    }
}

TEST_CASE("products and transposes") {
    CHECK(matmul(M({{0, 1}, {0, 1}}), M({{1, 1}, {0, 0}})) == NonNegativeMatrix::zero(2));
    CHECK(transpose(M({{1, 2}, {3, 4}})) == M({{1, 3}, {2, 4}}));
    const auto a = random_mats(3, 1, 6).front();
    CHECK(matmul(a, identity(6)) == a);
    CHECK_THROWS_AS(matmul(a, identity(5)), DimensionError);
    const auto xs = random_mats(4, 2, 6);
    CHECK(close(matmul(xs[0], xs[1]), naive_mul(xs[0], xs[1]), 1e-14));
    CHECK(matrix_power(a, 0) == identity(6));
    CHECK(close(matrix_power(a, 3), chain({a, a, a}), 1e-13));
}

TEST_CASE("cyclic factors B_i") {
    const auto xs = random_mats(11, 3, 4);
    const std::vector<double> w{0.5, 0.3, 0.2};
    const WeightVector wv(w, WeightConstraint::SumOne);
    // i = 2 (1-based) is index 1: A_2^(0.5) o A_3^(0.3) o A_1^(0.2)
    CHECK(close(cyclic_factor_B(xs, wv, 1), scalar_mean({xs[1], xs[2], xs[0]}, w), 1e-13));
    CHECK(close(cyclic_factor_B(xs, wv, 2), scalar_mean({xs[2], xs[0], xs[1]}, w), 1e-13));

    const std::vector<NonNegativeMatrix> two{xs[0], xs[1]};
    const WeightVector w2({0.7, 0.3}, WeightConstraint::SumOne);
    CHECK(close(cyclic_factor_B(two, w2, 1), scalar_mean({xs[1], xs[0]}, {0.7, 0.3}), 1e-13));

    const WeightVector eq = WeightVector::uniform(3);
    CHECK(close(cyclic_factor_B(xs, eq, 0), cyclic_factor_B(xs, eq, 2), 1e-14));
    CHECK_THROWS_AS(cyclic_factor_B(xs, wv, 3), ConfigError);
}

TEST_CASE("cyclic products P_j") {
    const auto xs = random_mats(12, 3, 4);
    CHECK(close(cyclic_product_P(xs, 1), chain({xs[1], xs[2], xs[0]}), 1e-13));
    CHECK(close(cyclic_product_P(xs, 0), chain({xs[0], xs[1], xs[2]}), 1e-13));
    const std::vector<NonNegativeMatrix> ids(3, identity(4));
    CHECK(cyclic_product_P(ids, 2) == identity(4));
    CHECK_THROWS_AS(cyclic_product_P(xs, 3), ConfigError);
}

TEST_CASE("gram matrix") {
    CHECK(gram_S(M({{0, 1}, {0, 1}})) == M({{0, 0}, {0, 2}}));
    CHECK(gram_S(identity(3)) == identity(3));
    const auto s = gram_S(random_mats(5, 1, 7).front());
    CHECK(s == transpose(s));
}

TEST_CASE("B and C against a literal transcription") {
    const auto x = random_mats(31, 4, 4);
    const auto t = [&](int i) { return naive_t(x[static_cast<std::size_t>(i - 1)]); };
    const auto a = [&](int i) { return x[static_cast<std::size_t>(i - 1)]; };

    // m = 4: (A1^T A2 A3^T A4) o (A2^T A3 A4^T A1) o (A3^T A4 A1^T A2) o (A4^T A1 A2^T A3), each ^(1/4)
    const std::vector<NonNegativeMatrix> b4{chain({t(1), a(2), t(3), a(4)}), chain({t(2), a(3), t(4), a(1)}),
                                            chain({t(3), a(4), t(1), a(2)}), chain({t(4), a(1), t(2), a(3)})};
    CHECK(close(build_B_even(x), scalar_mean(b4, {0.25, 0.25, 0.25, 0.25}), 1e-12));
    CHECK(close(build_B_alpha(x, 0.7), scalar_mean(b4, {0.7, 0.7, 0.7, 0.7}), 1e-12));

    const std::vector<NonNegativeMatrix> x3{x[0], x[1], x[2]};
    // m = 3: (A1^T A2 A3^T A1 A2^T A3) o (A2^T A3 A1^T A2 A3^T A1) o (A3^T A1 A2^T A3 A1^T A2)
    const std::vector<NonNegativeMatrix> c3{chain({t(1), a(2), t(3), a(1), t(2), a(3)}),
                                            chain({t(2), a(3), t(1), a(2), t(3), a(1)}),
                                            chain({t(3), a(1), t(2), a(3), t(1), a(2)})};
    const double third = 1.0 / 3.0;
    CHECK(close(build_C_odd(x3), scalar_mean(c3, {third, third, third}), 1e-12));
    CHECK(close(build_C_alpha(x3, 0.5), scalar_mean(c3, {0.5, 0.5, 0.5}), 1e-12));

    // m = 2 is the (A^T B)^(1/2) o (B^T A)^(1/2) construction, exactly.
    const std::vector<NonNegativeMatrix> x2{x[0], x[1]};
    const auto atb = matmul(transpose(x[0]), x[1]);
    const auto bta = matmul(transpose(x[1]), x[0]);
    CHECK(build_B_even(x2) == hadamard_product(hadamard_power(atb, 0.5), hadamard_power(bta, 0.5)));
    CHECK(build_B_alpha(x2, 1.0) == hadamard_product(atb, bta));

    // m = 1: C = S_1.
    const std::vector<NonNegativeMatrix> x1{x[0]};
    CHECK(close(build_C_odd(x1), gram_S(x[0]), 1e-13));

    const std::vector<NonNegativeMatrix> ids(4, identity(3));
    CHECK(build_B_even(ids) == identity(3));

    CHECK_THROWS_AS(build_B_even(x3), ConfigError);
    CHECK_THROWS_AS(build_C_odd(x), ConfigError);
    CHECK_THROWS_AS(build_B_alpha(x, 0.2), ConfigError);
    CHECK_THROWS_AS(build_C_alpha(x3, 0.3), ConfigError);
}

TEST_CASE("entrywise comparison") {
    const auto a = random_mats(8, 1, 4).front();
    CHECK(entrywise_leq(a, a, 0.0).holds);
    const auto c = entrywise_leq(M({{0, 1}, {0, 0}}), NonNegativeMatrix::zero(2), 0.0);
    CHECK_FALSE(c.holds);
    CHECK(c.max_violation == 1.0);
    CHECK_THROWS_AS(entrywise_leq(a, identity(3), 0.0), DimensionError);
}

TEST_CASE("basic2 entrywise on random grids") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        const std::size_t k = rng.integer(1, 3), m = rng.integer(1, 3), n = rng.integer(1, 6);
        const WeightVector w(random_sum_one_weights(rng, m), WeightConstraint::SumOne);
        std::vector<std::vector<NonNegativeMatrix>> grid(k);
        for (auto& row : grid)
            for (std::size_t j = 0; j < m; ++j) row.push_back(random_matrix(rng, n, 0.6));
        std::vector<NonNegativeMatrix> means, cols;
        for (const auto& row : grid) means.push_back(weighted_geometric_mean(row, w));
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<NonNegativeMatrix> col;
            for (const auto& row : grid) col.push_back(row[j]);
            cols.push_back(product(col));
        }
        CHECK(entrywise_leq(product(means), weighted_geometric_mean(cols, w), 1e-10).holds);
    }
}

TEST_CASE("outputs stay nonnegative") {
    const auto xs = random_mats(77, 4, 5, 0.3);
    const WeightVector w = WeightVector::uniform(4);
    for (const auto& r : {weighted_geometric_mean(xs, w), cyclic_factor_B(xs, w, 3), cyclic_product_P(xs, 2),
                          gram_S(xs[0]), build_B_even(xs), product(xs)}) {
        CHECK(r.dense().minCoeff() >= 0.0);
    }
}
