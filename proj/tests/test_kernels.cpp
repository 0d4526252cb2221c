#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hgm/errors.hpp"
#include "hgm/kernels.hpp"
#include "hgm/spectral.hpp"

using namespace hgm;

TEST_CASE("kernel parsing") {
    CHECK(KernelSpec::parse("gauss").family == KernelFamily::Gauss);
    CHECK(KernelSpec::parse("rational:2.5").param == 2.5);
    CHECK_THROWS_AS(KernelSpec::parse("nosuch"), ConfigError);
    CHECK_THROWS_AS(KernelSpec::parse("rational:0"), ConfigError);
    CHECK_THROWS_AS(KernelSpec::parse("constant:-1"), ConfigError);
    CHECK_THROWS_AS(KernelSpec::parse("gauss:abc"), ConfigError);
    CHECK_THROWS_AS(KernelSpec::parse("bilinear:2"), ConfigError);
}

TEST_CASE("constant kernel") {
    for (std::size_t n : {2u, 5u, 16u}) {
        const auto m = discretize(KernelSpec{KernelFamily::Constant, 1.0, n});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(m(i, j) == doctest::Approx(1.0 / static_cast<double>(n)));
        CHECK(rho(m) == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("gauss kernel against pointwise evaluation") {
    const auto m = discretize(KernelSpec{KernelFamily::Gauss, 1.0, 4});
    const double x[4] = {0.125, 0.375, 0.625, 0.875};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) ==
                  doctest::Approx(0.25 * std::exp(-(x[i] - x[j]) * (x[i] - x[j]))).epsilon(1e-15));
}

TEST_CASE("bilinear kernel is rank one") {
    for (std::size_t n : {4u, 16u, 64u}) {
        const auto m = discretize(KernelSpec{KernelFamily::Bilinear, 1.0, n});
        double expected = 0;
        for (double x : midpoint_nodes(n)) expected += x * x;
        expected /= static_cast<double>(n);
        CHECK(rho(m) == doctest::Approx(expected).epsilon(1e-12));
    }
    // h * sum x_i^2 -> 1/3 with error 1/(12 n^2).
    const auto m = discretize(KernelSpec{KernelFamily::Bilinear, 1.0, 128});
    CHECK(std::fabs(rho(m) - 1.0 / 3.0) <= 1.0 / (12.0 * 128 * 128) + 1e-12);
}

TEST_CASE("discretization commutes with Hadamard means") {
    const KernelSpec g{KernelFamily::Gauss, 1.0, 16};
    const KernelSpec r{KernelFamily::Rational, 1.0, 16};
    const double alpha = 0.3;
    const std::vector<NonNegativeMatrix> mats{discretize(g), discretize(r)};
    const auto mean = weighted_geometric_mean(mats, WeightVector({alpha, 1 - alpha}, WeightConstraint::SumOne));
    const auto x = midpoint_nodes(16);
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j) {
            const double direct = std::pow(g(x[i], x[j]), alpha) * std::pow(r(x[i], x[j]), 1 - alpha) / 16.0;
            CHECK(std::fabs(mean(i, j) - direct) <= 1e-12 * direct);
        }
}

TEST_CASE("refinement runs") {
    const auto c = KernelSpec::parse("constant");
    const auto res = refine_and_check({c, c}, "cor35", {8, 16});
    CHECK(res.all_passed());
    for (const auto& l : res.levels)
        for (const auto& q : l.report.quantities) CHECK(q.value == doctest::Approx(1.0).epsilon(1e-12));

    const auto gr = refine_and_check({KernelSpec::parse("gauss"), KernelSpec::parse("rational")}, "thm44", {16, 32});
    CHECK(gr.all_passed());
    const auto csv = gr.to_csv();
    CHECK(csv.rfind("grid_n,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

    const auto three = refine_and_check(
        {KernelSpec::parse("gauss"), KernelSpec::parse("rational"), KernelSpec::parse("bilinear")}, "cor48",
        {16, 32});
    CHECK(three.all_passed());

    CHECK_THROWS_AS(refine_and_check({c, c}, "nosuch", {8}), ConfigError);
    CHECK_THROWS_AS(refine_and_check({c}, "thm44", {8}), ConfigError);
    CHECK_THROWS_AS(discretize(KernelSpec{KernelFamily::Gauss, 1.0, 1}), ConfigError);
}

TEST_CASE("convergence trend looks at the finest levels") {
    auto level = [](std::size_t n, double v) {
        RefinementLevel l;
        l.grid_n = n;
        l.report.quantities.push_back({"q", v});
        return l;
    };
    RefinementResult r;
    // 1e-3, 4e-3, 1e-3: the coarse step is out of order, the fine one is not.
    r.levels = {level(16, 1.0), level(32, 1.001), level(64, 1.005), level(128, 1.006)};
    CHECK(convergence_trend(r).empty());
    r.levels.push_back(level(256, 1.0072));
    const auto bad = convergence_trend(r);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].label == "q");
    CHECK(bad[0].fine_change == doctest::Approx(1.2e-3));
    r.levels.resize(2);
    CHECK(convergence_trend(r).empty());
}
