#include "hgm/suites.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "hgm/errors.hpp"
#include "hgm/random.hpp"
#include "hgm/spectral.hpp"

namespace hgm {

namespace {

constexpr std::array kAllNorms{NormKind::L1, NormKind::L2, NormKind::LInf};

std::string nrm(const std::string& inner, NormKind k) {
    return "||" + inner + "||_" + std::string(to_string(k));
}

// Power with 0^0 = 1 (std::pow already does this; kept explicit).
double pw(double x, double e) { return e == 0.0 ? 1.0 : std::pow(x, e); }

void require_constraint(const WeightVector& w, WeightNeed need, const char* suite) {
    if (need == WeightNeed::SumOne && w.constraint() != WeightConstraint::SumOne) {
        throw ConfigError(std::string(suite) + " requires weights summing to 1");
    }
}

void require_operator_count(std::span<const NonNegativeMatrix> mats, const WeightVector& w,
                            const char* suite) {
    if (mats.empty()) throw ConfigError(std::string(suite) + ": empty operator list");
    if (mats.size() != w.size()) {
        throw ConfigError(std::string(suite) + ": " + std::to_string(mats.size()) +
                          " operators but " + std::to_string(w.size()) + " weights");
    }
    for (const auto& a : mats) {
        if (a.n() != mats.front().n()) throw DimensionError(std::string(suite) + ": dimension mismatch");
    }
}

void require_alpha_floor(double alpha, double floor, const char* suite) {
    if (!std::isfinite(alpha) || alpha < floor * (1.0 - 1e-12)) {
        throw ConfigError(std::string(suite) + ": exponent " + std::to_string(alpha) +
                          " is below the admissible bound " + std::to_string(floor));
    }
}

double product_of_powers(std::span<const double> values, std::span<const double> exps) {
    double out = 1.0;
    for (std::size_t j = 0; j < values.size(); ++j) out *= pw(values[j], exps[j]);
    return out;
}

// ---------------------------------------------------------------------------
// Grid chains shared by the three grid suites.

struct GridTerms {
    NonNegativeMatrix a;             // prod_i (o_j A_ij^(a_j))
    NonNegativeMatrix mean_of_cols;  // o_j C_j^(a_j)
    std::vector<NonNegativeMatrix> cols;
};

GridTerms grid_terms(const MatrixGrid& grid, const WeightVector& w, const char* suite) {
    if (grid.empty()) throw ConfigError(std::string(suite) + ": empty grid");
    const std::size_t m = w.size();
    for (const auto& row : grid) {
        require_operator_count(row, w, suite);
        if (row.front().n() != grid.front().front().n())
            throw DimensionError(std::string(suite) + ": dimension mismatch");
    }
    std::vector<NonNegativeMatrix> row_means;
    row_means.reserve(grid.size());
    for (const auto& row : grid) row_means.push_back(weighted_geometric_mean(row, w));

    std::vector<NonNegativeMatrix> cols;
    cols.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<NonNegativeMatrix> col;
        col.reserve(grid.size());
        for (const auto& row : grid) col.push_back(row[j]);
        cols.push_back(product(col));
    }
    NonNegativeMatrix mean = weighted_geometric_mean(cols, w);
    return {product(row_means), std::move(mean), std::move(cols)};
}

enum class GridMode { Thm21, Thm23, Thm24 };

InequalityReport grid_suite(const MatrixGrid& grid, const WeightVector& w, const Tolerance& tol,
                            GridMode mode) {
    const char* name = mode == GridMode::Thm21 ? "thm21" : mode == GridMode::Thm23 ? "thm23" : "thm24";
    require_constraint(w, mode == GridMode::Thm24 ? WeightNeed::SumAtLeastOne : WeightNeed::SumOne,
                       name);
    const GridTerms t = grid_terms(grid, w, name);
    const bool refined = mode != GridMode::Thm21;
    const bool entrywise = mode != GridMode::Thm23;
    const bool numerical = mode != GridMode::Thm24;
    const auto exps = w.values();

    ReportBuilder r(name, tol);
    if (entrywise) r.entrywise("A", "o_j C_j^(a_j)", t.a, t.mean_of_cols);

    auto functional_chain = [&](const std::string& lhs, const std::string& mid,
                                const std::string& rhs, auto&& f) {
        std::vector<double> col_values;
        for (const auto& c : t.cols) col_values.push_back(f(c));
        r.add(lhs, f(t.a));
        if (refined) r.add(mid, f(t.mean_of_cols));
        r.add(rhs, product_of_powers(col_values, exps));
        if (refined) r.chain({lhs, mid, rhs}); else r.leq(lhs, rhs);
    };

    for (NormKind k : kAllNorms) {
        functional_chain(nrm("A", k), nrm("o_j C_j^(a_j)", k), "prod_j " + nrm("C_j", k) + "^a_j",
                         [k](const NonNegativeMatrix& x) { return operator_norm(x, k); });
    }
    functional_chain("rho(A)", "rho(o_j C_j^(a_j))", "prod_j rho(C_j)^a_j",
                     [](const NonNegativeMatrix& x) { return rho(x); });
    if (numerical) {
        functional_chain("w(A)", "w(o_j C_j^(a_j))", "prod_j w(C_j)^a_j",
                         [](const NonNegativeMatrix& x) { return numerical_radius(x); });
    }
    return std::move(r).finish();
}

// ---------------------------------------------------------------------------
// Cyclic B_i / P_j suites.

struct CyclicTerms {
    NonNegativeMatrix b_product;  // B_1 ... B_m
    NonNegativeMatrix p_mean;     // o_j P_j^(a_j)
    std::vector<NonNegativeMatrix> ps;
    NonNegativeMatrix a_product;  // A_1 ... A_m
};

CyclicTerms cyclic_terms(std::span<const NonNegativeMatrix> mats, const WeightVector& w) {
    const std::size_t m = mats.size();
    std::vector<NonNegativeMatrix> bs;
    std::vector<NonNegativeMatrix> ps;
    for (std::size_t i = 0; i < m; ++i) {
        bs.push_back(cyclic_factor_B(mats, w, i));
        ps.push_back(cyclic_product_P(mats, i));
    }
    NonNegativeMatrix p_mean = weighted_geometric_mean(ps, w);
    return {product(bs), std::move(p_mean), std::move(ps), product(mats)};
}

void add_cyclic_norm_chains(ReportBuilder& r, const CyclicTerms& t, std::span<const double> exps) {
    for (NormKind k : kAllNorms) {
        std::vector<double> pn;
        for (const auto& p : t.ps) pn.push_back(operator_norm(p, k));
        const std::string l = nrm("B_1...B_m", k);
        const std::string mid = nrm("o_j P_j^(a_j)", k);
        const std::string rhs = "prod_j " + nrm("P_j", k) + "^a_j";
        r.add(l, operator_norm(t.b_product, k));
        r.add(mid, operator_norm(t.p_mean, k));
        r.add(rhs, product_of_powers(pn, exps));
        r.chain({l, mid, rhs});
    }
}

// ---------------------------------------------------------------------------
// Suites on flat lists, adapted for the registry.

const WeightVector& weights_or_throw(const SuiteParams& p, const char* suite) {
    if (!p.weights) throw ConfigError(std::string(suite) + " requires a weight vector");
    return *p.weights;
}

double alpha_or(const SuiteParams& p, const SuiteInfo& s, std::size_t m) {
    return p.alpha ? *p.alpha : default_alpha(s, m);
}

void require_count(std::span<const NonNegativeMatrix> mats, std::size_t want, const char* suite) {
    if (mats.size() != want) {
        throw ConfigError(std::string(suite) + " takes exactly " + std::to_string(want) +
                          " operators (got " + std::to_string(mats.size()) + ")");
    }
}

}  // namespace

InequalityReport check_thm21(const MatrixGrid& grid, const WeightVector& w, const Tolerance& tol) {
    return grid_suite(grid, w, tol, GridMode::Thm21);
}

InequalityReport check_thm23_refined(const MatrixGrid& grid, const WeightVector& w,
                                     const Tolerance& tol) {
    return grid_suite(grid, w, tol, GridMode::Thm23);
}

InequalityReport check_thm24_sum_ge1(const MatrixGrid& grid, const WeightVector& w,
                                     const Tolerance& tol) {
    return grid_suite(grid, w, tol, GridMode::Thm24);
}

InequalityReport check_thm31(std::span<const NonNegativeMatrix> mats, const WeightVector& w,
                             const Tolerance& tol) {
    require_constraint(w, WeightNeed::SumOne, "thm31");
    require_operator_count(mats, w, "thm31");
    std::vector<NonNegativeMatrix> bs;
    for (std::size_t i = 0; i < mats.size(); ++i) bs.push_back(cyclic_factor_B(mats, w, i));
    ReportBuilder r("thm31", tol);
    r.add("rho(B_1...B_m)", rho(product(bs)));
    r.add("rho(A_1...A_m)", rho(product(mats)));
    r.leq("rho(B_1...B_m)", "rho(A_1...A_m)");
    return std::move(r).finish();
}

InequalityReport check_thm32(std::span<const NonNegativeMatrix> mats, const WeightVector& w,
                             const Tolerance& tol) {
    require_constraint(w, WeightNeed::SumOne, "thm32");
    require_operator_count(mats, w, "thm32");
    const CyclicTerms t = cyclic_terms(mats, w);
    const auto exps = w.values();
    ReportBuilder r("thm32", tol);

    r.add("rho(B_1...B_m)", rho(t.b_product));
    r.add("rho(o_j P_j^(a_j))", rho(t.p_mean));
    r.add("rho(A_1...A_m)", rho(t.a_product));
    r.chain({"rho(B_1...B_m)", "rho(o_j P_j^(a_j))", "rho(A_1...A_m)"});

    add_cyclic_norm_chains(r, t, exps);

    std::vector<double> pw_values;
    for (const auto& p : t.ps) pw_values.push_back(numerical_radius(p));
    r.add("w(B_1...B_m)", numerical_radius(t.b_product));
    r.add("w(o_j P_j^(a_j))", numerical_radius(t.p_mean));
    r.add("prod_j w(P_j)^a_j", product_of_powers(pw_values, exps));
    r.chain({"w(B_1...B_m)", "w(o_j P_j^(a_j))", "prod_j w(P_j)^a_j"});
    return std::move(r).finish();
}

InequalityReport check_cor33(std::span<const NonNegativeMatrix> mats, const Tolerance& tol) {
    if (mats.empty()) throw ConfigError("cor33: empty operator list");
    const std::size_t m = mats.size();
    const double inv = 1.0 / static_cast<double>(m);
    const WeightVector w = WeightVector::uniform(m);
    require_operator_count(mats, w, "cor33");
    const CyclicTerms t = cyclic_terms(mats, w);
    const NonNegativeMatrix g = weighted_geometric_mean(mats, w);
    const NonNegativeMatrix gm = matrix_power(g, static_cast<unsigned>(m));
    ReportBuilder r("cor33", tol);

    r.add("rho(o_j A_j^(1/m))", rho(g));
    r.add("rho(o_j P_j^(1/m))^(1/m)", std::pow(rho(t.p_mean), inv));
    r.add("rho(A_1...A_m)^(1/m)", std::pow(rho(t.a_product), inv));
    r.chain({"rho(o_j A_j^(1/m))", "rho(o_j P_j^(1/m))^(1/m)", "rho(A_1...A_m)^(1/m)"});

    for (NormKind k : kAllNorms) {
        double rhs = 1.0;
        for (const auto& p : t.ps) rhs *= std::pow(operator_norm(p, k), inv);
        const std::string l = nrm("(o_j A_j^(1/m))^m", k);
        const std::string mid = nrm("o_j P_j^(1/m)", k);
        const std::string right = "prod_j " + nrm("P_j", k) + "^(1/m)";
        r.add(l, operator_norm(gm, k));
        r.add(mid, operator_norm(t.p_mean, k));
        r.add(right, rhs);
        r.chain({l, mid, right});
    }

    double wr = 1.0;
    for (const auto& p : t.ps) wr *= std::pow(numerical_radius(p), inv);
    r.add("w((o_j A_j^(1/m))^m)", numerical_radius(gm));
    r.add("w(o_j P_j^(1/m))", numerical_radius(t.p_mean));
    r.add("prod_j w(P_j)^(1/m)", wr);
    r.chain({"w((o_j A_j^(1/m))^m)", "w(o_j P_j^(1/m))", "prod_j w(P_j)^(1/m)"});
    return std::move(r).finish();
}

InequalityReport check_cor35(const NonNegativeMatrix& a, const NonNegativeMatrix& b, double alpha,
                             const Tolerance& tol) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("cor35: alpha must lie in [0, 1]");
    if (a.n() != b.n()) throw DimensionError("cor35: dimension mismatch");
    const double beta = 1.0 - alpha;
    const NonNegativeMatrix ab = matmul(a, b);
    const NonNegativeMatrix ba = matmul(b, a);
    const NonNegativeMatrix x = hadamard_product(hadamard_power(a, alpha), hadamard_power(b, beta));
    const NonNegativeMatrix y = hadamard_product(hadamard_power(b, alpha), hadamard_power(a, beta));
    const NonNegativeMatrix xy = matmul(x, y);
    const NonNegativeMatrix mean = hadamard_product(hadamard_power(ab, alpha), hadamard_power(ba, beta));
    const NonNegativeMatrix half = hadamard_product(hadamard_power(a, 0.5), hadamard_power(b, 0.5));
    const NonNegativeMatrix half_sq = matmul(half, half);
    const NonNegativeMatrix half_mean = hadamard_product(hadamard_power(ab, 0.5), hadamard_power(ba, 0.5));

    ReportBuilder r("cor35", tol);
    const double rho_ab = rho(ab);
    r.add("rho(XY)", rho(xy));
    r.add("rho((AB)^(a) o (BA)^(1-a))", rho(mean));
    r.add("rho(AB)", rho_ab);
    r.chain({"rho(XY)", "rho((AB)^(a) o (BA)^(1-a))", "rho(AB)"});

    r.add("rho(A^(1/2) o B^(1/2))", rho(half));
    r.add("rho((AB)^(1/2) o (BA)^(1/2))^(1/2)", std::sqrt(rho(half_mean)));
    r.add("rho(AB)^(1/2)", std::sqrt(rho_ab));
    r.chain({"rho(A^(1/2) o B^(1/2))", "rho((AB)^(1/2) o (BA)^(1/2))^(1/2)", "rho(AB)^(1/2)"});

    for (NormKind k : kAllNorms) {
        const double nab = operator_norm(ab, k);
        const double nba = operator_norm(ba, k);
        const std::string l1 = nrm("XY", k), m1 = nrm("(AB)^(a) o (BA)^(1-a)", k),
                          r1 = nrm("AB", k) + "^a " + nrm("BA", k) + "^(1-a)";
        r.add(l1, operator_norm(xy, k));
        r.add(m1, operator_norm(mean, k));
        r.add(r1, pw(nab, alpha) * pw(nba, beta));
        r.chain({l1, m1, r1});

        const std::string l2 = nrm("(A^(1/2) o B^(1/2))^2", k),
                          m2 = nrm("(AB)^(1/2) o (BA)^(1/2)", k),
                          r2 = nrm("AB", k) + "^(1/2) " + nrm("BA", k) + "^(1/2)";
        r.add(l2, operator_norm(half_sq, k));
        r.add(m2, operator_norm(half_mean, k));
        r.add(r2, std::sqrt(nab) * std::sqrt(nba));
        r.chain({l2, m2, r2});
    }

    const double wab = numerical_radius(ab);
    const double wba = numerical_radius(ba);
    r.add("w(XY)", numerical_radius(xy));
    r.add("w((AB)^(a) o (BA)^(1-a))", numerical_radius(mean));
    r.add("w(AB)^a w(BA)^(1-a)", pw(wab, alpha) * pw(wba, beta));
    r.chain({"w(XY)", "w((AB)^(a) o (BA)^(1-a))", "w(AB)^a w(BA)^(1-a)"});

    r.add("w((A^(1/2) o B^(1/2))^2)", numerical_radius(half_sq));
    r.add("w((AB)^(1/2) o (BA)^(1/2))", numerical_radius(half_mean));
    r.add("w(AB)^(1/2) w(BA)^(1/2)", std::sqrt(wab) * std::sqrt(wba));
    r.chain({"w((A^(1/2) o B^(1/2))^2)", "w((AB)^(1/2) o (BA)^(1/2))", "w(AB)^(1/2) w(BA)^(1/2)"});
    return std::move(r).finish();
}

InequalityReport check_thm36(std::span<const NonNegativeMatrix> mats, const WeightVector& w,
                             const Tolerance& tol) {
    require_operator_count(mats, w, "thm36");
    const double total = w.sum();
    const CyclicTerms t = cyclic_terms(mats, w);
    const auto exps = w.values();
    ReportBuilder r("thm36", tol);

    r.add("rho(B_1...B_m)", rho(t.b_product));
    r.add("rho(o_j P_j^(a_j))", rho(t.p_mean));
    r.add("rho(A_1...A_m)^(sum a_j)", std::pow(rho(t.a_product), total));
    r.chain({"rho(B_1...B_m)", "rho(o_j P_j^(a_j))", "rho(A_1...A_m)^(sum a_j)"});

    add_cyclic_norm_chains(r, t, exps);

    std::vector<double> pw_values;
    for (const auto& p : t.ps) pw_values.push_back(numerical_radius(p));
    r.add("w(B_1...B_m)", numerical_radius(t.b_product));
    r.add("w(o_j P_j^(a_j))", numerical_radius(t.p_mean));
    r.add("prod_j w(P_j)^a_j", product_of_powers(pw_values, exps));
    r.leq("w(B_1...B_m)", "w(o_j P_j^(a_j))");
    r.observe_leq("w(o_j P_j^(a_j))", "prod_j w(P_j)^a_j");
    return std::move(r).finish();
}

namespace {

// ||o A_j^(a_j)|| <= rho(o S_j^(a_j))^(1/2) <= prod ||A_j||^a_j
void add_norm_ref_chain(ReportBuilder& r, std::span<const NonNegativeMatrix> mats,
                        const WeightVector& w, const std::vector<NonNegativeMatrix>& grams) {
    std::vector<double> norms;
    for (const auto& a : mats) norms.push_back(operator_norm(a, NormKind::L2));
    r.add("||o_j A_j^(a_j)||_l2", operator_norm(weighted_geometric_mean(mats, w), NormKind::L2));
    r.add("rho(o_j S_j^(a_j))^(1/2)", std::sqrt(rho(weighted_geometric_mean(grams, w))));
    r.add("prod_j ||A_j||_l2^a_j", product_of_powers(norms, w.values()));
    r.chain({"||o_j A_j^(a_j)||_l2", "rho(o_j S_j^(a_j))^(1/2)", "prod_j ||A_j||_l2^a_j"});
}

std::vector<NonNegativeMatrix> grams_of(std::span<const NonNegativeMatrix> mats) {
    std::vector<NonNegativeMatrix> out;
    out.reserve(mats.size());
    for (const auto& a : mats) out.push_back(gram_S(a));
    return out;
}

}  // namespace

InequalityReport check_thm41(std::span<const NonNegativeMatrix> mats, const WeightVector& w,
                             const Tolerance& tol) {
    require_constraint(w, WeightNeed::SumOne, "thm41");
    require_operator_count(mats, w, "thm41");
    const std::size_t m = mats.size();
    const double inv = 1.0 / static_cast<double>(m);
    const WeightVector uniform = WeightVector::uniform(m);
    const auto grams = grams_of(mats);
    std::vector<NonNegativeMatrix> qs;
    for (std::size_t j = 0; j < m; ++j) qs.push_back(cyclic_product_P(grams, j));

    ReportBuilder r("thm41", tol);
    r.add("||o_j A_j^(1/m)||_l2", operator_norm(weighted_geometric_mean(mats, uniform), NormKind::L2));
    r.add("rho(o_j S_j^(1/m))^(1/2)", std::sqrt(rho(weighted_geometric_mean(grams, uniform))));
    r.add("rho(o_j Q_j^(1/m))^(1/2m)", std::pow(rho(weighted_geometric_mean(qs, uniform)), 0.5 * inv));
    r.add("rho(S_1...S_m)^(1/2m)", std::pow(rho(product(grams)), 0.5 * inv));
    r.chain({"||o_j A_j^(1/m)||_l2", "rho(o_j S_j^(1/m))^(1/2)", "rho(o_j Q_j^(1/m))^(1/2m)",
             "rho(S_1...S_m)^(1/2m)"});

    add_norm_ref_chain(r, mats, w, grams);
    return std::move(r).finish();
}

InequalityReport check_thm42(std::span<const NonNegativeMatrix> mats, const WeightVector& w,
                             const Tolerance& tol) {
    require_operator_count(mats, w, "thm42");
    ReportBuilder r("thm42", tol);
    add_norm_ref_chain(r, mats, w, grams_of(mats));
    return std::move(r).finish();
}

InequalityReport check_cor43(const NonNegativeMatrix& a, const NonNegativeMatrix& b, double alpha,
                             double beta, const Tolerance& tol) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ConfigError("cor43: alpha must lie in (0, 1]");
    if (!(beta > 0.0) || alpha + beta < 1.0 - 1e-12) {
        throw ConfigError("cor43: beta must be positive with alpha + beta >= 1");
    }
    if (a.n() != b.n()) throw DimensionError("cor43: dimension mismatch");
    const NonNegativeMatrix sa = gram_S(a);
    const NonNegativeMatrix sb = gram_S(b);
    const double na = operator_norm(a, NormKind::L2);
    const double nb = operator_norm(b, NormKind::L2);
    const NonNegativeMatrix sasb = matmul(sa, sb);
    const NonNegativeMatrix sbsa = matmul(sb, sa);

    ReportBuilder r("cor43", tol);
    r.add("||A^(1/2) o B^(1/2)||",
          operator_norm(hadamard_product(hadamard_power(a, 0.5), hadamard_power(b, 0.5)), NormKind::L2));
    r.add("rho((A^T A)^(1/2) o (B^T B)^(1/2))^(1/2)",
          std::sqrt(rho(hadamard_product(hadamard_power(sa, 0.5), hadamard_power(sb, 0.5)))));
    r.add("rho((A^T A B^T B)^(1/2) o (B^T B A^T A)^(1/2))^(1/4)",
          std::pow(rho(hadamard_product(hadamard_power(sasb, 0.5), hadamard_power(sbsa, 0.5))), 0.25));
    r.add("rho(A^T A B^T B)^(1/4)", std::pow(rho(sasb), 0.25));
    r.add("||A B^T||^(1/2)", std::sqrt(operator_norm(matmul(a, transpose(b)), NormKind::L2)));
    r.add("||A||^(1/2) ||B||^(1/2)", std::sqrt(na) * std::sqrt(nb));
    r.chain({"||A^(1/2) o B^(1/2)||", "rho((A^T A)^(1/2) o (B^T B)^(1/2))^(1/2)",
             "rho((A^T A B^T B)^(1/2) o (B^T B A^T A)^(1/2))^(1/4)", "rho(A^T A B^T B)^(1/4)"});
    r.eq("rho(A^T A B^T B)^(1/4)", "||A B^T||^(1/2)");
    r.leq("||A B^T||^(1/2)", "||A||^(1/2) ||B||^(1/2)");

    const double ca = 1.0 - alpha;
    r.add("||A^(a) o B^(1-a)||",
          operator_norm(hadamard_product(hadamard_power(a, alpha), hadamard_power(b, ca)), NormKind::L2));
    r.add("rho((A^T A)^(a) o (B^T B)^(1-a))^(1/2)",
          std::sqrt(rho(hadamard_product(hadamard_power(sa, alpha), hadamard_power(sb, ca)))));
    r.add("||A||^a ||B||^(1-a)", pw(na, alpha) * pw(nb, ca));
    r.chain({"||A^(a) o B^(1-a)||", "rho((A^T A)^(a) o (B^T B)^(1-a))^(1/2)", "||A||^a ||B||^(1-a)"});

    r.add("||A^(a) o B^(b)||",
          operator_norm(hadamard_product(hadamard_power(a, alpha), hadamard_power(b, beta)), NormKind::L2));
    r.add("rho((A^T A)^(a) o (B^T B)^(b))^(1/2)",
          std::sqrt(rho(hadamard_product(hadamard_power(sa, alpha), hadamard_power(sb, beta)))));
    r.add("||A||^a ||B||^b", pw(na, alpha) * pw(nb, beta));
    r.chain({"||A^(a) o B^(b)||", "rho((A^T A)^(a) o (B^T B)^(b))^(1/2)", "||A||^a ||B||^b"});
    return std::move(r).finish();
}

InequalityReport check_thm44(const NonNegativeMatrix& a, const NonNegativeMatrix& b, double alpha,
                             const Tolerance& tol) {
    require_alpha_floor(alpha, 0.5, "thm44");
    if (a.n() != b.n()) throw DimensionError("thm44: dimension mismatch");
    const NonNegativeMatrix atb = matmul(transpose(a), b);
    const NonNegativeMatrix bta = matmul(transpose(b), a);
    const NonNegativeMatrix abt = matmul(a, transpose(b));
    const double rho_atb = rho(atb);

    ReportBuilder r("thm44", tol);
    r.add("||A^(1/2) o B^(1/2)||",
          operator_norm(hadamard_product(hadamard_power(a, 0.5), hadamard_power(b, 0.5)), NormKind::L2));
    r.add("rho((A^T B)^(1/2) o (B^T A)^(1/2))^(1/2)",
          std::sqrt(rho(hadamard_product(hadamard_power(atb, 0.5), hadamard_power(bta, 0.5)))));
    r.add("rho(A^T B)^(1/2)", std::sqrt(rho_atb));
    r.add("rho(A B^T)^(1/2)", std::sqrt(rho(abt)));
    r.add("||A B^T||^(1/2)", std::sqrt(operator_norm(abt, NormKind::L2)));
    r.add("||A||^(1/2) ||B||^(1/2)",
          std::sqrt(operator_norm(a, NormKind::L2)) * std::sqrt(operator_norm(b, NormKind::L2)));
    r.chain({"||A^(1/2) o B^(1/2)||", "rho((A^T B)^(1/2) o (B^T A)^(1/2))^(1/2)", "rho(A^T B)^(1/2)"});
    r.eq("rho(A^T B)^(1/2)", "rho(A B^T)^(1/2)");
    r.chain({"rho(A B^T)^(1/2)", "||A B^T||^(1/2)", "||A||^(1/2) ||B||^(1/2)"});

    r.add("||A^(a) o B^(a)||",
          operator_norm(hadamard_product(hadamard_power(a, alpha), hadamard_power(b, alpha)), NormKind::L2));
    r.add("rho((A^T B)^(a) o (B^T A)^(a))^(1/2)",
          std::sqrt(rho(hadamard_product(hadamard_power(atb, alpha), hadamard_power(bta, alpha)))));
    r.add("rho(A^T B)^a", pw(rho_atb, alpha));
    r.chain({"||A^(a) o B^(a)||", "rho((A^T B)^(a) o (B^T A)^(a))^(1/2)", "rho(A^T B)^a"});
    return std::move(r).finish();
}

InequalityReport check_thm45_47(std::span<const NonNegativeMatrix> mats, double alpha,
                                const Tolerance& tol) {
    if (mats.empty()) throw ConfigError("thm4547: empty operator list");
    const std::size_t m = mats.size();
    const double md = static_cast<double>(m);
    require_alpha_floor(alpha, 1.0 / md, "thm4547");
    const std::vector<double> exps(m, alpha);
    const double lhs = operator_norm(hadamard_mean(mats, exps), NormKind::L2);

    ReportBuilder r("thm4547", tol);
    r.add("||o_j A_j^(a)||", lhs);
    if (m % 2 == 0) {
        const double rx = rho(alternating_product(mats, 0, m, true));
        const double ry = rho(transpose(alternating_product(mats, 0, m, false)));
        const double ry_fwd = rho(alternating_product(mats, 0, m, false));
        r.add("rho(B_a)^(1/m)", std::pow(rho(build_B_alpha(mats, alpha)), 1.0 / md));
        r.add("(rho(A_1^T A_2...A_m) rho(A_m A_{m-1}^T...A_1^T))^(a/2)", std::pow(rx * ry, alpha / 2.0));
        r.add("rho(A_m A_{m-1}^T...A_1^T)", ry);
        r.add("rho(A_1 A_2^T...A_m^T)", ry_fwd);
        r.chain({"||o_j A_j^(a)||", "rho(B_a)^(1/m)",
                 "(rho(A_1^T A_2...A_m) rho(A_m A_{m-1}^T...A_1^T))^(a/2)"});
        r.eq("rho(A_m A_{m-1}^T...A_1^T)", "rho(A_1 A_2^T...A_m^T)");
    } else {
        const double rz = rho(alternating_product(mats, 0, 2 * m, false));
        r.add("rho(C_a)^(1/2m)", std::pow(rho(build_C_alpha(mats, alpha)), 1.0 / (2.0 * md)));
        r.add("rho(A_1 A_2^T A_3...A_m^T)^(a/2)", std::pow(rz, alpha / 2.0));
        r.chain({"||o_j A_j^(a)||", "rho(C_a)^(1/2m)", "rho(A_1 A_2^T A_3...A_m^T)^(a/2)"});
    }
    return std::move(r).finish();
}

InequalityReport check_cor48(const NonNegativeMatrix& a1, const NonNegativeMatrix& a2,
                             const NonNegativeMatrix& a3, double alpha, const Tolerance& tol) {
    require_alpha_floor(alpha, 1.0 / 3.0, "cor48");
    if (a1.n() != a2.n() || a1.n() != a3.n()) throw DimensionError("cor48: dimension mismatch");
    const NonNegativeMatrix t1 = transpose(a1), t2 = transpose(a2), t3 = transpose(a3);
    const std::vector<NonNegativeMatrix> f1{t1, a2, t3, a1, t2, a3};
    const std::vector<NonNegativeMatrix> f2{t2, a3, t1, a2, t3, a1};
    const std::vector<NonNegativeMatrix> f3{t3, a1, t2, a3, t1, a2};
    const std::vector<NonNegativeMatrix> rhs{a1, t2, a3, t1, a2, t3};
    const std::vector<NonNegativeMatrix> factors{product(f1), product(f2), product(f3)};
    const std::vector<double> exps(3, alpha);
    const std::vector<NonNegativeMatrix> ops{a1, a2, a3};

    ReportBuilder r("cor48", tol);
    r.add("||A_1^(a) o A_2^(a) o A_3^(a)||", operator_norm(hadamard_mean(ops, exps), NormKind::L2));
    r.add("rho(o_i (A_i^T A_{i+1} A_{i+2}^T A_i A_{i+1}^T A_{i+2})^(a))^(1/6)",
          std::pow(rho(hadamard_mean(factors, exps)), 1.0 / 6.0));
    r.add("rho(A_1 A_2^T A_3 A_1^T A_2 A_3^T)^(a/2)", std::pow(rho(product(rhs)), alpha / 2.0));
    r.chain({"||A_1^(a) o A_2^(a) o A_3^(a)||",
             "rho(o_i (A_i^T A_{i+1} A_{i+2}^T A_i A_{i+1}^T A_{i+2})^(a))^(1/6)",
             "rho(A_1 A_2^T A_3 A_1^T A_2 A_3^T)^(a/2)"});
    return std::move(r).finish();
}

InequalityReport check_cor49_jordan(const NonNegativeMatrix& a, const NonNegativeMatrix& b,
                                    double alpha, const Tolerance& tol) {
    require_alpha_floor(alpha, 1.0 / 3.0, "cor49");
    if (a.n() != b.n()) throw DimensionError("cor49: dimension mismatch");
    const NonNegativeMatrix at = transpose(a), bt = transpose(b);
    const std::vector<NonNegativeMatrix> f1{at, bt, at, a, b, a};
    const std::vector<NonNegativeMatrix> f2{b, a, at, bt, at, a};
    const std::vector<NonNegativeMatrix> f3{at, a, b, a, at, bt};
    const std::vector<NonNegativeMatrix> factors{product(f1), product(f2), product(f3)};
    const std::vector<double> exps(3, alpha);
    const std::vector<NonNegativeMatrix> ops{a, bt, a};
    const NonNegativeMatrix aba = product(std::vector<NonNegativeMatrix>{a, b, a});

    ReportBuilder r("cor49", tol);
    r.add("||A^(a) o (B^T)^(a) o A^(a)||", operator_norm(hadamard_mean(ops, exps), NormKind::L2));
    r.add("rho((A^T B^T A^T A B A)^(a) o (B A A^T B^T A^T A)^(a) o (A^T A B A A^T B^T)^(a))^(1/6)",
          std::pow(rho(hadamard_mean(factors, exps)), 1.0 / 6.0));
    r.add("||ABA||^a", pw(operator_norm(aba, NormKind::L2), alpha));
    r.add("rho(ABA (ABA)^T)^(a/2)", pw(rho(matmul(aba, transpose(aba))), alpha / 2.0));
    r.chain({"||A^(a) o (B^T)^(a) o A^(a)||",
             "rho((A^T B^T A^T A B A)^(a) o (B A A^T B^T A^T A)^(a) o (A^T A B A A^T B^T)^(a))^(1/6)",
             "||ABA||^a"});
    r.eq("rho(ABA (ABA)^T)^(a/2)", "||ABA||^a");
    return std::move(r).finish();
}

InequalityReport run_counterexample(double alpha, bool corrupt) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ConfigError("counterexample: alpha must be positive");
    const NonNegativeMatrix a = NonNegativeMatrix::from_rows({{0.0, 1.0}, {corrupt ? 1.0 : 0.0, 1.0}});
    const NonNegativeMatrix b = NonNegativeMatrix::from_rows({{1.0, 1.0}, {0.0, 0.0}});
    const std::vector<NonNegativeMatrix> ops{a, b, a};
    const std::vector<double> exps(3, alpha);
    const NonNegativeMatrix aba = product(ops);

    ReportBuilder r("counterexample", Tolerance{0.0, 0.0});
    r.add("||A^(a) o B^(a) o A^(a)||", operator_norm(hadamard_mean(ops, exps), NormKind::L2));
    r.add("||A o B o A||", operator_norm(hadamard_product(hadamard_product(a, b), a), NormKind::L2));
    r.add("||ABA||^a", pw(operator_norm(aba, NormKind::L2), alpha));
    r.observe_leq("||A^(a) o B^(a) o A^(a)||", "||ABA||^a");
    InequalityReport out = std::move(r).finish();
    out.digest.n = 2;
    out.digest.m = 3;
    out.digest.params = {{"alpha", alpha}, {"corrupt", corrupt ? 1.0 : 0.0}};
    return out;
}

std::optional<NumradViolation> search_numrad_violation(const NumradSearchConfig& config) {
    if (config.m == 0 || config.n == 0) throw ConfigError("numrad search: n and m must be positive");
    if (!config.weights.empty() && config.weights.size() != config.m) {
        throw ConfigError("numrad search: weight count must equal m");
    }
    for (std::size_t t = 0; t < config.budget; ++t) {
        Rng rng(derive_seed(config.seed, stable_hash("numrad"), t));
        std::vector<double> weights = config.weights;
        if (weights.empty()) {
            weights = random_sum_one_weights(rng, config.m);
            const double scale = rng.uniform(config.sum_min, config.sum_max);
            for (auto& x : weights) x *= scale;
        }
        const WeightVector w(weights, WeightConstraint::SumAtLeastOne);
        std::vector<NonNegativeMatrix> mats;
        for (std::size_t j = 0; j < config.m; ++j) mats.push_back(random_matrix(rng, config.n, config.density));
        const CyclicTerms terms = cyclic_terms(mats, w);
        std::vector<double> pw_values;
        for (const auto& p : terms.ps) pw_values.push_back(numerical_radius(p));
        const double lhs = numerical_radius(terms.b_product);
        const double rhs = product_of_powers(pw_values, w.values());
        if (!config.tol.accepts(lhs, rhs)) {
            return NumradViolation{t, std::move(mats), std::move(weights), lhs, rhs};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Registry

std::size_t SuiteInfo::min_operators() const {
    switch (shape) {
        case SuiteShape::Pair: return 2;
        case SuiteShape::Triple: return 3;
        default: return 1;
    }
}

std::size_t SuiteInfo::max_operators() const {
    switch (shape) {
        case SuiteShape::Pair: return 2;
        case SuiteShape::Triple: return 3;
        default: return 0;
    }
}

double default_alpha(const SuiteInfo& suite, std::size_t m) {
    switch (suite.alpha) {
        case AlphaRule::None: return std::numeric_limits<double>::quiet_NaN();
        case AlphaRule::UnitInterval: return 0.5;
        case AlphaRule::AtLeastHalf: return 0.5;
        case AlphaRule::AtLeastReciprocalM: return 1.0 / static_cast<double>(m);
        case AlphaRule::AtLeastThird: return 1.0 / 3.0;
        case AlphaRule::WithBeta: return 0.5;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

namespace {

MatrixGrid single_row(std::span<const NonNegativeMatrix> mats) {
    return MatrixGrid{std::vector<NonNegativeMatrix>(mats.begin(), mats.end())};
}

const SuiteInfo& self(std::string_view name) { return find_suite(name); }

std::vector<SuiteInfo> build_registry() {
    using S = SuiteShape;
    using W = WeightNeed;
    using A = AlphaRule;
    using Span = std::span<const NonNegativeMatrix>;
    std::vector<SuiteInfo> v;
    v.push_back({"thm21", "product of Hadamard means vs Hadamard mean of products (entrywise, norm, rho, w)",
                 S::Grid, W::SumOne, A::None,
                 [](Span m, const SuiteParams& p, const Tolerance& t) {
                     return check_thm21(single_row(m), weights_or_throw(p, "thm21"), t);
                 },
                 &check_thm21});
    v.push_back({"thm23", "refined norm, rho and w chains through the mean of products",
                 S::Grid, W::SumOne, A::None,
                 [](Span m, const SuiteParams& p, const Tolerance& t) {
                     return check_thm23_refined(single_row(m), weights_or_throw(p, "thm23"), t);
                 },
                 &check_thm23_refined});
    v.push_back({"thm24", "entrywise, norm and rho chains with weights summing to at least 1",
                 S::Grid, W::SumAtLeastOne, A::None,
                 [](Span m, const SuiteParams& p, const Tolerance& t) {
                     return check_thm24_sum_ge1(single_row(m), weights_or_throw(p, "thm24"), t);
                 },
                 &check_thm24_sum_ge1});
    v.push_back({"thm31", "rho(B_1...B_m) <= rho(A_1...A_m)", S::Operators, W::SumOne, A::None,
                 [](Span m, const SuiteParams& p, const Tolerance& t) {
                     return check_thm31(m, weights_or_throw(p, "thm31"), t);
                 },
                 nullptr});
    v.push_back({"thm32", "rho, norm and w chains through o_j P_j^(a_j)", S::Operators, W::SumOne, A::None,
                 [](Span m, const SuiteParams& p, const Tolerance& t) {
                     return check_thm32(m, weights_or_throw(p, "thm32"), t);
                 },
                 nullptr});
    v.push_back({"cor33", "equal-weight cyclic chains", S::Operators, W::None, A::None,
                 [](Span m, const SuiteParams&, const Tolerance& t) { return check_cor33(m, t); }, nullptr});
    v.push_back({"cor35", "two-operator rho, norm and w chains", S::Pair, W::None, A::UnitInterval,
                 [](Span m, const SuiteParams& p, const Tolerance& t) {
                     require_count(m, 2, "cor35");
                     return check_cor35(m[0], m[1], alpha_or(p, self("cor35"), 2), t);
                 },
                 nullptr});
    v.push_back({"thm36", "cyclic chains with weights summing to at least 1", S::Operators,
                 W::SumAtLeastOne, A::None,
                 [](Span m, const SuiteParams& p, const Tolerance& t) {
                     return check_thm36(m, weights_or_throw(p, "thm36"), t);
                 },
                 nullptr});
    v.push_back({"thm41", "l2 chains through S_j = A_j^T A_j", S::Operators, W::SumOne, A::None,
                 [](Span m, const SuiteParams& p, const Tolerance& t) {
                     return check_thm41(m, weights_or_throw(p, "thm41"), t);
                 },
                 nullptr});
    v.push_back({"thm42", "l2 chain through S_j with weights summing to at least 1", S::Operators,
                 W::SumAtLeastOne, A::None,
                 [](Span m, const SuiteParams& p, const Tolerance& t) {
                     return check_thm42(m, weights_or_throw(p, "thm42"), t);
                 },
                 nullptr});
    v.push_back({"cor43", "two-operator l2 chains through A^T A and B^T B", S::Pair, W::None, A::WithBeta,
                 [](Span m, const SuiteParams& p, const Tolerance& t) {
                     require_count(m, 2, "cor43");
                     const double a = alpha_or(p, self("cor43"), 2);
                     const double b = p.beta ? *p.beta : 1.0 - a;
                     return check_cor43(m[0], m[1], a, b, t);
                 },
                 nullptr});
    v.push_back({"thm44", "l2 chains through A^T B and B^T A", S::Pair, W::None, A::AtLeastHalf,
                 [](Span m, const SuiteParams& p, const Tolerance& t) {
                     require_count(m, 2, "thm44");
                     return check_thm44(m[0], m[1], alpha_or(p, self("thm44"), 2), t);
                 },
                 nullptr});
    v.push_back({"thm4547", "alternating-product chains for m operators", S::Operators, W::None,
                 A::AtLeastReciprocalM,
                 [](Span m, const SuiteParams& p, const Tolerance& t) {
                     return check_thm45_47(m, alpha_or(p, self("thm4547"), m.size()), t);
                 },
                 nullptr});
    v.push_back({"cor48", "three-operator alternating chain", S::Triple, W::None, A::AtLeastThird,
                 [](Span m, const SuiteParams& p, const Tolerance& t) {
                     require_count(m, 3, "cor48");
                     return check_cor48(m[0], m[1], m[2], alpha_or(p, self("cor48"), 3), t);
                 },
                 nullptr});
    v.push_back({"cor49", "Jordan triple product lower bound", S::Pair, W::None, A::AtLeastThird,
                 [](Span m, const SuiteParams& p, const Tolerance& t) {
                     require_count(m, 2, "cor49");
                     return check_cor49_jordan(m[0], m[1], alpha_or(p, self("cor49"), 2), t);
                 },
                 nullptr});
    return v;
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() {
    static const std::vector<SuiteInfo> registry = build_registry();
    return registry;
}

const SuiteInfo& find_suite(std::string_view name) {
    for (const auto& s : suite_registry())
        if (s.name == name) return s;
    throw ConfigError("unknown suite '" + std::string(name) + "'");
}

}  // namespace hgm
