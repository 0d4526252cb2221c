#include "hgm/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "hgm/errors.hpp"

namespace hgm {

double KernelSpec::operator()(double x, double y) const {
    switch (family) {
        case KernelFamily::Gauss: return std::exp(-param * (x - y) * (x - y));
        case KernelFamily::Rational: return 1.0 / (param + x + y);
        case KernelFamily::Bilinear: return x * y;
        case KernelFamily::Constant: return param;
    }
    return 0.0;
}

std::string KernelSpec::name() const {
    switch (family) {
        case KernelFamily::Gauss: return "gauss:" + format_double(param);
        case KernelFamily::Rational: return "rational:" + format_double(param);
        case KernelFamily::Bilinear: return "bilinear";
        case KernelFamily::Constant: return "constant:" + format_double(param);
    }
    return {};
}

KernelSpec KernelSpec::parse(std::string_view text, std::size_t grid_n) {
    KernelSpec k;
    k.grid_n = grid_n;
    const auto colon = text.find(':');
    const std::string_view family = text.substr(0, colon);
    if (family == "gauss") k.family = KernelFamily::Gauss;
    else if (family == "rational") k.family = KernelFamily::Rational;
    else if (family == "bilinear") k.family = KernelFamily::Bilinear;
    else if (family == "constant") k.family = KernelFamily::Constant;
    else throw ConfigError("unknown kernel '" + std::string(family) + "' (gauss, rational, bilinear, constant)");

    if (colon != std::string_view::npos) {
        if (k.family == KernelFamily::Bilinear) throw ConfigError("bilinear kernel takes no parameter");
        const std::string p(text.substr(colon + 1));
        char* end = nullptr;
        k.param = std::strtod(p.c_str(), &end);
        if (p.empty() || *end != '\0' || !std::isfinite(k.param)) {
            throw ConfigError("bad kernel parameter '" + p + "'");
        }
    }
    const bool ok = k.family == KernelFamily::Rational ? k.param > 0.0 : k.param >= 0.0;
    if (!ok) throw ConfigError("kernel parameter out of range in '" + std::string(text) + "'");
    return k;
}

std::vector<double> midpoint_nodes(std::size_t n) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    return x;
}

NonNegativeMatrix discretize(const KernelSpec& k) {
    if (k.grid_n < 2) throw ConfigError("grid_n must be at least 2");
    if (k.grid_n > kMaxDimension) throw ConfigError("grid_n exceeds the maximum dimension");
    const std::size_t n = k.grid_n;
    const double h = 1.0 / static_cast<double>(n);
    const auto x = midpoint_nodes(n);
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = k(x[i], x[j]);
            if (!(v >= 0.0) || !std::isfinite(v)) {
                throw std::invalid_argument("kernel " + k.name() + " is negative or undefined at a node");
            }
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v * h;
        }
    }
    return NonNegativeMatrix(std::move(m));
}

bool RefinementResult::all_passed() const {
    for (const auto& l : levels)
        if (!l.report.passed()) return false;
    return true;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string RefinementResult::to_csv() const {
    std::string out = "grid_n";
    if (levels.empty()) return out + "\n";
    for (const auto& q : levels.front().report.quantities) out += "," + csv_field(q.label);
    out += "\n";
    for (const auto& l : levels) {
        out += std::to_string(l.grid_n);
        for (const auto& q : l.report.quantities) out += "," + format_double(q.value);
        out += "\n";
    }
    return out;
}

SuiteRun RefinementResult::as_suite_run() const {
    SuiteRun run{suite, {}};
    for (const auto& l : levels) run.trials.push_back(l.report);
    return run;
}

RefinementResult refine_and_check(const std::vector<KernelSpec>& kernels, std::string_view suite_name,
                                  const std::vector<std::size_t>& grids, const RefineOptions& options) {
    const SuiteInfo& suite = find_suite(suite_name);
    const std::size_t m = kernels.size();
    if (m < suite.min_operators() || (suite.max_operators() != 0 && m > suite.max_operators())) {
        throw ConfigError(std::string(suite.name) + " cannot take " + std::to_string(m) + " kernels");
    }
    if (grids.empty()) throw ConfigError("no grid sizes given");

    SuiteParams params;
    if (suite.weights != WeightNeed::None) {
        params.weights = WeightVector(std::vector<double>(m, 1.0 / static_cast<double>(m)),
                                      suite.weights == WeightNeed::SumOne ? WeightConstraint::SumOne
                                                                          : WeightConstraint::SumAtLeastOne);
    }
    params.alpha = options.alpha;
    params.beta = options.beta;

    RefinementResult result;
    result.suite = std::string(suite.name);
    for (const auto& k : kernels) result.kernels.push_back(k.name());

    for (std::size_t n : grids) {
        std::vector<NonNegativeMatrix> mats;
        for (KernelSpec k : kernels) {
            k.grid_n = n;
            mats.push_back(discretize(k));
        }
        InequalityReport r = suite.evaluate(mats, params, options.tol);
        r.digest.n = n;
        r.digest.m = m;
        r.digest.k = 1;
        if (params.weights) {
            const auto w = params.weights->values();
            r.digest.weights.assign(w.begin(), w.end());
        }
        r.digest.params.emplace_back("grid_n", static_cast<double>(n));
        if (suite.alpha != AlphaRule::None)
            r.digest.params.emplace_back("alpha", params.alpha.value_or(default_alpha(suite, m)));
        if (params.beta) r.digest.params.emplace_back("beta", *params.beta);
        result.levels.push_back({n, std::move(r)});
    }
    return result;
}

std::vector<TrendViolation> convergence_trend(const RefinementResult& r, double factor, double floor) {
    std::vector<TrendViolation> out;
    // Only the two finest steps: at coarse grids the argmax row or column of
    // the l1/linf norms can still jump between nodes.
    if (r.levels.size() >= 3) {
        const std::size_t l = r.levels.size() - 1;
        const auto& coarse = r.levels[l - 2].report;
        const auto& mid = r.levels[l - 1].report;
        const auto& fine = r.levels[l].report;
        for (const auto& q : fine.quantities) {
            const auto qc = coarse.find(q.label);
            const auto qm = mid.find(q.label);
            if (!qc || !qm) continue;
            const double dc = std::fabs(*qm - *qc);
            const double df = std::fabs(q.value - *qm);
            if (!(df <= factor * dc + floor)) out.push_back({q.label, dc, df});
        }
    }
    return out;
}

}  // namespace hgm
