#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgm/matrix.hpp"

namespace hgm {

/// Pass rule for one link: left <= right * (1 + rel) + abs.
struct Tolerance {
    double rel = 1e-7;
    double abs = 1e-12;

    bool accepts(double left, double right) const { return left <= right * (1.0 + rel) + abs; }
};

struct Quantity {
    std::string label;
    double value = 0.0;
};

struct Verdict {
    std::string left;
    std::string right;
    bool pass = true;
    /// right - left, before tolerance.
    double slack = 0.0;
    /// Unasserted verdicts are reported but never counted as failures
    /// (documented counterexamples, known-false analogues).
    bool asserted = true;
};

/// What a trial was run on; enough to regenerate it.
struct InstanceDigest {
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t k = 0;
    double density = 1.0;
    std::vector<double> weights;
    std::vector<std::pair<std::string, double>> params;
};

struct InequalityReport {
    std::string suite_name;
    std::vector<Quantity> quantities;
    std::vector<Verdict> verdicts;
    InstanceDigest digest;
    Tolerance tolerance;
    /// Set when the trial could not be evaluated (e.g. non-convergence).
    std::optional<std::string> error;

    bool passed() const;
    std::optional<double> find(const std::string& label) const;
    double at(const std::string& label) const;
};

/// Accumulates named quantities and comparisons for one checker run.
class ReportBuilder {
public:
    ReportBuilder(std::string suite, Tolerance tol);

    /// Records a quantity; re-adding an existing label overwrites nothing and
    /// returns the stored value.
    double add(const std::string& label, double value);

    /// Asserts quantity(left) <= quantity(right).
    void leq(const std::string& left, const std::string& right);
    /// Asserts a chain q0 <= q1 <= ... of already-added labels.
    void chain(const std::vector<std::string>& labels);
    /// Equality link, checked as two inequalities with the same tolerance.
    void eq(const std::string& left, const std::string& right);
    /// Reports left <= right without asserting it.
    void observe_leq(const std::string& left, const std::string& right);
    /// Entrywise a <= b, checked with entrywise_leq at the relative tolerance.
    void entrywise(const std::string& left, const std::string& right,
                   const NonNegativeMatrix& a, const NonNegativeMatrix& b);

    InequalityReport finish() &&;

private:
    double value_of(const std::string& label) const;
    void compare(const std::string& left, const std::string& right, bool asserted);

    InequalityReport report_;
};

/// Aggregate over trials of one suite.
struct SuiteRun {
    std::string suite;
    std::vector<InequalityReport> trials;

    std::size_t pass_count() const;
    std::size_t fail_count() const;
};

/// Report JSON:
/// {"suite": str, "trials": [{"digest": {...}, "quantities": [[label, value]...],
///  "verdicts": [[l, r, pass, slack]...]}], "summary": {"pass": int, "fail": int}}
/// Doubles are written with 17 significant digits; output is byte-stable.
std::string to_json(const SuiteRun& run);
/// A JSON array of suite objects.
std::string to_json(const std::vector<SuiteRun>& runs);

/// "%.17g", with non-finite values mapped to null.
std::string format_double(double v);

}  // namespace hgm
