#include "hgm/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace hgm {

bool InequalityReport::passed() const {
    if (error) return false;
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const Verdict& v) { return v.pass || !v.asserted; });
}

std::optional<double> InequalityReport::find(const std::string& label) const {
    for (const auto& q : quantities)
        if (q.label == label) return q.value;
    return std::nullopt;
}

double InequalityReport::at(const std::string& label) const {
    if (auto v = find(label)) return *v;
    throw std::out_of_range("report " + suite_name + " has no quantity '" + label + "'");
}

ReportBuilder::ReportBuilder(std::string suite, Tolerance tol) {
    report_.suite_name = std::move(suite);
    report_.tolerance = tol;
}

double ReportBuilder::add(const std::string& label, double value) {
    for (const auto& q : report_.quantities)
        if (q.label == label) return q.value;
    report_.quantities.push_back({label, value});
    return value;
}

double ReportBuilder::value_of(const std::string& label) const {
    for (const auto& q : report_.quantities)
        if (q.label == label) return q.value;
    throw std::logic_error("ReportBuilder: unknown quantity '" + label + "'");
}

void ReportBuilder::compare(const std::string& left, const std::string& right, bool asserted) {
    const double l = value_of(left);
    const double r = value_of(right);
    report_.verdicts.push_back({left, right, report_.tolerance.accepts(l, r), r - l, asserted});
}

void ReportBuilder::leq(const std::string& left, const std::string& right) {
    compare(left, right, true);
}

void ReportBuilder::chain(const std::vector<std::string>& labels) {
    for (std::size_t i = 1; i < labels.size(); ++i) leq(labels[i - 1], labels[i]);
}

void ReportBuilder::eq(const std::string& left, const std::string& right) {
    leq(left, right);
    leq(right, left);
}

void ReportBuilder::observe_leq(const std::string& left, const std::string& right) {
    compare(left, right, false);
}

void ReportBuilder::entrywise(const std::string& left, const std::string& right,
                              const NonNegativeMatrix& a, const NonNegativeMatrix& b) {
    const EntrywiseComparison c = entrywise_leq(a, b, report_.tolerance.rel);
    report_.verdicts.push_back({left, right, c.holds, c.min_slack, true});
}

InequalityReport ReportBuilder::finish() && { return std::move(report_); }

std::size_t SuiteRun::pass_count() const {
    return static_cast<std::size_t>(
        std::count_if(trials.begin(), trials.end(), [](const auto& t) { return t.passed(); }));
}

std::size_t SuiteRun::fail_count() const { return trials.size() - pass_count(); }

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

void append_digest(std::string& out, const InstanceDigest& d) {
    out += "{\"seed\": " + std::to_string(d.seed);
    out += ", \"n\": " + std::to_string(d.n);
    out += ", \"m\": " + std::to_string(d.m);
    out += ", \"k\": " + std::to_string(d.k);
    out += ", \"density\": " + format_double(d.density);
    out += ", \"weights\": [";
    for (std::size_t i = 0; i < d.weights.size(); ++i) {
        if (i) out += ", ";
        out += format_double(d.weights[i]);
    }
    out += "]";
    for (const auto& [name, value] : d.params) out += ", " + quote(name) + ": " + format_double(value);
    out += "}";
}

void append_trial(std::string& out, const InequalityReport& r) {
    out += "    {\"digest\": ";
    append_digest(out, r.digest);
    out += ",\n     \"quantities\": [";
    for (std::size_t i = 0; i < r.quantities.size(); ++i) {
        if (i) out += ", ";
        out += "[" + quote(r.quantities[i].label) + ", " + format_double(r.quantities[i].value) + "]";
    }
    out += "],\n     \"verdicts\": [";
    for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
        const auto& v = r.verdicts[i];
        if (i) out += ", ";
        out += "[" + quote(v.left) + ", " + quote(v.right) + ", " + (v.pass ? "true" : "false") +
               ", " + format_double(v.slack) + "]";
    }
    out += "]";
    if (r.error) out += ",\n     \"error\": " + quote(*r.error);
    out += "}";
}

void append_run(std::string& out, const SuiteRun& run) {
    out += "{\"suite\": " + quote(run.suite) + ",\n  \"trials\": [\n";
    for (std::size_t i = 0; i < run.trials.size(); ++i) {
        append_trial(out, run.trials[i]);
        out += i + 1 < run.trials.size() ? ",\n" : "\n";
    }
    out += "  ],\n  \"summary\": {\"pass\": " + std::to_string(run.pass_count()) +
           ", \"fail\": " + std::to_string(run.fail_count()) + "}}";
}

}  // namespace

std::string to_json(const SuiteRun& run) {
    std::string out;
    append_run(out, run);
    out += "\n";
    return out;
}

std::string to_json(const std::vector<SuiteRun>& runs) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < runs.size(); ++i) {
        append_run(out, runs[i]);
        out += i + 1 < runs.size() ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

}  // namespace hgm
