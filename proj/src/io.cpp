#include "hgm/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hgm/errors.hpp"

namespace hgm {

NonNegativeMatrix parse_matrix(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed matrix JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("data")) throw ParseError("matrix JSON needs a \"data\" array");
    const auto& data = doc["data"];
    if (!data.is_array() || data.empty()) throw ParseError("\"data\" must be a non-empty array of rows");
    const std::size_t n = data.size();
    if (doc.contains("n")) {
        const auto& jn = doc["n"];
        if (!jn.is_number_unsigned() || jn.get<std::size_t>() != n) {
            throw ParseError("\"n\" does not match the number of rows (" + std::to_string(n) + ")");
        }
    } else {
        throw ParseError("matrix JSON needs an integer \"n\"");
    }
    if (n > kMaxDimension) throw ParseError("matrix dimension exceeds " + std::to_string(kMaxDimension));

    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = data[i];
        if (!row.is_array() || row.size() != n) {
            throw ParseError("row " + std::to_string(i) + " has " +
                             (row.is_array() ? std::to_string(row.size()) : std::string("no")) +
                             " entries; the matrix must be " + std::to_string(n) + "x" + std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!row[j].is_number()) {
                throw ParseError("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is not a number");
            }
            const double v = row[j].get<double>();
            if (!(v >= 0.0) || !std::isfinite(v)) {
                throw ParseError("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                 ") is negative or not finite");
            }
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
        }
    }
    return NonNegativeMatrix(std::move(m));
}

NonNegativeMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_matrix(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string matrix_to_json(const NonNegativeMatrix& a) {
    std::string out = "{\"n\": " + std::to_string(a.n()) + ", \"data\": [";
    for (std::size_t i = 0; i < a.n(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < a.n(); ++j) {
            if (j) out += ", ";
            out += format_double(a(i, j));
        }
        out += "]";
    }
    return out + "]}\n";
}

void write_text(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path);
}

void write_matrix(const NonNegativeMatrix& a, const std::string& path) { write_text(matrix_to_json(a), path); }

ReportFormat parse_report_format(std::string_view s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    throw ConfigError("unknown report format '" + std::string(s) + "' (json, csv)");
}

std::string to_csv(const std::vector<SuiteRun>& runs) {
    std::string out = "suite,trial,left,right,pass,slack,left_value,right_value\n";
    for (const auto& run : runs) {
        for (std::size_t t = 0; t < run.trials.size(); ++t) {
            const auto& r = run.trials[t];
            for (const auto& v : r.verdicts) {
                out += run.suite + "," + std::to_string(t) + "," + v.left + "," + v.right + "," +
                       (v.pass ? "true" : "false") + "," + format_double(v.slack) + "," +
                       format_double(r.find(v.left).value_or(NAN)) + "," +
                       format_double(r.find(v.right).value_or(NAN)) + "\n";
            }
            if (r.error) out += run.suite + "," + std::to_string(t) + ",error,,false,,,\n";
        }
    }
    return out;
}

void write_report(const std::vector<SuiteRun>& runs, const std::string& path, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        write_text(to_csv(runs), path);
    } else if (runs.size() == 1) {
        write_text(to_json(runs.front()), path);
    } else {
        write_text(to_json(runs), path);
    }
}

}  // namespace hgm
