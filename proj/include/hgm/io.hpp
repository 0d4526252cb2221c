#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hgm/matrix.hpp"
#include "hgm/report.hpp"

namespace hgm {

/// Matrix file format: {"n": int, "data": [[row], [row], ...]}.
/// Throws ParseError on malformed JSON, a missing or inconsistent "n",
/// non-square data, or negative / non-numeric entries.
NonNegativeMatrix parse_matrix(std::string_view text);
NonNegativeMatrix load_matrix(const std::string& path);

/// Same format; doubles are written with 17 significant digits, so loading
/// the result reproduces the matrix exactly.
std::string matrix_to_json(const NonNegativeMatrix& a);
void write_matrix(const NonNegativeMatrix& a, const std::string& path);

enum class ReportFormat { Json, Csv };

/// "json" or "csv"; anything else is a ConfigError.
ReportFormat parse_report_format(std::string_view s);

/// One line per verdict: suite,trial,left,right,pass,slack,left_value,right_value.
std::string to_csv(const std::vector<SuiteRun>& runs);

/// Writes `runs` to `path` (a single run is written as an object, several as
/// an array). Throws std::runtime_error when the file cannot be written.
void write_report(const std::vector<SuiteRun>& runs, const std::string& path, ReportFormat format);
void write_text(const std::string& text, const std::string& path);

}  // namespace hgm
