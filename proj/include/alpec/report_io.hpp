#pragma once

#include "alpec/metrics.hpp"

#include <filesystem>

namespace alpec {

enum class ReportFormat { json, csv };

ReportFormat report_format_from_string(std::string const& s);

/// JSON carries the full report including matched pairs; CSV emits one row
/// per subject plus a final aggregate row of column means, with numeric
/// fields at 6 decimal places and a header comment echoing t_opt and the
/// config. The report is consistency-checked before writing.
void write_report(Report const& report, ReportFormat format, std::filesystem::path const& path);

std::string report_to_json(Report const& report);
std::string report_to_csv(Report const& report);

/// Inverse of the JSON writer; counts and metrics round-trip exactly.
Report read_report(std::filesystem::path const& path);

} // namespace alpec
