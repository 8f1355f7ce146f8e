#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "segrelab/scan.hpp"
#include "segrelab/series.hpp"

namespace segrelab {

enum class OutputFormat { json, csv, plain };

std::optional<OutputFormat> parse_format(std::string_view name);
std::string_view to_string(OutputFormat f);

/// CSV: header naming every input, value, sign, flag and extra column,
/// then one line per row. JSON: {"metadata", "criteria", "rows", "tables"}
/// with every number an exact string. Plain: tab-separated with the
/// summary first.
void write_report(const ScanReport& report, OutputFormat format, std::ostream& out);

/// One line: counterexample counts per criterion.
std::string scan_summary(const ScanReport& report);

/// Coefficients 0..order. JSON: [{"k": i, "value": "num/den"}, ...];
/// CSV: "k,value" lines; plain: comma-separated values on one line.
void write_series(const TruncatedSeries& series, OutputFormat format, std::ostream& out);

}  // namespace segrelab
