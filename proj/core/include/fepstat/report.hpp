#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fepstat/accuracy.hpp"
#include "fepstat/interval.hpp"
#include "fepstat/mc.hpp"
#include "fepstat/moments.hpp"
#include "fepstat/normality.hpp"

namespace fepstat {

enum class ReportFormat : std::uint8_t { Table, Csv, Json };

/// "table" | "csv" | "json"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(const std::string& s);

/// Display options.  digits controls significant digits in the aligned
/// table only; CSV and JSON always carry full precision, so changing
/// digits never changes machine-readable output.
struct ReportOptions {
    int digits = 2;
    ReportFormat format = ReportFormat::Table;
};

/// Shortest representation that parses back to exactly the same double.
std::string format_full(double x);

/// %.*g display formatting.
std::string format_sig(double x, int digits);

/// One row of an interval report; an absent interval means the method
/// was inapplicable and `note` says why.  Rows from clamped or
/// inapplicable computations always carry a bracketed marker token in
/// the rendered output.
struct ReportRow {
    std::string section;
    std::string label;
    std::optional<ConfidenceInterval> ci;
    std::string note;
};

struct IntervalReport {
    std::string title;
    std::vector<std::pair<std::string, std::string>> context;  ///< echoed facts
    std::vector<ReportRow> rows;
};

std::string render(const IntervalReport& rep, const ReportOptions& opts);

/// Jarque-Bera report: moments, statistic, p-value (displayed as a
/// percentage), and the accept/reject line at the given threshold.
std::string render_jb(const JarqueBeraResult& r, const std::string& label,
                      double threshold, const ReportOptions& opts);

/// Coverage result as an aligned table / full-precision CSV / JSON.
std::string render_coverage(const CoverageReport& rep, const ReportOptions& opts);
std::string coverage_csv(const CoverageReport& rep);

/// (theoretical standard-normal quantile, ordered sample value) pairs at
/// plotting positions (i - 0.5)/n, as CSV with a header; needs n >= 2.
std::string qq_pairs_csv(const Sample& s, const Accuracy& acc = {});

}  // namespace fepstat
