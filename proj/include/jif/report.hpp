#pragma once

#include <optional>
#include <string>
#include <vector>

#include <jif/ledger.hpp>
#include <jif/metrics.hpp>

namespace jif {

enum class OutputFormat { table, json, csv };

const char* output_format_name(OutputFormat format) noexcept;
std::optional<OutputFormat> parse_output_format(std::string_view name);

struct ReportRow {
    Method method;
    std::optional<ImpactFactor> value;
    std::string decimal;  // rendered value, or the literal "undefined"

    bool operator==(const ReportRow&) const = default;
};

// Every requested method at one target year, rows in accuracy order
// (total, extended, improved, garfield).
struct YearReport {
    std::string journal_name;
    Year target_year = 0;
    int precision = 3;
    std::vector<ReportRow> rows;
};

struct SeriesPoint {
    Year year;
    std::optional<ImpactFactor> value;

    bool operator==(const SeriesPoint&) const = default;
};

// One method evaluated over a contiguous year range; undefined years are
// carried as points, never dropped.
struct TimeSeries {
    std::string journal_name;
    Method method = Method::total;
    std::vector<SeriesPoint> points;
};

// All four methods at y2 with rendered decimals. Throws OutOfRange and
// PrecisionOutOfRange.
YearReport year_report(const CitationLedger& ledger, Year y2, int precision);

// `method` at every year of [from, to]. Throws EmptyRange when from > to,
// OutOfRange when either endpoint leaves the ledger span.
TimeSeries time_series(const CitationLedger& ledger, Method method, Year from, Year to);

std::string render_year_report(const YearReport& report, OutputFormat format);
std::string render_time_series(const TimeSeries& series, OutputFormat format, int precision);

// Full command-line entrypoint (compute / series / validate). Returns the
// process exit code: 0 success, 1 data or validation error, 2 usage error,
// 3 requested single metric undefined.
int run_cli(int argc, const char* const* argv);

}  // namespace jif
