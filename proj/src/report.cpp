#include <jif/report.hpp>

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace jif {

const char* output_format_name(OutputFormat format) noexcept {
    switch (format) {
        case OutputFormat::table: return "table";
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
    }
    return "?";
}

std::optional<OutputFormat> parse_output_format(std::string_view name) {
    for (OutputFormat f : {OutputFormat::table, OutputFormat::json, OutputFormat::csv})
        if (name == output_format_name(f)) return f;
    return std::nullopt;
}

namespace {

std::string fraction_text(const ImpactFactor& value) {
    return std::to_string(value.numerator) + "/" + std::to_string(value.denominator);
}

std::string padded(std::string text, std::size_t width) {
    if (text.size() < width) text.append(width - text.size(), ' ');
    return text;
}

constexpr const char* kUndefined = "undefined";

}  // namespace

YearReport year_report(const CitationLedger& ledger, Year y2, int precision) {
    if (precision < 0 || precision > 12)
        throw Error(Errc::precision_out_of_range,
                    "precision " + std::to_string(precision) + " outside [0, 12]");
    YearReport report;
    report.journal_name = ledger.journal_name();
    report.target_year = y2;
    report.precision = precision;
    for (const MethodResult& result : compute_all(ledger, y2)) {
        ReportRow row{result.method, result.value,
                      result.value ? as_decimal(*result.value, precision) : kUndefined};
        report.rows.push_back(std::move(row));
    }
    return report;
}

TimeSeries time_series(const CitationLedger& ledger, Method method, Year from, Year to) {
    if (from > to)
        throw Error(Errc::empty_range, "series range [" + std::to_string(from) + ", " +
                                           std::to_string(to) + "] is empty");
    if (from < ledger.start_year() || to > ledger.last_year())
        throw Error(Errc::out_of_range, "series range [" + std::to_string(from) + ", " +
                                            std::to_string(to) + "] outside ledger years [" +
                                            std::to_string(ledger.start_year()) + ", " +
                                            std::to_string(ledger.last_year()) + "]");
    TimeSeries series;
    series.journal_name = ledger.journal_name();
    series.method = method;
    for (Year y = from; y <= to; ++y) series.points.push_back({y, try_compute(ledger, method, y)});
    return series;
}

namespace {

std::string year_report_table(const YearReport& report) {
    std::size_t exact_width = 5;  // "exact"
    for (const ReportRow& row : report.rows)
        if (row.value) exact_width = std::max(exact_width, fraction_text(*row.value).size());

    std::ostringstream out;
    out << "journal: " << report.journal_name << "\n";
    out << "year:    " << report.target_year << "\n\n";
    out << padded("method", 10) << padded("exact", exact_width + 2) << "value\n";
    for (const ReportRow& row : report.rows) {
        out << padded(method_name(row.method), 10)
            << padded(row.value ? fraction_text(*row.value) : "-", exact_width + 2) << row.decimal
            << "\n";
    }
    return out.str();
}

std::string year_report_json(const YearReport& report) {
    nlohmann::ordered_json doc;
    doc["journal"] = report.journal_name;
    doc["year"] = report.target_year;
    auto rows = nlohmann::ordered_json::array();
    for (const ReportRow& row : report.rows) {
        nlohmann::ordered_json entry;
        entry["method"] = method_name(row.method);
        if (row.value) {
            entry["numerator"] = row.value->numerator;
            entry["denominator"] = row.value->denominator;
        } else {
            entry["undefined"] = true;
        }
        entry["decimal"] = row.decimal;
        rows.push_back(std::move(entry));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string year_report_csv(const YearReport& report) {
    std::string out = "method,numerator,denominator,decimal\n";
    for (const ReportRow& row : report.rows) {
        out += method_name(row.method);
        if (row.value)
            out += "," + std::to_string(row.value->numerator) + "," +
                   std::to_string(row.value->denominator);
        else
            out += ",,";
        out += "," + row.decimal + "\n";
    }
    return out;
}

std::string time_series_table(const TimeSeries& series, int precision) {
    std::size_t exact_width = 5;
    for (const SeriesPoint& point : series.points)
        if (point.value) exact_width = std::max(exact_width, fraction_text(*point.value).size());

    std::ostringstream out;
    out << "journal: " << series.journal_name << "\n";
    out << "method:  " << method_name(series.method) << "\n\n";
    out << padded("year", 6) << padded("exact", exact_width + 2) << "value\n";
    for (const SeriesPoint& point : series.points) {
        out << padded(std::to_string(point.year), 6)
            << padded(point.value ? fraction_text(*point.value) : "-", exact_width + 2)
            << (point.value ? as_decimal(*point.value, precision) : kUndefined) << "\n";
    }
    return out.str();
}

std::string time_series_json(const TimeSeries& series, int precision) {
    nlohmann::ordered_json doc;
    doc["journal"] = series.journal_name;
    doc["method"] = method_name(series.method);
    auto points = nlohmann::ordered_json::array();
    for (const SeriesPoint& point : series.points) {
        nlohmann::ordered_json entry;
        entry["year"] = point.year;
        if (point.value) {
            entry["numerator"] = point.value->numerator;
            entry["denominator"] = point.value->denominator;
            entry["decimal"] = as_decimal(*point.value, precision);
        } else {
            entry["undefined"] = true;
            entry["decimal"] = kUndefined;
        }
        points.push_back(std::move(entry));
    }
    doc["points"] = std::move(points);
    return doc.dump(2) + "\n";
}

std::string time_series_csv(const TimeSeries& series, int precision) {
    std::string out = "year,numerator,denominator,decimal\n";
    for (const SeriesPoint& point : series.points) {
        out += std::to_string(point.year);
        if (point.value)
            out += "," + std::to_string(point.value->numerator) + "," +
                   std::to_string(point.value->denominator) + "," +
                   as_decimal(*point.value, precision);
        else
            out += ",,," + std::string(kUndefined);
        out += "\n";
    }
    return out;
}

}  // namespace

std::string render_year_report(const YearReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::table: return year_report_table(report);
        case OutputFormat::json: return year_report_json(report);
        case OutputFormat::csv: return year_report_csv(report);
    }
    return {};
}

std::string render_time_series(const TimeSeries& series, OutputFormat format, int precision) {
    switch (format) {
        case OutputFormat::table: return time_series_table(series, precision);
        case OutputFormat::json: return time_series_json(series, precision);
        case OutputFormat::csv: return time_series_csv(series, precision);
    }
    return {};
}

}  // namespace jif
