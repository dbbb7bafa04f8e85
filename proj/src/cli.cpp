#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <jif/ingest.hpp>
#include <jif/report.hpp>

namespace jif {

namespace {

struct SourceOptions {
    std::string journal_path;
    std::string publications_path;
    std::string citations_path;
    std::string name = "journal";
};

void add_source_options(CLI::App* cmd, SourceOptions& src) {
    auto* journal = cmd->add_option("--journal", src.journal_path, "journal JSON document");
    auto* publications = cmd->add_option("--publications", src.publications_path,
                                         "publications CSV (year,articles)");
    auto* citations = cmd->add_option("--citations", src.citations_path,
                                      "citations CSV (cite_year,pub_year,count)");
    auto* name =
        cmd->add_option("--name", src.name, "journal name to use with the CSV pair");
    journal->excludes(publications)->excludes(citations)->excludes(name);
    publications->needs(citations);
    citations->needs(publications);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw std::runtime_error("cannot read file: " + path);
    return buffer.str();
}

const std::string& source_path(const SourceOptions& src, FileKind kind) {
    switch (kind) {
        case FileKind::publications_csv: return src.publications_path;
        case FileKind::citations_csv: return src.citations_path;
        case FileKind::journal_json: return src.journal_path;
    }
    return src.journal_path;
}

CitationLedger load_ledger(const SourceOptions& src) {
    if (!src.journal_path.empty()) return parse_journal_json(read_file(src.journal_path));
    return ledger_from_csv(src.name, parse_publications_csv(read_file(src.publications_path)),
                           parse_citations_csv(read_file(src.citations_path)));
}

// Any data failure exits 1 with the offending file named when known.
template <typename Body>
int with_diagnostics(const SourceOptions& src, Body&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        std::cerr << source_path(src, e.file_kind()) << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int require_source(const SourceOptions& src) {
    if (src.journal_path.empty() && src.publications_path.empty()) {
        std::cerr << "jif: provide --journal, or --publications together with --citations\n";
        return 2;
    }
    return 0;
}

int run_compute(const SourceOptions& src, Year year, const std::string& method_arg,
                const std::string& format_arg, int precision) {
    return with_diagnostics(src, [&] {
        const CitationLedger ledger = load_ledger(src);
        YearReport report;
        if (method_arg == "all") {
            report = year_report(ledger, year, precision);
        } else {
            const Method method = *parse_method(method_arg);
            ImpactFactor value{};
            try {
                value = compute(ledger, method, year);
            } catch (const Error& e) {
                if (e.kind() == Errc::undefined_denominator) {
                    std::cerr << "undefined: denominator is zero\n";
                    return 3;
                }
                throw;
            }
            report.journal_name = ledger.journal_name();
            report.target_year = year;
            report.precision = precision;
            report.rows.push_back({method, value, as_decimal(value, precision)});
        }
        std::cout << render_year_report(report, *parse_output_format(format_arg));
        return 0;
    });
}

int run_series(const SourceOptions& src, const std::string& method_arg, Year from, Year to,
               const std::string& format_arg, int precision) {
    return with_diagnostics(src, [&] {
        const CitationLedger ledger = load_ledger(src);
        const TimeSeries series = time_series(ledger, *parse_method(method_arg), from, to);
        std::cout << render_time_series(series, *parse_output_format(format_arg), precision);
        return 0;
    });
}

int run_validate(const SourceOptions& src) {
    return with_diagnostics(src, [&] {
        const CitationLedger ledger = load_ledger(src);
        std::cout << "ok: " << ledger.journal_name() << ": years " << ledger.start_year() << "-"
                  << ledger.last_year() << ", articles " << ledger.total_articles()
                  << ", citations " << ledger.total_citations() << "\n";
        return 0;
    });
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Exact impact-factor reports over a journal's publication and citation history"};
    app.name("jif");
    app.require_subcommand(1);

    const std::vector<std::string> method_names{"garfield", "improved", "extended", "total"};
    std::vector<std::string> method_or_all = method_names;
    method_or_all.insert(method_or_all.begin(), "all");
    const std::vector<std::string> format_names{"table", "json", "csv"};

    SourceOptions compute_src;
    Year compute_year = 0;
    std::string compute_method = "all";
    std::string compute_format = "table";
    int compute_precision = 3;
    auto* compute_cmd = app.add_subcommand("compute", "impact factors for one target year");
    add_source_options(compute_cmd, compute_src);
    compute_cmd->add_option("--year", compute_year, "target year")->required();
    compute_cmd->add_option("--method", compute_method, "method, or 'all' (default)")
        ->check(CLI::IsMember(method_or_all));
    compute_cmd->add_option("--format", compute_format, "output format (default table)")
        ->check(CLI::IsMember(format_names));
    compute_cmd->add_option("--precision", compute_precision, "decimal digits (default 3)")
        ->check(CLI::Range(0, 12));

    SourceOptions series_src;
    std::string series_method;
    Year series_from = 0;
    Year series_to = 0;
    std::string series_format = "table";
    int series_precision = 3;
    auto* series_cmd = app.add_subcommand("series", "one method across a year range");
    add_source_options(series_cmd, series_src);
    series_cmd->add_option("--method", series_method, "method")
        ->required()
        ->check(CLI::IsMember(method_names));
    series_cmd->add_option("--from", series_from, "first year")->required();
    series_cmd->add_option("--to", series_to, "last year")->required();
    series_cmd->add_option("--format", series_format, "output format (default table)")
        ->check(CLI::IsMember(format_names));
    series_cmd->add_option("--precision", series_precision, "decimal digits (default 3)")
        ->check(CLI::Range(0, 12));

    SourceOptions validate_src;
    auto* validate_cmd = app.add_subcommand("validate", "check input files and summarize");
    add_source_options(validate_cmd, validate_src);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (compute_cmd->parsed()) {
        if (int code = require_source(compute_src)) return code;
        return run_compute(compute_src, compute_year, compute_method, compute_format,
                           compute_precision);
    }
    if (series_cmd->parsed()) {
        if (int code = require_source(series_src)) return code;
        return run_series(series_src, series_method, series_from, series_to, series_format,
                          series_precision);
    }
    if (int code = require_source(validate_src)) return code;
    return run_validate(validate_src);
}

}  // namespace jif
