#include <jif/ingest.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <optional>

#include <json.hpp>

namespace jif {

const char* file_kind_name(FileKind kind) noexcept {
    switch (kind) {
        case FileKind::publications_csv: return "publications-csv";
        case FileKind::citations_csv: return "citations-csv";
        case FileKind::journal_json: return "journal-json";
    }
    return "?";
}

namespace {

constexpr std::string_view kPublicationsHeader = "year,articles";
constexpr std::string_view kCitationsHeader = "cite_year,pub_year,count";

// Lines split on '\n'; one trailing '\r' per line is tolerated so CRLF
// files read the same. The empty fragment after a final newline is dropped.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            return fields;
        }
        fields.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

// Strict integer: the whole field must be consumed, no spaces, no '+'.
std::optional<std::int64_t> parse_int64(std::string_view field) {
    std::int64_t value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || field.empty()) return std::nullopt;
    return value;
}

std::string line_location(std::size_t index) { return "line " + std::to_string(index + 1); }

void check_header(FileKind kind, const std::vector<std::string_view>& lines,
                  std::string_view expected) {
    if (lines.empty() || lines[0] != expected)
        throw ParseError(kind, "line 1", Errc::missing_header,
                         "expected header '" + std::string(expected) + "'");
}

Year parse_year_field(FileKind kind, std::size_t line_index, std::string_view field,
                      const char* label) {
    auto value = parse_int64(field);
    if (!value || *value < std::numeric_limits<Year>::min() ||
        *value > std::numeric_limits<Year>::max())
        throw ParseError(kind, line_location(line_index), Errc::malformed_row,
                         std::string(label) + " '" + std::string(field) + "' is not a year");
    return static_cast<Year>(*value);
}

Count parse_count_field(FileKind kind, std::size_t line_index, std::string_view field,
                        const char* label) {
    auto value = parse_int64(field);
    if (!value)
        throw ParseError(kind, line_location(line_index), Errc::non_integer_count,
                         std::string(label) + " '" + std::string(field) + "' is not an integer");
    if (*value < 0)
        throw ParseError(kind, line_location(line_index), Errc::negative_count,
                         std::string(label) + " is negative");
    return *value;
}

}  // namespace

std::vector<PublicationRow> parse_publications_csv(std::string_view text) {
    const auto lines = split_lines(text);
    check_header(FileKind::publications_csv, lines, kPublicationsHeader);

    std::vector<PublicationRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split_fields(lines[i]);
        if (fields.size() != 2)
            throw ParseError(FileKind::publications_csv, line_location(i), Errc::malformed_row,
                             "expected '<year>,<articles>'");
        PublicationRow row;
        row.year = parse_year_field(FileKind::publications_csv, i, fields[0], "year");
        row.articles = parse_count_field(FileKind::publications_csv, i, fields[1], "article count");
        rows.push_back(row);
    }
    return rows;
}

std::vector<CitationRow> parse_citations_csv(std::string_view text) {
    const auto lines = split_lines(text);
    check_header(FileKind::citations_csv, lines, kCitationsHeader);

    std::vector<CitationRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split_fields(lines[i]);
        if (fields.size() != 3)
            throw ParseError(FileKind::citations_csv, line_location(i), Errc::malformed_row,
                             "expected '<cite_year>,<pub_year>,<count>'");
        CitationRow row;
        row.cite_year = parse_year_field(FileKind::citations_csv, i, fields[0], "cite_year");
        row.pub_year = parse_year_field(FileKind::citations_csv, i, fields[1], "pub_year");
        row.count = parse_count_field(FileKind::citations_csv, i, fields[2], "count");
        rows.push_back(row);
    }
    return rows;
}

namespace {

using nlohmann::json;

constexpr FileKind kJson = FileKind::journal_json;

void reject_unknown_fields(const json& object, std::string_view path,
                           std::initializer_list<std::string_view> allowed) {
    for (const auto& item : object.items()) {
        bool known = false;
        for (std::string_view name : allowed)
            if (item.key() == name) known = true;
        if (!known)
            throw ParseError(kJson, std::string(path) + (path.empty() ? "" : ".") + item.key(),
                             Errc::unknown_field, "unknown field");
    }
}

const json& require_field(const json& object, std::string_view path, const char* name) {
    auto it = object.find(name);
    if (it == object.end())
        throw ParseError(kJson, std::string(path), Errc::malformed_row,
                         "missing field '" + std::string(name) + "'");
    return *it;
}

std::int64_t require_int64(const json& value, const std::string& path, Errc on_bad,
                           const char* expected) {
    if (!value.is_number_integer() ||
        (value.is_number_unsigned() &&
         value.get<std::uint64_t>() >
             static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())))
        throw ParseError(kJson, path, on_bad, std::string("expected ") + expected);
    return value.get<std::int64_t>();
}

Year require_year(const json& value, const std::string& path) {
    const std::int64_t wide = require_int64(value, path, Errc::malformed_row, "an integer year");
    if (wide < std::numeric_limits<Year>::min() || wide > std::numeric_limits<Year>::max())
        throw ParseError(kJson, path, Errc::malformed_row, "year out of representable range");
    return static_cast<Year>(wide);
}

Count require_count(const json& value, const std::string& path) {
    const std::int64_t count =
        require_int64(value, path, Errc::non_integer_count, "a non-negative integer");
    if (count < 0) throw ParseError(kJson, path, Errc::negative_count, "count is negative");
    return count;
}

const json& require_object(const json& value, const std::string& path) {
    if (!value.is_object())
        throw ParseError(kJson, path, Errc::malformed_row, "expected an object");
    return value;
}

const json& require_array(const json& value, const std::string& path) {
    if (!value.is_array()) throw ParseError(kJson, path, Errc::malformed_row, "expected an array");
    return value;
}

}  // namespace

CitationLedger parse_journal_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(kJson, "byte " + std::to_string(e.byte), Errc::malformed_row, e.what());
    }
    require_object(doc, "$");
    reject_unknown_fields(doc, "", {"journal", "start_year", "publications", "citations"});

    const json& journal = require_field(doc, "$", "journal");
    if (!journal.is_string())
        throw ParseError(kJson, "journal", Errc::malformed_row, "expected a string");
    const Year start_year = require_year(require_field(doc, "$", "start_year"), "start_year");

    std::vector<PublicationRow> publications;
    const json& pubs = require_array(require_field(doc, "$", "publications"), "publications");
    for (std::size_t i = 0; i < pubs.size(); ++i) {
        const std::string path = "publications[" + std::to_string(i) + "]";
        const json& entry = require_object(pubs[i], path);
        reject_unknown_fields(entry, path, {"year", "articles"});
        publications.push_back({require_year(require_field(entry, path, "year"), path + ".year"),
                                require_count(require_field(entry, path, "articles"),
                                              path + ".articles")});
    }

    std::vector<CitationRow> citations;
    const json& cites = require_array(require_field(doc, "$", "citations"), "citations");
    for (std::size_t i = 0; i < cites.size(); ++i) {
        const std::string path = "citations[" + std::to_string(i) + "]";
        const json& entry = require_object(cites[i], path);
        reject_unknown_fields(entry, path, {"cite_year", "pub_year", "count"});
        citations.push_back(
            {require_year(require_field(entry, path, "cite_year"), path + ".cite_year"),
             require_year(require_field(entry, path, "pub_year"), path + ".pub_year"),
             require_count(require_field(entry, path, "count"), path + ".count")});
    }

    return build_ledger(journal.get<std::string>(), start_year, publications, citations);
}

CitationLedger ledger_from_csv(std::string journal_name,
                               const std::vector<PublicationRow>& publications,
                               const std::vector<CitationRow>& citations) {
    if (publications.empty())
        throw Error(Errc::publication_gap, "publications file lists no years");
    Year start_year = publications.front().year;
    for (const PublicationRow& row : publications) start_year = std::min(start_year, row.year);
    return build_ledger(std::move(journal_name), start_year, publications, citations);
}

std::string write_journal_json(const CitationLedger& ledger) {
    nlohmann::ordered_json doc;
    doc["journal"] = ledger.journal_name();
    doc["start_year"] = ledger.start_year();

    auto publications = nlohmann::ordered_json::array();
    for (const PublicationRow& row : ledger.publication_rows()) {
        nlohmann::ordered_json entry;
        entry["year"] = row.year;
        entry["articles"] = row.articles;
        publications.push_back(std::move(entry));
    }
    doc["publications"] = std::move(publications);

    auto citations = nlohmann::ordered_json::array();
    for (const CitationRow& row : ledger.citation_rows()) {
        nlohmann::ordered_json entry;
        entry["cite_year"] = row.cite_year;
        entry["pub_year"] = row.pub_year;
        entry["count"] = row.count;
        citations.push_back(std::move(entry));
    }
    doc["citations"] = std::move(citations);

    return doc.dump(2) + "\n";
}

}  // namespace jif
