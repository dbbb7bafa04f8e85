#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <jif/ledger.hpp>

namespace jif {

enum class FileKind { publications_csv, citations_csv, journal_json };

const char* file_kind_name(FileKind kind) noexcept;

// Parse failure with a location: a 1-based line number for CSV inputs, a
// field path (e.g. "citations[2].count") for the JSON document.
class ParseError : public Error {
public:
    ParseError(FileKind file_kind, std::string location, Errc kind, const std::string& message)
        : Error(kind, location + ": " + message),
          file_kind_(file_kind),
          location_(std::move(location)) {}

    FileKind file_kind() const noexcept { return file_kind_; }
    const std::string& location() const noexcept { return location_; }

private:
    FileKind file_kind_;
    std::string location_;
};

// Publications CSV: header exactly `year,articles`, then one
// `<integer>,<non-negative integer>` row per year. Rows come back in file
// order; duplicate and gap detection happen in build_ledger.
std::vector<PublicationRow> parse_publications_csv(std::string_view text);

// Citations CSV: header exactly `cite_year,pub_year,count`. Zero-count rows
// are legal and equivalent to omitting the pair.
std::vector<CitationRow> parse_citations_csv(std::string_view text);

// Single-document journal format:
//   {"journal": ..., "start_year": ..., "publications": [{"year", "articles"}, ...],
//    "citations": [{"cite_year", "pub_year", "count"}, ...]}
// Unknown fields anywhere are rejected. Feeds build_ledger, whose errors
// propagate unchanged.
CitationLedger parse_journal_json(std::string_view text);

// Assembles a ledger from the parsed CSV pair. The CSV files carry no
// journal name or start year, so the name comes from the caller and the
// start year is the earliest publication year listed.
CitationLedger ledger_from_csv(std::string journal_name,
                               const std::vector<PublicationRow>& publications,
                               const std::vector<CitationRow>& citations);

// Canonical serialization of the document format above: publications
// ascending by year, citations sorted by (cite_year, pub_year), zero cells
// omitted. Byte-deterministic for a given ledger; parse_journal_json of the
// output reproduces the ledger exactly.
std::string write_journal_json(const CitationLedger& ledger);

}  // namespace jif
