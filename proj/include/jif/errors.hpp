#pragma once

#include <stdexcept>
#include <string>

namespace jif {

// Every failure the library reports, shared across ledger construction,
// metric evaluation, ingestion and reporting.
enum class Errc {
    duplicate_publication_year,
    publication_gap,
    duplicate_citation_pair,
    future_publication,
    out_of_range,
    negative_count,
    undefined_denominator,
    precision_out_of_range,
    empty_range,
    missing_header,
    malformed_row,
    non_integer_count,
    unknown_field,
};

const char* errc_name(Errc kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc kind, const std::string& message)
        : std::runtime_error(std::string(errc_name(kind)) + ": " + message), kind_(kind) {}

    Errc kind() const noexcept { return kind_; }

private:
    Errc kind_;
};

}  // namespace jif
