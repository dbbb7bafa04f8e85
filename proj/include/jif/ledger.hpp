#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <jif/errors.hpp>

namespace jif {

using Year = int;
using Count = std::int64_t;

// Sanity bounds on any year accepted from input; anything outside is
// treated as corrupt data, not a legitimate calendar year.
inline constexpr Year kMinYear = 1000;
inline constexpr Year kMaxYear = 3000;

struct PublicationRow {
    Year year;
    Count articles;
    bool operator==(const PublicationRow&) const = default;
};

struct CitationRow {
    Year cite_year;
    Year pub_year;
    Count count;
    bool operator==(const CitationRow&) const = default;
};

namespace detail {

inline Count add_counts(Count a, Count b) {
    Count out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("citation/article count sum exceeds 64-bit range");
    return out;
}

}  // namespace detail

// Immutable history of one journal: articles published per year (P) and the
// sparse citation matrix C(cite_year, pub_year), the citations received
// during cite_year by the cohort published in pub_year. An absent pair reads
// as 0;
// explicit zero cells are accepted on input and normalized away.
//
// Publication years must be contiguous from start_year to the last recorded
// year; a year with no articles is the explicit entry (year, 0), so "no data"
// and "no articles" stay distinguishable. Reads zero-extend before
// start_year: published() and cites() return 0 there rather than failing.
//
// All accessors are const and instances never mutate after build_ledger, so
// a ledger can be shared across threads freely.
class CitationLedger {
public:
    const std::string& journal_name() const { return journal_name_; }
    Year start_year() const { return start_year_; }
    Year last_year() const { return last_year_; }

    // P(k); 0 for any year outside [start_year, last_year].
    Count published(Year k) const;

    // C(cite_year, pub_year); 0 for any unrecorded pair, including
    // pub_year < start_year. Throws FuturePublication if pub_year > cite_year.
    Count cites(Year cite_year, Year pub_year) const;

    // Citations the pub_year cohort received over its whole recorded life:
    // sum of C(y, pub_year) for y in [pub_year, last_year].
    Count cohort_total(Year pub_year) const;

    // Citations received during year y across every cohort:
    // sum of C(y, k) for k in [start_year, y].
    Count citations_during(Year y) const;

    // Grand totals over the whole ledger.
    Count total_articles() const;
    Count total_citations() const;

    // Flattened contents, in canonical order (publications ascending by
    // year; citations by (cite_year, pub_year), zero cells absent).
    std::vector<PublicationRow> publication_rows() const;
    std::vector<CitationRow> citation_rows() const;

    bool operator==(const CitationLedger&) const = default;

    friend CitationLedger build_ledger(std::string journal_name, Year start_year,
                                       const std::vector<PublicationRow>& publications,
                                       const std::vector<CitationRow>& citations);

private:
    CitationLedger() = default;

    bool in_span(Year y) const { return y >= start_year_ && y <= last_year_; }

    std::string journal_name_;
    Year start_year_ = 0;
    Year last_year_ = 0;
    std::vector<Count> publications_;                 // index = year - start_year_
    std::map<std::pair<Year, Year>, Count> citations_;  // (cite_year, pub_year) -> nonzero count
};

// Validating constructor. Rejects duplicate years/pairs, gaps in the
// publication range, citation pairs outside [start_year, last_year],
// pairs with pub_year > cite_year, and negative counts. last_year is the
// largest year appearing in `publications`.
CitationLedger build_ledger(std::string journal_name, Year start_year,
                            const std::vector<PublicationRow>& publications,
                            const std::vector<CitationRow>& citations);

}  // namespace jif
