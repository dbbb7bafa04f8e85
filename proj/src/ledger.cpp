#include <jif/ledger.hpp>

#include <algorithm>
#include <set>

namespace jif {

const char* errc_name(Errc kind) noexcept {
    switch (kind) {
        case Errc::duplicate_publication_year: return "DuplicatePublicationYear";
        case Errc::publication_gap: return "PublicationGap";
        case Errc::duplicate_citation_pair: return "DuplicateCitationPair";
        case Errc::future_publication: return "FuturePublication";
        case Errc::out_of_range: return "OutOfRange";
        case Errc::negative_count: return "NegativeCount";
        case Errc::undefined_denominator: return "UndefinedDenominator";
        case Errc::precision_out_of_range: return "PrecisionOutOfRange";
        case Errc::empty_range: return "EmptyRange";
        case Errc::missing_header: return "MissingHeader";
        case Errc::malformed_row: return "MalformedRow";
        case Errc::non_integer_count: return "NonIntegerCount";
        case Errc::unknown_field: return "UnknownField";
    }
    return "UnknownError";
}

namespace {

void require_sane_year(Year y, const char* what) {
    if (y < kMinYear || y > kMaxYear)
        throw Error(Errc::out_of_range,
                    std::string(what) + " " + std::to_string(y) + " outside sane bounds [" +
                        std::to_string(kMinYear) + ", " + std::to_string(kMaxYear) + "]");
}

}  // namespace

CitationLedger build_ledger(std::string journal_name, Year start_year,
                            const std::vector<PublicationRow>& publications,
                            const std::vector<CitationRow>& citations) {
    require_sane_year(start_year, "start year");

    std::set<Year> seen_years;
    for (const auto& row : publications) {
        require_sane_year(row.year, "publication year");
        if (row.articles < 0)
            throw Error(Errc::negative_count,
                        "article count for year " + std::to_string(row.year) + " is negative");
        if (!seen_years.insert(row.year).second)
            throw Error(Errc::duplicate_publication_year,
                        "year " + std::to_string(row.year) + " listed more than once");
    }
    if (seen_years.empty())
        throw Error(Errc::publication_gap,
                    "no publication entry for start year " + std::to_string(start_year));
    if (*seen_years.begin() < start_year)
        throw Error(Errc::out_of_range, "publication year " + std::to_string(*seen_years.begin()) +
                                            " precedes start year " + std::to_string(start_year));

    const Year last_year = *seen_years.rbegin();
    for (Year y = start_year; y <= last_year; ++y)
        if (!seen_years.count(y))
            throw Error(Errc::publication_gap,
                        "no publication entry for year " + std::to_string(y));

    CitationLedger ledger;
    ledger.journal_name_ = std::move(journal_name);
    ledger.start_year_ = start_year;
    ledger.last_year_ = last_year;
    ledger.publications_.assign(static_cast<std::size_t>(last_year - start_year + 1), 0);
    for (const auto& row : publications)
        ledger.publications_[static_cast<std::size_t>(row.year - start_year)] = row.articles;

    std::set<std::pair<Year, Year>> seen_pairs;
    for (const auto& row : citations) {
        require_sane_year(row.cite_year, "citation year");
        require_sane_year(row.pub_year, "publication year");
        const std::string pair_text =
            "(" + std::to_string(row.cite_year) + ", " + std::to_string(row.pub_year) + ")";
        if (row.pub_year > row.cite_year)
            throw Error(Errc::future_publication,
                        "citation pair " + pair_text + " cites articles published after the citing year");
        if (row.pub_year < start_year || row.cite_year > last_year)
            throw Error(Errc::out_of_range, "citation pair " + pair_text + " falls outside years [" +
                                                std::to_string(start_year) + ", " +
                                                std::to_string(last_year) + "]");
        if (row.count < 0)
            throw Error(Errc::negative_count, "citation count for pair " + pair_text + " is negative");
        if (!seen_pairs.insert({row.cite_year, row.pub_year}).second)
            throw Error(Errc::duplicate_citation_pair, "pair " + pair_text + " listed more than once");
        if (row.count > 0)
            ledger.citations_.emplace(std::make_pair(row.cite_year, row.pub_year), row.count);
    }
    return ledger;
}

Count CitationLedger::published(Year k) const {
    if (!in_span(k)) return 0;
    return publications_[static_cast<std::size_t>(k - start_year_)];
}

Count CitationLedger::cites(Year cite_year, Year pub_year) const {
    if (pub_year > cite_year)
        throw Error(Errc::future_publication,
                    "citation query (" + std::to_string(cite_year) + ", " + std::to_string(pub_year) +
                        ") asks about articles published after the citing year");
    auto it = citations_.find({cite_year, pub_year});
    return it == citations_.end() ? 0 : it->second;
}

Count CitationLedger::cohort_total(Year pub_year) const {
    if (!in_span(pub_year))
        throw Error(Errc::out_of_range, "publication year " + std::to_string(pub_year) +
                                            " outside ledger years [" + std::to_string(start_year_) +
                                            ", " + std::to_string(last_year_) + "]");
    Count total = 0;
    for (Year y = pub_year; y <= last_year_; ++y)
        total = detail::add_counts(total, cites(y, pub_year));
    return total;
}

Count CitationLedger::citations_during(Year y) const {
    if (!in_span(y))
        throw Error(Errc::out_of_range, "year " + std::to_string(y) + " outside ledger years [" +
                                            std::to_string(start_year_) + ", " +
                                            std::to_string(last_year_) + "]");
    Count total = 0;
    for (Year k = start_year_; k <= y; ++k)
        total = detail::add_counts(total, cites(y, k));
    return total;
}

Count CitationLedger::total_articles() const {
    Count total = 0;
    for (Count articles : publications_) total = detail::add_counts(total, articles);
    return total;
}

Count CitationLedger::total_citations() const {
    Count total = 0;
    for (const auto& [pair, count] : citations_) total = detail::add_counts(total, count);
    return total;
}

std::vector<PublicationRow> CitationLedger::publication_rows() const {
    std::vector<PublicationRow> rows;
    rows.reserve(publications_.size());
    for (Year y = start_year_; y <= last_year_; ++y)
        rows.push_back({y, publications_[static_cast<std::size_t>(y - start_year_)]});
    return rows;
}

std::vector<CitationRow> CitationLedger::citation_rows() const {
    std::vector<CitationRow> rows;
    rows.reserve(citations_.size());
    for (const auto& [pair, count] : citations_) rows.push_back({pair.first, pair.second, count});
    return rows;
}

}  // namespace jif
