#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <jif/ledger.hpp>

namespace jif {

// The four impact-factor variants, declared in accuracy order: each method
// widens the citation/publication window of the one after it.
//
//   total     all citations received in any year through Y2   / all articles through Y2
//   extended  citations received during Y2 to every cohort    / all articles through Y2
//   improved  citations during Y2 to the Y2, Y2-1, Y2-2 cohorts / articles of those 3 years
//   garfield  citations during Y2 to the Y2-1, Y2-2 cohorts   / articles of those 2 years
enum class Method { total, extended, improved, garfield };

// 0 is the most accurate method (total), 3 the least (garfield).
constexpr int accuracy_rank(Method m) { return static_cast<int>(m); }

// All methods, best accuracy rank first.
inline constexpr std::array<Method, 4> kAllMethods{Method::total, Method::extended,
                                                   Method::improved, Method::garfield};

const char* method_name(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name);

// One evaluated impact factor, stored as an exact rational in lowest terms.
// Equality is structural; no floating point is involved anywhere.
struct ImpactFactor {
    Method method;
    Year target_year;
    Count numerator;    // >= 0
    Count denominator;  // > 0, gcd(numerator, denominator) == 1

    bool operator==(const ImpactFactor&) const = default;
};

// Window sums before reduction; denominator 0 means the metric is undefined
// for that year (e.g. garfield in the journal's founding year).
struct RawFraction {
    Count numerator = 0;
    Count denominator = 0;
};

// Raw window sums for `method` at target year y2. Throws OutOfRange when y2
// is outside [start_year, last_year]; never throws for a zero denominator.
RawFraction raw_fraction(const CitationLedger& ledger, Method method, Year y2);

// The individual metrics. Each throws OutOfRange for a y2 outside the ledger
// span and UndefinedDenominator when the publication window sums to zero.
ImpactFactor garfield(const CitationLedger& ledger, Year y2);
ImpactFactor improved(const CitationLedger& ledger, Year y2);
ImpactFactor extended(const CitationLedger& ledger, Year y2);
ImpactFactor total(const CitationLedger& ledger, Year y2);

// Dispatch on `method`; identical to calling the named function.
ImpactFactor compute(const CitationLedger& ledger, Method method, Year y2);

// Like compute, but an undefined denominator comes back as nullopt instead
// of throwing. Still throws OutOfRange.
std::optional<ImpactFactor> try_compute(const CitationLedger& ledger, Method method, Year y2);

struct MethodResult {
    Method method;
    std::optional<ImpactFactor> value;  // nullopt = undefined (zero denominator)

    bool operator==(const MethodResult&) const = default;
};

// Evaluates every method at y2, always returning exactly four entries in
// accuracy order (total first). Undefined methods are carried as nullopt
// instead of failing the batch. Throws OutOfRange only.
std::vector<MethodResult> compute_all(const CitationLedger& ledger, Year y2);

// Decimal rendering of numerator/denominator with exactly `precision`
// fractional digits, precision in [0, 12], rounding half away from zero.
// The only place in the library where any rounding happens.
std::string format_decimal(Count numerator, Count denominator, int precision);
std::string as_decimal(const ImpactFactor& value, int precision);

}  // namespace jif
