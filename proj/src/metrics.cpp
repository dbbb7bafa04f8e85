#include <jif/metrics.hpp>

#include <numeric>

namespace jif {

const char* method_name(Method m) noexcept {
    switch (m) {
        case Method::total: return "total";
        case Method::extended: return "extended";
        case Method::improved: return "improved";
        case Method::garfield: return "garfield";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view name) {
    for (Method m : kAllMethods)
        if (name == method_name(m)) return m;
    return std::nullopt;
}

namespace {

void require_in_span(const CitationLedger& ledger, Year y2) {
    if (y2 < ledger.start_year() || y2 > ledger.last_year())
        throw Error(Errc::out_of_range,
                    "target year " + std::to_string(y2) + " outside ledger years [" +
                        std::to_string(ledger.start_year()) + ", " +
                        std::to_string(ledger.last_year()) + "]");
}

ImpactFactor reduce(Method method, Year y2, RawFraction raw) {
    if (raw.denominator == 0)
        throw Error(Errc::undefined_denominator,
                    std::string(method_name(method)) + " impact factor for " + std::to_string(y2) +
                        ": no articles published in the window, denominator is zero");
    const Count divisor = std::gcd(raw.numerator, raw.denominator);
    return ImpactFactor{method, y2, raw.numerator / divisor, raw.denominator / divisor};
}

}  // namespace

RawFraction raw_fraction(const CitationLedger& ledger, Method method, Year y2) {
    require_in_span(ledger, y2);
    RawFraction raw;
    switch (method) {
        case Method::garfield:
            raw.numerator = detail::add_counts(ledger.cites(y2, y2 - 1), ledger.cites(y2, y2 - 2));
            raw.denominator = detail::add_counts(ledger.published(y2 - 1), ledger.published(y2 - 2));
            break;
        case Method::improved:
            raw.numerator = detail::add_counts(
                ledger.cites(y2, y2),
                detail::add_counts(ledger.cites(y2, y2 - 1), ledger.cites(y2, y2 - 2)));
            raw.denominator = detail::add_counts(
                ledger.published(y2),
                detail::add_counts(ledger.published(y2 - 1), ledger.published(y2 - 2)));
            break;
        case Method::extended:
            raw.numerator = ledger.citations_during(y2);
            for (Year k = ledger.start_year(); k <= y2; ++k)
                raw.denominator = detail::add_counts(raw.denominator, ledger.published(k));
            break;
        case Method::total:
            for (Year k = ledger.start_year(); k <= y2; ++k) {
                raw.numerator = detail::add_counts(raw.numerator, ledger.citations_during(k));
                raw.denominator = detail::add_counts(raw.denominator, ledger.published(k));
            }
            break;
    }
    return raw;
}

ImpactFactor garfield(const CitationLedger& ledger, Year y2) {
    return reduce(Method::garfield, y2, raw_fraction(ledger, Method::garfield, y2));
}

ImpactFactor improved(const CitationLedger& ledger, Year y2) {
    return reduce(Method::improved, y2, raw_fraction(ledger, Method::improved, y2));
}

ImpactFactor extended(const CitationLedger& ledger, Year y2) {
    return reduce(Method::extended, y2, raw_fraction(ledger, Method::extended, y2));
}

ImpactFactor total(const CitationLedger& ledger, Year y2) {
    return reduce(Method::total, y2, raw_fraction(ledger, Method::total, y2));
}

ImpactFactor compute(const CitationLedger& ledger, Method method, Year y2) {
    return reduce(method, y2, raw_fraction(ledger, method, y2));
}

std::optional<ImpactFactor> try_compute(const CitationLedger& ledger, Method method, Year y2) {
    const RawFraction raw = raw_fraction(ledger, method, y2);
    if (raw.denominator == 0) return std::nullopt;
    return reduce(method, y2, raw);
}

std::vector<MethodResult> compute_all(const CitationLedger& ledger, Year y2) {
    require_in_span(ledger, y2);
    std::vector<MethodResult> results;
    results.reserve(kAllMethods.size());
    for (Method m : kAllMethods) results.push_back({m, try_compute(ledger, m, y2)});
    return results;
}

std::string format_decimal(Count numerator, Count denominator, int precision) {
    if (precision < 0 || precision > 12)
        throw Error(Errc::precision_out_of_range,
                    "precision " + std::to_string(precision) + " outside [0, 12]");
    if (denominator <= 0)
        throw Error(Errc::undefined_denominator, "cannot render a fraction with denominator <= 0");
    if (numerator < 0)
        throw Error(Errc::negative_count, "cannot render a negative fraction");

    Count integer_part = numerator / denominator;
    Count remainder = numerator % denominator;

    // Long division one digit at a time; remainder stays < denominator, so
    // the 10x step needs headroom beyond 63 bits only in the widened type.
    std::string digits;
    digits.reserve(static_cast<std::size_t>(precision));
    for (int i = 0; i < precision; ++i) {
        unsigned __int128 scaled = static_cast<unsigned __int128>(remainder) * 10;
        digits.push_back(static_cast<char>('0' + static_cast<int>(scaled / static_cast<unsigned __int128>(denominator))));
        remainder = static_cast<Count>(scaled % static_cast<unsigned __int128>(denominator));
    }

    // Half away from zero on what is left past the last digit.
    if (static_cast<unsigned __int128>(remainder) * 2 >= static_cast<unsigned __int128>(denominator)) {
        int i = precision - 1;
        for (; i >= 0; --i) {
            if (digits[static_cast<std::size_t>(i)] != '9') {
                ++digits[static_cast<std::size_t>(i)];
                break;
            }
            digits[static_cast<std::size_t>(i)] = '0';
        }
        if (i < 0) ++integer_part;
    }

    std::string out = std::to_string(integer_part);
    if (precision > 0) {
        out.push_back('.');
        out += digits;
    }
    return out;
}

std::string as_decimal(const ImpactFactor& value, int precision) {
    return format_decimal(value.numerator, value.denominator, precision);
}

}  // namespace jif
