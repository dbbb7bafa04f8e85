// Acceptance suite: exercises every contract the project ships against,
// one numbered criterion per check block, with a PASS/FAIL line each.
// Criterion 7 and 8 drive the real CLI binary, passed as argv[1].

#include <filesystem>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include <jif/ingest.hpp>
#include <jif/metrics.hpp>
#include <jif/report.hpp>

#include "oracle.hpp"
#include "random_ledger.hpp"
#include "subprocess.hpp"
#include "support.hpp"

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << name;
    if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

bool is(const jif::ImpactFactor& value, jif::Count numerator, jif::Count denominator,
        std::string& detail) {
    if (value.numerator == numerator && value.denominator == denominator) return true;
    detail += " got " + std::to_string(value.numerator) + "/" + std::to_string(value.denominator) +
              ", want " + std::to_string(numerator) + "/" + std::to_string(denominator) + ";";
    return false;
}

void golden_fractions() {
    const jif::CitationLedger ledger = jiftest::example_journal();
    std::string detail;
    bool ok = true;
    ok &= is(jif::garfield(ledger, 2019), 71, 95, detail);
    ok &= is(jif::improved(ledger, 2019), 161, 135, detail);
    ok &= is(jif::extended(ledger, 2019), 181, 195, detail);
    ok &= is(jif::total(ledger, 2019), 5, 3, detail);
    report(1, "golden fixture fractions, exact and reduced", ok, detail);
}

void golden_decimals() {
    const jif::CitationLedger ledger = jiftest::example_journal();
    const std::vector<std::pair<jif::Method, std::string>> expected{
        {jif::Method::garfield, "0.747"},
        {jif::Method::improved, "1.193"},
        {jif::Method::extended, "0.928"},
        {jif::Method::total, "1.667"},
    };
    bool ok = true;
    std::string detail;
    for (const auto& [method, text] : expected) {
        const std::string rendered = jif::as_decimal(jif::compute(ledger, method, 2019), 3);
        if (rendered != text) {
            ok = false;
            detail += std::string(" ") + jif::method_name(method) + " rendered " + rendered +
                      ", want " + text + ";";
        }
    }
    report(2, "golden fixture decimals at precision 3", ok, detail);
}

void cohort_totals() {
    const jif::CitationLedger ledger = jiftest::example_journal();
    const std::vector<std::pair<jif::Year, jif::Count>> expected{
        {2015, 34}, {2016, 38}, {2017, 135}, {2018, 28}, {2019, 90}};
    bool ok = true;
    std::string detail;
    jif::Count sum = 0;
    for (const auto& [year, total] : expected) {
        const jif::Count got = ledger.cohort_total(year);
        sum += got;
        if (got != total) {
            ok = false;
            detail += " cohort " + std::to_string(year) + " = " + std::to_string(got) + ", want " +
                      std::to_string(total) + ";";
        }
    }
    const jif::Count total_numerator = jif::raw_fraction(ledger, jif::Method::total, 2019).numerator;
    if (sum != total_numerator) {
        ok = false;
        detail += " cohort sum " + std::to_string(sum) + " != total numerator " +
                  std::to_string(total_numerator) + ";";
    }
    report(3, "cohort totals and their sum against the total numerator", ok, detail);
}

constexpr int kCorpusSize = 1000;
constexpr unsigned kCorpusSeed = 987654321;

void oracle_equivalence() {
    std::mt19937 rng(kCorpusSeed);
    bool ok = true;
    std::string detail;
    long long checked = 0;
    for (int trial = 0; trial < kCorpusSize && ok; ++trial) {
        const jiftest::GeneratedJournal journal = jiftest::random_journal(rng);
        const jif::CitationLedger ledger = jiftest::to_ledger(journal);
        for (jif::Year y2 = ledger.start_year(); y2 <= ledger.last_year() && ok; ++y2)
            for (jif::Method m : jif::kAllMethods) {
                const jif::RawFraction raw = jif::raw_fraction(ledger, m, y2);
                const jiftest::Fraction expected =
                    jiftest::brute_force(m, journal.publications, journal.citations, y2);
                ++checked;
                if (raw.numerator != expected.numerator ||
                    raw.denominator != expected.denominator) {
                    ok = false;
                    detail = std::string(jif::method_name(m)) + " at " + std::to_string(y2) +
                             " in trial " + std::to_string(trial);
                    break;
                }
            }
    }
    report(4, "brute-force oracle equivalence over " + std::to_string(kCorpusSize) +
                  " random journals (" + std::to_string(checked) + " windows)",
           ok, detail);
}

void property_suite() {
    std::mt19937 rng(kCorpusSeed);
    bool ok = true;
    std::string detail;
    const auto fail = [&](const std::string& what, int trial, jif::Year y2) {
        if (ok) detail = what + " at year " + std::to_string(y2) + " in trial " + std::to_string(trial);
        ok = false;
    };
    const auto same_rational = [](const jif::ImpactFactor& a, const jif::ImpactFactor& b) {
        return a.numerator == b.numerator && a.denominator == b.denominator;
    };

    for (int trial = 0; trial < kCorpusSize && ok; ++trial) {
        const jiftest::GeneratedJournal journal = jiftest::random_journal(rng);
        const jif::CitationLedger ledger = jiftest::to_ledger(journal);

        jiftest::GeneratedJournal scaled = journal;
        for (auto& row : scaled.publications) row.articles *= 3;
        for (auto& row : scaled.citations) row.count *= 3;
        const jif::CitationLedger scaled_ledger = jiftest::to_ledger(scaled);

        for (jif::Year y2 = ledger.start_year(); y2 <= ledger.last_year() && ok; ++y2) {
            const jif::RawFraction g = jif::raw_fraction(ledger, jif::Method::garfield, y2);
            const jif::RawFraction i = jif::raw_fraction(ledger, jif::Method::improved, y2);
            const jif::RawFraction e = jif::raw_fraction(ledger, jif::Method::extended, y2);
            const jif::RawFraction t = jif::raw_fraction(ledger, jif::Method::total, y2);

            if (!(g.numerator <= i.numerator && i.numerator <= e.numerator &&
                  e.numerator <= t.numerator))
                fail("numerator chain broken", trial, y2);
            if (!(g.denominator <= i.denominator && i.denominator <= e.denominator &&
                  e.denominator == t.denominator))
                fail("denominator chain broken", trial, y2);

            if (y2 - ledger.start_year() <= 2 && i.denominator > 0 &&
                !same_rational(jif::improved(ledger, y2), jif::extended(ledger, y2)))
                fail("improved != extended inside the founding window", trial, y2);

            if (y2 == ledger.start_year()) {
                if (g.denominator != 0) fail("garfield defined in the founding year", trial, y2);
                if (e.denominator > 0 &&
                    !(same_rational(jif::improved(ledger, y2), jif::extended(ledger, y2)) &&
                      same_rational(jif::extended(ledger, y2), jif::total(ledger, y2))))
                    fail("founding-year methods disagree", trial, y2);
            }

            for (jif::Method m : jif::kAllMethods) {
                const jif::RawFraction raw = jif::raw_fraction(ledger, m, y2);
                const jif::RawFraction scaled_raw = jif::raw_fraction(scaled_ledger, m, y2);
                if ((raw.denominator == 0) != (scaled_raw.denominator == 0))
                    fail("scaling changed definedness", trial, y2);
                else if (raw.denominator > 0 &&
                         !same_rational(jif::compute(ledger, m, y2),
                                        jif::compute(scaled_ledger, m, y2)))
                    fail("scaling moved a reduced value", trial, y2);
            }
        }
    }
    report(5, "window chains, degenerate years, scale invariance over the corpus", ok, detail);
}

void ingestion_round_trip() {
    bool ok = true;
    std::string detail;

    std::mt19937 rng(kCorpusSeed);
    for (int trial = 0; trial < kCorpusSize && ok; ++trial) {
        const jif::CitationLedger ledger = jiftest::to_ledger(jiftest::random_journal(rng));
        if (jif::parse_journal_json(jif::write_journal_json(ledger)) != ledger) {
            ok = false;
            detail = "write/parse mismatch in trial " + std::to_string(trial);
        }
    }

    const jif::CitationLedger from_csv = jif::ledger_from_csv(
        jiftest::example_journal_name(),
        jif::parse_publications_csv(jiftest::example_publications_csv()),
        jif::parse_citations_csv(jiftest::example_citations_csv()));
    if (from_csv != jiftest::example_journal()) {
        ok = false;
        detail += " CSV fixture differs from the hand-built ledger;";
    }
    report(6, "ingestion round-trip over the corpus plus the CSV fixture", ok, detail);
}

struct CliHarness {
    std::filesystem::path dir = jiftest::make_workdir("acceptance_work");
    std::string binary;

    explicit CliHarness(std::string binary_path) : binary(std::move(binary_path)) {
        jiftest::write_file(dir / "journal.json", jiftest::example_journal_json());
    }

    jiftest::CommandResult jif(const std::string& args) const {
        return jiftest::run_command("'" + binary + "' " + args,
                                    (dir / "stderr.txt").string());
    }

    std::string journal_args() const { return "--journal '" + (dir / "journal.json").string() + "'"; }
};

void cli_end_to_end(const CliHarness& cli) {
    bool ok = true;
    std::string detail;

    const std::string args =
        "compute " + cli.journal_args() + " --year 2019 --method all --format json";
    const jiftest::CommandResult first = cli.jif(args);
    const jiftest::CommandResult second = cli.jif(args);

    if (first.exit_code != 0) {
        ok = false;
        detail += " exit " + std::to_string(first.exit_code) + ";";
    }
    if (first.output != second.output) {
        ok = false;
        detail += " outputs differ between consecutive runs;";
    }

    if (ok) {
        const auto doc = nlohmann::json::parse(first.output);
        const std::vector<std::tuple<std::string, jif::Count, jif::Count>> expected{
            {"total", 5, 3}, {"extended", 181, 195}, {"improved", 161, 135}, {"garfield", 71, 95}};
        if (doc["rows"].size() != expected.size()) {
            ok = false;
            detail += " wrong row count;";
        } else {
            for (std::size_t r = 0; r < expected.size(); ++r) {
                const auto& [method, numerator, denominator] = expected[r];
                if (doc["rows"][r]["method"] != method ||
                    doc["rows"][r]["numerator"] != numerator ||
                    doc["rows"][r]["denominator"] != denominator) {
                    ok = false;
                    detail += " row " + std::to_string(r) + " wrong;";
                }
            }
        }
    }

    const jiftest::CommandResult undefined =
        cli.jif("compute " + cli.journal_args() + " --year 2015 --method garfield");
    if (undefined.exit_code != 3) {
        ok = false;
        detail += " undefined single metric exited " + std::to_string(undefined.exit_code) +
                  ", want 3;";
    }
    report(7, "CLI compute end-to-end: order, fractions, exit codes, determinism", ok, detail);
}

void cli_time_series(const CliHarness& cli) {
    bool ok = true;
    std::string detail;

    const jiftest::CommandResult result = cli.jif(
        "series " + cli.journal_args() + " --method total --from 2015 --to 2019 --format json");
    if (result.exit_code != 0) {
        ok = false;
        detail += " exit " + std::to_string(result.exit_code) + ";";
    }

    // frozen values, each re-derivable from the brute-force oracle below
    const std::vector<std::pair<jif::Count, jif::Count>> expected{
        {3, 10}, {2, 3}, {27, 55}, {144, 155}, {5, 3}};

    if (ok) {
        const auto doc = nlohmann::json::parse(result.output);
        if (doc["points"].size() != expected.size()) {
            ok = false;
            detail += " wrong point count;";
        } else {
            for (std::size_t p = 0; p < expected.size(); ++p) {
                if (doc["points"][p]["year"] != 2015 + static_cast<int>(p) ||
                    doc["points"][p]["numerator"] != expected[p].first ||
                    doc["points"][p]["denominator"] != expected[p].second) {
                    ok = false;
                    detail += " point " + std::to_string(p) + " wrong;";
                }
            }
        }
    }

    // cross-check every frozen value against the independent oracle
    for (std::size_t p = 0; p < expected.size(); ++p) {
        const jiftest::Fraction raw =
            jiftest::brute_force(jif::Method::total, jiftest::example_publications(),
                                 jiftest::example_citations(), 2015 + static_cast<int>(p));
        const long long divisor = std::gcd(raw.numerator, raw.denominator);
        if (raw.numerator / divisor != expected[p].first ||
            raw.denominator / divisor != expected[p].second) {
            ok = false;
            detail += " oracle disagrees with frozen point " + std::to_string(p) + ";";
        }
    }
    report(8, "CLI total-IF time series matches the oracle-verified values", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: jif_acceptance <path-to-jif-binary>\n";
        return 2;
    }

    golden_fractions();
    golden_decimals();
    cohort_totals();
    oracle_equivalence();
    property_suite();
    ingestion_round_trip();

    const CliHarness cli(argv[1]);
    cli_end_to_end(cli);
    cli_time_series(cli);

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
