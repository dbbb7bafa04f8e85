#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <jif/ingest.hpp>
#include <jif/ledger.hpp>

namespace jiftest {

// Five-year journal used across every suite. All golden values asserted on
// it were recomputed by hand from these cells before being frozen.
//
//          published   cited in: 2015 2016 2017 2018 2019   lifetime
//   2015       20                  6   15    4    0    9        34
//   2016       40                      19    0    8   11        38
//   2017       50                           10   70   55       135
//   2018       45                                12   16        28
//   2019       40                                     90        90
inline const std::vector<jif::PublicationRow>& example_publications() {
    static const std::vector<jif::PublicationRow> rows{
        {2015, 20}, {2016, 40}, {2017, 50}, {2018, 45}, {2019, 40}};
    return rows;
}

inline const std::vector<jif::CitationRow>& example_citations() {
    static const std::vector<jif::CitationRow> rows{
        {2015, 2015, 6},  {2016, 2015, 15}, {2016, 2016, 19}, {2017, 2015, 4},
        {2017, 2016, 0},  {2017, 2017, 10}, {2018, 2015, 0},  {2018, 2016, 8},
        {2018, 2017, 70}, {2018, 2018, 12}, {2019, 2015, 9},  {2019, 2016, 11},
        {2019, 2017, 55}, {2019, 2018, 16}, {2019, 2019, 90}};
    return rows;
}

inline const std::string& example_journal_name() {
    static const std::string name = "Journal of Examples";
    return name;
}

inline jif::CitationLedger example_journal() {
    return jif::build_ledger(example_journal_name(), 2015, example_publications(),
                             example_citations());
}

inline std::string example_publications_csv() {
    return "year,articles\n"
           "2015,20\n"
           "2016,40\n"
           "2017,50\n"
           "2018,45\n"
           "2019,40\n";
}

inline std::string example_citations_csv() {
    return "cite_year,pub_year,count\n"
           "2015,2015,6\n"
           "2016,2015,15\n"
           "2016,2016,19\n"
           "2017,2015,4\n"
           "2017,2016,0\n"
           "2017,2017,10\n"
           "2018,2015,0\n"
           "2018,2016,8\n"
           "2018,2017,70\n"
           "2018,2018,12\n"
           "2019,2015,9\n"
           "2019,2016,11\n"
           "2019,2017,55\n"
           "2019,2018,16\n"
           "2019,2019,90\n";
}

inline std::string example_journal_json() { return jif::write_journal_json(example_journal()); }

// Runs fn and reports which error kind it threw, if any.
inline std::optional<jif::Errc> error_kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const jif::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

inline std::filesystem::path make_workdir(const std::string& name) {
    const std::filesystem::path dir = std::filesystem::current_path() / name;
    std::filesystem::create_directories(dir);
    return dir;
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

}  // namespace jiftest
