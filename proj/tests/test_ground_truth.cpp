#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "o3lg/errors.hpp"
#include "o3lg/ground_truth.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <unistd.h>

using namespace o3lg;

namespace {

std::string temp_file(const std::string& body)
{
    static int counter = 0;
    const std::string path = (std::filesystem::temp_directory_path() /
                              ("o3lg_gt_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".tsv"))
                                 .string();
    std::ofstream(path) << body;
    return path;
}

} // namespace

TEST_CASE("frequency table")
{
    const auto rows = load_frequency_table();
    CHECK(rows.size() == 50);
    std::set<GroupId> seen;
    for (const auto& r : rows) {
        CHECK(seen.insert(r.group).second);
        for (int c : r.c) CHECK(c >= 0);
    }
    CHECK(frequency_irreps().size() == 13);
    CHECK(frequency_irreps().front() == "0-");
}

TEST_CASE("little group tables")
{
    const auto so3 = load_so3_table();
    CHECK(so3.size() == 11);
    for (const auto& r : so3) {
        CHECK(r.parity == 0);
        CHECK(r.cells.size() == 5);
    }
    const auto o3 = load_o3_table();
    CHECK(o3.size() == 61);
    int plus = 0;
    for (const auto& r : o3) {
        CHECK((r.parity == 1 || r.parity == -1));
        CHECK(r.cells.size() == 10);
        plus += r.parity > 0;
    }
    CHECK(plus == 23);
}

TEST_CASE("ledger")
{
    const auto d = load_discrepancies();
    CHECK_FALSE(d.empty());
    std::set<std::string> ids;
    for (const auto& x : d) CHECK(ids.insert(x.id).second);
    CHECK(find_discrepancy(d, "frequency", "C5h", "1+"));
    CHECK(find_discrepancy(d, "axial", "Dinfh", "E1-"));
    CHECK_FALSE(find_discrepancy(d, "frequency", "Oh", "4+"));
}

TEST_CASE("malformed input")
{
    const auto short_row = temp_file("C1\tD2\n");
    CHECK_THROWS_AS(load_frequency_table(short_row), ParseError);
    const auto bad_parity = temp_file("*\tOh\t1\t0\t0\t0\t0\t0\t0\t0\t0\t0\n");
    CHECK_THROWS_AS(load_o3_table(bad_parity), ParseError);
    CHECK_THROWS_AS(load_so3_table("/nonexistent/so3.tsv"), ParseError);
    std::remove(short_row.c_str());
    std::remove(bad_parity.c_str());
}
