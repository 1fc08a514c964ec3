#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "exec_util.hpp"
#include "fixtures.hpp"

using exec_util::cli;
using exec_util::run_command;
using exec_util::split_lines;

TEST_CASE("table text output carries the pinned triangle") {
    auto result = run_command(cli() + " table --max-n 14 --method bruteforce");
    REQUIRE(result.exit_code == 0);
    auto lines = split_lines(result.output);
    REQUIRE(lines.size() == 16);  // header + rows 0..14
    for (int n = 0; n <= 14; ++n) {
        std::istringstream row(lines[static_cast<std::size_t>(n) + 1]);
        long long value = 0;
        row >> value;
        CHECK(value == n);
        const auto& expected = fixtures::kWaterTriangle[static_cast<std::size_t>(n)];
        for (long long cell : expected) {
            row >> value;
            CHECK(value == cell);
        }
        CHECK_FALSE(static_cast<bool>(row >> value));  // nothing past the staircase
    }
}

TEST_CASE("table with max-n 0") {
    auto result = run_command(cli() + " table --max-n 0");
    REQUIRE(result.exit_code == 0);
    auto lines = split_lines(result.output);
    REQUIRE(lines.size() == 2);
    std::istringstream row(lines[1]);
    int n = -1, value = -1;
    row >> n >> value;
    CHECK(n == 0);
    CHECK(value == 1);
}

TEST_CASE("csv and json exports parse back to the same values") {
    auto csv = run_command(cli() + " table --max-n 12 --format csv");
    auto json = run_command(cli() + " table --max-n 12 --format json");
    REQUIRE(csv.exit_code == 0);
    REQUIRE(json.exit_code == 0);

    // CSV: header then n,k,w triples.
    auto lines = split_lines(csv.output);
    REQUIRE(lines.front() == "n,k,w");
    std::map<std::pair<int, int>, long long> from_csv;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream line(lines[i]);
        int n = 0, k = 0;
        long long w = 0;
        char comma = 0;
        line >> n >> comma >> k >> comma >> w;
        from_csv[{n, k}] = w;
    }

    // JSON: minimal hand-rolled pull of the "rows" arrays, enough for the
    // value-identity comparison.
    std::map<std::pair<int, int>, long long> from_json;
    std::size_t rows_at = json.output.find("\"rows\"");
    REQUIRE(rows_at != std::string::npos);
    std::size_t cursor = json.output.find('[', rows_at) + 1;
    int row_index = 0;
    while (true) {
        std::size_t open = json.output.find('[', cursor);
        std::size_t outer_close = json.output.find(']', cursor);
        if (open == std::string::npos || outer_close < open) {
            break;
        }
        std::size_t close = json.output.find(']', open);
        std::istringstream row(json.output.substr(open + 1, close - open - 1));
        long long value = 0;
        int column = 0;
        while (row >> value) {
            from_json[{row_index, column++}] = value;
            char comma = 0;
            row >> comma;
        }
        ++row_index;
        cursor = close + 1;
    }
    CHECK(row_index == 13);
    CHECK(from_csv == from_json);
    CHECK(from_csv.at({12, 2}) == 50);
    CHECK(json.output.find("\"max_n\": 12") != std::string::npos);
    CHECK(json.output.find("\"method\": \"recurrence\"") != std::string::npos);
}

TEST_CASE("identical flags produce identical bytes") {
    auto first = run_command(cli() + " table --max-n 10 --method series");
    auto second = run_command(cli() + " table --max-n 10 --method series");
    CHECK(first.output == second.output);
    CHECK(first.exit_code == 0);
}

TEST_CASE("sequence subcommand") {
    auto diagonal = run_command(cli() + " sequence diagonal 10");
    REQUIRE(diagonal.exit_code == 0);
    auto lines = split_lines(diagonal.output);
    REQUIRE(lines.size() == fixtures::kDiagonalPrefix.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        CHECK(std::stoll(lines[i]) == fixtures::kDiagonalPrefix[i]);
    }

    auto bfile = run_command(cli() + " sequence w-column:1 3 --b-file");
    REQUIRE(bfile.exit_code == 0);
    CHECK(split_lines(bfile.output) == std::vector<std::string>{"5 1", "6 2", "7 5"});

    auto cie = run_command(cli() + " sequence cie 10");
    REQUIRE(cie.exit_code == 0);
    CHECK(split_lines(cie.output).size() == 10);
    CHECK(cie.output == run_command(cli() + " sequence diagonal 10").output);

    auto increasable = run_command(cli() + " sequence increasable 6");
    CHECK(split_lines(increasable.output) ==
          std::vector<std::string>{"1", "1", "2", "2", "3", "3"});

    auto complement = run_command(cli() + " sequence w0-complement 6");
    CHECK(split_lines(complement.output) ==
          std::vector<std::string>{"0", "1", "1", "3", "4", "7"});

    auto row_sums = run_command(cli() + " sequence row-sums 8");
    CHECK(split_lines(row_sums.output) ==
          std::vector<std::string>{"1", "1", "2", "3", "5", "8", "13", "21"});
}

TEST_CASE("bijection wc1 at the smallest valid size") {
    auto result = run_command(cli() + " bijection wc1 --n 5");
    REQUIRE(result.exit_code == 0);
    auto pairs = exec_util::parse_mapping_pairs(result.output);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs.front().first == std::vector<int>{2, 1, 2});
    CHECK(pairs.front().second == std::vector<int>{2});
}

TEST_CASE("verify exits zero at a reduced range") {
    auto result = run_command(cli() + " verify --max-n 6");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_command(cli() + " nonsense 2>/dev/null").exit_code == 2);
    CHECK(run_command(cli() + " table --method bogus 2>/dev/null").exit_code == 2);
    CHECK(run_command(cli() + " table --format bogus 2>/dev/null").exit_code == 2);
    CHECK(run_command(cli() + " sequence unknown-name 5 2>/dev/null").exit_code == 2);
    CHECK(run_command(cli() + " bijection wck --n 9 2>/dev/null").exit_code == 2);  // missing --k
    CHECK(run_command(cli() + " bijection wc1 --n 5 --k 2 2>/dev/null").exit_code == 2);
    CHECK(run_command(cli() + " bijection wck --n 5 --k 2 2>/dev/null").exit_code == 2);
    CHECK(run_command(cli() + " verify --max-n 3 2>/dev/null").exit_code == 2);
    CHECK(run_command(cli() + " --help").exit_code == 0);
}
