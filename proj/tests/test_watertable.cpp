#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "fixtures.hpp"
#include "watercells/watertable.hpp"

using namespace watercells;

TEST_CASE("brute-force counts match the pinned triangle") {
    CHECK(w_bruteforce(8, 2) == BigInt(6));
    CHECK(w_bruteforce(14, 4) == BigInt(112));
    CHECK(w_bruteforce(5, 2) == BigInt(0));

    WaterTable table = build_table(14, TableMethod::Bruteforce);
    for (int n = 0; n <= 14; ++n) {
        const auto& expected = fixtures::kWaterTriangle[static_cast<std::size_t>(n)];
        REQUIRE(static_cast<int>(expected.size()) == WaterTable::row_width(n));
        for (int k = 0; k < WaterTable::row_width(n); ++k) {
            CHECK(table.at(n, k) == BigInt(expected[static_cast<std::size_t>(k)]));
        }
    }
}

TEST_CASE("entries above the staircase are zero") {
    WaterTable table = build_table(10, TableMethod::Bruteforce);
    CHECK(table.at(5, 2) == BigInt(0));
    CHECK(table.at(0, 3) == BigInt(0));
    CHECK_THROWS_AS((void)table.at(11, 0), std::out_of_range);
    CHECK_THROWS_AS((void)table.at(3, -1), std::out_of_range);
}

TEST_CASE("closed form for the first column") {
    CHECK(w0_closed(10) == BigInt(26));
    CHECK(w0_closed(0) == BigInt(1));
    CHECK(w0_closed(13) == BigInt(43));
    for (int n = 0; n <= 16; ++n) {
        CHECK(w0_closed(n) == w_bruteforce(n, 0));
        CHECK(w0_closed(n) == BigInt(static_cast<long long>(n) * n / 4 + 1));
    }
}

TEST_CASE("first-column recurrences agree with the closed form") {
    for (int n = 0; n <= 30; ++n) {
        CHECK(w0_recurrence(n, W0Variant::Nonhomogeneous) == w0_closed(n));
        CHECK(w0_recurrence(n, W0Variant::Homogeneous) == w0_closed(n));
    }
    CHECK(w0_recurrence(10, W0Variant::Nonhomogeneous) ==
          w0_recurrence(8, W0Variant::Nonhomogeneous) + BigInt(9));
    CHECK(w0_recurrence(8, W0Variant::Homogeneous) ==
          BigInt(2) * BigInt(13) - BigInt(2) * BigInt(7) + BigInt(5));
    CHECK(w0_recurrence(2, W0Variant::Nonhomogeneous) == BigInt(2));
}

TEST_CASE("second-column recurrence") {
    CHECK(w1_recurrence(8) == BigInt(8));
    CHECK(w1_recurrence(5) == BigInt(1));
    CHECK(w1_recurrence(13) == BigInt(55));
    CHECK(w1_recurrence(4) == BigInt(0));
    for (int n = 5; n <= 16; ++n) {
        CHECK(w1_recurrence(n) == w_bruteforce(n, 1));
        CHECK(w1_recurrence(n) == w1_recurrence(n - 2) + w0_closed(n - 3) - BigInt(1));
    }
}

TEST_CASE("pascal-style recurrence for k >= 2") {
    CHECK(wk_recurrence(9, 3) == BigInt(7));
    CHECK(wk_recurrence(14, 4) == BigInt(112));
    CHECK(wk_recurrence(6, 2) == BigInt(1));
    CHECK_THROWS_AS((void)wk_recurrence(9, 1), std::invalid_argument);
    for (int n = 6; n <= 14; ++n) {
        for (int k = 2; k <= n - 4; ++k) {
            CHECK(wk_recurrence(n, k) == w_bruteforce(n, k));
        }
    }
}

TEST_CASE("the three build methods agree") {
    WaterTable brute = build_table(16, TableMethod::Bruteforce);
    CHECK(build_table(16, TableMethod::Recurrence).same_entries(brute));
    CHECK(build_table(16, TableMethod::Series).same_entries(brute));
}

TEST_CASE("degenerate tables") {
    for (TableMethod method :
         {TableMethod::Bruteforce, TableMethod::Recurrence, TableMethod::Series}) {
        WaterTable table = build_table(0, method);
        CHECK(table.max_n() == 0);
        CHECK(table.at(0, 0) == BigInt(1));
    }
}

TEST_CASE("row sums are Fibonacci") {
    WaterTable table = build_table(20, TableMethod::Recurrence);
    for (int n = 0; n <= 20; ++n) {
        CHECK(table.row_sum(n) == fibonacci(n + 1));
    }
}

TEST_CASE("method names") {
    CHECK(parse_method("bruteforce") == TableMethod::Bruteforce);
    CHECK(parse_method("recurrence") == TableMethod::Recurrence);
    CHECK(parse_method("series") == TableMethod::Series);
    CHECK(to_string(TableMethod::Series) == "series");
    CHECK_THROWS_AS((void)parse_method("bogus"), std::invalid_argument);
}

TEST_CASE("diagonal sums") {
    WaterTable table = build_table(20, TableMethod::Recurrence);
    std::vector<BigInt> d = diagonal_sums(table);
    for (std::size_t n = 0; n < fixtures::kDiagonalPrefix.size(); ++n) {
        CHECK(d[n] == BigInt(fixtures::kDiagonalPrefix[n]));
    }
    CHECK(d[6] == table.at(6, 0) + table.at(5, 1));
    // Doubling identity; n = 2 is outside its range because d(0) = 1 counts
    // the empty composition (2*1 + 1 = 3, but d(2) = 2).
    for (int n = 3; n <= 20; ++n) {
        CHECK(d[static_cast<std::size_t>(n)] ==
              BigInt(2) * d[static_cast<std::size_t>(n - 2)] + BigInt(1));
    }
}

TEST_CASE("closed form for diagonal sums") {
    CHECK(d_closed(5) == BigInt(7));
    CHECK(d_closed(6) == BigInt(11));
    CHECK(d_closed(1) == BigInt(1));
    CHECK(d_closed(20) == BigInt(1535));
    CHECK_THROWS_AS((void)d_closed(0), std::invalid_argument);
    WaterTable table = build_table(20, TableMethod::Bruteforce);
    std::vector<BigInt> d = diagonal_sums(table);
    for (int n = 1; n <= 20; ++n) {
        CHECK(d_closed(n) == d[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("increasable members of the waterless class") {
    CHECK(increasable_count(6) == BigInt(3));
    CHECK(increasable_count(1) == BigInt(1));
    CHECK(increasable_count(5) == BigInt(3));
    CHECK_THROWS_AS((void)increasable_count(0), std::invalid_argument);
    for (int n = 1; n <= 20; ++n) {
        CHECK(increasable_count(n) == BigInt((n + 1) / 2));
    }
    // Brute-force oracle: filter the waterless class by the definition.
    for (int n = 1; n <= 14; ++n) {
        BigInt count = 0;
        CompositionStream stream(FamilyKind::Parts12, n);
        while (auto c = stream.next()) {
            if (water_cells(*c) != 0) {
                continue;
            }
            const auto& parts = c->parts();
            bool ones = std::all_of(parts.begin(), parts.end(), [](int p) { return p == 1; });
            bool ends_21 =
                parts.size() >= 2 && parts[parts.size() - 2] == 2 && parts.back() == 1;
            if (ones || ends_21) {
                count += 1;
            }
        }
        CHECK(increasable_count(n) == count);
    }
    // The complement within W(n,0).
    for (std::size_t i = 0; i < fixtures::kComplementPrefix.size(); ++i) {
        int n = static_cast<int>(i) + 1;
        CHECK(w0_closed(n) - increasable_count(n) == BigInt(fixtures::kComplementPrefix[i]));
    }
}

TEST_CASE("column prefixes match the pinned fixtures") {
    WaterTable table = build_table(14, TableMethod::Bruteforce);
    for (int k = 0; k < static_cast<int>(fixtures::kColumnPrefixes.size()); ++k) {
        int start = k == 0 ? 0 : k + 4;
        const auto& prefix = fixtures::kColumnPrefixes[static_cast<std::size_t>(k)];
        for (std::size_t offset = 0; offset < prefix.size(); ++offset) {
            CHECK(table.at(start + static_cast<int>(offset), k) == BigInt(prefix[offset]));
        }
    }
}

TEST_CASE("csv serialization") {
    WaterTable table = build_table(5, TableMethod::Bruteforce);
    CHECK(to_csv(table) ==
          "n,k,w\n"
          "0,0,1\n"
          "1,0,1\n"
          "2,0,2\n"
          "3,0,3\n"
          "4,0,5\n"
          "5,0,7\n"
          "5,1,1\n");
}

TEST_CASE("raw-row constructor validates shape") {
    WaterTable original = build_table(6, TableMethod::Recurrence);
    WaterTable copy(6, TableMethod::Recurrence, original.rows());
    CHECK(copy.same_entries(original));
    auto rows = original.rows();
    rows.back().pop_back();
    CHECK_THROWS_AS(WaterTable(6, TableMethod::Recurrence, rows), std::invalid_argument);
    CHECK_THROWS_AS(WaterTable(7, TableMethod::Recurrence, original.rows()),
                    std::invalid_argument);
    auto negative = original.rows();
    negative[2][0] -= 3;
    CHECK_THROWS_AS(WaterTable(6, TableMethod::Recurrence, negative), std::invalid_argument);
}
