#include <doctest.h>

#include <stdexcept>

#include "watercells/verify.hpp"

using namespace watercells;

TEST_CASE("full verification passes at a reduced range") {
    VerificationReport report = run_verification(8);
    CHECK(report.overall());
    CHECK(report.checks.size() == 14);
    for (const CheckResult& check : report.checks) {
        CHECK(check.pass);
        CHECK(check.witness.empty());
    }
    std::string text = render(report);
    CHECK(text.find("all checks passed") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("run_verification rejects ranges that skip the recurrences") {
    CHECK_THROWS_AS((void)run_verification(5), std::invalid_argument);
}

TEST_CASE("an injected fault is reported with its witness") {
    WaterTable reference = build_table(10, TableMethod::Bruteforce);
    auto rows = build_table(10, TableMethod::Recurrence).rows();
    rows[9][3] += 1;  // off-by-one somewhere inside the triangle
    WaterTable corrupted(10, TableMethod::Recurrence, std::move(rows));
    CheckResult result = check_tables_equal(reference, corrupted);
    CHECK_FALSE(result.pass);
    CHECK(result.witness.find("n=9") != std::string::npos);
    CHECK(result.witness.find("k=3") != std::string::npos);
    VerificationReport report;
    report.checks.push_back(result);
    CHECK_FALSE(report.overall());
    CHECK(render(report).find("FAIL") != std::string::npos);
}

TEST_CASE("row-sum check notices a corrupted row") {
    auto rows = build_table(8, TableMethod::Recurrence).rows();
    rows[7][0] -= 1;
    WaterTable corrupted(8, TableMethod::Recurrence, std::move(rows));
    CheckResult result = check_row_sums_fibonacci(corrupted);
    CHECK_FALSE(result.pass);
    CHECK(result.witness.find("row 7") != std::string::npos);
}
