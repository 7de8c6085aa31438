#include "doctest.h"

#include "apcycles/checks.hpp"
#include "apcycles/stirling.hpp"

using namespace apc;

TEST_SUITE("stirling") {

TEST_CASE("spot values from exhaustive enumeration") {
    const StirlingTable d2 = stirling_table(2, 8);
    CHECK(d2.at(4, 1) == BigInt(6));   // the 4-cycles
    CHECK(d2.at(4, 2) == BigInt(3));   // the 2+2 types
    CHECK(d2.at(2, 1) == BigInt(1));
    const StirlingTable d3 = stirling_table(3, 8);
    CHECK(d3.at(6, 1) == BigInt(120));  // 6-cycles
    CHECK(d3.at(6, 2) == BigInt(40));   // 3+3 types
    CHECK(d3.at(3, 1) == BigInt(2));
}

TEST_CASE("r = 1 rows sum to n!") {
    const StirlingTable d1 = stirling_table(1, 9);
    for (int n = 0; n <= 9; ++n)
        CHECK(d1.row_sum(n) == BigInt::factorial(static_cast<unsigned long>(n)));
}

TEST_CASE("r = 2 rows sum to the derangement numbers") {
    const StirlingTable d2 = stirling_table(2, 60);
    CHECK(derangement_number(0) == BigInt(1));
    CHECK(derangement_number(1) == BigInt(0));
    CHECK(derangement_number(4) == BigInt(9));
    CHECK(derangement_number(5) == BigInt(44));
    for (int n = 0; n <= 60; ++n) CHECK(d2.row_sum(n) == derangement_number(n));
}

TEST_CASE("d_r(n,k) vanishes when k exceeds n/r") {
    const StirlingTable d3 = stirling_table(3, 12);
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            if (k > n / 3) CHECK(d3.at(n, k) == BigInt(0));
}

TEST_CASE("recurrence equals EGF coefficient extraction") {
    for (int r = 1; r <= 3; ++r) {
        const StirlingTable rec = stirling_table(r, 30);
        const StirlingTable egf = stirling_table_egf(r, 30);
        for (int n = 0; n <= 30; ++n)
            for (int k = 0; k <= n; ++k) REQUIRE(rec.at(n, k) == egf.at(n, k));
    }
}

TEST_CASE("tables equal the brute-force census") {
    for (int r = 1; r <= 3; ++r) {
        const StirlingTable t = stirling_table(r, 8);
        for (int n = r; n <= 8; ++n) {
            const auto census = checks::permutation_cycle_census(r, n);
            for (int k = 0; k <= n; ++k)
                REQUIRE(t.at(n, k) == BigInt(census[static_cast<std::size_t>(k)]));
        }
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(stirling_table(4, 10), std::invalid_argument);
    CHECK_THROWS_AS(stirling_table(0, 10), std::invalid_argument);
    CHECK_THROWS_AS(stirling_table(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(stirling_table(2, kMaxExactN + 1), std::invalid_argument);
    const StirlingTable t = stirling_table(2, 5);
    CHECK_THROWS_AS(static_cast<void>(t.at(6, 0)), std::out_of_range);
    CHECK_THROWS_AS(static_cast<void>(t.at(3, 4)), std::out_of_range);
}

TEST_CASE("CSV dump carries exact integers") {
    const std::string csv = stirling_csv(stirling_table(2, 4));
    CHECK(csv.find("r,n,k,d\n") == 0);
    CHECK(csv.find("2,4,1,6\n") != std::string::npos);
    CHECK(csv.find("2,4,2,3\n") != std::string::npos);
}

}  // TEST_SUITE
