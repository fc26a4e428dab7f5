#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylcount/identities.hpp"
#include "weylcount/objects.hpp"

using namespace weylcount;

TEST_CASE("walk generating function: dimension 1 gives Catalan numbers") {
    const auto gf = gm_walk_gf(WeylPoint({1}), WeylPoint({1}), 6);
    const std::vector<BigInt> expected = {1, 0, 1, 0, 2, 0, 5};
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(egf_count(gf, n) == expected[n]);
    }
}

TEST_CASE("walk generating function: constant term is 1 iff endpoints agree") {
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            const auto gf = gm_walk_gf(WeylPoint({a}), WeylPoint({b}), 2);
            CHECK(egf_count(gf, 0) == (a == b ? 1 : 0));
        }
    }
}

TEST_CASE("walk generating function agrees with the DP in dimension 2") {
    const WeylPoint p({2, 1});
    const auto gf = gm_walk_gf(p, p, 6);
    for (int n = 0; n <= 6; ++n) {
        CHECK(egf_count(gf, static_cast<std::size_t>(n)) == oscillating_walk_count(p, p, n));
    }
    // the length-2 count is 1: the only interior neighbor of (2,1) is (3,1)
    CHECK(egf_count(gf, 2) == 1);
    CHECK_THROWS_AS(gm_walk_gf(p, WeylPoint({1}), 4), std::invalid_argument);
}

TEST_CASE("free-endpoint generating function") {
    const std::vector<BigInt> d1 = {1, 1, 2, 3, 6, 10, 20};
    const auto g1 = total_walk_gf(1, 6);
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(egf_count(g1, n) == d1[n]);
    }
    const std::vector<BigInt> d2 = {1, 1, 3, 6, 20};
    const auto g2 = total_walk_gf(2, 4);
    for (std::size_t n = 0; n <= 4; ++n) {
        CHECK(egf_count(g2, n) == d2[n]);
    }
    CHECK(egf_count(total_walk_gf(3, 4), 4) == 24);
    CHECK_THROWS_AS(total_walk_gf(0, 4), std::invalid_argument);
}

TEST_CASE("free-endpoint counts grow weakly in the dimension") {
    std::vector<TruncatedSeries> by_d;
    for (int d = 1; d <= 4; ++d) {
        by_d.push_back(total_walk_gf(d, 10));
    }
    for (std::size_t n = 0; n <= 10; ++n) {
        for (std::size_t d = 0; d + 1 < by_d.size(); ++d) {
            CHECK(egf_count(by_d[d], n) <= egf_count(by_d[d + 1], n));
        }
    }
}

TEST_CASE("bounded-LIS generating function") {
    const std::vector<BigInt> catalan = {1, 1, 2, 5, 14, 42};
    for (int n = 0; n <= 5; ++n) {
        CHECK(gessel_count(2, n) == catalan[static_cast<std::size_t>(n)]);
    }
    CHECK(gessel_count(3, 4) == 23);
    for (int d = 4; d <= 6; ++d) {
        for (int n = 0; n <= d && n <= 6; ++n) {
            CHECK(gessel_count(d, n) == factorial(n));  // no constraint when d >= n
        }
    }
}

TEST_CASE("bounded-LIS generating function has no odd terms") {
    for (int d = 1; d <= 4; ++d) {
        const auto gf = gessel_gf(d, 11);
        for (std::size_t k = 1; k <= 11; k += 2) {
            CHECK(gf.coefficient(k) == 0);
        }
    }
}

TEST_CASE("paired-walk generating function") {
    // at the staircase it coincides with the bounded-LIS series, bitwise
    for (int d = 1; d <= 3; ++d) {
        const WeylPoint delta_bar = WeylPoint::staircase(d);
        CHECK(generalized_gessel_gf(delta_bar, delta_bar, 12) == gessel_gf(d, 12));
    }
    const WeylPoint p({2, 1});
    CHECK(generalized_gessel_count(p, p, 1) == 1);
    CHECK(generalized_gessel_count(WeylPoint({3, 1}), p, 0) == 1);
    CHECK_THROWS_AS(generalized_gessel_gf(p, WeylPoint({3, 2}), 4), std::invalid_argument);
    CHECK_THROWS_AS(generalized_gessel_gf(p, WeylPoint({1}), 4), std::invalid_argument);
}

TEST_CASE("matching and involution EGFs") {
    const auto bsm = bsm_egf(4);
    const std::vector<BigInt> bsm_expected = {1, 1, 3, 7, 25};
    for (std::size_t n = 0; n <= 4; ++n) {
        CHECK(egf_count(bsm, n) == bsm_expected[n]);
    }
    const auto inv = involution_egf(4);
    const std::vector<BigInt> inv_expected = {1, 1, 2, 4, 10};
    for (std::size_t n = 0; n <= 4; ++n) {
        CHECK(egf_count(inv, n) == inv_expected[n]);
    }
    CHECK(egf_count(bsm_egf(0), 0) == 1);
    CHECK(egf_count(involution_egf(0), 0) == 1);
}

TEST_CASE("closed forms for bounded-crossing bilateral matchings") {
    CHECK(bsm_closed_form(1, 4) == 6);  // C(4, 2)
    CHECK(bsm_closed_form(2, 4) == 20);
    CHECK(bsm_closed_form(3, 4) == 24);
    CHECK_THROWS_AS(bsm_closed_form(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(bsm_closed_form(0, 2), std::invalid_argument);

    for (int d = 1; d <= 3; ++d) {
        MatchingFilter filter;
        filter.bilateral = true;
        filter.max_crossing = d;
        for (int n = 0; n <= 6; ++n) {
            CHECK(bsm_closed_form(d, n) == count_matchings(n, filter));
        }
    }
}

TEST_CASE("P-recursion check") {
    CHECK(check_bsm3_recurrence({BigInt(1), BigInt(3), BigInt(24)}).pass);
    const auto bad = check_bsm3_recurrence({BigInt(1), BigInt(3), BigInt(25)});
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.records.front().match);
    CHECK_THROWS_AS(check_bsm3_recurrence({BigInt(1), BigInt(3)}), std::invalid_argument);

    std::vector<BigInt> values;
    for (int n = 0; n <= 10; ++n) {
        values.push_back(bsm_closed_form(3, 2 * n));
    }
    CHECK(check_bsm3_recurrence(values).pass);
}

TEST_CASE("verification harness runs every identity") {
    for (const auto& key : identity_keys()) {
        // small bounds here; the acceptance suite runs the stated grids
        const auto report = verify_identity(key, 2, 4);
        CHECK(report.pass);
        CHECK_FALSE(report.records.empty());
        for (const auto& rec : report.records) {
            CHECK(rec.match);
            CHECK(rec.formula == rec.oracle);
        }
    }
    CHECK_THROWS_AS(verify_identity("no-such-identity"), std::invalid_argument);
}

TEST_CASE("verification report spot values") {
    const auto eq5 = verify_identity("eq5-sum-squares", 1, 3);
    bool found = false;
    for (const auto& rec : eq5.records) {
        if (rec.point == "n=3 brauer") {
            CHECK(rec.formula == 15);
            CHECK(rec.oracle == 15);
            found = true;
        }
    }
    CHECK(found);

    const auto cor = verify_identity("cor22-four-way", 2, 3);
    int checked = 0;
    for (const auto& rec : cor.records) {
        if (rec.point.starts_with("d=2 n=3")) {
            CHECK(rec.formula == 6);
            CHECK(rec.oracle == 6);
            ++checked;
        }
    }
    CHECK(checked == 3);
}

TEST_CASE("OEIS anchor A000891") {
    // defining product formula (2n)! (2n+1)! / (n! (n+1)!)^2
    for (int n = 0; n <= 10; ++n) {
        const BigInt product = factorial(2 * n) * factorial(2 * n + 1) /
                               (factorial(n) * factorial(n + 1) * factorial(n) * factorial(n + 1));
        CHECK(bsm_closed_form(2, 2 * n) == product);
    }
}

TEST_CASE("OEIS anchor A064037") {
    // frozen golden values, cross-verified against the closed form, the
    // P-recursion and the brute-force matching scan
    const std::vector<BigInt> golden = {1,       3,       24,       285,      4242,
                                        73206,   1403028, 29082339, 640672890};
    const auto gf = total_walk_gf(3, 16);
    for (int n = 0; n <= 8; ++n) {
        CHECK(egf_count(gf, static_cast<std::size_t>(2 * n)) ==
              golden[static_cast<std::size_t>(n)]);
        CHECK(bsm_closed_form(3, 2 * n) == golden[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("every EGF count across the default grids is a nonnegative integer") {
    for (int d = 1; d <= 3; ++d) {
        const auto total = total_walk_gf(d, 10);
        const auto gessel = gessel_gf(d, 10);
        for (std::size_t n = 0; n <= 10; ++n) {
            CHECK_NOTHROW(egf_count(total, n));
        }
        for (int n = 0; 2 * n <= 10; ++n) {
            CHECK(gessel_count(d, n) >= 0);
        }
    }
}
