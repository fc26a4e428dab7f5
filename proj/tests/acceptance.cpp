// Acceptance suite: one line per criterion, exit code = number of failures.
// Each criterion pits the determinant formulas against independent oracles
// (dynamic programming, exhaustive enumeration, closed forms) at the full
// grid the identity is claimed for, with exact integer equality throughout.

#include "cli.hpp"
#include "weylcount/determinant.hpp"
#include "weylcount/identities.hpp"
#include "weylcount/objects.hpp"
#include "weylcount/series.hpp"
#include "weylcount/walks.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace weylcount;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }

    void expect_report(const VerificationReport& report) {
        if (report.pass) {
            return;
        }
        for (const auto& rec : report.records) {
            if (!rec.match) {
                expect(false, report.identity + " at " + rec.point + ": formula=" +
                                  rec.formula.str() + " oracle=" + rec.oracle.str());
                return;
            }
        }
    }
};

using BigIntRow = std::vector<BigInt>;

bool row_equals(const TruncatedSeries& gf, const BigIntRow& expected) {
    for (std::size_t n = 0; n < expected.size(); ++n) {
        if (egf_count(gf, n) != expected[n]) {
            return false;
        }
    }
    return true;
}

// 1. Walk EGF vs DP over every pair of small chamber points.
Check criterion1() {
    Check c;
    const auto started = std::chrono::steady_clock::now();
    c.expect_report(verify_identity("thm11-vs-dp", 3, 10));
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    c.expect(seconds < 60.0, "runtime " + std::to_string(seconds) + "s exceeds 60s");
    return c;
}

// 2. Free-endpoint EGF vs DP, d <= 4, n <= 12, plus pinned rows.
Check criterion2() {
    Check c;
    c.expect_report(verify_identity("thm12-vs-dp", 4, 12));
    c.expect(row_equals(total_walk_gf(1, 6), {1, 1, 2, 3, 6, 10, 20}),
             "d=1 row is not 1,1,2,3,6,10,20");
    c.expect(row_equals(total_walk_gf(2, 4), {1, 1, 3, 6, 20}), "d=2 row is not 1,1,3,6,20");
    return c;
}

// 3. Bounded-LIS EGF vs brute force over S_n, d <= 4, n <= 8.
Check criterion3() {
    Check c;
    c.expect_report(verify_identity("thm14-vs-lis", 4, 8));
    const BigIntRow catalan = {1, 1, 2, 5, 14, 42};
    for (std::size_t n = 0; n < catalan.size(); ++n) {
        c.expect(gessel_count(2, static_cast<int>(n)) == catalan[n],
                 "u_2(" + std::to_string(n) + ") is not Catalan");
    }
    return c;
}

// 4. Paired-walk EGF vs the ballot-DP pair sum, plus bitwise agreement with
//    the bounded-LIS series at the staircase.
Check criterion4() {
    Check c;
    c.expect_report(verify_identity("thm41-vs-pairs", 3, 8));
    for (int d = 1; d <= 3; ++d) {
        const WeylPoint delta_bar = WeylPoint::staircase(d);
        c.expect(generalized_gessel_gf(delta_bar, delta_bar, 16) == gessel_gf(d, 16),
                 "staircase series differs from the bounded-LIS series at d=" +
                     std::to_string(d));
    }
    return c;
}

// 5. exp(t+t^2) vs brute-force bilateral matching counts, n <= 7.
Check criterion5() {
    Check c;
    c.expect_report(verify_identity("prop21-vs-brute", 1, 7));
    c.expect(row_equals(bsm_egf(4), {1, 1, 3, 7, 25}), "EGF row is not 1,1,3,7,25");
    return c;
}

// 6. Four independent counts agree: det series, palindromic tableaux,
//    bilateral bounded-crossing matchings, any-shape bounded tableaux.
Check criterion6() {
    Check c;
    c.expect_report(verify_identity("cor22-four-way", 3, 5));
    return c;
}

// 7. Closed forms vs brute force (n <= 7) and vs the det series (n <= 20);
//    bsm_4(3) = 24 triple-checked.
Check criterion7() {
    Check c;
    c.expect_report(verify_identity("closed-forms-vs-brute", 3, 7));
    c.expect(bsm_closed_form(3, 4) == 24, "closed form bsm_4(3) != 24");
    MatchingFilter filter;
    filter.bilateral = true;
    filter.max_crossing = 3;
    c.expect(count_matchings(4, filter) == 24, "brute force bsm_4(3) != 24");
    // forward-solve the recursion from the initial conditions 1, 3
    const BigInt v2 = (4 * BigInt(43) * 3 * 3 - 36 * BigInt(3) * 1 * 1 * 1) / (5 * 4 * 3);
    c.expect(v2 == 24, "recursion-derived bsm_4(3) != 24");
    // both d=1 parities against their stated binomial forms
    for (int m = 0; m <= 10; ++m) {
        c.expect(bsm_closed_form(1, 2 * m) == binomial(2 * m, m), "bsm_{2m}(1) != C(2m,m)");
        c.expect(bsm_closed_form(1, 2 * m + 1) == binomial(2 * m + 2, m + 1) / 2,
                 "bsm_{2m+1}(1) != C(2m+2,m+1)/2");
    }
    return c;
}

// 8. The P-recursion holds on closed-form values for n <= 10 and a perturbed
//    sequence fails through the CLI with exit code 1.
Check criterion8() {
    Check c;
    std::vector<BigInt> values;
    for (int n = 0; n <= 10; ++n) {
        values.push_back(bsm_closed_form(3, 2 * n));
    }
    c.expect(values[0] == 1 && values[1] == 3, "initial conditions are not 1, 3");
    c.expect_report(check_bsm3_recurrence(values));

    std::ostringstream out, err;
    const int good = cli::run({"verify", "bsm3-recurrence", "--max-n", "10"}, out, err);
    c.expect(good == 0, "CLI exit code for the true sequence is not 0");
    const int bad = cli::run({"verify", "bsm3-recurrence", "--values", "1,3,25"}, out, err);
    c.expect(bad == 1, "CLI exit code for a perturbed sequence is not 1");
    return c;
}

// 9. Hook-length formula vs SYT enumeration for |shape| <= 8; ballot DP vs
//    ballot determinant across d <= 4.
Check criterion9() {
    Check c;
    c.expect_report(verify_identity("hlf-vs-enum", 1, 8));
    for (int d = 1; d <= 4; ++d) {
        std::vector<WeylPoint> starts = {WeylPoint::staircase(d)};
        std::vector<int> bumped = starts[0].coords();
        bumped[0] += 2;
        starts.push_back(WeylPoint(bumped));
        for (const auto& start : starts) {
            for (int steps = 0; steps <= 10; ++steps) {
                for (const auto& [mu, cnt] : ballot_walk_distribution(start, steps)) {
                    if (ballot_walk_count_det(start, mu) != cnt) {
                        c.expect(false, "ballot det mismatch at " + start.str());
                        return c;
                    }
                }
            }
        }
    }
    return c;
}

// 10. The four dimension identities, bounded and unbounded.
Check criterion10() {
    Check c;
    c.expect_report(verify_identity("eq5-sum-squares", 1, 6));
    c.expect_report(verify_identity("eq6-sum", 1, 7));
    c.expect_report(verify_identity("eq7-bounded-sum-squares", 3, 5));
    c.expect_report(verify_identity("eq8-bounded-sum", 3, 5));
    BigInt sum_sq = 0;
    for (int size = 1; size <= 3; size += 2) {
        for (const auto& shape : partitions_of(size)) {
            const BigInt f = tilde_f(shape, 3);
            sum_sq += f * f;
        }
    }
    c.expect(sum_sq == 15, "n=3 sum of squares != 15");
    return c;
}

// 11. Series-kernel property suites over seeded random inputs.
Check criterion11() {
    Check c;
    std::mt19937 rng(20250810);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);

    const auto random_series = [&](std::size_t order, bool zero_constant) {
        TruncatedSeries s(order);
        for (std::size_t k = zero_constant ? 1 : 0; k <= order; ++k) {
            s.set_coefficient(k, make_rational(num(rng), den(rng)));
        }
        return s;
    };
    const auto random_matrix = [&](std::size_t dim, std::size_t order) {
        Matrix<TruncatedSeries> m;
        for (std::size_t i = 0; i < dim; ++i) {
            std::vector<TruncatedSeries> row;
            for (std::size_t j = 0; j < dim; ++j) {
                row.push_back(random_series(order, false));
            }
            m.push_back(std::move(row));
        }
        return m;
    };

    for (int s = -8; s <= 8; ++s) {
        c.expect(bessel_I(s, 12) == bessel_I(-s, 12), "Bessel symmetry fails");
        const auto i = bessel_I(s, 12);
        for (std::size_t k = 0; k <= 12; ++k) {
            if (static_cast<int>(k % 2) != std::abs(s) % 2) {
                c.expect(i.coefficient(k) == 0, "Bessel parity fails");
            }
        }
    }

    for (int trial = 0; trial < 25; ++trial) {
        const auto p = random_series(8, true);
        c.expect(series_exp(p) * series_exp(-p) == TruncatedSeries::one(8),
                 "exp(p) exp(-p) != 1");
    }

    for (int trial = 0; trial < 10; ++trial) {
        auto m = random_matrix(3, 5);
        const auto det = series_determinant(m);
        std::swap(m[1], m[2]);
        c.expect(series_determinant(m) == -det, "row swap does not negate the determinant");
    }

    for (std::size_t dim = 2; dim <= 4; ++dim) {
        for (int trial = 0; trial < 6; ++trial) {
            const auto m = random_matrix(dim, 4);
            const auto zero = TruncatedSeries::zero(4);
            const auto one = TruncatedSeries::one(4);
            c.expect(det_leibniz(m, zero) == det_berkowitz(m, zero, one),
                     "Leibniz and Berkowitz disagree on series");
        }
    }
    for (std::size_t dim = 2; dim <= 6; ++dim) {
        Matrix<Rational> m(dim, std::vector<Rational>(dim));
        for (auto& row : m) {
            for (auto& x : row) {
                x = make_rational(num(rng), den(rng));
            }
        }
        c.expect(det_leibniz(m, Rational(0)) == det_berkowitz(m, Rational(0), Rational(1)),
                 "Leibniz and Berkowitz disagree on rationals");
    }
    return c;
}

struct Criterion {
    int id;
    const char* name;
    std::function<Check()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "walk EGF determinant vs DP oracle (d<=3, coords<=d+3, n<=10)", criterion1},
        {2, "free-endpoint EGF vs DP oracle (d<=4, n<=12)", criterion2},
        {3, "bounded-LIS EGF vs brute force (d<=4, n<=8)", criterion3},
        {4, "paired-walk EGF vs ballot pair sums (d<=3, n<=8)", criterion4},
        {5, "exp(t+t^2) vs bilateral matching brute force (n<=7)", criterion5},
        {6, "four-way count equality (d<=3, n<=5)", criterion6},
        {7, "closed forms vs brute force and series (n<=7 / n<=20)", criterion7},
        {8, "P-recursion holds; perturbed sequence exits 1 (n<=10)", criterion8},
        {9, "hook-length vs SYT enumeration; ballot DP vs determinant (<=8 cells)", criterion9},
        {10, "dimension sum identities, bounded and unbounded", criterion10},
        {11, "series kernel property suites (exact, randomized)", criterion11},
    };
    return list;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        selected.push_back(std::atoi(argv[i]));
    }
    int failures = 0;
    for (const auto& criterion : criteria()) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), criterion.id) == selected.end()) {
            continue;
        }
        const auto started = std::chrono::steady_clock::now();
        Check result;
        try {
            result = criterion.run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        std::cout << (result.ok ? "PASS" : "FAIL") << "  criterion " << criterion.id << ": "
                  << criterion.name << "  [" << seconds << "s]";
        if (!result.ok) {
            std::cout << "  -- " << result.detail;
            ++failures;
        }
        std::cout << "\n";
    }
    return failures;
}
