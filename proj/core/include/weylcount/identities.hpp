#pragma once

#include "weylcount/numeric.hpp"
#include "weylcount/series.hpp"
#include "weylcount/walks.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weylcount {

/// EGF of oscillating walks from lambda to mu:
/// det(I_{mu_i - lambda_j}(2t) - I_{mu_i + lambda_j}(2t)). Position n carries
/// the length-n walk count.
TruncatedSeries gm_walk_gf(const WeylPoint& lambda, const WeylPoint& mu, std::size_t order);

/// EGF of oscillating walks from the staircase with free endpoint:
/// det(J_{i-j}(2t))_{1<=i,j<=d}.
TruncatedSeries total_walk_gf(int d, std::size_t order);

/// det(I_{i-j}(2t))_{1<=i,j<=d}; the coefficient of t^{2n} times (n!)^2 is
/// the number of permutations of [n] with longest increasing subsequence <= d.
TruncatedSeries gessel_gf(int d, std::size_t order);

/// det(I_{lambda_i - nu_j}(2t)). The coefficient of t^{2n+D} times
/// n! (n+D)!, with D = |lambda| - |nu| >= 0, counts pairs of positive-step
/// walks from lambda and from nu meeting at a common endpoint.
TruncatedSeries generalized_gessel_gf(const WeylPoint& lambda, const WeylPoint& nu,
                                      std::size_t order);

/// exp(t + t^2): EGF of bilaterally symmetric matchings on [2n].
TruncatedSeries bsm_egf(std::size_t order);

/// exp(t + t^2/2): EGF of involutions in S_n.
TruncatedSeries involution_egf(std::size_t order);

/// n! * [t^n] as a nonnegative integer; throws std::logic_error when the
/// coefficient is not a nonnegative integer (counting EGFs always are).
BigInt egf_count(const TruncatedSeries& s, std::size_t n);

/// u_d(n): permutations of [n] with longest increasing subsequence <= d,
/// read off gessel_gf.
BigInt gessel_count(int d, int n);

/// The pair-of-walks count read off generalized_gessel_gf at index n.
BigInt generalized_gessel_count(const WeylPoint& lambda, const WeylPoint& nu, int n);

/// Closed forms for the number of bilaterally symmetric matchings on [2n]
/// with crossing number <= d, for d in {1, 2, 3}:
///   d=1:  C(2m, m)                     and  C(2m+2, m+1)/2
///   d=2:  C(2m+2, m+1)/2 * Catalan(m)  and  C(2m+2, m+1)/2 * Catalan(m+1)
///   d=3:  the two hypergeometric s-sums
/// (even n = 2m uses the first form, odd n = 2m+1 the second).
BigInt bsm_closed_form(int d, int n);

struct VerificationRecord {
    std::string point;  // grid location, e.g. "d=2 n=3 bilateral-matchings"
    BigInt formula;
    BigInt oracle;
    bool match = false;
};

struct VerificationReport {
    std::string identity;
    std::string checked_range;
    std::vector<VerificationRecord> records;
    bool pass = false;  // true iff every record matches
};

/// Window check of the second-order P-recursion
///   (n+5)(n+4)(n+3) v_{n+2} = 4(5n^2+30n+43)(2n+3) v_{n+1}
///                             - 36(2n+3)(2n+1)(n+1) v_n
/// against v_n = bsm_{2n}(3). Requires at least three values.
VerificationReport check_bsm3_recurrence(const std::vector<BigInt>& values);

/// The closed list of identity keys verify_identity accepts.
const std::vector<std::string>& identity_keys();

/// Evaluates the named identity on a (d, n) grid, computing formula and
/// oracle values over independent code paths. Bounds default per key to the
/// ranges the identity is stated for; unknown keys throw
/// std::invalid_argument.
VerificationReport verify_identity(const std::string& key,
                                   std::optional<int> max_d = std::nullopt,
                                   std::optional<int> max_n = std::nullopt);

}  // namespace weylcount
