#pragma once

#include "weylcount/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace weylcount {

/// Formal power series over exact rationals, truncated after t^order
/// (inclusive). Every binary operation requires both operands to carry the
/// same order and yields that order; mixing orders throws
/// std::invalid_argument instead of truncating silently.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

    static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(order); }
    static TruncatedSeries one(std::size_t order) { return constant(1, order); }
    static TruncatedSeries constant(const Rational& c, std::size_t order);
    /// c * t^power; the zero series when power exceeds order.
    static TruncatedSeries monomial(const Rational& c, std::size_t power, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& coefficient(std::size_t k) const;
    void set_coefficient(std::size_t k, Rational value);

    bool is_zero() const;
    std::string str() const;

    bool operator==(const TruncatedSeries&) const = default;

    TruncatedSeries operator-() const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    /// Cauchy product truncated at the common order.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s);

private:
    std::vector<Rational> coeffs_;  // coeffs_[k] holds [t^k]; size() == order + 1
};

/// exp(p) for a series with zero constant term, through the recurrence
/// f' = p' f with f(0) = 1. Throws std::domain_error when [t^0] p != 0.
TruncatedSeries series_exp(const TruncatedSeries& p);

/// Hyperbolic Bessel kernel I_s(2t) = sum_{n>=0} t^{2n+|s|} / (n! (n+|s|)!).
/// Symmetric in s: I_s = I_{-s}.
TruncatedSeries bessel_I(int s, std::size_t order);

/// J_s(2t) = I_s(2t) + I_{s-1}(2t).
TruncatedSeries bessel_J(int s, std::size_t order);

/// n! * [t^n]: the count encoded at position n of an exponential generating
/// function. Throws std::out_of_range when n exceeds the order.
Rational egf_coefficient(const TruncatedSeries& s, std::size_t n);

/// Determinant of a square matrix of equal-order series. The series ring has
/// zero divisors and no division, so only division-free algorithms apply:
/// Leibniz expansion up to dimension 5, Berkowitz beyond.
TruncatedSeries series_determinant(const std::vector<std::vector<TruncatedSeries>>& m);

}  // namespace weylcount
