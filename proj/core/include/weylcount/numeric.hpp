#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace weylcount {

/// Arbitrary-precision signed integer. Counts in this library grow like
/// (2n-1)!! and overflow machine words almost immediately.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always kept in lowest terms with a positive denominator;
/// zero is canonically 0/1.
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den in canonical form. Accepts a negative denominator
/// (the sign is moved to the numerator); throws std::invalid_argument on
/// a zero denominator.
Rational make_rational(BigInt num, BigInt den);

/// n!; requires n >= 0.
BigInt factorial(int n);

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(int n, int k);

/// (2r-1)!! = 1 * 3 * ... * (2r-1); the empty product (r = 0) is 1.
BigInt odd_double_factorial(int r);

bool is_integral(const Rational& q);

/// Converts a rational known to be an integer; throws std::logic_error
/// otherwise (a non-integral value here always indicates a defect upstream).
BigInt to_integer(const Rational& q);

/// 0!..max_n! computed once; lookups by reference.
class FactorialTable {
public:
    explicit FactorialTable(int max_n);
    const BigInt& operator()(int n) const;
    int max() const { return static_cast<int>(table_.size()) - 1; }

private:
    std::vector<BigInt> table_;
};

}  // namespace weylcount
