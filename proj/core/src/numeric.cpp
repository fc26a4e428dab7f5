#include "weylcount/numeric.hpp"

namespace weylcount {

Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

BigInt factorial(int n) {
    if (n < 0) {
        throw std::invalid_argument("factorial: negative argument");
    }
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt c = 1;
    for (int i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;  // exact at every step
    }
    return c;
}

BigInt odd_double_factorial(int r) {
    if (r < 0) {
        throw std::invalid_argument("odd_double_factorial: negative argument");
    }
    BigInt f = 1;
    for (int i = 3; i <= 2 * r - 1; i += 2) {
        f *= i;
    }
    return f;
}

bool is_integral(const Rational& q) {
    return denominator(q) == 1;
}

BigInt to_integer(const Rational& q) {
    if (!is_integral(q)) {
        throw std::logic_error("to_integer: value " + q.str() + " is not an integer");
    }
    return numerator(q);
}

FactorialTable::FactorialTable(int max_n) {
    if (max_n < 0) {
        throw std::invalid_argument("FactorialTable: negative bound");
    }
    table_.resize(static_cast<std::size_t>(max_n) + 1);
    table_[0] = 1;
    for (int i = 1; i <= max_n; ++i) {
        table_[static_cast<std::size_t>(i)] = table_[static_cast<std::size_t>(i) - 1] * i;
    }
}

const BigInt& FactorialTable::operator()(int n) const {
    if (n < 0 || n > max()) {
        throw std::out_of_range("FactorialTable: index out of range");
    }
    return table_[static_cast<std::size_t>(n)];
}

}  // namespace weylcount
