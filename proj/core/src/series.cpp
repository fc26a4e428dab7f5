#include "weylcount/series.hpp"

#include "weylcount/determinant.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace weylcount {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("series: mixed truncation orders (" +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
    }
}

}  // namespace

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, std::size_t power, std::size_t order) {
    TruncatedSeries s(order);
    if (power <= order) {
        s.coeffs_[power] = c;
    }
    return s;
}

const Rational& TruncatedSeries::coefficient(std::size_t k) const {
    if (k >= coeffs_.size()) {
        throw std::out_of_range("series: coefficient index " + std::to_string(k) +
                                " exceeds order " + std::to_string(order()));
    }
    return coeffs_[k];
}

void TruncatedSeries::set_coefficient(std::size_t k, Rational value) {
    if (k >= coeffs_.size()) {
        throw std::out_of_range("series: coefficient index " + std::to_string(k) +
                                " exceeds order " + std::to_string(order()));
    }
    coeffs_[k] = std::move(value);
}

bool TruncatedSeries::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k > 0) {
            os << ", ";
        }
        os << coeffs_[k];
    }
    os << "]";
    return os.str();
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        r.coeffs_[k] = -coeffs_[k];
    }
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) {
        r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    }
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) {
        r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    }
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] != 0) {
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return r;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s) {
    TruncatedSeries r(s.order());
    for (std::size_t k = 0; k < s.coeffs_.size(); ++k) {
        r.coeffs_[k] = c * s.coeffs_[k];
    }
    return r;
}

TruncatedSeries series_exp(const TruncatedSeries& p) {
    if (p.coefficient(0) != 0) {
        throw std::domain_error("series_exp: nonzero constant term");
    }
    const std::size_t order = p.order();
    TruncatedSeries f(order);
    f.set_coefficient(0, 1);
    // (n+1) f_{n+1} = sum_{k=0..n} (k+1) p_{k+1} f_{n-k}
    for (std::size_t n = 0; n < order; ++n) {
        Rational acc = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            const Rational& pk = p.coefficient(k + 1);
            if (pk != 0) {
                acc += Rational(k + 1) * pk * f.coefficient(n - k);
            }
        }
        f.set_coefficient(n + 1, acc / Rational(n + 1));
    }
    return f;
}

TruncatedSeries bessel_I(int s, std::size_t order) {
    const int a = std::abs(s);
    TruncatedSeries r(order);
    FactorialTable fact(static_cast<int>(order));
    for (int n = 0; 2 * n + a <= static_cast<int>(order); ++n) {
        r.set_coefficient(static_cast<std::size_t>(2 * n + a),
                          make_rational(1, fact(n) * fact(n + a)));
    }
    return r;
}

TruncatedSeries bessel_J(int s, std::size_t order) {
    return bessel_I(s, order) + bessel_I(s - 1, order);
}

Rational egf_coefficient(const TruncatedSeries& s, std::size_t n) {
    if (n > s.order()) {
        throw std::out_of_range("egf_coefficient: n = " + std::to_string(n) +
                                " exceeds order " + std::to_string(s.order()));
    }
    return Rational(factorial(static_cast<int>(n))) * s.coefficient(n);
}

TruncatedSeries series_determinant(const std::vector<std::vector<TruncatedSeries>>& m) {
    detail::require_square(m);
    const std::size_t order = m[0][0].order();
    for (const auto& row : m) {
        for (const auto& entry : row) {
            if (entry.order() != order) {
                throw std::invalid_argument("series_determinant: entries have mixed orders");
            }
        }
    }
    const TruncatedSeries zero = TruncatedSeries::zero(order);
    if (m.size() <= 5) {
        return det_leibniz(m, zero);
    }
    return det_berkowitz(m, zero, TruncatedSeries::one(order));
}

}  // namespace weylcount
