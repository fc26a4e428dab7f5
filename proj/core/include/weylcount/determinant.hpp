#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace weylcount {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

template <class T>
void require_square(const Matrix<T>& m) {
    if (m.empty()) {
        throw std::invalid_argument("determinant: empty matrix");
    }
    for (const auto& row : m) {
        if (row.size() != m.size()) {
            throw std::invalid_argument("determinant: matrix is not square");
        }
    }
}

}  // namespace detail

/// Determinant as the signed sum over all permutations. Works over any
/// commutative ring (only +, -, * are used); practical for dimension <= 6.
template <class T>
T det_leibniz(const Matrix<T>& m, const T& zero) {
    detail::require_square(m);
    const std::size_t d = m.size();
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    T acc = zero;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i + 1; j < d; ++j) {
                if (perm[i] > perm[j]) {
                    ++inversions;
                }
            }
        }
        T prod = m[0][perm[0]];
        for (std::size_t i = 1; i < d; ++i) {
            prod = prod * m[i][perm[i]];
        }
        if (inversions % 2 == 0) {
            acc = acc + prod;
        } else {
            acc = acc - prod;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

/// Berkowitz' division-free determinant: builds the characteristic
/// polynomial of each leading principal submatrix through lower-triangular
/// Toeplitz products. O(d^4) ring operations and no division, so it is
/// valid over rings with zero divisors (e.g. truncated power series).
template <class T>
T det_berkowitz(const Matrix<T>& m, const T& zero, const T& one) {
    detail::require_square(m);
    const std::size_t d = m.size();

    // coeffs of the characteristic polynomial of the leading 1x1 block
    std::vector<T> poly{one, zero - m[0][0]};

    for (std::size_t i = 1; i < d; ++i) {
        // q holds [1, -a_ii, -(R C), -(R M C), -(R M^2 C), ...] where M is the
        // leading i x i block, R the row to its left, C the column above a_ii.
        std::vector<T> q(i + 2, zero);
        q[0] = one;
        q[1] = zero - m[i][i];
        std::vector<T> w(i, zero);
        for (std::size_t r = 0; r < i; ++r) {
            w[r] = m[r][i];
        }
        for (std::size_t k = 2; k <= i + 1; ++k) {
            T dot = zero;
            for (std::size_t r = 0; r < i; ++r) {
                dot = dot + m[i][r] * w[r];
            }
            q[k] = zero - dot;
            if (k <= i) {
                std::vector<T> next(i, zero);
                for (std::size_t r = 0; r < i; ++r) {
                    for (std::size_t c = 0; c < i; ++c) {
                        next[r] = next[r] + m[r][c] * w[c];
                    }
                }
                w = std::move(next);
            }
        }
        // poly <- leading i+2 coefficients of q * poly
        std::vector<T> next(i + 2, zero);
        for (std::size_t a = 0; a < q.size(); ++a) {
            for (std::size_t b = 0; b < poly.size() && a + b < next.size(); ++b) {
                next[a + b] = next[a + b] + q[a] * poly[b];
            }
        }
        poly = std::move(next);
    }

    // char poly = sum poly[k] x^{d-k}; det = (-1)^d * constant term
    T det = poly[d];
    if (d % 2 == 1) {
        det = zero - det;
    }
    return det;
}

}  // namespace weylcount
