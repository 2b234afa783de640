#ifndef NONACYCLE_ORACLE_HPP
#define NONACYCLE_ORACLE_HPP

#include <optional>
#include <utility>

#include "big_rational.hpp"
#include "dense_matrix.hpp"
#include "errors.hpp"

namespace nonacycle {

// Independent dense reference over plain rationals. Deliberately simple and
// O(n^3); never touches the t machinery it is used to audit.

struct oracle_result {
    big_rational determinant;
    std::optional<dense_matrix<big_rational>> inverse;
};

// Fraction-free (Bareiss) determinant with first-nonzero row pivoting. On an
// all-integer input every intermediate value stays integral; that property is
// asserted and its violation reported as an internal failure.
inline big_rational bareiss_det(dense_matrix<big_rational> m) {
    const int n = m.order();
    if (n == 0) return big_rational(1);
    bool integral = true;
    for (int i = 1; i <= n && integral; ++i)
        for (int j = 1; j <= n && integral; ++j) integral = m(i, j).is_integer();

    int sign = 1;
    big_rational prev(1);
    for (int kk = 1; kk <= n - 1; ++kk) {
        if (m(kk, kk).is_zero()) {
            int r = kk + 1;
            while (r <= n && m(r, kk).is_zero()) ++r;
            if (r > n) return big_rational(0);
            for (int j = 1; j <= n; ++j) std::swap(m(kk, j), m(r, j));
            sign = -sign;
        }
        for (int i = kk + 1; i <= n; ++i)
            for (int j = kk + 1; j <= n; ++j) {
                m(i, j) = (m(i, j) * m(kk, kk) - m(i, kk) * m(kk, j)) / prev;
                if (integral && !m(i, j).is_integer())
                    throw verification_failed("fraction-free elimination produced a non-integer");
            }
        prev = m(kk, kk);
    }
    big_rational det = m(n, n);
    if (sign < 0) det = -det;
    return det;
}

// Exact Gauss-Jordan elimination on [m | I] with first-nonzero pivoting.
// Returns the determinant as a by-product; a singular input yields an absent
// inverse instead of an error.
inline oracle_result gauss_jordan_inverse(dense_matrix<big_rational> m) {
    const int n = m.order();
    dense_matrix<big_rational> inv = dense_matrix<big_rational>::identity(n);
    big_rational det(1);

    for (int kk = 1; kk <= n; ++kk) {
        int r = kk;
        while (r <= n && m(r, kk).is_zero()) ++r;
        if (r > n) return {big_rational(0), std::nullopt};
        if (r != kk) {
            for (int j = 1; j <= n; ++j) {
                std::swap(m(kk, j), m(r, j));
                std::swap(inv(kk, j), inv(r, j));
            }
            det = -det;
        }
        const big_rational pivot = m(kk, kk);
        det *= pivot;
        const big_rational inv_pivot = big_rational(1) / pivot;
        for (int j = 1; j <= n; ++j) {
            m(kk, j) *= inv_pivot;
            inv(kk, j) *= inv_pivot;
        }
        for (int i = 1; i <= n; ++i) {
            if (i == kk) continue;
            const big_rational factor = m(i, kk);
            if (factor.is_zero()) continue;
            for (int j = 1; j <= n; ++j) {
                m(i, j) -= factor * m(kk, j);
                inv(i, j) -= factor * inv(kk, j);
            }
        }
    }
    return {det, std::move(inv)};
}

} // namespace nonacycle

#endif
