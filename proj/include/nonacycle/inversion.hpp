#ifndef NONACYCLE_INVERSION_HPP
#define NONACYCLE_INVERSION_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "band_matrix.hpp"
#include "big_rational.hpp"
#include "dense_matrix.hpp"
#include "errors.hpp"
#include "factorization.hpp"
#include "one_based.hpp"
#include "scalar.hpp"

namespace nonacycle {

template <typename Num>
struct inverse_result {
    dense_matrix<Num> inverse;
    Num determinant;
    bool verified = false;
    std::size_t substitutions = 0;
};

namespace detail {

template <typename Num>
inline void check_divisor(const Num& x, const char* symbol, int i) {
    if constexpr (std::is_same_v<Num, double>) {
        if (std::abs(x) < float_pivot_tolerance) throw zero_pivot(symbol, i);
    } else {
        (void)x;
        (void)symbol;
        (void)i;
    }
}

} // namespace detail

// Columns n-5..n of the inverse, from the closed forms on the factorization
// coefficients. Column j of the result array index is j - (n-5).
// Each column satisfies K_t * C_j = E_j identically in t.
template <typename Num>
std::array<one_based<Num>, 6> last_six_columns(const lu_factors<Num>& lu) {
    const int n = lu.n;
    const auto& c = lu.c;
    const auto& e = lu.e;
    const auto& P = lu.P;
    const auto& T = lu.T;
    const auto& f = lu.f;
    const auto& g = lu.g;
    const auto& alpha = lu.alpha;
    const auto& k = lu.k;
    const auto& h = lu.h;
    const auto& w = lu.w;
    const auto& v = lu.v;

    std::array<one_based<Num>, 6> cols;
    for (auto& col : cols) col = one_based<Num>(1, n);
    const auto S = [&](int i, int j) -> Num& { return cols[static_cast<std::size_t>(j - (n - 6) - 1)](i); };

    for (int i = 1; i <= n; ++i) detail::check_divisor(c(i), "c", i);

    // Bottom-right seeds, column by column from j = n down to j = n-5.
    S(n, n) = Num{1} / c(n);
    S(n - 1, n) = -(v(n - 1) * S(n, n)) / c(n - 1);

    S(n, n - 1) = -h(n - 1) / c(n);
    S(n - 1, n - 1) = (Num{1} - v(n - 1) * S(n, n - 1)) / c(n - 1);

    S(n, n - 2) = (-h(n - 2) + h(n - 1) * k(n - 2)) / c(n);
    S(n - 1, n - 2) = (-k(n - 2) - v(n - 1) * S(n, n - 2)) / c(n - 1);
    S(n - 2, n - 2) = (Num{1} - w(n - 2) * S(n - 1, n - 2) - v(n - 2) * S(n, n - 2)) / c(n - 2);

    S(n, n - 3) = (-h(n - 3) + h(n - 2) * f(n - 2) + h(n - 1) * k(n - 3) -
                   h(n - 1) * k(n - 2) * f(n - 2)) /
                  c(n);
    S(n - 1, n - 3) = (-k(n - 3) + k(n - 2) * f(n - 2) - v(n - 1) * S(n, n - 3)) / c(n - 1);
    S(n - 2, n - 3) =
        (-f(n - 2) - w(n - 2) * S(n - 1, n - 3) - v(n - 2) * S(n, n - 3)) / c(n - 2);
    S(n - 3, n - 3) = (Num{1} - e(n - 3) * S(n - 2, n - 3) - w(n - 3) * S(n - 1, n - 3) -
                       v(n - 3) * S(n, n - 3)) /
                      c(n - 3);

    S(n, n - 4) = (-h(n - 4) + h(n - 3) * f(n - 3) + h(n - 2) * g(n - 2) -
                   h(n - 2) * f(n - 2) * f(n - 3) + h(n - 1) * k(n - 4) -
                   h(n - 1) * k(n - 3) * f(n - 3) - h(n - 1) * k(n - 2) * g(n - 2) +
                   h(n - 1) * k(n - 2) * f(n - 2) * f(n - 3)) /
                  c(n);
    S(n - 1, n - 4) = (-k(n - 4) + k(n - 3) * f(n - 3) + k(n - 2) * g(n - 2) -
                       k(n - 2) * f(n - 2) * f(n - 3) - v(n - 1) * S(n, n - 4)) /
                      c(n - 1);
    S(n - 2, n - 4) = (-g(n - 2) + f(n - 2) * f(n - 3) - w(n - 2) * S(n - 1, n - 4) -
                       v(n - 2) * S(n, n - 4)) /
                      c(n - 2);
    S(n - 3, n - 4) = (-f(n - 3) - e(n - 3) * S(n - 2, n - 4) - w(n - 3) * S(n - 1, n - 4) -
                       v(n - 3) * S(n, n - 4)) /
                      c(n - 3);
    S(n - 4, n - 4) = (Num{1} - e(n - 4) * S(n - 3, n - 4) - P(n - 4) * S(n - 2, n - 4) -
                       w(n - 4) * S(n - 1, n - 4) - v(n - 4) * S(n, n - 4)) /
                      c(n - 4);

    S(n, n - 5) =
        (-h(n - 5) + h(n - 4) * f(n - 4) + h(n - 3) * g(n - 3) - h(n - 3) * f(n - 3) * f(n - 4) +
         h(n - 2) * alpha(n - 2) - h(n - 2) * g(n - 2) * f(n - 4) -
         h(n - 2) * f(n - 2) * g(n - 3) + h(n - 2) * f(n - 2) * f(n - 3) * f(n - 4) +
         h(n - 1) * k(n - 5) - h(n - 1) * k(n - 4) * f(n - 4) - h(n - 1) * k(n - 3) * g(n - 3) +
         h(n - 1) * k(n - 3) * f(n - 3) * f(n - 4) - h(n - 1) * k(n - 2) * alpha(n - 2) +
         h(n - 1) * k(n - 2) * g(n - 2) * f(n - 4) + h(n - 1) * k(n - 2) * f(n - 2) * g(n - 3) -
         h(n - 1) * k(n - 2) * f(n - 2) * f(n - 3) * f(n - 4)) /
        c(n);
    S(n - 1, n - 5) =
        (-k(n - 5) + k(n - 4) * f(n - 4) + k(n - 3) * g(n - 3) - k(n - 3) * f(n - 3) * f(n - 4) +
         k(n - 2) * alpha(n - 2) - k(n - 2) * g(n - 2) * f(n - 4) -
         k(n - 2) * f(n - 2) * g(n - 3) + k(n - 2) * f(n - 2) * f(n - 3) * f(n - 4) -
         v(n - 1) * S(n, n - 5)) /
        c(n - 1);
    S(n - 2, n - 5) = (-alpha(n - 2) + g(n - 2) * f(n - 4) + f(n - 2) * g(n - 3) -
                       f(n - 2) * f(n - 3) * f(n - 4) - w(n - 2) * S(n - 1, n - 5) -
                       v(n - 2) * S(n, n - 5)) /
                      c(n - 2);
    S(n - 3, n - 5) = (-g(n - 3) + f(n - 3) * f(n - 4) - e(n - 3) * S(n - 2, n - 5) -
                       w(n - 3) * S(n - 1, n - 5) - v(n - 3) * S(n, n - 5)) /
                      c(n - 3);
    S(n - 4, n - 5) = (-f(n - 4) - e(n - 4) * S(n - 3, n - 5) - P(n - 4) * S(n - 2, n - 5) -
                       w(n - 4) * S(n - 1, n - 5) - v(n - 4) * S(n, n - 5)) /
                      c(n - 4);
    S(n - 5, n - 5) = (Num{1} - e(n - 5) * S(n - 4, n - 5) - P(n - 5) * S(n - 3, n - 5) -
                       T(n - 5) * S(n - 2, n - 5) - w(n - 5) * S(n - 1, n - 5) -
                       v(n - 5) * S(n, n - 5)) /
                      c(n - 5);

    // Rows n-2..n-5 for the columns the seeds did not reach.
    for (int j = n; j >= n - 1; --j)
        S(n - 2, j) = -(w(n - 2) * S(n - 1, j) + v(n - 2) * S(n, j)) / c(n - 2);
    for (int j = n; j >= n - 2; --j)
        S(n - 3, j) =
            -(e(n - 3) * S(n - 2, j) + w(n - 3) * S(n - 1, j) + v(n - 3) * S(n, j)) / c(n - 3);
    for (int j = n; j >= n - 3; --j)
        S(n - 4, j) = -(e(n - 4) * S(n - 3, j) + P(n - 4) * S(n - 2, j) +
                        w(n - 4) * S(n - 1, j) + v(n - 4) * S(n, j)) /
                      c(n - 4);
    for (int j = n; j >= n - 4; --j)
        S(n - 5, j) = -(e(n - 5) * S(n - 4, j) + P(n - 5) * S(n - 3, j) +
                        T(n - 5) * S(n - 2, j) + w(n - 5) * S(n - 1, j) + v(n - 5) * S(n, j)) /
                      c(n - 5);

    // Upward sweep through the banded rows.
    for (int j = n; j >= n - 5; --j)
        for (int i = n - 6; i >= 1; --i)
            S(i, j) = -(e(i) * S(i + 1, j) + P(i) * S(i + 2, j) + T(i) * S(i + 3, j) +
                        lu.K_t.z(i) * S(i + 4, j) + w(i) * S(n - 1, j) + v(i) * S(n, j)) /
                      c(i);

    return cols;
}

// Completes the inverse from its last six columns: each remaining column C_j
// falls out of column j+4 of K_t, whose entries multiply C_{j+1}..C_{j+8}
// (clipped to row n), divided by z_j. Valid since z_j != 0 for j <= n-6 after
// the substitutions. Produces the full matrix S with K_t * S = I in t.
template <typename Num>
dense_matrix<Num> back_columns(const lu_factors<Num>& lu,
                               const std::array<one_based<Num>, 6>& six) {
    const int n = lu.n;
    const cyclic_nonadiagonal<Num>& K = lu.K_t;
    dense_matrix<Num> S(n);
    for (int j = n - 5; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            S(i, j) = six[static_cast<std::size_t>(j - (n - 6) - 1)](i);

    for (int j = n - 6; j >= 1; --j) {
        const int col = j + 4;
        const Num& zj = K.z(j);
        detail::check_divisor(zj, "z", j);
        const int last_term = std::min(j + 8, n);
        std::vector<std::pair<int, Num>> terms;
        for (int m = j + 1; m <= last_term; ++m) {
            Num coeff = K.entry(m, col);
            if (!detail::value_is_zero(coeff)) terms.emplace_back(m, std::move(coeff));
        }
        for (int i = 1; i <= n; ++i) {
            Num acc = i == col ? Num{1} : Num{0};
            for (const auto& [m, coeff] : terms) acc = acc - coeff * S(i, m);
            S(i, j) = acc / zj;
        }
    }
    return S;
}

// True iff to_dense(m) * candidate is exactly the identity.
inline bool verify_inverse(const cyclic_nonadiagonal<big_rational>& m,
                           const dense_matrix<big_rational>& candidate) {
    return banded_times_dense(m, candidate).is_identity();
}

// Full exact pipeline: factorize with the symbolic rescue, test the
// determinant, build all inverse columns, substitute t = 0, and (optionally)
// verify K * K^{-1} = I in exact arithmetic.
inline inverse_result<big_rational> invert(const cyclic_nonadiagonal<big_rational>& m,
                                           bool verify = true) {
    validate(m);
    const auto lu = factorize(promote(m));
    const big_rational det = determinant(lu);
    if (det.is_zero()) throw singular_matrix();

    const auto six = last_six_columns(lu);
    const dense_matrix<scalar> full = back_columns(lu, six);

    const int n = m.n;
    dense_matrix<big_rational> inv(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) inv(i, j) = full(i, j).eval_at_zero();

    inverse_result<big_rational> out{std::move(inv), det, false, lu.substitutions.size()};
    if (verify) {
        if (!verify_inverse(m, out.inverse))
            throw verification_failed("K * K^{-1} != I after substitution");
        out.verified = true;
    }
    return out;
}

// Floating-point pipeline; verification is not meaningful here and stays off.
inline inverse_result<double> invert(const cyclic_nonadiagonal<double>& m) {
    validate(m);
    const auto lu = factorize(m);
    const double det = determinant(lu);
    if (det == 0.0) throw singular_matrix();
    const auto six = last_six_columns(lu);
    dense_matrix<double> full = back_columns(lu, six);
    return inverse_result<double>{std::move(full), det, false, 0};
}

// Inverse of the anti-nonadiagonal counterpart Y = K * R: since R is its own
// inverse, Y^{-1} = R * K^{-1}, i.e. the row-reversed inverse of K.
inline inverse_result<big_rational> anti_inverse(const cyclic_nonadiagonal<big_rational>& m,
                                                 bool verify = true) {
    inverse_result<big_rational> res = invert(m, verify);
    res.inverse = reverse_rows(res.inverse);
    return res;
}

} // namespace nonacycle

#endif
