#ifndef NONACYCLE_FACTORIZATION_HPP
#define NONACYCLE_FACTORIZATION_HPP

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <type_traits>
#include <vector>

#include "band_matrix.hpp"
#include "big_rational.hpp"
#include "dense_matrix.hpp"
#include "errors.hpp"
#include "one_based.hpp"
#include "scalar.hpp"

namespace nonacycle {

// Breakdown threshold for the floating-point path, where the symbolic rescue
// is unavailable.
inline constexpr double float_pivot_tolerance = 1e-12;

struct substitution_record {
    enum class site { z_band, r_band, pivot };
    site where;
    int index;
};

// Result of the structured Doolittle factorization K_t = L * U.
//
// L is unit lower triangular: f, g, alpha, gamma fill offsets -1..-4 in rows
// up to n-2; rows n-1 and n are k_1..k_{n-2}, 1 and h_1..h_{n-1}, 1.
// U is upper triangular: diagonal c; e, P, T and the z band of K_t fill
// offsets +1..+4; columns n-1 and n are w_1..w_{n-2}, c_{n-1} and
// v_1..v_{n-1}, c_n.
//
// K_t is the working copy of the input after the parameter substitutions:
// zero z_i (i <= n-6) and zero R_i become t up front, and a pivot that comes
// out identically zero through t-free arithmetic is rescued by adding t to
// the corresponding diagonal entry. All recorded in `substitutions`.
template <typename Num>
struct lu_factors {
    int n = 0;
    one_based<Num> c;     // 1..n    pivots / U diagonal
    one_based<Num> e;     // 1..n-3  U offset +1
    one_based<Num> P;     // 1..n-4  U offset +2
    one_based<Num> T;     // 1..n-5  U offset +3
    one_based<Num> f;     // 2..n-2  L offset -1
    one_based<Num> g;     // 3..n-2  L offset -2
    one_based<Num> alpha; // 4..n-2  L offset -3
    one_based<Num> gamma; // 5..n-2  L offset -4
    one_based<Num> k;     // 1..n-2  row n-1 of L
    one_based<Num> h;     // 1..n-1  row n of L
    one_based<Num> w;     // 1..n-2  column n-1 of U
    one_based<Num> v;     // 1..n-1  column n of U
    cyclic_nonadiagonal<Num> K_t;
    std::vector<substitution_record> substitutions;
};

namespace detail {

template <typename Num>
inline bool any_depends_on_t(std::initializer_list<const Num*> xs) {
    if constexpr (std::is_same_v<Num, scalar>) {
        for (const Num* x : xs)
            if (x->depends_on_t()) return true;
        return false;
    } else {
        (void)xs;
        return false;
    }
}

} // namespace detail

// Structured Doolittle LU factorization of the cyclic nonadiagonal matrix.
//
// Num = scalar runs the exact symbolic path: zeros in the z band (i <= n-6),
// the R band, and among the pivots are replaced by the shared parameter t.
// A pivot that reduces to the zero function although t already entered its
// computation throws structurally_singular: stacking a second substitution
// on the single symbol is not defined.
//
// Num = double runs the same recurrences in floating point; any pivot with
// |c_i| < 1e-12 throws zero_pivot instead.
template <typename Num>
lu_factors<Num> factorize(const cyclic_nonadiagonal<Num>& input) {
    static_assert(std::is_same_v<Num, scalar> || std::is_same_v<Num, double>,
                  "factorize runs on the symbolic scalar or on double");
    validate(input);
    const int n = input.n;

    lu_factors<Num> lu;
    lu.n = n;
    lu.c = one_based<Num>(1, n);
    lu.e = one_based<Num>(1, n - 3);
    lu.P = one_based<Num>(1, n - 4);
    lu.T = one_based<Num>(1, n - 5);
    lu.f = one_based<Num>(2, n - 2);
    lu.g = one_based<Num>(3, n - 2);
    lu.alpha = one_based<Num>(4, n - 2);
    lu.gamma = one_based<Num>(5, n - 2);
    lu.k = one_based<Num>(1, n - 2);
    lu.h = one_based<Num>(1, n - 1);
    lu.w = one_based<Num>(1, n - 2);
    lu.v = one_based<Num>(1, n - 1);
    lu.K_t = input;

    cyclic_nonadiagonal<Num>& K = lu.K_t;

    if constexpr (std::is_same_v<Num, scalar>) {
        // Zero z_i up to n-6 and zero R_i become the parameter t. z_{n-5} and
        // z_{n-4} are never divided by and stay as they are.
        for (int i = 1; i <= n - 6; ++i)
            if (K.z(i).is_zero()) {
                K.z(i) = scalar::t();
                lu.substitutions.push_back({substitution_record::site::z_band, i});
            }
        for (int i = 5; i <= n; ++i)
            if (K.R(i).is_zero()) {
                K.R(i) = scalar::t();
                lu.substitutions.push_back({substitution_record::site::r_band, i});
            }
    }

    auto& c = lu.c;
    auto& e = lu.e;
    auto& P = lu.P;
    auto& T = lu.T;
    auto& f = lu.f;
    auto& g = lu.g;
    auto& alpha = lu.alpha;
    auto& gamma = lu.gamma;
    auto& k = lu.k;
    auto& h = lu.h;
    auto& w = lu.w;
    auto& v = lu.v;

    // Zero test right after each pivot, in computation order. `inputs_have_t`
    // distinguishes a plain zero pivot (rescued) from one that cancelled to
    // the zero function through t-dependent operands (unrecoverable).
    const auto settle_pivot = [&](int i, bool inputs_have_t) {
        if constexpr (std::is_same_v<Num, scalar>) {
            if (c(i).is_zero()) {
                if (inputs_have_t) throw structurally_singular(i);
                c(i) = scalar::t();
                K.d(i) = K.d(i) + scalar::t();
                lu.substitutions.push_back({substitution_record::site::pivot, i});
            }
        } else {
            (void)inputs_have_t;
            if (std::abs(c(i)) < float_pivot_tolerance) throw zero_pivot("c", i);
        }
    };
    using detail::any_depends_on_t;

    // Rows and columns 1..4.
    c(1) = K.d(1);
    settle_pivot(1, any_depends_on_t<Num>({&K.d(1)}));
    e(1) = K.a(1);
    P(1) = K.A(1);
    T(1) = K.M(1);
    f(2) = K.b(2) / c(1);
    g(3) = K.B(3) / c(1);
    alpha(4) = K.N(4) / c(1);
    k(1) = K.A(n - 1) / c(1);
    w(1) = K.B(1);
    h(1) = K.a(n) / c(1);
    v(1) = K.b(1);

    c(2) = K.d(2) - f(2) * e(1);
    settle_pivot(2, any_depends_on_t<Num>({&K.d(2), &f(2), &e(1)}));
    f(3) = (K.b(3) - g(3) * e(1)) / c(2);
    g(4) = (K.B(4) - alpha(4) * e(1)) / c(2);
    e(2) = K.a(2) - f(2) * P(1);
    P(2) = K.A(2) - f(2) * T(1);
    T(2) = K.M(2) - f(2) * K.z(1);
    k(2) = -(k(1) * e(1)) / c(2);
    w(2) = -(f(2) * w(1));
    h(2) = (K.A(n) - h(1) * e(1)) / c(2);
    v(2) = K.B(2) - f(2) * v(1);

    c(3) = K.d(3) - g(3) * P(1) - f(3) * e(2);
    settle_pivot(3, any_depends_on_t<Num>({&K.d(3), &g(3), &P(1), &f(3), &e(2)}));
    f(4) = (K.b(4) - alpha(4) * P(1) - g(4) * e(2)) / c(3);
    e(3) = K.a(3) - g(3) * T(1) - f(3) * P(2);
    P(3) = K.A(3) - g(3) * K.z(1) - f(3) * T(2);
    T(3) = K.M(3) - f(3) * K.z(2);
    k(3) = -(k(1) * P(1) + k(2) * e(2)) / c(3);
    w(3) = -(g(3) * w(1)) - f(3) * w(2);
    h(3) = -(h(1) * P(1) + h(2) * e(2)) / c(3);
    v(3) = -(g(3) * v(1)) - f(3) * v(2);

    c(4) = K.d(4) - alpha(4) * T(1) - g(4) * P(2) - f(4) * e(3);
    settle_pivot(4, any_depends_on_t<Num>({&K.d(4), &alpha(4), &T(1), &g(4), &P(2), &f(4), &e(3)}));
    e(4) = K.a(4) - alpha(4) * K.z(1) - g(4) * T(2) - f(4) * P(3);
    P(4) = K.A(4) - g(4) * K.z(2) - f(4) * T(3);
    T(4) = K.M(4) - f(4) * K.z(3);
    k(4) = -(k(1) * T(1) + k(2) * P(2) + k(3) * e(3)) / c(4);
    w(4) = -(alpha(4) * w(1)) - g(4) * w(2) - f(4) * w(3);
    h(4) = -(h(1) * T(1) + h(2) * P(2) + h(3) * e(3)) / c(4);
    v(4) = -(alpha(4) * v(1)) - g(4) * v(2) - f(4) * v(3);

    // Main sweep. T_i and P_i are produced inside the same loop: e_i needs
    // P_{i-1} and T_{i-2}, so they cannot be deferred past it.
    for (int i = 5; i <= n - 2; ++i) {
        gamma(i) = K.R(i) / c(i - 4);
        alpha(i) = (K.N(i) - gamma(i) * e(i - 4)) / c(i - 3);
        g(i) = (K.B(i) - gamma(i) * P(i - 4) - alpha(i) * e(i - 3)) / c(i - 2);
        f(i) = (K.b(i) - gamma(i) * T(i - 4) - alpha(i) * P(i - 3) - g(i) * e(i - 2)) / c(i - 1);
        if (i <= n - 5) T(i) = K.M(i) - f(i) * K.z(i - 1);
        if (i <= n - 4) P(i) = K.A(i) - g(i) * K.z(i - 2) - f(i) * T(i - 1);
        if (i <= n - 3) e(i) = K.a(i) - alpha(i) * K.z(i - 3) - g(i) * T(i - 2) - f(i) * P(i - 1);
        c(i) = K.d(i) - gamma(i) * K.z(i - 4) - alpha(i) * T(i - 3) - g(i) * P(i - 2) -
               f(i) * e(i - 1);
        settle_pivot(i, any_depends_on_t<Num>({&K.d(i), &gamma(i), &K.z(i - 4), &alpha(i),
                                               &T(i - 3), &g(i), &P(i - 2), &f(i), &e(i - 1)}));
    }

    // Row n-1 of L and column n-1 of U.
    for (int i = 5; i <= n - 6; ++i) {
        k(i) = -(k(i - 4) * K.z(i - 4) + k(i - 3) * T(i - 3) + k(i - 2) * P(i - 2) +
                 k(i - 1) * e(i - 1)) /
               c(i);
        w(i) = -(gamma(i) * w(i - 4)) - alpha(i) * w(i - 3) - g(i) * w(i - 2) - f(i) * w(i - 1);
    }
    k(n - 5) = (K.R(n - 1) - k(n - 9) * K.z(n - 9) - k(n - 8) * T(n - 8) - k(n - 7) * P(n - 7) -
                k(n - 6) * e(n - 6)) /
               c(n - 5);
    k(n - 4) = (K.N(n - 1) - k(n - 8) * K.z(n - 8) - k(n - 7) * T(n - 7) - k(n - 6) * P(n - 6) -
                k(n - 5) * e(n - 5)) /
               c(n - 4);
    k(n - 3) = (K.B(n - 1) - k(n - 7) * K.z(n - 7) - k(n - 6) * T(n - 6) - k(n - 5) * P(n - 5) -
                k(n - 4) * e(n - 4)) /
               c(n - 3);
    k(n - 2) = (K.b(n - 1) - k(n - 6) * K.z(n - 6) - k(n - 5) * T(n - 5) - k(n - 4) * P(n - 4) -
                k(n - 3) * e(n - 3)) /
               c(n - 2);
    // K[n-5, n-1] is the band entry z_{n-5}; same for K[n-4, n] = z_{n-4} below.
    w(n - 5) = K.z(n - 5) - gamma(n - 5) * w(n - 9) - alpha(n - 5) * w(n - 8) -
               g(n - 5) * w(n - 7) - f(n - 5) * w(n - 6);
    w(n - 4) = K.M(n - 4) - gamma(n - 4) * w(n - 8) - alpha(n - 4) * w(n - 7) -
               g(n - 4) * w(n - 6) - f(n - 4) * w(n - 5);
    w(n - 3) = K.A(n - 3) - gamma(n - 3) * w(n - 7) - alpha(n - 3) * w(n - 6) -
               g(n - 3) * w(n - 5) - f(n - 3) * w(n - 4);
    w(n - 2) = K.a(n - 2) - gamma(n - 2) * w(n - 6) - alpha(n - 2) * w(n - 5) -
               g(n - 2) * w(n - 4) - f(n - 2) * w(n - 3);

    {
        Num acc = K.d(n - 1);
        bool dep = detail::any_depends_on_t<Num>({&K.d(n - 1)});
        for (int i = 1; i <= n - 2; ++i) {
            acc = acc - k(i) * w(i);
            dep = dep || detail::any_depends_on_t<Num>({&k(i), &w(i)});
        }
        c(n - 1) = acc;
        settle_pivot(n - 1, dep);
    }

    // Row n of L and column n of U.
    for (int i = 5; i <= n - 5; ++i) {
        h(i) = -(h(i - 4) * K.z(i - 4) + h(i - 3) * T(i - 3) + h(i - 2) * P(i - 2) +
                 h(i - 1) * e(i - 1)) /
               c(i);
        v(i) = -(gamma(i) * v(i - 4)) - alpha(i) * v(i - 3) - g(i) * v(i - 2) - f(i) * v(i - 1);
    }
    h(n - 4) = (K.R(n) - h(n - 8) * K.z(n - 8) - h(n - 7) * T(n - 7) - h(n - 6) * P(n - 6) -
                h(n - 5) * e(n - 5)) /
               c(n - 4);
    h(n - 3) = (K.N(n) - h(n - 7) * K.z(n - 7) - h(n - 6) * T(n - 6) - h(n - 5) * P(n - 5) -
                h(n - 4) * e(n - 4)) /
               c(n - 3);
    h(n - 2) = (K.B(n) - h(n - 6) * K.z(n - 6) - h(n - 5) * T(n - 5) - h(n - 4) * P(n - 4) -
                h(n - 3) * e(n - 3)) /
               c(n - 2);
    v(n - 4) = K.z(n - 4) - gamma(n - 4) * v(n - 8) - alpha(n - 4) * v(n - 7) -
               g(n - 4) * v(n - 6) - f(n - 4) * v(n - 5);
    v(n - 3) = K.M(n - 3) - gamma(n - 3) * v(n - 7) - alpha(n - 3) * v(n - 6) -
               g(n - 3) * v(n - 5) - f(n - 3) * v(n - 4);
    v(n - 2) = K.A(n - 2) - gamma(n - 2) * v(n - 6) - alpha(n - 2) * v(n - 5) -
               g(n - 2) * v(n - 4) - f(n - 2) * v(n - 3);
    {
        Num acc = K.b(n);
        for (int i = 1; i <= n - 2; ++i) acc = acc - h(i) * w(i);
        h(n - 1) = acc / c(n - 1);
    }
    {
        Num acc = K.a(n - 1);
        for (int i = 1; i <= n - 2; ++i) acc = acc - k(i) * v(i);
        v(n - 1) = acc;
    }
    {
        Num acc = K.d(n);
        bool dep = detail::any_depends_on_t<Num>({&K.d(n)});
        for (int i = 1; i <= n - 1; ++i) {
            acc = acc - h(i) * v(i);
            dep = dep || detail::any_depends_on_t<Num>({&h(i), &v(i)});
        }
        c(n) = acc;
        settle_pivot(n, dep);
    }

    return lu;
}

// det(K) = product of the pivots, accumulated in Q(t) and evaluated at t = 0.
inline big_rational determinant(const lu_factors<scalar>& lu) {
    scalar prod{1};
    for (int i = 1; i <= lu.n; ++i) prod *= lu.c(i);
    // The reduced product is det(K_t), a polynomial in t: its canonical
    // denominator must be 1, so evaluation at t = 0 cannot hit a pole.
    if (prod.den().degree() != 0)
        throw verification_failed("pivot product is not a polynomial in t: " + prod.to_string());
    return prod.eval_at_zero();
}

inline double determinant(const lu_factors<double>& lu) {
    double prod = 1.0;
    for (int i = 1; i <= lu.n; ++i) prod *= lu.c(i);
    return prod;
}

template <typename Num>
dense_matrix<Num> assemble_l(const lu_factors<Num>& lu) {
    const int n = lu.n;
    dense_matrix<Num> L(n);
    for (int i = 1; i <= n; ++i) L(i, i) = Num{1};
    for (int i = 2; i <= n - 2; ++i) L(i, i - 1) = lu.f(i);
    for (int i = 3; i <= n - 2; ++i) L(i, i - 2) = lu.g(i);
    for (int i = 4; i <= n - 2; ++i) L(i, i - 3) = lu.alpha(i);
    for (int i = 5; i <= n - 2; ++i) L(i, i - 4) = lu.gamma(i);
    for (int j = 1; j <= n - 2; ++j) L(n - 1, j) = lu.k(j);
    for (int j = 1; j <= n - 1; ++j) L(n, j) = lu.h(j);
    return L;
}

template <typename Num>
dense_matrix<Num> assemble_u(const lu_factors<Num>& lu) {
    const int n = lu.n;
    dense_matrix<Num> U(n);
    for (int i = 1; i <= n; ++i) U(i, i) = lu.c(i);
    for (int i = 1; i <= n - 3; ++i) U(i, i + 1) = lu.e(i);
    for (int i = 1; i <= n - 4; ++i) U(i, i + 2) = lu.P(i);
    for (int i = 1; i <= n - 5; ++i) U(i, i + 3) = lu.T(i);
    for (int i = 1; i <= n - 6; ++i) U(i, i + 4) = lu.K_t.z(i);
    for (int i = 1; i <= n - 2; ++i) U(i, n - 1) = lu.w(i);
    for (int i = 1; i <= n - 1; ++i) U(i, n) = lu.v(i);
    return U;
}

} // namespace nonacycle

#endif
