#ifndef NONACYCLE_BAND_MATRIX_HPP
#define NONACYCLE_BAND_MATRIX_HPP

#include <algorithm>
#include <type_traits>
#include <vector>

#include "dense_matrix.hpp"
#include "errors.hpp"
#include "one_based.hpp"

namespace nonacycle {

// The structured factorization needs this many rows/columns; see validate().
inline constexpr int min_structured_order = 12;
// Below this the nine-band-plus-wraps layout itself becomes ambiguous.
inline constexpr int min_band_order = 8;

// Cyclic nonadiagonal matrix of order n in compact form: nine diagonals at
// offsets -4..+4 plus six corner wrap cells. Bands and their index ranges:
//
//   d: 1..n    main diagonal            (i, i)
//   a: 1..n    superdiagonal +1         (i, i+1),  a_n wraps to (n, 1)
//   A: 1..n    superdiagonal +2         (i, i+2),  A_{n-1} -> (n-1, 1), A_n -> (n, 2)
//   M: 1..n-3  superdiagonal +3         (i, i+3)
//   z: 1..n-4  superdiagonal +4         (i, i+4)
//   b: 1..n    subdiagonal  -1          (i, i-1),  b_1 wraps to (1, n)
//   B: 1..n    subdiagonal  -2          (i, i-2),  B_1 -> (1, n-1), B_2 -> (2, n)
//   N: 4..n    subdiagonal  -3          (i, i-3)
//   R: 5..n    subdiagonal  -4          (i, i-4)
//
// Every other cell is zero. Indices are 1-based throughout.
template <typename T>
struct cyclic_nonadiagonal {
    int n = 0;
    one_based<T> d, a, A, M, z, b, B, N, R;

    cyclic_nonadiagonal() = default;
    explicit cyclic_nonadiagonal(int order)
        : n(order),
          d(1, order), a(1, order), A(1, order),
          M(1, order - 3), z(1, order - 4),
          b(1, order), B(1, order),
          N(4, order), R(5, order) {}

    T entry(int i, int j) const {
        if (i < 1 || i > n || j < 1 || j > n) throw index_out_of_range(i, j, n);
        // Corner wraps sit outside the -4..+4 window for every supported n.
        if (i == 1 && j == n) return b(1);
        if (i == 1 && j == n - 1) return B(1);
        if (i == 2 && j == n) return B(2);
        if (i == n - 1 && j == 1) return A(n - 1);
        if (i == n && j == 1) return a(n);
        if (i == n && j == 2) return A(n);
        switch (j - i) {
            case 0: return d(i);
            case 1: return a(i);
            case 2: return A(i);
            case 3: return M(i);
            case 4: return z(i);
            case -1: return b(i);
            case -2: return B(i);
            case -3: return N(i);
            case -4: return R(i);
            default: return T{0};
        }
    }
};

namespace detail {
template <typename T>
inline void check_band(const one_based<T>& band, const char* name, int first, int last) {
    const int expected = last >= first ? last - first + 1 : 0;
    if (band.size() != expected || (band.size() > 0 && band.first() != first))
        throw bad_band_length(name, expected, band.size());
}
} // namespace detail

// Shape check only: band lengths match their declared ranges and the layout
// is unambiguous (n >= 8). Sufficient for the dense/oracle path.
template <typename T>
void validate_bands(const cyclic_nonadiagonal<T>& m) {
    if (m.n < min_band_order)
        throw order_too_small(m.n, min_band_order,
                              "the nine-band layout is not defined below this order");
    detail::check_band(m.d, "d", 1, m.n);
    detail::check_band(m.a, "a", 1, m.n);
    detail::check_band(m.A, "A", 1, m.n);
    detail::check_band(m.M, "M", 1, m.n - 3);
    detail::check_band(m.z, "z", 1, m.n - 4);
    detail::check_band(m.b, "b", 1, m.n);
    detail::check_band(m.B, "B", 1, m.n);
    detail::check_band(m.N, "N", 4, m.n);
    detail::check_band(m.R, "R", 5, m.n);
}

// Full check for the structured factorization path. Orders below 12 cannot be
// factorized by the banded recurrences (their trailing special cases overlap);
// use the oracle module for those.
template <typename T>
void validate(const cyclic_nonadiagonal<T>& m) {
    if (m.n < min_structured_order)
        throw order_too_small(m.n, min_structured_order,
                              "use the dense oracle path for smaller orders");
    validate_bands(m);
}

template <typename T>
dense_matrix<T> to_dense(const cyclic_nonadiagonal<T>& m) {
    validate_bands(m);
    dense_matrix<T> out(m.n);
    for (int i = 1; i <= m.n; ++i)
        for (int j = 1; j <= m.n; ++j) out(i, j) = m.entry(i, j);
    return out;
}

// Columns that can be nonzero in row i, in increasing order.
template <typename T>
std::vector<int> row_support(const cyclic_nonadiagonal<T>& m, int i) {
    std::vector<int> cols;
    const int lo = std::max(1, i - 4);
    const int hi = std::min(m.n, i + 4);
    if (i == m.n - 1 || i == m.n) cols.push_back(1);
    if (i == m.n) cols.push_back(2);
    for (int j = lo; j <= hi; ++j) cols.push_back(j);
    if (i == 1) cols.push_back(m.n - 1);
    if (i == 1 || i == 2) cols.push_back(m.n);
    return cols;
}

// Product of the banded matrix with a dense one; O(n^2) multiplications.
template <typename T>
dense_matrix<T> banded_times_dense(const cyclic_nonadiagonal<T>& m, const dense_matrix<T>& x) {
    dense_matrix<T> out(m.n);
    for (int i = 1; i <= m.n; ++i)
        for (int col : row_support(m, i)) {
            const T mij = m.entry(i, col);
            if (detail::value_is_zero(mij)) continue;
            for (int j = 1; j <= m.n; ++j) out(i, j) += mij * x(col, j);
        }
    return out;
}

template <typename T>
one_based<T> banded_times_column(const cyclic_nonadiagonal<T>& m, const one_based<T>& col) {
    one_based<T> out(1, m.n);
    for (int i = 1; i <= m.n; ++i) {
        T acc{0};
        for (int j : row_support(m, i)) acc += m.entry(i, j) * col(j);
        out(i) = acc;
    }
    return out;
}

// Entrywise conversion between value types, e.g. big_rational -> scalar or
// big_rational -> double.
template <typename To, typename From, typename Fn>
cyclic_nonadiagonal<To> convert(const cyclic_nonadiagonal<From>& m, Fn&& fn) {
    cyclic_nonadiagonal<To> out(m.n);
    const auto map = [&](const one_based<From>& src, one_based<To>& dst) {
        for (int i = src.first(); i <= src.last(); ++i) dst(i) = fn(src(i));
    };
    map(m.d, out.d);
    map(m.a, out.a);
    map(m.A, out.A);
    map(m.M, out.M);
    map(m.z, out.z);
    map(m.b, out.b);
    map(m.B, out.B);
    map(m.N, out.N);
    map(m.R, out.R);
    return out;
}

inline cyclic_nonadiagonal<scalar> promote(const cyclic_nonadiagonal<big_rational>& m) {
    return convert<scalar>(m, [](const big_rational& x) { return scalar(x); });
}

inline cyclic_nonadiagonal<double> demote(const cyclic_nonadiagonal<big_rational>& m) {
    return convert<double>(m, [](const big_rational& x) { return x.to_double(); });
}

} // namespace nonacycle

#endif
