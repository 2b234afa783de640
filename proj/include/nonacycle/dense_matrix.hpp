#ifndef NONACYCLE_DENSE_MATRIX_HPP
#define NONACYCLE_DENSE_MATRIX_HPP

#include <type_traits>
#include <vector>

#include "big_rational.hpp"
#include "errors.hpp"
#include "scalar.hpp"

namespace nonacycle {

namespace detail {
template <typename T>
inline bool value_is_zero(const T& x) {
    if constexpr (std::is_floating_point_v<T>)
        return x == T{0};
    else
        return x.is_zero();
}
} // namespace detail

// Square matrix of values with 1-based (row, column) addressing.
template <typename T>
class dense_matrix {
public:
    dense_matrix() = default;
    explicit dense_matrix(int n)
        : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), T{}) {}

    static dense_matrix identity(int n) {
        dense_matrix m(n);
        for (int i = 1; i <= n; ++i) m(i, i) = T{1};
        return m;
    }

    int order() const { return n_; }

    T& operator()(int i, int j) { return cells_[checked(i, j)]; }
    const T& operator()(int i, int j) const { return cells_[checked(i, j)]; }

    friend dense_matrix operator*(const dense_matrix& x, const dense_matrix& y) {
        const int n = x.n_;
        dense_matrix r(n);
        for (int i = 1; i <= n; ++i)
            for (int m = 1; m <= n; ++m) {
                const T& xim = x(i, m);
                if (detail::value_is_zero(xim)) continue;
                for (int j = 1; j <= n; ++j) {
                    const T& ymj = y(m, j);
                    if (detail::value_is_zero(ymj)) continue;
                    r(i, j) += xim * ymj;
                }
            }
        return r;
    }

    friend bool operator==(const dense_matrix& x, const dense_matrix& y) {
        return x.n_ == y.n_ && x.cells_ == y.cells_;
    }
    friend bool operator!=(const dense_matrix& x, const dense_matrix& y) { return !(x == y); }

    bool is_identity() const {
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (!((*this)(i, j) == (i == j ? T{1} : T{0}))) return false;
        return true;
    }

private:
    std::size_t checked(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw index_out_of_range(i, j, n_);
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j - 1);
    }

    int n_ = 0;
    std::vector<T> cells_;
};

// Row reversal: row i of the result is row n+1-i of the input, i.e. the
// product R*x with R the exchange (anti-diagonal) permutation matrix.
template <typename T>
dense_matrix<T> reverse_rows(const dense_matrix<T>& x) {
    const int n = x.order();
    dense_matrix<T> r(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) r(i, j) = x(n + 1 - i, j);
    return r;
}

} // namespace nonacycle

#endif
