#ifndef NONACYCLE_RANDOM_MATRIX_HPP
#define NONACYCLE_RANDOM_MATRIX_HPP

#include <cstdint>
#include <random>

#include "band_matrix.hpp"
#include "big_rational.hpp"
#include "one_based.hpp"

namespace nonacycle {

// Deterministic integer matrix generator used by the test suite and the
// hidden gen-random command. Entries are uniform in [-5, 5]; the values are
// derived from raw mt19937_64 output, so a seed reproduces the same matrix on
// every platform.
class band_rng {
public:
    explicit band_rng(std::uint64_t seed) : rng_(seed) {}

    long uniform_entry() { return static_cast<long>(rng_() % 11u) - 5; }

    long nonzero_entry() {
        long x = 0;
        do {
            x = uniform_entry();
        } while (x == 0);
        return x;
    }

private:
    std::mt19937_64 rng_;
};

inline cyclic_nonadiagonal<big_rational> random_matrix(int n, std::uint64_t seed,
                                                       bool rescue_free = false) {
    band_rng rng(seed);
    cyclic_nonadiagonal<big_rational> m(n);
    const auto fill = [&](one_based<big_rational>& band, bool nonzero) {
        for (int i = band.first(); i <= band.last(); ++i)
            band(i) = big_rational(nonzero ? rng.nonzero_entry() : rng.uniform_entry());
    };
    fill(m.d, false);
    fill(m.a, false);
    fill(m.A, false);
    fill(m.M, false);
    fill(m.z, rescue_free);
    fill(m.b, false);
    fill(m.B, false);
    fill(m.N, false);
    fill(m.R, rescue_free);
    return m;
}

} // namespace nonacycle

#endif
