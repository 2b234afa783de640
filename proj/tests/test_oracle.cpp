#include <catch2/catch_amalgamated.hpp>

#include <nonacycle/oracle.hpp>
#include <nonacycle/random_matrix.hpp>

#include "reference_example.hpp"
#include "test_support.hpp"

using namespace nonacycle;
using test_support::cofactor_det;

namespace {

dense_matrix<big_rational> random_dense(int n, std::uint64_t seed) {
    band_rng rng(seed);
    dense_matrix<big_rational> m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m(i, j) = big_rational(rng.uniform_entry());
    return m;
}

} // namespace

TEST_CASE("two-by-two determinant") {
    dense_matrix<big_rational> m(2);
    m(1, 1) = big_rational(1);
    m(1, 2) = big_rational(2);
    m(2, 1) = big_rational(3);
    m(2, 2) = big_rational(4);
    CHECK(bareiss_det(m) == big_rational(-2));
}

TEST_CASE("fraction-free determinant matches cofactor expansion up to n = 8") {
    for (int n = 1; n <= 8; ++n)
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const auto m = random_dense(n, 100 * static_cast<std::uint64_t>(n) + seed);
            CHECK(bareiss_det(m) == cofactor_det(m));
        }
}

TEST_CASE("reference instance determinant") {
    const auto dense = to_dense(refex::matrix());
    CHECK(bareiss_det(dense) == big_rational(refex::determinant));
}

TEST_CASE("zero pivots are handled by row exchange") {
    dense_matrix<big_rational> m(3);
    // first column starts with a zero pivot
    m(1, 1) = big_rational(0); m(1, 2) = big_rational(1); m(1, 3) = big_rational(2);
    m(2, 1) = big_rational(1); m(2, 2) = big_rational(0); m(2, 3) = big_rational(1);
    m(3, 1) = big_rational(2); m(3, 2) = big_rational(3); m(3, 3) = big_rational(0);
    CHECK(bareiss_det(m) == cofactor_det(m));
    const auto inv = gauss_jordan_inverse(m);
    CHECK(inv.determinant == cofactor_det(m));
    REQUIRE(inv.inverse.has_value());
    CHECK((m * *inv.inverse).is_identity());
}

TEST_CASE("gauss-jordan on the identity and on the reference instance") {
    const auto id = dense_matrix<big_rational>::identity(5);
    const auto r = gauss_jordan_inverse(id);
    REQUIRE(r.inverse.has_value());
    CHECK(*r.inverse == id);

    const auto dense = to_dense(refex::matrix());
    const auto ref = gauss_jordan_inverse(dense);
    REQUIRE(ref.inverse.has_value());
    CHECK(*ref.inverse == refex::inverse_matrix());
}

TEST_CASE("singular input reports determinant zero and no inverse") {
    dense_matrix<big_rational> m(4);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) m(i, j) = big_rational(i) * big_rational(j); // rank 1
    const auto r = gauss_jordan_inverse(m);
    CHECK(r.determinant.is_zero());
    CHECK_FALSE(r.inverse.has_value());
    CHECK(bareiss_det(m).is_zero());
}

TEST_CASE("the two determinant routes agree and the inverse is exact") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto m = random_dense(7, 4242 + seed);
        const auto r = gauss_jordan_inverse(m);
        CHECK(r.determinant == bareiss_det(m));
        if (r.inverse) CHECK((m * *r.inverse).is_identity());
    }
}

TEST_CASE("rational inputs are accepted") {
    auto m = random_dense(5, 9001);
    m(2, 3) = big_rational(3, 7);
    m(4, 1) = big_rational(-5, 11);
    CHECK(bareiss_det(m) == cofactor_det(m));
    const auto r = gauss_jordan_inverse(m);
    if (r.inverse) CHECK((m * *r.inverse).is_identity());
}
