#ifndef NONACYCLE_NONACYCLE_HPP
#define NONACYCLE_NONACYCLE_HPP

// Umbrella header: exact determinants and inverses of cyclic nonadiagonal
// matrices via a structured Doolittle LU factorization with a symbolic
// zero-pivot rescue, plus a dense exact-arithmetic reference path.

#include "band_matrix.hpp"
#include "big_rational.hpp"
#include "dense_matrix.hpp"
#include "errors.hpp"
#include "factorization.hpp"
#include "inversion.hpp"
#include "io.hpp"
#include "one_based.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "random_matrix.hpp"
#include "scalar.hpp"

#endif
