#ifndef NONACYCLE_ERRORS_HPP
#define NONACYCLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nonacycle {

// Base class for everything thrown by the library.
struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : solver_error {
    division_by_zero() : solver_error("division by zero") {}
    explicit division_by_zero(const std::string& what) : solver_error(what) {}
};

// Evaluation at t = 0 hit a vanishing denominator.
struct pole_at_zero : solver_error {
    pole_at_zero() : solver_error("denominator vanishes at t = 0") {}
    explicit pole_at_zero(const std::string& what) : solver_error(what) {}
};

struct index_out_of_range : solver_error {
    index_out_of_range(int i, int j, int n)
        : solver_error("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                       ") outside 1.." + std::to_string(n)) {}
    explicit index_out_of_range(const std::string& what) : solver_error(what) {}
};

struct bad_band_length : solver_error {
    bad_band_length(const std::string& band_name, int expected_len, int actual_len)
        : solver_error("band '" + band_name + "' has " + std::to_string(actual_len) +
                       " entries, expected " + std::to_string(expected_len)),
          band(band_name), expected(expected_len), actual(actual_len) {}
    std::string band;
    int expected = 0;
    int actual = 0;
};

struct order_too_small : solver_error {
    order_too_small(int n, int minimum, const std::string& hint)
        : solver_error("order n = " + std::to_string(n) + " is below the supported minimum " +
                       std::to_string(minimum) + (hint.empty() ? "" : "; " + hint)),
          order(n) {}
    int order = 0;
};

struct syntax_error : solver_error {
    syntax_error(int line_no, const std::string& reason)
        : solver_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + reason : reason),
          line(line_no) {}
    int line = 0;
};

// A pivot reduced to the zero function of t even though substitutions were
// already in force; the single shared parameter cannot rescue it again.
struct structurally_singular : solver_error {
    explicit structurally_singular(int i)
        : solver_error("pivot c_" + std::to_string(i) +
                       " is identically zero in t; no further rescue possible"),
          pivot_index(i) {}
    int pivot_index = 0;
};

struct singular_matrix : solver_error {
    singular_matrix() : solver_error("singular matrix") {}
};

struct verification_failed : solver_error {
    explicit verification_failed(const std::string& what) : solver_error(what) {}
};

// Floating-point path only: a divisor fell below the breakdown threshold.
struct zero_pivot : solver_error {
    zero_pivot(const std::string& symbol, int i)
        : solver_error("near-zero divisor " + symbol + "_" + std::to_string(i) +
                       " in floating-point mode"),
          index(i) {}
    int index = 0;
};

} // namespace nonacycle

#endif
