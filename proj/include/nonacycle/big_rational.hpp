#ifndef NONACYCLE_BIG_RATIONAL_HPP
#define NONACYCLE_BIG_RATIONAL_HPP

#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "errors.hpp"

namespace nonacycle {

// Arbitrary-precision rational number in canonical form:
//   denominator > 0, gcd(|numerator|, denominator) = 1, zero is 0/1.
// Backed by GMP's mpq_class, which maintains exactly this form.
class big_rational {
public:
    big_rational() : v_(0) {}
    big_rational(long n) : v_(n) {} // NOLINT: implicit by design
    big_rational(long num, long den) {
        if (den == 0) throw division_by_zero();
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit big_rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p" or "p/q" with an optional leading minus sign, nothing else.
    static big_rational from_string(std::string_view text) {
        const auto reject = [&] {
            throw syntax_error(0, "malformed rational '" + std::string(text) + "'");
        };
        std::string_view s = text;
        std::string num, den = "1";
        bool neg = false;
        if (!s.empty() && s.front() == '-') {
            neg = true;
            s.remove_prefix(1);
        }
        std::size_t slash = s.find('/');
        std::string_view np = (slash == std::string_view::npos) ? s : s.substr(0, slash);
        std::string_view dp = (slash == std::string_view::npos) ? std::string_view("1")
                                                                : s.substr(slash + 1);
        if (np.empty() || dp.empty()) reject();
        for (char ch : np)
            if (ch < '0' || ch > '9') reject();
        for (char ch : dp)
            if (ch < '0' || ch > '9') reject();
        num.assign(np);
        den.assign(dp);
        mpz_class n(num), d(den);
        if (d == 0) throw division_by_zero("zero denominator in '" + std::string(text) + "'");
        if (neg) n = -n;
        mpq_class q;
        q = mpq_class(n) / mpq_class(d);
        return big_rational(std::move(q));
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    double to_double() const { return v_.get_d(); }

    // "p" for integers, "p/q" otherwise.
    std::string to_string() const { return v_.get_str(); }

    friend big_rational operator-(const big_rational& x) { return big_rational(mpq_class(-x.v_)); }
    friend big_rational operator+(const big_rational& x, const big_rational& y) {
        return big_rational(mpq_class(x.v_ + y.v_));
    }
    friend big_rational operator-(const big_rational& x, const big_rational& y) {
        return big_rational(mpq_class(x.v_ - y.v_));
    }
    friend big_rational operator*(const big_rational& x, const big_rational& y) {
        return big_rational(mpq_class(x.v_ * y.v_));
    }
    friend big_rational operator/(const big_rational& x, const big_rational& y) {
        if (y.is_zero()) throw division_by_zero();
        return big_rational(mpq_class(x.v_ / y.v_));
    }

    big_rational& operator+=(const big_rational& y) { v_ += y.v_; return *this; }
    big_rational& operator-=(const big_rational& y) { v_ -= y.v_; return *this; }
    big_rational& operator*=(const big_rational& y) { v_ *= y.v_; return *this; }
    big_rational& operator/=(const big_rational& y) {
        if (y.is_zero()) throw division_by_zero();
        v_ /= y.v_;
        return *this;
    }

    friend bool operator==(const big_rational& x, const big_rational& y) { return x.v_ == y.v_; }
    friend bool operator!=(const big_rational& x, const big_rational& y) { return x.v_ != y.v_; }
    friend bool operator<(const big_rational& x, const big_rational& y) { return x.v_ < y.v_; }
    friend bool operator<=(const big_rational& x, const big_rational& y) { return x.v_ <= y.v_; }
    friend bool operator>(const big_rational& x, const big_rational& y) { return x.v_ > y.v_; }
    friend bool operator>=(const big_rational& x, const big_rational& y) { return x.v_ >= y.v_; }

    friend big_rational abs(const big_rational& x) { return big_rational(mpq_class(abs(x.v_))); }

private:
    mpq_class v_;
};

} // namespace nonacycle

#endif
