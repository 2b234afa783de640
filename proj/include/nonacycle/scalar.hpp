#ifndef NONACYCLE_SCALAR_HPP
#define NONACYCLE_SCALAR_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "big_rational.hpp"
#include "errors.hpp"
#include "polynomial.hpp"

namespace nonacycle {

namespace detail {
inline std::uint64_t& scalar_op_counter() {
    thread_local std::uint64_t count = 0;
    return count;
}
} // namespace detail

// Element of Q(t): a reduced fraction of polynomials in the parameter t.
// Canonical form is maintained by every operation: gcd(num, den) is constant,
// den is monic and nonzero, so equality is plain structural equality. A value
// whose numerator and denominator both have degree zero behaves exactly like
// a big_rational.
class scalar {
public:
    scalar() : num_(), den_(1) {}
    scalar(long value) : num_(big_rational(value)), den_(1) {} // NOLINT: implicit
    scalar(const big_rational& value) : num_(value), den_(1) {} // NOLINT: implicit

    static scalar t() {
        scalar s;
        s.num_ = polynomial::indeterminate();
        return s;
    }

    // num/den brought to canonical form; throws division_by_zero if den = 0.
    static scalar ratio(polynomial num, polynomial den) {
        if (den.is_zero()) throw division_by_zero();
        scalar s;
        if (num.is_zero()) {
            s.num_ = polynomial();
            s.den_ = polynomial(1);
            return s;
        }
        if (num.degree() > 0 || den.degree() > 0) {
            const polynomial g = polynomial::gcd(num, den);
            if (g.degree() > 0) {
                num = num.divided_by(g);
                den = den.divided_by(g);
            }
        }
        const big_rational lead = den.leading();
        if (!lead.is_one()) {
            const big_rational inv = big_rational(1) / lead;
            num = num.scaled(inv);
            den = den.scaled(inv);
        }
        s.num_ = std::move(num);
        s.den_ = std::move(den);
        return s;
    }

    const polynomial& num() const { return num_; }
    const polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool depends_on_t() const { return num_.degree() > 0 || den_.degree() > 0; }
    bool is_constant() const { return !depends_on_t(); }

    // Requires a t-free value; the canonical denominator is then exactly 1.
    big_rational as_rational() const {
        if (depends_on_t())
            throw solver_error("value depends on t: " + to_string());
        return num_.constant_term();
    }

    // Substitutes t = 0. The canonical-form invariant removes every removable
    // singularity beforehand, so a vanishing denominator here is a true pole.
    big_rational eval_at_zero() const {
        const big_rational d0 = den_.constant_term();
        if (d0.is_zero())
            throw pole_at_zero("denominator of " + to_string() + " vanishes at t = 0");
        return num_.constant_term() / d0;
    }

    friend scalar operator-(const scalar& x) {
        bump();
        scalar r = x;
        r.num_ = -r.num_;
        return r;
    }

    friend scalar operator+(const scalar& x, const scalar& y) {
        bump();
        if (x.is_constant() && y.is_constant())
            return scalar(x.num_.constant_term() + y.num_.constant_term());
        return add_impl(x, y, false);
    }

    friend scalar operator-(const scalar& x, const scalar& y) {
        bump();
        if (x.is_constant() && y.is_constant())
            return scalar(x.num_.constant_term() - y.num_.constant_term());
        return add_impl(x, y, true);
    }

    friend scalar operator*(const scalar& x, const scalar& y) {
        bump();
        if (x.is_zero() || y.is_zero()) return scalar();
        if (x.is_constant() && y.is_constant())
            return scalar(x.num_.constant_term() * y.num_.constant_term());
        // Cross-reduction leaves nothing to cancel in the product.
        const polynomial g1 = polynomial::gcd(x.num_, y.den_);
        const polynomial g2 = polynomial::gcd(y.num_, x.den_);
        polynomial num = x.num_.divided_by(g1) * y.num_.divided_by(g2);
        polynomial den = x.den_.divided_by(g2) * y.den_.divided_by(g1);
        return from_reduced(std::move(num), std::move(den));
    }

    friend scalar operator/(const scalar& x, const scalar& y) {
        bump();
        if (y.is_zero()) throw division_by_zero();
        if (x.is_zero()) return scalar();
        if (x.is_constant() && y.is_constant())
            return scalar(x.num_.constant_term() / y.num_.constant_term());
        const polynomial g1 = polynomial::gcd(x.num_, y.num_);
        const polynomial g2 = polynomial::gcd(y.den_, x.den_);
        polynomial num = x.num_.divided_by(g1) * y.den_.divided_by(g2);
        polynomial den = x.den_.divided_by(g2) * y.num_.divided_by(g1);
        return from_reduced(std::move(num), std::move(den));
    }

    scalar& operator+=(const scalar& y) { return *this = *this + y; }
    scalar& operator-=(const scalar& y) { return *this = *this - y; }
    scalar& operator*=(const scalar& y) { return *this = *this * y; }
    scalar& operator/=(const scalar& y) { return *this = *this / y; }

    friend bool operator==(const scalar& x, const scalar& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const scalar& x, const scalar& y) { return !(x == y); }

    std::string to_string() const {
        if (is_constant()) return num_.constant_term().to_string();
        if (den_ == polynomial(1)) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

    // Number of scalar arithmetic operations performed on this thread.
    static std::uint64_t op_count() { return detail::scalar_op_counter(); }
    static void reset_op_count() { detail::scalar_op_counter() = 0; }

private:
    static void bump() { ++detail::scalar_op_counter(); }

    // num/den already coprime; only normalizes the denominator to monic.
    static scalar from_reduced(polynomial num, polynomial den) {
        scalar s;
        if (num.is_zero()) {
            s.den_ = polynomial(1);
            return s;
        }
        const big_rational lead = den.leading();
        if (!lead.is_one()) {
            const big_rational inv = big_rational(1) / lead;
            num = num.scaled(inv);
            den = den.scaled(inv);
        }
        s.num_ = std::move(num);
        s.den_ = std::move(den);
        return s;
    }

    // a/b + c/d in lowest terms: with g = gcd(b, d) the only factor the
    // numerator can share with the product denominator is g itself.
    static scalar add_impl(const scalar& x, const scalar& y, bool negate_y) {
        const polynomial g = polynomial::gcd(x.den_, y.den_);
        polynomial num, den;
        if (g.degree() == 0) {
            const polynomial cross = y.num_ * x.den_;
            num = negate_y ? x.num_ * y.den_ - cross : x.num_ * y.den_ + cross;
            den = x.den_ * y.den_;
        } else {
            const polynomial xd = x.den_.divided_by(g);
            const polynomial yd = y.den_.divided_by(g);
            const polynomial cross = y.num_ * xd;
            num = negate_y ? x.num_ * yd - cross : x.num_ * yd + cross;
            den = xd * y.den_;
            const polynomial h = polynomial::gcd(num, g);
            if (h.degree() > 0) {
                num = num.divided_by(h);
                den = den.divided_by(h);
            }
        }
        return from_reduced(std::move(num), std::move(den));
    }

    polynomial num_;
    polynomial den_;
};

} // namespace nonacycle

#endif
