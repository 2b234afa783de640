#ifndef NONACYCLE_POLYNOMIAL_HPP
#define NONACYCLE_POLYNOMIAL_HPP

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "big_rational.hpp"
#include "errors.hpp"

namespace nonacycle {

// Dense univariate polynomial in t over big_rational. Coefficient k is the
// coefficient of t^k; the vector carries no trailing zeros, so the zero
// polynomial is the empty vector and degree() is -1 for it.
class polynomial {
public:
    polynomial() = default;
    polynomial(const big_rational& constant) { // NOLINT: implicit by design
        if (!constant.is_zero()) c_.push_back(constant);
    }
    polynomial(long constant) : polynomial(big_rational(constant)) {} // NOLINT

    static polynomial indeterminate() {
        polynomial p;
        p.c_ = {big_rational(0), big_rational(1)};
        return p;
    }

    static polynomial from_coefficients(std::vector<big_rational> coeffs) {
        polynomial p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    big_rational coefficient(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return big_rational(0);
        return c_[static_cast<std::size_t>(k)];
    }
    big_rational constant_term() const { return coefficient(0); }
    big_rational leading() const {
        return c_.empty() ? big_rational(0) : c_.back();
    }

    friend polynomial operator-(const polynomial& x) {
        polynomial r = x;
        for (auto& ci : r.c_) ci = -ci;
        return r;
    }

    friend polynomial operator+(const polynomial& x, const polynomial& y) {
        polynomial r;
        r.c_.resize(std::max(x.c_.size(), y.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = x.coefficient(static_cast<int>(i)) + y.coefficient(static_cast<int>(i));
        r.trim();
        return r;
    }

    friend polynomial operator-(const polynomial& x, const polynomial& y) {
        return x + (-y);
    }

    friend polynomial operator*(const polynomial& x, const polynomial& y) {
        if (x.is_zero() || y.is_zero()) return polynomial();
        polynomial r;
        r.c_.assign(x.c_.size() + y.c_.size() - 1, big_rational(0));
        for (std::size_t i = 0; i < x.c_.size(); ++i)
            for (std::size_t j = 0; j < y.c_.size(); ++j)
                r.c_[i + j] += x.c_[i] * y.c_[j];
        r.trim();
        return r;
    }

    polynomial scaled(const big_rational& s) const {
        if (s.is_zero()) return polynomial();
        polynomial r = *this;
        for (auto& ci : r.c_) ci *= s;
        return r;
    }

    // Long division over the rationals: *this = q * divisor + r, deg r < deg divisor.
    std::pair<polynomial, polynomial> divmod(const polynomial& divisor) const {
        if (divisor.is_zero()) throw division_by_zero("polynomial division by zero");
        polynomial q, r = *this;
        const int dd = divisor.degree();
        const big_rational lead = divisor.leading();
        if (r.degree() >= dd)
            q.c_.assign(static_cast<std::size_t>(r.degree() - dd) + 1, big_rational(0));
        while (!r.is_zero() && r.degree() >= dd) {
            const int shift = r.degree() - dd;
            const big_rational factor = r.leading() / lead;
            q.c_[static_cast<std::size_t>(shift)] = factor;
            for (int j = 0; j <= dd; ++j)
                r.c_[static_cast<std::size_t>(shift + j)] -= factor * divisor.coefficient(j);
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    // Exact division; the remainder must vanish.
    polynomial divided_by(const polynomial& divisor) const {
        auto [q, r] = divmod(divisor);
        if (!r.is_zero())
            throw verification_failed("inexact polynomial division");
        return q;
    }

    polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(big_rational(1) / leading());
    }

    // gcd over Q[t], returned monic; computed via content and primitive part
    // with a primitive remainder sequence on integer coefficients. A single
    // modular degree probe skips the remainder sequence whenever the gcd is
    // constant, which is the common case.
    static polynomial gcd(const polynomial& x, const polynomial& y) {
        if (x.is_zero()) return y.monic();
        if (y.is_zero()) return x.monic();
        if (x.degree() == 0 || y.degree() == 0) return polynomial(1);
        std::vector<mpz_class> a = primitive_integer(x);
        std::vector<mpz_class> b = primitive_integer(y);
        if (a.size() < b.size()) a.swap(b);
        if (gcd_degree_probe(a, b) == 0) return polynomial(1);
        while (!b.empty()) {
            std::vector<mpz_class> r = pseudo_remainder(a, b);
            make_primitive(r);
            a.swap(b);
            b.swap(r);
        }
        std::vector<big_rational> coeffs;
        coeffs.reserve(a.size());
        for (const auto& ci : a) coeffs.emplace_back(mpq_class(ci));
        return from_coefficients(std::move(coeffs)).monic();
    }

    friend bool operator==(const polynomial& x, const polynomial& y) {
        return x.c_ == y.c_;
    }
    friend bool operator!=(const polynomial& x, const polynomial& y) { return !(x == y); }

    // Renders e.g. "2*t^3 - 1/2*t + 4"; the zero polynomial is "0".
    std::string to_string(const char* var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            big_rational ck = coefficient(k);
            if (ck.is_zero()) continue;
            const bool first = out.empty();
            if (ck.sign() < 0) {
                out += first ? "-" : " - ";
                ck = -ck;
            } else if (!first) {
                out += " + ";
            }
            const bool unit = ck.is_one();
            if (k == 0) {
                out += ck.to_string();
            } else {
                if (!unit) {
                    out += ck.to_string();
                    out += "*";
                }
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    // Clears denominators and the coefficient gcd; leading coefficient > 0.
    static std::vector<mpz_class> primitive_integer(const polynomial& p) {
        std::vector<mpz_class> out;
        if (p.is_zero()) return out;
        mpz_class den_lcm = 1;
        for (const auto& ci : p.c_) {
            mpz_class d = ci.denominator();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
            den_lcm = den_lcm / g * d;
        }
        out.reserve(p.c_.size());
        for (const auto& ci : p.c_)
            out.push_back(ci.numerator() * (den_lcm / ci.denominator()));
        make_primitive(out);
        return out;
    }

    static void make_primitive(std::vector<mpz_class>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        if (v.empty()) return;
        mpz_class g = 0;
        for (const auto& ci : v) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ci.get_mpz_t());
            if (g == 1) break;
        }
        if (sgn(v.back()) < 0) g = -g;
        if (g != 1)
            for (auto& ci : v) ci /= g;
    }

    // Degree of the gcd modulo a word-sized prime; an upper bound for the
    // true gcd degree as long as neither leading coefficient vanishes mod p,
    // so a result of 0 proves the polynomials coprime. Returns -1 when the
    // probe is inconclusive.
    static int gcd_degree_probe(const std::vector<mpz_class>& x, const std::vector<mpz_class>& y) {
        constexpr unsigned long p = 2147483647UL; // 2^31 - 1
        const auto reduce = [](const std::vector<mpz_class>& v) {
            std::vector<std::uint64_t> out(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) {
                const unsigned long r = mpz_fdiv_ui(v[i].get_mpz_t(), p);
                out[i] = r;
            }
            while (!out.empty() && out.back() == 0) out.pop_back();
            return out;
        };
        std::vector<std::uint64_t> a = reduce(x);
        std::vector<std::uint64_t> b = reduce(y);
        if (a.size() != x.size() || b.size() != y.size()) return -1; // leading coeff hit p
        const auto inv_mod = [](std::uint64_t v) {
            std::uint64_t result = 1, base = v % p;
            for (unsigned long exp = p - 2; exp; exp >>= 1) {
                if (exp & 1) result = result * base % p;
                base = base * base % p;
            }
            return result;
        };
        while (!b.empty()) {
            // a mod b over F_p
            const std::uint64_t lead_inv = inv_mod(b.back());
            while (a.size() >= b.size() && !a.empty()) {
                const std::uint64_t factor = a.back() % p * lead_inv % p;
                const std::size_t shift = a.size() - b.size();
                for (std::size_t j = 0; j < b.size(); ++j)
                    a[shift + j] = (a[shift + j] + p - factor * b[j] % p) % p;
                while (!a.empty() && a.back() == 0) a.pop_back();
            }
            a.swap(b);
        }
        return static_cast<int>(a.size()) - 1;
    }

    // prem(a, b): repeatedly r := lc(b)*r - lc(r)*t^(deg r - deg b)*b.
    static std::vector<mpz_class> pseudo_remainder(std::vector<mpz_class> r,
                                                   const std::vector<mpz_class>& b) {
        assert(!b.empty());
        const mpz_class lb = b.back();
        const int db = static_cast<int>(b.size()) - 1;
        while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
            const mpz_class cr = r.back();
            const int shift = static_cast<int>(r.size()) - 1 - db;
            for (auto& ri : r) ri *= lb;
            for (int j = 0; j <= db; ++j)
                r[static_cast<std::size_t>(shift + j)] -= cr * b[static_cast<std::size_t>(j)];
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        return r;
    }

    std::vector<big_rational> c_;
};

} // namespace nonacycle

#endif
