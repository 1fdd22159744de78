#pragma once

// Exact rational arithmetic (GMP-backed). Values are always canonical:
// lowest terms, positive denominator. Strict inequalities between
// probabilities are decidable, which the monotonicity checks rely on.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace binduel {

using Integer = mpz_class;

class Rational {
public:
    Rational() : value_(0) {}
    Rational(long num) : value_(num) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    explicit Rational(const Integer& num) : value_(num) {}
    explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

    // Accepts "p/q", an integer string, or a plain decimal string such as
    // "0.35" (parsed exactly as 35/100; no binary-float rounding, no
    // exponent notation).
    static Rational parse(std::string_view text);

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    double to_double() const { return value_.get_d(); }
    std::string str() const { return value_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t()) == 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t()) < 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    mpq_class value_;
};

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

// q^e for integer e; q^0 = 1 (including 0^0), negative e inverts.
inline Rational pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (q.is_zero()) throw std::domain_error("pow: zero base, negative exponent");
        return Rational(1) / pow(q, -e);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), q.num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q.den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

// m (m-1) ... (m-k+1); defined for any integer m (negative included), k >= 0.
inline Integer falling_factorial(const Integer& m, unsigned long k) {
    Integer out(1);
    Integer f = m;
    for (unsigned long i = 0; i < k; ++i) {
        out *= f;
        f -= 1;
    }
    return out;
}

// Binomial coefficient generalized to any integer upper index:
// C(m, k) = m (m-1) ... (m-k+1) / k!, with C(m, 0) = 1.
inline Rational generalized_binomial(const Integer& m, unsigned long k) {
    return Rational(falling_factorial(m, k), factorial(k));
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational out;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view ns = text.substr(0, slash);
        std::string_view ds = text.substr(slash + 1);
        if (!detail::all_digits(ns) || !detail::all_digits(ds))
            throw std::invalid_argument("Rational::parse: malformed fraction '" + std::string(text) + "'");
        Integer n(std::string(ns), 10), d(std::string(ds), 10);
        if (d == 0) throw std::domain_error("Rational::parse: zero denominator");
        out = Rational(n, d);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot);
        std::string_view fp = text.substr(dot + 1);
        if (ip.empty() && fp.empty())
            throw std::invalid_argument("Rational::parse: malformed decimal");
        if ((!ip.empty() && !detail::all_digits(ip)) || (!fp.empty() && !detail::all_digits(fp)))
            throw std::invalid_argument("Rational::parse: malformed decimal '" + std::string(text) + "'");
        std::string digits = std::string(ip) + std::string(fp);
        if (digits.empty()) throw std::invalid_argument("Rational::parse: malformed decimal");
        Integer n(digits, 10);
        Integer d;
        mpz_ui_pow_ui(d.get_mpz_t(), 10, fp.size());
        out = Rational(n, d);
    } else {
        if (!detail::all_digits(text))
            throw std::invalid_argument("Rational::parse: malformed number '" + std::string(text) + "'");
        out = Rational(Integer(std::string(text), 10));
    }
    return negative ? -out : out;
}

}  // namespace binduel
