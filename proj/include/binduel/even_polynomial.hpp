#pragma once

// The even weight polynomial behind the duel's integral representation,
// built by two independent routes that must agree coefficientwise:
//
//   * a signed Chebyshev-U expansion against the pmf of S_r:
//       sum_{i=d}^{r} P{S_r=i} U_{2(i-d)}(x) - sum_{i=0}^{d-1} P{S_r=i} U_{2(d-i-1)}(x)
//
//   * even-order derivatives of t^{j-d} (1-a+at)^r at t = -1, the 2j-th
//     derivative supplying the coefficient of (2x)^{2j} / (2j)!.
//
// Coefficients are exact rationals in the monomial basis of x^2. The
// nonzero degree is 2 max(r-d, d-1), except that the polynomial vanishes
// identically when alpha = 1/2 and r = 2d-1 (the constant-1/2 duel).
//
// Also here: exact root counting on (0,1) via Sturm sequences in y = x^2,
// and a dyadic bisection locator for the single sign change the d=1
// transitional band exhibits.

#include "binduel/exact_kernel.hpp"
#include "binduel/chebyshev.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace binduel {

class EvenPolynomial {
public:
    EvenPolynomial(std::vector<Rational> coeffs, Rational alpha, int r, int d)
        : coeffs_(std::move(coeffs)), alpha_(std::move(alpha)), r_(r), d_(d) {
        while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
        if (coeffs_.empty()) coeffs_ = {Rational(0)};
    }

    // coeffs()[j] multiplies x^(2j).
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& alpha() const { return alpha_; }
    int r() const { return r_; }
    int d() const { return d_; }

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

    // Degree in x, or -1 for the zero polynomial.
    long degree() const {
        if (is_zero()) return -1;
        return 2 * static_cast<long>(coeffs_.size() - 1);
    }

    Rational evaluate(const Rational& x) const {
        const Rational x2 = x * x;
        Rational acc;
        for (size_t j = coeffs_.size(); j-- > 0;) acc = acc * x2 + coeffs_[j];
        return acc;
    }

    Rational at_one() const {
        Rational acc;
        for (const Rational& c : coeffs_) acc += c;
        return acc;
    }

    // d/dx at x = 1: sum_j 2j c_j.
    Rational derivative_at_one() const {
        Rational acc;
        for (size_t j = 1; j < coeffs_.size(); ++j)
            acc += Rational(2 * static_cast<long>(j)) * coeffs_[j];
        return acc;
    }

    std::vector<double> coeffs_as_double() const {
        std::vector<double> out(coeffs_.size());
        for (size_t j = 0; j < coeffs_.size(); ++j) out[j] = coeffs_[j].to_double();
        return out;
    }

private:
    std::vector<Rational> coeffs_;
    Rational alpha_;
    int r_;
    int d_;
};

inline EvenPolynomial polynomial_via_chebyshev(const Rational& alpha, int r, int d) {
    if (r < 1 || d < 1) throw std::domain_error("polynomial_via_chebyshev: r, d must be >= 1");
    const std::vector<Rational> pmf = binomial_pmf_row(r, alpha);
    const int width = std::max(r - d, d - 1) + 1;
    std::vector<Rational> coeffs(static_cast<size_t>(width));
    auto accumulate = [&](int u_index, const Rational& weight) {
        const ChebyshevU u = chebyshev_u(u_index);
        for (int i = 0; i <= u.k; i += 2)
            coeffs[static_cast<size_t>(i / 2)] += weight * Rational(u.coeffs[static_cast<size_t>(i)]);
    };
    for (int i = d; i <= r; ++i)
        accumulate(2 * (i - d), pmf[static_cast<size_t>(i)]);
    for (int i = 0; i <= std::min(d - 1, r); ++i)
        accumulate(2 * (d - i - 1), -pmf[static_cast<size_t>(i)]);
    return EvenPolynomial(std::move(coeffs), alpha, r, d);
}

inline EvenPolynomial polynomial_via_derivatives(const Rational& alpha, int r, int d) {
    if (r < 1 || d < 1) throw std::domain_error("polynomial_via_derivatives: r, d must be >= 1");
    const Rational one_minus_2a = Rational(1) - Rational(2) * alpha;
    std::vector<Rational> coeffs(static_cast<size_t>(r + d) + 1);
    for (int j = 0; j <= r + d; ++j) {
        // 2j-th derivative of t^(j-d) (1-a+at)^r at t = -1, by Leibniz:
        // the power factor contributes falling factorials of j-d (negative
        // exponents included), the binomial factor dies after r derivatives.
        const Integer m(j - d);
        Rational deriv;
        const int lmax = std::min(2 * j, r);
        for (int l = 0; l <= lmax; ++l) {
            Rational term(binomial(static_cast<unsigned long>(2 * j), static_cast<unsigned long>(l)));
            term *= Rational(falling_factorial(Integer(r), static_cast<unsigned long>(l)));
            term *= pow(alpha, l) * pow(one_minus_2a, r - l);
            term *= Rational(falling_factorial(m, static_cast<unsigned long>(2 * j - l)));
            // remaining factor t^(m - (2j-l)) at t = -1
            const long parity_exp = (j - d) - (2 * j - l);
            if (((parity_exp % 2) + 2) % 2 == 1) term = -term;
            deriv += term;
        }
        coeffs[static_cast<size_t>(j)] =
            deriv * Rational(pow(Rational(4), j)) / Rational(factorial(static_cast<unsigned long>(2 * j)));
    }
    return EvenPolynomial(std::move(coeffs), alpha, r, d);
}

// Value at x = 1 in closed form: E(2 S_r - 2d + 1) = 2 alpha r - 2d + 1.
inline Rational polynomial_at_one(const Rational& alpha, int r, int d) {
    return Rational(2) * alpha * Rational(r) - Rational(2 * d) + Rational(1);
}

// d/dx at x = 1 for the critical slope alpha = (2d-1)/(2r), closed form:
//   2 (2d-1) (1 + 4d^2 + 3r + 2r^2 - 2d(2+3r)) / (3 r^2).
inline Rational critical_slope_at_one(int r, int d) {
    if (r < 1 || d < 1) throw std::domain_error("critical_slope_at_one: r, d must be >= 1");
    const long rl = r, dl = d;
    const Rational num = Rational(2 * (2 * dl - 1)) *
        Rational(1 + 4 * dl * dl + 3 * rl + 2 * rl * rl - 2 * dl * (2 + 3 * rl));
    return num / Rational(3 * rl * rl);
}

// Signs of the x^(2j) coefficients (-1, 0, +1), constant term first.
inline std::vector<int> coefficient_signs(const EvenPolynomial& p) {
    std::vector<int> out;
    out.reserve(p.coeffs().size());
    for (const Rational& c : p.coeffs()) out.push_back(c.sign());
    return out;
}

namespace detail {

using RatPoly = std::vector<Rational>;  // coeffs[i] multiplies y^i

inline Rational poly_eval(const RatPoly& f, const Rational& y) {
    Rational acc;
    for (size_t i = f.size(); i-- > 0;) acc = acc * y + f[i];
    return acc;
}

inline RatPoly poly_derivative(const RatPoly& f) {
    if (f.size() <= 1) return {Rational(0)};
    RatPoly out(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) out[i - 1] = Rational(static_cast<long>(i)) * f[i];
    return out;
}

inline void poly_trim(RatPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

// Remainder of a by b (b nonzero after trim).
inline RatPoly poly_remainder(RatPoly a, const RatPoly& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational factor = a.back() / b.back();
        const size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
        poly_trim(a);
    }
    return a;
}

inline int sign_variations(const std::vector<RatPoly>& chain, const Rational& y) {
    int count = 0, prev = 0;
    for (const RatPoly& f : chain) {
        const int s = poly_eval(f, y).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace detail

// Number of distinct roots of p in x on the open interval (0, 1), certified
// by a Sturm chain in y = x^2. Requires p(0) != 0 and p(1) != 0.
inline int distinct_roots_in_unit_interval(const EvenPolynomial& p) {
    detail::RatPoly f = p.coeffs();
    detail::poly_trim(f);
    if (f.empty()) throw std::domain_error("distinct_roots_in_unit_interval: zero polynomial");
    if (detail::poly_eval(f, Rational(0)).is_zero() || detail::poly_eval(f, Rational(1)).is_zero())
        throw std::domain_error("distinct_roots_in_unit_interval: root at an endpoint");

    std::vector<detail::RatPoly> chain{f, detail::poly_derivative(f)};
    detail::poly_trim(chain.back());
    while (chain.back().size() > 0) {
        detail::RatPoly rem = detail::poly_remainder(chain[chain.size() - 2], chain.back());
        if (rem.empty()) break;
        for (Rational& c : rem) c = -c;
        chain.push_back(std::move(rem));
    }
    // Roots of f(y) in (0,1] equal roots of p(x) in (0,1] for x > 0; the
    // endpoint y=1 is excluded by the precondition.
    return detail::sign_variations(chain, Rational(0)) -
           detail::sign_variations(chain, Rational(1));
}

struct RootBracket {
    Rational lo, hi;                    // sign change inside [lo, hi]
    std::optional<Rational> exact_root; // set if a dyadic midpoint hit the root
};

// Bisection on exact dyadic points for a polynomial with p(0) and p(1) of
// opposite sign. Certainty about the number of roots comes from the Sturm
// count; this only locates one crossing.
inline RootBracket bracket_sign_change(const EvenPolynomial& p, int max_depth = 64) {
    Rational lo(0), hi(1);
    const int s_lo = p.evaluate(lo).sign();
    const int s_hi = p.evaluate(hi).sign();
    if (s_lo == 0 || s_hi == 0 || s_lo == s_hi)
        throw std::domain_error("bracket_sign_change: need opposite signs at 0 and 1");
    for (int depth = 0; depth < max_depth; ++depth) {
        const Rational mid = (lo + hi) / Rational(2);
        const int s_mid = p.evaluate(mid).sign();
        if (s_mid == 0) return {lo, hi, mid};
        if (s_mid == s_lo) lo = mid; else hi = mid;
    }
    return {lo, hi, std::nullopt};
}

}  // namespace binduel
