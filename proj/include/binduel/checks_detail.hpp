#pragma once

// Implementations of the individual verification checks. See checks.hpp
// for the suite groupings.

#include "binduel/report.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace binduel::checks {

using binduel::CheckResult;

inline std::vector<Rational> tenth_grid() {
    std::vector<Rational> g;
    for (int k = 1; k <= 9; ++k) g.emplace_back(k, 10);
    return g;
}

inline std::vector<Rational> twentieth_grid() {
    std::vector<Rational> g;
    for (int k = 1; k <= 19; ++k) g.emplace_back(k, 20);
    return g;
}

namespace detail {

inline std::string fmt(double v) { return format_double(v); }

// Smallest n0 with sign(p_{n+1} - p_n) == expected for all steps from n0 to
// the end of the trace; nullopt if the final step already disagrees.
inline std::optional<long> tail_start_from_trace(const SequenceTrace& tr, int expected_sign) {
    const auto& v = tr.values;
    long n0 = tr.n_from + static_cast<long>(v.size()) - 1;
    for (size_t i = v.size() - 1; i-- > 0;) {
        const int s = (v[i + 1] - v[i]).sign();
        if (s != expected_sign) break;
        n0 = tr.n_from + static_cast<long>(i);
    }
    if (n0 > tr.n_from + static_cast<long>(v.size()) - 2) return std::nullopt;
    return n0;
}

// Shape expected of a trace whose r falls short of the lead: zero through
// n = d-r-1, then strictly increasing.
inline bool degenerate_increasing_holds(const SequenceTrace& tr, int r, int d, std::string* why) {
    const long flat_end = std::max<long>(d - r, 0);  // p_n = 0 for n < d-r
    for (size_t i = 0; i < tr.values.size(); ++i) {
        const long n = tr.n_from + static_cast<long>(i);
        if (n < flat_end && !tr.values[i].is_zero()) {
            *why = "expected p_" + std::to_string(n) + " = 0";
            return false;
        }
    }
    for (size_t i = 0; i + 1 < tr.values.size(); ++i) {
        const long n = tr.n_from + static_cast<long>(i);
        const int s = (tr.values[i + 1] - tr.values[i]).sign();
        if (n < flat_end - 1 ? s != 0 : s <= 0) {
            *why = "difference at n = " + std::to_string(n) + " breaks the pattern";
            return false;
        }
    }
    return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// exact identities
// ---------------------------------------------------------------------------

inline CheckResult double_sum_identity(long n_max = 20) {
    CheckResult res{"counting identity: winning outcome pairs equal 4^n", true, ""};
    for (long n = 0; n <= n_max; ++n) {
        Integer expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), 4, static_cast<unsigned long>(n));
        if (winning_outcome_count(n) != expected) {
            res.pass = false;
            res.detail = "mismatch at n = " + std::to_string(n);
            return res;
        }
    }
    res.detail = "exact for n <= " + std::to_string(n_max);
    return res;
}

inline CheckResult duality_identity(int r_max = 6, long n_max = 30) {
    CheckResult res{"tail-swap duality p(a) + p_swapped(1-a) = 1", true, ""};
    long count = 0;
    for (const Rational& alpha : tenth_grid())
        for (int r = 1; r <= r_max; ++r)
            for (int d = 1; d <= r; ++d)
                for (long n = 0; n <= n_max; ++n) {
                    const Rational lhs = win_probability(DuelParams(alpha, n, r, d)) +
                                         win_probability(DuelParams(Rational(1) - alpha, n, r, r - d + 1));
                    ++count;
                    if (lhs != Rational(1)) {
                        res.pass = false;
                        res.detail = "violated at alpha=" + alpha.str() + " n=" + std::to_string(n) +
                                     " r=" + std::to_string(r) + " d=" + std::to_string(d);
                        return res;
                    }
                }
    res.detail = "exact at " + std::to_string(count) + " grid points (d <= r <= " +
                 std::to_string(r_max) + ", n <= " + std::to_string(n_max) + ")";
    return res;
}

inline CheckResult tie_identity(long n_max = 40) {
    CheckResult res{"tie identity p = 1/2 + (2a-1)/2 P{tie}", true, ""};
    for (const Rational& alpha : tenth_grid()) {
        GapDistribution gap = GapDistribution::initial();
        for (long n = 0; n <= n_max; ++n) {
            const Rational via_tie =
                Rational(1, 2) + (Rational(2) * alpha - Rational(1)) / Rational(2) * gap.at(0);
            if (via_tie != win_probability(DuelParams(alpha, n, 1, 1))) {
                res.pass = false;
                res.detail = "violated at alpha=" + alpha.str() + " n=" + std::to_string(n);
                return res;
            }
            gap.advance(alpha);
        }
    }
    res.detail = "exact for n <= " + std::to_string(n_max) + " on the tenth grid";
    return res;
}

inline CheckResult step_difference_identity(int rd_max = 6, long n_max = 40) {
    CheckResult res{"one-step difference formula equals the direct difference", true, ""};
    long count = 0;
    for (const Rational& alpha : tenth_grid())
        for (int r = 1; r <= rd_max; ++r)
            for (int d = 1; d <= rd_max; ++d) {
                ExactDuelSequence seq(alpha, r, d);
                Rational prev = win_probability(DuelParams(alpha, 0, r, d));
                for (long n = 0; n <= n_max; ++n) {
                    if (seq.value() != prev || seq.value() < Rational(0) || seq.value() > Rational(1)) {
                        res.pass = false;
                        res.detail = "sequence value off at alpha=" + alpha.str() +
                                     " n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                     " d=" + std::to_string(d);
                        return res;
                    }
                    const Rational next = win_probability(DuelParams(alpha, n + 1, r, d));
                    if (seq.step_difference() != next - prev) {
                        res.pass = false;
                        res.detail = "difference off at alpha=" + alpha.str() + " n=" + std::to_string(n) +
                                     " r=" + std::to_string(r) + " d=" + std::to_string(d);
                        return res;
                    }
                    ++count;
                    seq.advance();
                    prev = next;
                }
            }
    res.detail = "exact at " + std::to_string(count) + " points (r,d <= " + std::to_string(rd_max) +
                 ", n <= " + std::to_string(n_max) + ")";
    return res;
}

inline CheckResult gap_invariants(long n_max = 50) {
    CheckResult res{"gap distribution: symmetric, normalized, strictly decreasing", true, ""};
    for (const Rational& alpha : tenth_grid()) {
        GapDistribution gap = GapDistribution::initial();
        for (long n = 1; n <= n_max; ++n) {
            gap.advance(alpha);
            Rational sum = gap.at(0);
            for (long i = 1; i <= n; ++i) {
                if (gap.at(-i) != gap.at(i)) {
                    res.pass = false;
                    res.detail = "asymmetry at alpha=" + alpha.str() + " n=" + std::to_string(n);
                    return res;
                }
                sum += Rational(2) * gap.at(i);
            }
            if (sum != Rational(1)) {
                res.pass = false;
                res.detail = "normalization fails at alpha=" + alpha.str() + " n=" + std::to_string(n);
                return res;
            }
            for (long i = 0; i < n; ++i)
                if (!(gap.at(i) > gap.at(i + 1))) {
                    res.pass = false;
                    res.detail = "not strictly decreasing at alpha=" + alpha.str() +
                                 " n=" + std::to_string(n) + " i=" + std::to_string(i);
                    return res;
                }
        }
    }
    res.detail = "exact for n <= " + std::to_string(n_max) + " on the tenth grid";
    return res;
}

inline CheckResult polynomial_equivalence(int rd_max = 8) {
    CheckResult res{"weight polynomial: derivative and Chebyshev routes agree", true, ""};
    long count = 0;
    for (const Rational& alpha : tenth_grid())
        for (int r = 1; r <= rd_max; ++r)
            for (int d = 1; d <= rd_max; ++d) {
                if (polynomial_via_chebyshev(alpha, r, d).coeffs() !=
                    polynomial_via_derivatives(alpha, r, d).coeffs()) {
                    res.pass = false;
                    res.detail = "coefficients differ at alpha=" + alpha.str() +
                                 " r=" + std::to_string(r) + " d=" + std::to_string(d);
                    return res;
                }
                ++count;
            }
    res.detail = "coefficientwise equal at " + std::to_string(count) + " grid points (r,d <= " +
                 std::to_string(rd_max) + ")";
    return res;
}

inline CheckResult polynomial_endpoint(int rd_max = 8) {
    CheckResult res{"weight polynomial value at 1 equals 2ar - 2d + 1", true, ""};
    for (const Rational& alpha : tenth_grid())
        for (int r = 1; r <= rd_max; ++r)
            for (int d = 1; d <= rd_max; ++d) {
                const EvenPolynomial p = polynomial_via_chebyshev(alpha, r, d);
                const Rational expected = polynomial_at_one(alpha, r, d);
                if (p.at_one() != expected || p.evaluate(Rational(1)) != expected) {
                    res.pass = false;
                    res.detail = "endpoint mismatch at alpha=" + alpha.str() + " r=" +
                                 std::to_string(r) + " d=" + std::to_string(d);
                    return res;
                }
            }
    res.detail = "exact for r,d <= " + std::to_string(rd_max);
    return res;
}

inline CheckResult polynomial_degree(int rd_max = 8) {
    CheckResult res{"weight polynomial degree is 2 max(r-d, d-1)", true, ""};
    for (const Rational& alpha : tenth_grid())
        for (int r = 1; r <= rd_max; ++r)
            for (int d = 1; d <= rd_max; ++d) {
                const EvenPolynomial p = polynomial_via_chebyshev(alpha, r, d);
                const bool constant_duel = alpha == Rational(1, 2) && r == 2 * d - 1;
                const bool ok = constant_duel ? p.is_zero()
                                              : p.degree() == 2 * std::max(r - d, d - 1);
                if (!ok) {
                    res.pass = false;
                    res.detail = "degree off at alpha=" + alpha.str() + " r=" + std::to_string(r) +
                                 " d=" + std::to_string(d);
                    return res;
                }
            }
    res.detail = "holds for r,d <= " + std::to_string(rd_max) +
                 " (identically zero in the constant duel alpha=1/2, r=2d-1)";
    return res;
}

inline CheckResult critical_slope_identity(int d_max = 4, int r_max = 8) {
    CheckResult res{"critical slope closed form matches the symbolic derivative", true, ""};
    for (int d = 1; d <= d_max; ++d)
        for (int r = d; r <= r_max; ++r) {
            const Rational alpha(2L * d - 1, 2L * r);
            if (alpha >= Rational(1)) continue;
            const EvenPolynomial p = polynomial_via_chebyshev(alpha, r, d);
            if (p.derivative_at_one() != critical_slope_at_one(r, d)) {
                res.pass = false;
                res.detail = "mismatch at r=" + std::to_string(r) + " d=" + std::to_string(d);
                return res;
            }
            if (r >= 2 * d && critical_slope_at_one(r, d).sign() <= 0) {
                res.pass = false;
                res.detail = "slope not positive at r=" + std::to_string(r) + " d=" + std::to_string(d);
                return res;
            }
        }
    res.detail = "exact for d <= " + std::to_string(d_max) + ", r <= " + std::to_string(r_max) +
                 "; positive throughout r >= 2d";
    return res;
}

inline CheckResult small_alpha_sign_pattern(int r_max = 6) {
    CheckResult res{"d=1 small-alpha coefficients: only the constant is negative", true, ""};
    for (int r = 2; r <= r_max; ++r)
        for (const Rational& alpha : {Rational(1, r + 1), Rational(1, 2 * (r + 1))}) {
            const EvenPolynomial p = polynomial_via_chebyshev(alpha, r, 1);
            if (p.evaluate(Rational(0)) != -pow(Rational(1) - Rational(2) * alpha, r)) {
                res.pass = false;
                res.detail = "constant term wrong at r=" + std::to_string(r);
                return res;
            }
            const auto signs = coefficient_signs(p);
            bool ok = signs.front() < 0;
            for (size_t j = 1; j < signs.size(); ++j) ok &= signs[j] > 0;
            if (!ok) {
                res.pass = false;
                res.detail = "sign pattern off at r=" + std::to_string(r) + " alpha=" + alpha.str();
                return res;
            }
        }
    res.detail = "holds for 2 <= r <= " + std::to_string(r_max) + " at alpha in {1/(r+1), 1/(2r+2)}";
    return res;
}

inline CheckResult transitional_single_root(int r_max = 5) {
    CheckResult res{"transitional band: exactly one root of the weight polynomial in (0,1)", true, ""};
    for (int r = 2; r <= r_max; ++r) {
        const Rational lo(1, 2L * r), hi(1, r + 1);
        for (const Rational& alpha : {lo + (hi - lo) / Rational(4), lo + (hi - lo) / Rational(2),
                                      lo + Rational(3) * (hi - lo) / Rational(4)}) {
            const EvenPolynomial p = polynomial_via_chebyshev(alpha, r, 1);
            if (distinct_roots_in_unit_interval(p) != 1) {
                res.pass = false;
                res.detail = "root count != 1 at r=" + std::to_string(r) + " alpha=" + alpha.str();
                return res;
            }
            const RootBracket bracket = bracket_sign_change(p);
            if (!bracket.exact_root &&
                p.evaluate(bracket.lo).sign() == p.evaluate(bracket.hi).sign()) {
                res.pass = false;
                res.detail = "bracket lost the sign change at r=" + std::to_string(r);
                return res;
            }
        }
    }
    res.detail = "Sturm count 1 with a located crossing, 2 <= r <= " + std::to_string(r_max);
    return res;
}

// ---------------------------------------------------------------------------
// quadrature vs exact oracle
// ---------------------------------------------------------------------------

inline CheckResult quadrature_oracle(long n_max = 40, int rd_max = 5, double tol = 1e-12) {
    CheckResult res{"quadrature matches exact values", true, ""};
    double worst = 0.0;
    long points = 0;
    for (const Rational& alpha : tenth_grid())
        for (int r = 1; r <= rd_max; ++r)
            for (int d = 1; d <= rd_max; ++d) {
                ExactDuelSequence seq(alpha, r, d);
                for (long n = 0; n <= n_max; ++n) {
                    if (n == 0 || n == n_max) {  // spot-check the sequence against the double sum
                        if (seq.value() != win_probability(DuelParams(alpha, n, r, d))) {
                            res.pass = false;
                            res.detail = "exact routes disagree at alpha=" + alpha.str() +
                                         " n=" + std::to_string(n);
                            return res;
                        }
                    }
                    const double q = win_probability_quadrature(DuelParams(alpha, n, r, d));
                    const double err = std::abs(q - seq.value().to_double());
                    worst = std::max(worst, err);
                    ++points;
                    if (err > tol) {
                        res.pass = false;
                        res.detail = "error " + detail::fmt(err) + " at alpha=" + alpha.str() +
                                     " n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                     " d=" + std::to_string(d);
                        return res;
                    }
                    if (n < n_max) seq.advance();
                }
            }
    res.detail = "max |diff| " + detail::fmt(worst) + " over " + std::to_string(points) +
                 " points (bound " + detail::fmt(tol) + ")";
    return res;
}

inline CheckResult gap_fourier_oracle(long n_max = 40, double tol = 1e-12) {
    CheckResult res{"gap probabilities: cosine inversion matches the recursion", true, ""};
    double worst = 0.0;
    for (const Rational& alpha :
         {Rational(1, 10), Rational(3, 10), Rational(1, 2), Rational(7, 10), Rational(9, 10)})
        for (long n : {1L, 5L, 10L, 20L, n_max}) {
            const GapDistribution gap = gap_distribution(n, alpha);
            for (long k : {0L, 1L, n / 2, n, n + 3}) {
                const double f = gap_probability_fourier(n, k, alpha.to_double());
                if (f != gap_probability_fourier(n, -k, alpha.to_double())) {
                    res.pass = false;
                    res.detail = "k-symmetry broken at n=" + std::to_string(n) +
                                 " k=" + std::to_string(k);
                    return res;
                }
                const double err = std::abs(f - gap.at(k).to_double());
                worst = std::max(worst, err);
                if (err > tol) {
                    res.pass = false;
                    res.detail = "error " + detail::fmt(err) + " at alpha=" + alpha.str() +
                                 " n=" + std::to_string(n) + " k=" + std::to_string(k);
                    return res;
                }
            }
        }
    res.detail = "max |diff| " + detail::fmt(worst) + " for n <= " + std::to_string(n_max) +
                 " (bound " + detail::fmt(tol) + ")";
    return res;
}

inline CheckResult difference_oracle(double tol = 1e-12) {
    CheckResult res{"difference integral matches the exact one-step difference", true, ""};
    double worst = 0.0;
    for (const Rational& alpha : {Rational(1, 10), Rational(3, 10), Rational(1, 2), Rational(7, 10),
                                  Rational(9, 10)})
        for (auto [r, d] : {std::pair{1, 1}, std::pair{3, 1}, std::pair{2, 3}, std::pair{5, 2}})
            for (long n : {0L, 5L, 25L, 40L}) {
                const DuelParams p(alpha, n, r, d);
                const double err =
                    std::abs(step_difference_quadrature(p) - step_difference(p).to_double());
                worst = std::max(worst, err);
                if (err > tol) {
                    res.pass = false;
                    res.detail = "error " + detail::fmt(err) + " at alpha=" + alpha.str() +
                                 " n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                 " d=" + std::to_string(d);
                    return res;
                }
            }
    res.detail = "max |diff| " + detail::fmt(worst) + " (bound " + detail::fmt(tol) + ")";
    return res;
}

inline CheckResult difference_consistency(double tol = 1e-11) {
    CheckResult res{"quadrature differences telescope", true, ""};
    double worst = 0.0;
    for (const Rational& alpha : {Rational(3, 10), Rational(3, 5), Rational(9, 10)})
        for (auto [r, d] : {std::pair{1, 1}, std::pair{4, 2}})
            for (long n : {0L, 9L, 33L}) {
                const double direct =
                    win_probability_quadrature(DuelParams(alpha, n + 1, r, d)) -
                    win_probability_quadrature(DuelParams(alpha, n, r, d));
                const double via_integral = step_difference_quadrature(DuelParams(alpha, n, r, d));
                worst = std::max(worst, std::abs(direct - via_integral));
            }
    res.pass = worst <= tol;
    res.detail = "max |diff| " + detail::fmt(worst) + " (bound " + detail::fmt(tol) + ")";
    return res;
}

inline CheckResult node_plateau() {
    CheckResult res{"doubling the auto node count changes nothing beyond 1e-13", true, ""};
    double worst = 0.0;
    for (const DuelParams& p :
         {DuelParams(Rational(3, 10), 200, 2, 1), DuelParams(Rational(1, 2), 40, 1, 2),
          DuelParams(Rational(9, 10), 25, 5, 1), DuelParams(Rational(3, 10), 10000, 1, 1)}) {
        QuadratureConfig base;
        base.check_convergence = false;
        const double v1 = win_probability_quadrature(p, base);
        QuadratureConfig doubled = base;
        const double upper = quad_detail::support_cut(p.alpha.to_double(), p.n);
        const long degree = p.n + std::max(p.r - p.d, p.d - 1);
        doubled.node_count = 2 * quad_detail::auto_nodes(QuadRule::GaussLegendre, degree, upper);
        worst = std::max(worst, std::abs(v1 - win_probability_quadrature(p, doubled)));
    }
    res.pass = worst <= 1e-13;
    res.detail = "max shift " + detail::fmt(worst);
    return res;
}

inline CheckResult kernel_identity_check() {
    CheckResult res{"kernel identity Q(cos(t/2)) = phi(t)", true, ""};
    double worst = 0.0;
    for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const CharacteristicKernel kernel{alpha};
        for (int i = 0; i <= 1000; ++i) {
            const double t = std::numbers::pi * i / 1000.0;
            worst = std::max(worst, std::abs(kernel.q(std::cos(0.5 * t)) - kernel.phi(t)));
        }
    }
    res.pass = worst <= 1e-15;
    res.detail = "max |Q - phi| " + detail::fmt(worst) + " over 1000 angles per alpha";
    return res;
}

inline CheckResult rule_agreement() {
    CheckResult res{"Gauss-Legendre and midpoint rules agree", true, ""};
    QuadratureConfig midpoint;
    midpoint.rule = QuadRule::Midpoint;
    double worst = 0.0;
    for (const DuelParams& p : {DuelParams(Rational(3, 10), 12, 2, 1),
                                DuelParams(Rational(7, 10), 33, 1, 3),
                                DuelParams(Rational(1, 10), 500, 4, 1)})
        worst = std::max(worst, std::abs(win_probability_quadrature(p, midpoint) -
                                         win_probability_quadrature(p)));
    res.pass = worst <= 1e-13;
    res.detail = "max |diff| " + detail::fmt(worst);
    return res;
}

// ---------------------------------------------------------------------------
// phase structure
// ---------------------------------------------------------------------------

inline CheckResult single_extra_toss_shapes(long n_max = 100) {
    CheckResult res{"single extra toss: monotone, constant, and curvature shapes", true, ""};
    for (const Rational& alpha : {Rational(1, 10), Rational(3, 10)}) {
        const SequenceTrace tr = exact_trace(alpha, 1, 1, 0, n_max);
        if (detect_shape(tr).shape != Shape::Increasing ||
            detect_curvature(tr).curvature != Curvature::Concave) {
            res.pass = false;
            res.detail = "expected strictly increasing concave at alpha=" + alpha.str();
            return res;
        }
    }
    for (const Rational& alpha : {Rational(7, 10), Rational(9, 10)}) {
        const SequenceTrace tr = exact_trace(alpha, 1, 1, 0, n_max);
        if (detect_shape(tr).shape != Shape::Decreasing ||
            detect_curvature(tr).curvature != Curvature::Convex) {
            res.pass = false;
            res.detail = "expected strictly decreasing convex at alpha=" + alpha.str();
            return res;
        }
    }
    const SequenceTrace half = exact_trace(Rational(1, 2), 1, 1, 0, n_max);
    for (const Rational& v : half.values)
        if (v != Rational(1, 2)) {
            res.pass = false;
            res.detail = "fair coin value differs from 1/2";
            return res;
        }
    res.detail = "strict shapes verified exactly for n <= " + std::to_string(n_max);
    return res;
}

inline CheckResult d1_band_shapes(long n_max = 120) {
    CheckResult res{"d=1 bands: increasing / unimodal / decreasing per r", true, ""};
    std::ostringstream modes;
    for (int r : {2, 3, 4}) {
        const Rational lo(1, 2L * r), hi(1, r + 1);
        const Rational w = hi - lo;
        for (const Rational& alpha : {lo / Rational(2), Rational(7) * lo / Rational(8), lo}) {
            if (detect_shape(exact_trace(alpha, r, 1, 0, n_max)).shape != Shape::Increasing) {
                res.pass = false;
                res.detail = "expected increasing at r=" + std::to_string(r) + " alpha=" + alpha.str();
                return res;
            }
        }
        for (const Rational& alpha : {lo + w / Rational(4), lo + Rational(3) * w / Rational(4), hi}) {
            const ShapeVerdict v = detect_shape(exact_trace(alpha, r, 1, 0, n_max));
            const PhaseReport rep = classify(alpha, r, 1);
            if (v.shape != Shape::Unimodal || !v.mode || *v.mode < 1 || !rep.mode ||
                *rep.mode != *v.mode) {
                res.pass = false;
                res.detail = "expected unimodal at r=" + std::to_string(r) + " alpha=" + alpha.str();
                return res;
            }
            modes << " r=" << r << " alpha=" << alpha.str() << " mode=" << *v.mode << ";";
        }
        for (const Rational& alpha : {hi + (Rational(1) - hi) / Rational(10),
                                      hi + (Rational(1) - hi) / Rational(2),
                                      hi + Rational(9) * (Rational(1) - hi) / Rational(10)}) {
            if (detect_shape(exact_trace(alpha, r, 1, 0, n_max)).shape != Shape::Decreasing) {
                res.pass = false;
                res.detail = "expected decreasing at r=" + std::to_string(r) + " alpha=" + alpha.str();
                return res;
            }
        }
    }
    res.detail = "three alphas per band, n <= " + std::to_string(n_max) + ";" + modes.str();
    return res;
}

inline CheckResult case_table_tails(long n_hi = 60, long n0_limit = 40) {
    CheckResult res{"general case table: ten cells with the predicted step signs", true, ""};
    struct Cell {
        const char* label;
        Rational alpha;
        int r, d;
        Regime expect;
    };
    const std::vector<Cell> cells = {
        {"short", Rational(11, 20), 1, 2, Regime::DegenerateIncreasing},
        {"mid/a", Rational(2, 5), 2, 2, Regime::IncreasingAll},
        {"mid/b", Rational(7, 10), 2, 2, Regime::IncreasingTail},
        {"mid/c", Rational(4, 5), 2, 2, Regime::DecreasingTail},
        {"balanced/a", Rational(3, 10), 3, 2, Regime::IncreasingAll},
        {"balanced/b", Rational(1, 2), 3, 2, Regime::ConstantHalf},
        {"balanced/c", Rational(7, 10), 3, 2, Regime::DecreasingAll},
        {"long/a", Rational(3, 10), 4, 2, Regime::IncreasingTail},
        {"long/b", Rational(39, 100), 4, 2, Regime::DecreasingTail},
        {"long/c", Rational(1, 2), 4, 2, Regime::DecreasingAll},
    };
    std::ostringstream tails;
    for (const Cell& cell : cells) {
        const PhaseReport rep = classify(cell.alpha, cell.r, cell.d);
        if (rep.regime != cell.expect) {
            res.pass = false;
            res.detail = std::string(cell.label) + ": classification mismatch";
            return res;
        }
        const SequenceTrace tr = exact_trace(cell.alpha, cell.r, cell.d, 0, n_hi);
        std::string why;
        std::optional<long> n0;
        bool ok = true;
        switch (cell.expect) {
            case Regime::IncreasingAll:
                n0 = detail::tail_start_from_trace(tr, 1);
                ok = n0 && *n0 == 0;
                break;
            case Regime::DecreasingAll:
                n0 = detail::tail_start_from_trace(tr, -1);
                ok = n0 && *n0 == 0;
                break;
            case Regime::ConstantHalf:
                for (const Rational& v : tr.values) ok &= v == Rational(1, 2);
                n0 = 0;
                break;
            case Regime::IncreasingTail:
                n0 = detail::tail_start_from_trace(tr, 1);
                ok = n0 && *n0 <= n0_limit;
                break;
            case Regime::DecreasingTail:
                n0 = detail::tail_start_from_trace(tr, -1);
                ok = n0 && *n0 <= n0_limit;
                break;
            case Regime::DegenerateIncreasing:
                ok = detail::degenerate_increasing_holds(tr, cell.r, cell.d, &why);
                n0 = 0;
                break;
            default:
                ok = false;
        }
        if (!ok) {
            res.pass = false;
            res.detail = std::string(cell.label) + ": step signs off" + (why.empty() ? "" : ": " + why);
            return res;
        }
        tails << " " << cell.label << " n0=" << *n0 << ";";
    }
    res.detail = "all ten cells verified on [n0, " + std::to_string(n_hi) + "];" + tails.str();
    return res;
}

inline CheckResult classification_grid(long n_max = 60, int rd_max = 5, long tail_limit = 40) {
    CheckResult res{"classification agrees with detected shapes on the grid", true, ""};
    long cells = 0;
    for (const Rational& alpha : twentieth_grid())
        for (int r = 1; r <= rd_max; ++r)
            for (int d = 1; d <= rd_max; ++d) {
                const PhaseReport rep = classify(alpha, r, d);
                const SequenceTrace tr = exact_trace(alpha, r, d, 0, n_max);
                bool ok = true;
                std::string why;
                switch (rep.regime) {
                    case Regime::IncreasingAll:
                        ok = detect_shape(tr).shape == Shape::Increasing;
                        break;
                    case Regime::DecreasingAll:
                        ok = detect_shape(tr).shape == Shape::Decreasing;
                        break;
                    case Regime::ConstantHalf:
                        for (const Rational& v : tr.values) ok &= v == Rational(1, 2);
                        break;
                    case Regime::Unimodal: {
                        const ShapeVerdict v = detect_shape(tr);
                        ok = v.shape == Shape::Unimodal && v.mode && rep.mode && *v.mode == *rep.mode;
                        break;
                    }
                    case Regime::DegenerateIncreasing:
                        ok = detail::degenerate_increasing_holds(tr, r, d, &why);
                        break;
                    case Regime::IncreasingTail: {
                        const auto n0 = detail::tail_start_from_trace(tr, 1);
                        ok = n0 && *n0 <= tail_limit;
                        break;
                    }
                    case Regime::DecreasingTail: {
                        const auto n0 = detail::tail_start_from_trace(tr, -1);
                        ok = n0 && *n0 <= tail_limit;
                        break;
                    }
                }
                ++cells;
                if (!ok) {
                    res.pass = false;
                    res.detail = "disagreement at alpha=" + alpha.str() + " r=" + std::to_string(r) +
                                 " d=" + std::to_string(d) + " (" + regime_name(rep.regime) + ")" +
                                 (why.empty() ? "" : ": " + why);
                    return res;
                }
            }
    res.detail = std::to_string(cells) + " grid cells (alpha k/20, r,d <= " +
                 std::to_string(rd_max) + ", n <= " + std::to_string(n_max) + ")";
    return res;
}

inline CheckResult dual_mirror_grid(int rd_max = 6) {
    CheckResult res{"dual classifications mirror each other", true, ""};
    auto tail_direction = [](Regime r) {
        switch (r) {
            case Regime::IncreasingAll:
            case Regime::IncreasingTail:
            case Regime::DegenerateIncreasing:
                return 1;
            case Regime::DecreasingAll:
            case Regime::DecreasingTail:
            case Regime::Unimodal:
                return -1;
            case Regime::ConstantHalf:
                return 0;
        }
        return 0;
    };
    for (const Rational& alpha : twentieth_grid())
        for (int r = 1; r <= rd_max; ++r)
            for (int d = 1; d <= r; ++d) {
                const PhaseReport a = classify(alpha, r, d);
                const PhaseReport b = classify(Rational(1) - alpha, r, r - d + 1);
                const bool ok = tail_direction(a.regime) == -tail_direction(b.regime) &&
                                Rational(1) - a.thresholds.drift_zero == b.thresholds.drift_zero &&
                                Rational(1) - a.thresholds.first_step_zero ==
                                    b.thresholds.first_step_zero;
                if (!ok) {
                    res.pass = false;
                    res.detail = "mirror broken at alpha=" + alpha.str() + " r=" + std::to_string(r) +
                                 " d=" + std::to_string(d);
                    return res;
                }
            }
    res.detail = "tail directions and thresholds swap under (alpha, d) -> (1-alpha, r-d+1)";
    return res;
}

inline CheckResult mode_argmax_agreement() {
    CheckResult res{"mode finder returns the argmax of the exact trace", true, ""};
    for (int r : {2, 3, 4}) {
        const Rational lo(1, 2L * r), hi(1, r + 1);
        const Rational w = hi - lo;
        for (const Rational& alpha : {lo + w / Rational(4), lo + Rational(3) * w / Rational(4), hi}) {
            const long mode = find_mode(alpha, r, 2000);
            const SequenceTrace tr = exact_trace(alpha, r, 1, 0, mode + 40);
            size_t best = 0;
            for (size_t i = 1; i < tr.values.size(); ++i)
                if (tr.values[i] >= tr.values[best]) best = i;
            if (mode < 1 || mode != static_cast<long>(best)) {
                res.pass = false;
                res.detail = "mismatch at r=" + std::to_string(r) + " alpha=" + alpha.str();
                return res;
            }
        }
    }
    res.detail = "agrees at three band points per r in {2,3,4}";
    return res;
}

// ---------------------------------------------------------------------------
// asymptotic laws
// ---------------------------------------------------------------------------

inline CheckResult sqrt_n_drift(long n_small = 1000, double tol_small = 0.05, long n_big = 10000,
                                double tol_big = 0.02) {
    CheckResult res{"sqrt(n) drift approaches its closed-form constant", true, ""};
    std::ostringstream table;
    struct Point {
        Rational alpha;
        int r, d;
    };
    for (const Point& pt : {Point{Rational(3, 10), 1, 1}, Point{Rational(3, 10), 2, 1},
                            Point{Rational(2, 5), 3, 2}, Point{Rational(7, 10), 1, 1}}) {
        const double c = sqrt_n_limit(pt.alpha, pt.r, pt.d);
        for (auto [n, tol] : {std::pair{n_small, tol_small}, std::pair{n_big, tol_big}}) {
            const double p = win_probability_quadrature(DuelParams(pt.alpha, n, pt.r, pt.d));
            const double scaled = std::sqrt(static_cast<double>(n)) * (p - 0.5);
            const double rel = std::abs(scaled / c - 1.0);
            if (!(rel <= tol)) {
                res.pass = false;
                res.detail = "relative gap " + detail::fmt(rel) + " at alpha=" + pt.alpha.str() +
                             " r=" + std::to_string(pt.r) + " d=" + std::to_string(pt.d) +
                             " n=" + std::to_string(n) + " (bound " + detail::fmt(tol) + ")";
                return res;
            }
            if (n == n_big)
                table << " (" << pt.alpha.str() << "," << pt.r << "," << pt.d
                      << "): rel=" << detail::fmt(rel) << ";";
        }
    }
    res.detail = "within " + detail::fmt(tol_small) + " at n=" + std::to_string(n_small) + ", " +
                 detail::fmt(tol_big) + " at n=" + std::to_string(n_big) + ";" + table.str();
    return res;
}

inline std::vector<Rational> epsilon_ladder() {
    return {Rational(1, 50), Rational(1, 100), Rational(1, 200), Rational(1, 400)};
}

inline CheckResult mode_law_ratios() {
    CheckResult res{"mode location law: ratios drift toward 1", true, ""};
    std::ostringstream table;
    for (int r : {2, 3}) {
        std::vector<double> ratios;
        for (const Rational& eps : epsilon_ladder()) {
            const Rational alpha = Rational(1, 2L * r) + eps;
            const long mode = find_mode(alpha, r, 2000);
            const double ratio = static_cast<double>(mode) / mode_location_estimate(alpha, r);
            ratios.push_back(ratio);
            table << " r=" << r << " eps=" << eps.str() << " mode=" << mode
                  << " ratio=" << detail::fmt(ratio) << ";";
        }
        const double final_gap = std::abs(ratios.back() - 1.0);
        if (!(ratios.back() >= 0.8 && ratios.back() <= 1.2)) {
            res.pass = false;
            res.detail = "final ratio " + detail::fmt(ratios.back()) + " outside [0.8, 1.2] at r=" +
                         std::to_string(r);
            return res;
        }
        if (!(final_gap <= std::abs(ratios.front() - 1.0) + 1e-12)) {
            res.pass = false;
            res.detail = "ratios do not trend toward 1 at r=" + std::to_string(r);
            return res;
        }
    }
    res.detail = "final ratios in [0.8, 1.2] and trending toward 1;" + table.str();
    return res;
}

inline CheckResult peak_law_ratios() {
    CheckResult res{"peak height law: ratios inside [0.7, 1.3] at the smallest eps", true, ""};
    std::ostringstream table;
    for (int r : {2, 3}) {
        double final_ratio = 0.0;
        for (const Rational& eps : epsilon_ladder()) {
            const Rational alpha = Rational(1, 2L * r) + eps;
            const long mode = find_mode(alpha, r, 2000);
            ExactDuelSequence seq(alpha, r, 1);
            while (seq.n() < mode) seq.advance();
            const double peak = (seq.value() - Rational(1, 2)).to_double();
            final_ratio = peak / peak_height_estimate(alpha, r);
            table << " r=" << r << " eps=" << eps.str() << " ratio=" << detail::fmt(final_ratio)
                  << ";";
        }
        if (!(final_ratio >= 0.7 && final_ratio <= 1.3)) {
            res.pass = false;
            res.detail = "final ratio " + detail::fmt(final_ratio) + " outside [0.7, 1.3] at r=" +
                         std::to_string(r);
            return res;
        }
    }
    res.detail = "final ratios inside [0.7, 1.3];" + table.str();
    return res;
}

// ---------------------------------------------------------------------------
// Monte Carlo
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kCheckSeed = 987654321ull;

inline CheckResult mc_duel_grid(std::uint64_t trials = 100000) {
    CheckResult res{"simulated duels sit within four sigma of exact values", true, ""};
    const std::vector<Rational> alphas = {Rational(1, 5), Rational(3, 10), Rational(2, 5),
                                          Rational(1, 2), Rational(3, 5), Rational(7, 10)};
    const std::vector<std::tuple<long, int, int>> shapes = {
        {5, 1, 1}, {10, 2, 1}, {7, 3, 2}, {20, 1, 1}, {12, 2, 3}};
    int outside = 0;
    double worst_sigma = 0.0;
    long point = 0;
    for (const Rational& alpha : alphas)
        for (auto [n, r, d] : shapes) {
            const DuelParams p(alpha, n, r, d);
            const Estimate e = simulate_duel(p, SimConfig{trials, kCheckSeed + point});
            const double exact = win_probability(p).to_double();
            const double sigma =
                std::sqrt(exact * (1.0 - exact) / static_cast<double>(trials));
            const double distance = sigma > 0 ? std::abs(e.p_hat - exact) / sigma : 0.0;
            worst_sigma = std::max(worst_sigma, distance);
            if (distance > 4.0) ++outside;
            ++point;
        }
    res.pass = outside <= 1;
    res.detail = std::to_string(outside) + " of 30 points outside 4 sigma (worst " +
                 detail::fmt(worst_sigma) + " sigma, " + std::to_string(trials) + " trials each)";
    return res;
}

inline CheckResult mc_double_exponential_identity(std::uint64_t trials = 1000000) {
    CheckResult res{"double-sided exponential positivity equals the duel value", true, ""};
    std::ostringstream table;
    for (auto [n, alpha] : {std::pair<long, Rational>{2, Rational(3, 10)},
                            std::pair<long, Rational>{5, Rational(1, 2)},
                            std::pair<long, Rational>{8, Rational(7, 10)}}) {
        const Estimate e = simulate_double_exponential(n, alpha, 1.0, SimConfig{trials, kCheckSeed});
        const double exact = win_probability(DuelParams(alpha, n - 1, 1, 1)).to_double();
        const double sigma = std::sqrt(exact * (1.0 - exact) / static_cast<double>(trials));
        const double distance = std::abs(e.p_hat - exact) / sigma;
        table << " (n=" << n << ", alpha=" << alpha.str() << "): " << detail::fmt(distance)
              << " sigma;";
        if (distance > 4.0) {
            res.pass = false;
            res.detail = "off by " + detail::fmt(distance) + " sigma at n=" + std::to_string(n) +
                         " alpha=" + alpha.str();
            return res;
        }
    }
    res.detail = "within 4 sigma at " + std::to_string(trials) + " trials;" + table.str();
    return res;
}

inline CheckResult mc_reproducibility() {
    CheckResult res{"fixed seeds reproduce estimates bit-exactly", true, ""};
    const DuelParams p(Rational(3, 10), 9, 2, 1);
    const SimConfig cfg{100000, kCheckSeed};
    if (!(simulate_duel(p, cfg) == simulate_duel(p, cfg))) {
        res.pass = false;
        res.detail = "duel estimates differ between runs";
        return res;
    }
    if (!(simulate_double_exponential(4, Rational(3, 10), 1.0, cfg) ==
          simulate_double_exponential(4, Rational(3, 10), 1.0, cfg))) {
        res.pass = false;
        res.detail = "double-exponential estimates differ between runs";
        return res;
    }
    res.detail = "two runs produced identical success counts";
    return res;
}

inline CheckResult mc_scale_invariance() {
    CheckResult res{"double-exponential estimate is independent of the scale", true, ""};
    const SimConfig cfg{50000, kCheckSeed};
    const Estimate a = simulate_double_exponential(3, Rational(3, 10), 1.0, cfg);
    const Estimate b = simulate_double_exponential(3, Rational(3, 10), 10.0, cfg);
    res.pass = a == b;
    res.detail = res.pass ? "identical indicator stream for scale 1 and 10"
                          : "estimates depend on the scale";
    return res;
}

// ---------------------------------------------------------------------------
// conjecture scans (descriptive)
// ---------------------------------------------------------------------------

inline CheckResult conjecture_band_scan(int r = 4, int d = 2, long n_max = 80) {
    CheckResult res{"band scan at r=4, d=2 completes and matches proved claims", true, ""};
    const std::vector<Rational> grid = {Rational(3, 10), Rational(3, 8),  Rational(39, 100),
                                        Rational(2, 5),  Rational(1, 2), Rational(3, 5)};
    const ConjectureReport report = scan_conjectures(r, d, grid, n_max);
    std::ostringstream table;
    for (const ConjectureRow& row : report.rows) {
        table << " alpha=" << row.alpha.str() << ": " << shape_name(row.observed.shape);
        if (row.observed.mode) table << " (mode " << *row.observed.mode << ")";
        if (row.tail_start) table << " (n0 " << *row.tail_start << ")";
        table << " vs " << row.predicted << ";";
        if (row.proved && !row.agrees) {
            res.pass = false;
            res.detail = "proved claim violated at alpha=" + row.alpha.str();
            return res;
        }
    }
    res.detail = "observed shapes:" + table.str();
    return res;
}

inline CheckResult curvature_scan(long n_max = 100) {
    CheckResult res{"curvature in monotone regimes (proved cases asserted, rest reported)", true, ""};
    std::ostringstream table;
    // concavity of the d=1 increasing band is proved, boundary included
    for (int r : {2, 3, 4})
        for (const Rational& alpha : {Rational(1, 4L * r), Rational(1, 2L * r)}) {
            const CurvatureVerdict v = detect_curvature(exact_trace(alpha, r, 1, 0, n_max));
            table << " (alpha=" << alpha.str() << ",r=" << r << ",d=1): "
                  << curvature_name(v.curvature) << ";";
            if (v.curvature != Curvature::Concave) {
                res.pass = false;
                res.detail = "expected strict concavity at r=" + std::to_string(r) +
                             " alpha=" + alpha.str();
                return res;
            }
        }
    // monotone general-d cells: observations only
    struct Cell {
        Rational alpha;
        int r, d;
    };
    for (const Cell& cell : {Cell{Rational(3, 5), 3, 1}, Cell{Rational(2, 5), 2, 2},
                             Cell{Rational(7, 10), 3, 2}, Cell{Rational(11, 20), 4, 2},
                             Cell{Rational(11, 20), 1, 2}}) {
        const CurvatureVerdict v =
            detect_curvature(exact_trace(cell.alpha, cell.r, cell.d, 0, n_max));
        table << " (alpha=" << cell.alpha.str() << ",r=" << cell.r << ",d=" << cell.d
              << "): " << curvature_name(v.curvature);
        if (v.violation_index) table << " from n=" << *v.violation_index;
        table << ";";
    }
    res.detail = "n <= " + std::to_string(n_max) + ";" + table.str();
    return res;
}

inline CheckResult coefficient_sign_table(int d = 2, int r_max = 8) {
    CheckResult res{"coefficient sign pattern of the d=2 weight polynomials", true, ""};
    long holds = 0, total = 0;
    std::ostringstream exceptions;
    for (int r = 2 * d; r <= r_max; ++r)
        for (const Rational& alpha : tenth_grid()) {
            if (alpha >= Rational(2L * d - 1, 2L * r)) continue;  // pattern is a small-alpha observation
            const auto signs = coefficient_signs(polynomial_via_chebyshev(alpha, r, d));
            bool pattern = signs.size() >= 3 && signs[0] > 0 && signs[1] < 0;
            for (size_t j = 2; j < signs.size(); ++j) pattern &= signs[j] > 0;
            ++total;
            if (pattern)
                ++holds;
            else
                exceptions << " (r=" << r << ", alpha=" << alpha.str() << ")";
        }
    res.detail = "x^2 coefficient negative, all others positive at " + std::to_string(holds) + "/" +
                 std::to_string(total) + " small-alpha grid points" +
                 (holds == total ? "" : "; exceptions:" + exceptions.str());
    return res;
}

}  // namespace binduel::checks
