#pragma once

// Regime classification for the sequence n -> p_n at fixed (alpha, r, d),
// exact shape detection on computed traces, the mode finder for the d = 1
// transitional band, and the closed-form asymptotic laws.
//
// The classification is a total function of (alpha, r, d) driven by the
// three critical values
//
//   1/(2r)          d = 1 tail-direction flip
//   (2d-1)/(2r)     where the drift 2 alpha r - 2d + 1 vanishes
//   d/(r+1)         where the first step p_1 - p_0 changes sign
//
// with exact rational comparisons, so boundary membership is decidable.

#include "binduel/exact_kernel.hpp"
#include "binduel/even_polynomial.hpp"
#include "binduel/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace binduel {

struct ModeBeyondRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnimodalityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Regime {
    IncreasingAll,
    DecreasingAll,
    ConstantHalf,
    Unimodal,
    IncreasingTail,
    DecreasingTail,
    DegenerateIncreasing,
};

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::IncreasingAll: return "increasing";
        case Regime::DecreasingAll: return "decreasing";
        case Regime::ConstantHalf: return "constant-half";
        case Regime::Unimodal: return "unimodal";
        case Regime::IncreasingTail: return "increasing-tail";
        case Regime::DecreasingTail: return "decreasing-tail";
        case Regime::DegenerateIncreasing: return "degenerate-increasing";
    }
    return "?";
}

struct PhaseThresholds {
    Rational one_over_2r;     // 1/(2r)
    Rational drift_zero;      // (2d-1)/(2r)
    Rational first_step_zero; // d/(r+1)
};

struct PhaseReport {
    Regime regime;
    PhaseThresholds thresholds;
    std::string case_id;  // taxonomy id, e.g. "d1/unimodal", "long/b"
    std::string rule;     // defining inequalities of the case
    std::optional<long> mode;  // filled for the unimodal regime when reachable
    std::string note;
};

// Closed-form constant of the sqrt(n) drift:
//   sqrt(n) (p_n - 1/2) -> (2 alpha r - 2d + 1) / (4 sqrt(pi alpha (1-alpha))).
inline double sqrt_n_limit(const Rational& alpha, int r, int d) {
    const double a = alpha.to_double();
    const double numer = polynomial_at_one(alpha, r, d).to_double();
    return numer / (4.0 * std::sqrt(std::numbers::pi) * std::sqrt(a * (1.0 - a)));
}

// Mode location law near the lower critical value:
//   N ~ (r-1)/(4r) * (alpha - 1/(2r))^(-1)  as alpha decreases to 1/(2r).
inline double mode_location_estimate(const Rational& alpha, int r) {
    if (r < 2) throw std::domain_error("mode_location_estimate: r must be >= 2");
    const Rational gap = alpha - Rational(1, 2L * r);
    if (gap.sign() <= 0)
        throw std::domain_error("mode_location_estimate: alpha must exceed 1/(2r)");
    return (Rational(r - 1, 4L * r) / gap).to_double();
}

// Peak height law:
//   p_N - 1/2 ~ (4/3) sqrt(r^5 / (pi (2r-1)(r-1))) (alpha - 1/(2r))^(3/2).
// Defined on alpha >= 1/(2r); the boundary itself gives zero.
inline double peak_height_estimate(const Rational& alpha, int r) {
    if (r < 2) throw std::domain_error("peak_height_estimate: r must be >= 2");
    const Rational gap = alpha - Rational(1, 2L * r);
    if (gap.sign() < 0)
        throw std::domain_error("peak_height_estimate: alpha must be >= 1/(2r)");
    const double rr = static_cast<double>(r);
    const double scale = 4.0 / 3.0 *
        std::sqrt(std::pow(rr, 5) / (std::numbers::pi * (2.0 * rr - 1.0) * (rr - 1.0)));
    return scale * std::pow(gap.to_double(), 1.5);
}

// First n >= 1 with p_n > p_{n+1}, scanned with exact arithmetic. In the
// transitional band the sequence is unimodal, so the first strict drop is
// the mode (a width-one flat top resolves to its right end). The paranoid
// flag keeps scanning to n_max and demands strict decrease throughout.
inline long find_mode(const Rational& alpha, int r, long n_max, bool paranoid = false) {
    if (r < 2) throw std::domain_error("find_mode: r must be >= 2");
    if (alpha <= Rational(1, 2L * r) || alpha > Rational(1, r + 1))
        throw std::domain_error("find_mode: alpha outside the unimodal band (1/(2r), 1/(r+1)]");
    ExactDuelSequence seq(alpha, r, 1);
    seq.advance();  // diffs are examined from n = 1 on
    long mode = -1;
    while (seq.n() <= n_max) {
        const int sign = seq.step_difference().sign();
        if (mode < 0) {
            if (sign < 0) {
                mode = seq.n();
                if (!paranoid) return mode;
            }
        } else if (sign >= 0) {
            throw UnimodalityViolation("sequence rose again at n = " + std::to_string(seq.n()) +
                                       " after the mode at n = " + std::to_string(mode));
        }
        seq.advance();
    }
    if (mode < 0)
        throw ModeBeyondRange("no decrease found through n_max = " + std::to_string(n_max));
    return mode;
}

inline PhaseReport classify(const Rational& alpha, int r, int d, long mode_scan_limit = 0) {
    if (alpha.sign() <= 0 || alpha >= Rational(1))
        throw std::domain_error("classify: alpha must lie in (0,1)");
    if (r < 1 || d < 1) throw std::domain_error("classify: r, d must be >= 1");

    PhaseReport rep;
    rep.thresholds = {Rational(1, 2L * r), Rational(2L * d - 1, 2L * r), Rational(d, r + 1)};
    const Rational half(1, 2);

    if (r == 1 && d == 1) {
        if (alpha < half) {
            rep.regime = Regime::IncreasingAll;
            rep.case_id = "r1d1/increasing";
            rep.rule = "r=d=1, alpha < 1/2";
            rep.note = "strictly increasing and strictly concave";
        } else if (alpha == half) {
            rep.regime = Regime::ConstantHalf;
            rep.case_id = "r1d1/constant";
            rep.rule = "r=d=1, alpha = 1/2";
        } else {
            rep.regime = Regime::DecreasingAll;
            rep.case_id = "r1d1/decreasing";
            rep.rule = "r=d=1, alpha > 1/2";
            rep.note = "strictly decreasing and strictly convex";
        }
        return rep;
    }

    if (d == 1) {  // r >= 2
        if (alpha <= rep.thresholds.one_over_2r) {
            rep.regime = Regime::IncreasingAll;
            rep.case_id = "d1/increasing";
            rep.rule = "d=1, r>=2, alpha <= 1/(2r)";
        } else if (alpha <= rep.thresholds.first_step_zero) {
            rep.regime = Regime::Unimodal;
            rep.case_id = "d1/unimodal";
            rep.rule = "d=1, r>=2, 1/(2r) < alpha <= 1/(r+1)";
            long limit = mode_scan_limit;
            if (limit <= 0) {
                const double est = mode_location_estimate(alpha, r);
                limit = std::min<long>(kExactNLimit,
                                       std::max<long>(64, 4 * static_cast<long>(std::ceil(est)) + 64));
            }
            try {
                rep.mode = find_mode(alpha, r, limit);
            } catch (const ModeBeyondRange&) {
                rep.note = "mode beyond the exact-scan guard (alpha too close to 1/(2r))";
            }
        } else {
            rep.regime = Regime::DecreasingAll;
            rep.case_id = "d1/decreasing";
            rep.rule = "d=1, r>=2, alpha > 1/(r+1)";
        }
        return rep;
    }

    if (r <= d - 1) {
        rep.regime = Regime::DegenerateIncreasing;
        rep.case_id = "short/increasing";
        rep.rule = "r <= d-1, any alpha";
        if (r <= d - 2)
            rep.note = "p_n = 0 for n < d-r; strictly increasing from there on";
        return rep;
    }

    if (r <= 2 * d - 2) {  // d <= r
        if (alpha < rep.thresholds.first_step_zero) {
            rep.regime = Regime::IncreasingAll;
            rep.case_id = "mid/a";
            rep.rule = "d <= r <= 2d-2, alpha < d/(r+1)";
        } else if (alpha < rep.thresholds.drift_zero) {
            rep.regime = Regime::IncreasingTail;
            rep.case_id = "mid/b";
            rep.rule = "d <= r <= 2d-2, d/(r+1) <= alpha < (2d-1)/(2r)";
        } else {
            rep.regime = Regime::DecreasingTail;
            rep.case_id = "mid/c";
            rep.rule = "d <= r <= 2d-2, alpha >= (2d-1)/(2r)";
        }
        return rep;
    }

    if (r == 2 * d - 1) {
        if (alpha < half) {
            rep.regime = Regime::IncreasingAll;
            rep.case_id = "balanced/a";
            rep.rule = "r = 2d-1, alpha < 1/2";
        } else if (alpha == half) {
            rep.regime = Regime::ConstantHalf;
            rep.case_id = "balanced/b";
            rep.rule = "r = 2d-1, alpha = 1/2";
        } else {
            rep.regime = Regime::DecreasingAll;
            rep.case_id = "balanced/c";
            rep.rule = "r = 2d-1, alpha > 1/2";
        }
        return rep;
    }

    // r >= 2d
    if (alpha <= rep.thresholds.drift_zero) {
        rep.regime = Regime::IncreasingTail;
        rep.case_id = "long/a";
        rep.rule = "r >= 2d, alpha <= (2d-1)/(2r)";
    } else if (alpha <= rep.thresholds.first_step_zero) {
        rep.regime = Regime::DecreasingTail;
        rep.case_id = "long/b";
        rep.rule = "r >= 2d, (2d-1)/(2r) < alpha <= d/(r+1)";
    } else {
        rep.regime = Regime::DecreasingAll;
        rep.case_id = "long/c";
        rep.rule = "r >= 2d, alpha > d/(r+1)";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Sequence traces and shape detection
// ---------------------------------------------------------------------------

enum class TraceMethod { Exact, Quadrature };

struct SequenceTrace {
    Rational alpha;
    int r = 1, d = 1;
    long n_from = 0;
    TraceMethod method = TraceMethod::Exact;
    // values[i] = p_{n_from + i}. Quadrature values are the computed doubles
    // stored losslessly as dyadic rationals, so comparisons stay exact.
    std::vector<Rational> values;
    std::string precision_note;
};

inline SequenceTrace exact_trace(const Rational& alpha, int r, int d, long n_from, long n_to) {
    if (n_from < 0 || n_from > n_to) throw std::domain_error("exact_trace: need 0 <= n_from <= n_to");
    detail::check_exact_n(n_to);
    SequenceTrace tr{alpha, r, d, n_from, TraceMethod::Exact, {}, "exact rational arithmetic"};
    ExactDuelSequence seq(alpha, r, d);
    for (long n = 0; n <= n_to; ++n) {
        if (n >= n_from) tr.values.push_back(seq.value());
        if (n < n_to) seq.advance();
    }
    return tr;
}

inline SequenceTrace quadrature_trace(const Rational& alpha, int r, int d, long n_from, long n_to,
                                      const QuadratureConfig& cfg = {}) {
    if (n_from < 0 || n_from > n_to) throw std::domain_error("quadrature_trace: need 0 <= n_from <= n_to");
    SequenceTrace tr{alpha, r, d, n_from, TraceMethod::Quadrature, {},
                     "double-precision quadrature, abs error <= 1e-13"};
    for (long n = n_from; n <= n_to; ++n)
        tr.values.push_back(Rational(mpq_class(win_probability_quadrature(DuelParams(alpha, n, r, d), cfg))));
    return tr;
}

enum class Shape { Increasing, Decreasing, Constant, Unimodal, Other };

inline const char* shape_name(Shape s) {
    switch (s) {
        case Shape::Increasing: return "increasing";
        case Shape::Decreasing: return "decreasing";
        case Shape::Constant: return "constant";
        case Shape::Unimodal: return "unimodal";
        case Shape::Other: return "other";
    }
    return "?";
}

struct ShapeVerdict {
    Shape shape = Shape::Other;
    std::optional<long> mode;             // absolute n of the peak
    std::optional<long> violation_index;  // absolute n where the pattern breaks
};

// Strict shape of the trace: increasing, decreasing, constant, or unimodal
// in the sense a_0 < ... < a_{N-1} <= a_N > a_{N+1} > ... (one flat step at
// the top allowed). Anything else is Other with the first offending index.
inline ShapeVerdict detect_shape(const SequenceTrace& tr) {
    const auto& v = tr.values;
    if (v.size() < 3) throw std::invalid_argument("detect_shape: need at least 3 points");
    const size_t m = v.size() - 1;  // number of steps
    std::vector<int> sign(m);
    bool all_pos = true, all_neg = true, all_zero = true;
    for (size_t i = 0; i < m; ++i) {
        sign[i] = v[i + 1] == v[i] ? 0 : (v[i + 1] > v[i] ? 1 : -1);
        all_pos &= sign[i] > 0;
        all_neg &= sign[i] < 0;
        all_zero &= sign[i] == 0;
    }
    if (all_zero) return {Shape::Constant, std::nullopt, std::nullopt};
    if (all_pos) return {Shape::Increasing, std::nullopt, std::nullopt};
    if (all_neg) return {Shape::Decreasing, std::nullopt, std::nullopt};

    size_t j = 0;
    while (sign[j] > 0) ++j;
    if (sign[j] == 0) {
        // candidate flat top v[j] == v[j+1]; everything after must drop
        if (j + 1 >= m)
            return {Shape::Other, std::nullopt, tr.n_from + static_cast<long>(j)};
        for (size_t i = j + 1; i < m; ++i)
            if (sign[i] >= 0)
                return {Shape::Other, std::nullopt, tr.n_from + static_cast<long>(i)};
        return {Shape::Unimodal, tr.n_from + static_cast<long>(j) + 1, std::nullopt};
    }
    for (size_t i = j + 1; i < m; ++i)
        if (sign[i] >= 0)
            return {Shape::Other, std::nullopt, tr.n_from + static_cast<long>(i)};
    if (j == 0)  // drop at the very start but not all negative: caught above
        return {Shape::Other, std::nullopt, tr.n_from};
    return {Shape::Unimodal, tr.n_from + static_cast<long>(j), std::nullopt};
}

enum class Curvature { Concave, Convex, Linear, Other };

inline const char* curvature_name(Curvature c) {
    switch (c) {
        case Curvature::Concave: return "concave";
        case Curvature::Convex: return "convex";
        case Curvature::Linear: return "linear";
        case Curvature::Other: return "other";
    }
    return "?";
}

struct CurvatureVerdict {
    Curvature curvature = Curvature::Other;
    std::optional<long> violation_index;
};

// Strict sign pattern of second differences over the trace.
inline CurvatureVerdict detect_curvature(const SequenceTrace& tr) {
    const auto& v = tr.values;
    if (v.size() < 3) throw std::invalid_argument("detect_curvature: need at least 3 points");
    bool all_neg = true, all_pos = true, all_zero = true;
    for (size_t i = 0; i + 2 < v.size(); ++i) {
        const Rational d2 = v[i + 2] - Rational(2) * v[i + 1] + v[i];
        const int s = d2.sign();
        all_neg &= s < 0;
        all_pos &= s > 0;
        all_zero &= s == 0;
        if (!all_neg && !all_pos && !all_zero)
            return {Curvature::Other, tr.n_from + static_cast<long>(i)};
    }
    if (all_zero) return {Curvature::Linear, std::nullopt};
    if (all_neg) return {Curvature::Concave, std::nullopt};
    return {Curvature::Convex, std::nullopt};
}

// Smallest n0 such that sign(p_{n+1} - p_n) == expected_sign for every n in
// [n0, n_hi]; nullopt if even the last difference disagrees.
inline std::optional<long> tail_sign_start(const Rational& alpha, int r, int d,
                                           int expected_sign, long n_hi) {
    ExactDuelSequence seq(alpha, r, d);
    std::vector<int> signs;
    signs.reserve(static_cast<size_t>(n_hi) + 1);
    for (long n = 0; n <= n_hi; ++n) {
        signs.push_back(seq.step_difference().sign());
        seq.advance();
    }
    long n0 = n_hi + 1;
    for (long n = n_hi; n >= 0; --n) {
        if (signs[static_cast<size_t>(n)] != expected_sign) break;
        n0 = n;
    }
    if (n0 > n_hi) return std::nullopt;
    return n0;
}

// ---------------------------------------------------------------------------
// Empirical scans of the unproved general-d behavior
// ---------------------------------------------------------------------------

struct ConjectureRow {
    Rational alpha;
    std::string predicted;  // expectation, marked proved or conjectured
    bool proved = false;    // the classification pins the full shape or the tail sign
    ShapeVerdict observed;
    std::optional<long> tail_start;  // observed n0 for tail-only claims
    std::vector<int> coeff_signs;    // signs of the weight polynomial's x^(2j) coefficients
    bool agrees = true;              // observed vs proved content (true where nothing is proved)
};

struct ConjectureReport {
    int r = 1, d = 1;
    long n_max = 0;
    std::vector<ConjectureRow> rows;
};

// For each alpha: exact trace to n_max, detected shape, weight-polynomial
// coefficient signs, and the prediction from the proved classification where
// one applies (descriptive output; nothing here asserts the conjectures).
inline ConjectureReport scan_conjectures(int r, int d, const std::vector<Rational>& alpha_grid,
                                         long n_max) {
    ConjectureReport report{r, d, n_max, {}};
    for (const Rational& alpha : alpha_grid) {
        ConjectureRow row;
        row.alpha = alpha;
        row.coeff_signs = coefficient_signs(polynomial_via_chebyshev(alpha, r, d));
        const PhaseReport rep = classify(alpha, r, d);
        const SequenceTrace tr = exact_trace(alpha, r, d, 0, n_max);
        row.observed = detect_shape(tr);
        switch (rep.regime) {
            case Regime::IncreasingAll:
            case Regime::DegenerateIncreasing:
                row.predicted = "increasing (proved)";
                row.proved = true;
                row.agrees = row.observed.shape == Shape::Increasing;
                break;
            case Regime::DecreasingAll:
                row.predicted = "decreasing (proved)";
                row.proved = true;
                row.agrees = row.observed.shape == Shape::Decreasing;
                break;
            case Regime::ConstantHalf:
                row.predicted = "constant 1/2 (proved)";
                row.proved = true;
                row.agrees = row.observed.shape == Shape::Constant;
                break;
            case Regime::Unimodal:
                row.predicted = "unimodal (proved)";
                row.proved = true;
                row.agrees = row.observed.shape == Shape::Unimodal;
                break;
            case Regime::IncreasingTail:
                row.predicted = r >= 2 * d && alpha < rep.thresholds.drift_zero
                                    ? "increasing tail (proved); increasing for all n (conjectured)"
                                    : "increasing tail (proved)";
                row.proved = true;
                row.tail_start = tail_sign_start(alpha, r, d, 1, n_max - 1);
                row.agrees = row.tail_start.has_value();
                break;
            case Regime::DecreasingTail:
                row.predicted = r >= 2 * d
                                    ? "decreasing tail (proved); unimodal (conjectured)"
                                    : "decreasing tail (proved)";
                row.proved = true;
                row.tail_start = tail_sign_start(alpha, r, d, -1, n_max - 1);
                row.agrees = row.tail_start.has_value();
                break;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace binduel
