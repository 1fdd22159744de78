#pragma once

// Exact probabilities for the coin duel. One player makes n + r tosses of a
// coin with heads probability alpha, the other makes n; we compute the
// probability that the first player finishes at least d heads ahead.
//
// Everything here is exact rational arithmetic: the direct double sum over
// binomial pmfs, the distribution of the head-count gap between two
// length-n toss sequences, and the one-step difference obtained by
// conditioning on each player's final toss.

#include "binduel/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace binduel {

// Exact operations refuse n beyond this; larger n belongs to the
// floating-point quadrature path.
inline constexpr long kExactNLimit = 5000;

struct DuelParams {
    Rational alpha;  // heads probability, in (0,1), exact
    long n;          // common toss count, >= 0
    int r;           // extra tosses for the leading player, >= 1
    int d;           // required lead in heads, >= 1

    DuelParams(Rational alpha_, long n_, int r_, int d_)
        : alpha(std::move(alpha_)), n(n_), r(r_), d(d_) {
        if (alpha.sign() <= 0 || alpha >= Rational(1))
            throw std::domain_error("DuelParams: alpha must lie strictly in (0,1)");
        if (n < 0) throw std::domain_error("DuelParams: n must be >= 0");
        if (r < 1) throw std::domain_error("DuelParams: r must be >= 1");
        if (d < 1) throw std::domain_error("DuelParams: d must be >= 1");
    }
};

namespace detail {

inline void check_exact_n(long n) {
    if (n > kExactNLimit)
        throw std::domain_error("exact arithmetic limited to n <= " +
                                std::to_string(kExactNLimit) +
                                "; use the quadrature path for larger n");
}

}  // namespace detail

// P{S_m = k} = C(m,k) alpha^k (1-alpha)^(m-k), exactly.
inline Rational binomial_pmf(long k, long m, const Rational& alpha) {
    if (m < 0) throw std::domain_error("binomial_pmf: m must be >= 0");
    if (k < 0 || k > m) throw std::domain_error("binomial_pmf: need 0 <= k <= m");
    Rational term(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(k)));
    return term * pow(alpha, k) * pow(Rational(1) - alpha, m - k);
}

// Full pmf row of S_m, built incrementally from the k=0 term.
inline std::vector<Rational> binomial_pmf_row(long m, const Rational& alpha) {
    if (m < 0) throw std::domain_error("binomial_pmf_row: m must be >= 0");
    detail::check_exact_n(m);
    const Rational beta = Rational(1) - alpha;
    std::vector<Rational> row(static_cast<size_t>(m) + 1);
    row[0] = pow(beta, m);
    const Rational ratio = alpha / beta;
    for (long k = 0; k < m; ++k)
        row[static_cast<size_t>(k) + 1] =
            row[static_cast<size_t>(k)] * ratio * Rational(m - k, k + 1);
    return row;
}

// The double sum over both players' pmfs:
//   sum_{i=0}^{n} sum_{j=i+d}^{n+r} P{S_{n+r} = j} P{S'_n = i}.
// The inner sums are shared suffix sums of the longer player's pmf.
// For n = 0 this degenerates to P{S_r >= d} (zero when d > r).
inline Rational win_probability(const DuelParams& p) {
    detail::check_exact_n(p.n);
    const long total = p.n + p.r;
    const std::vector<Rational> pmf_long = binomial_pmf_row(total, p.alpha);
    const std::vector<Rational> pmf_short = binomial_pmf_row(p.n, p.alpha);

    // tail[j] = P{S_{n+r} >= j}
    std::vector<Rational> tail(static_cast<size_t>(total) + 2);
    for (long j = total; j >= 0; --j)
        tail[static_cast<size_t>(j)] = tail[static_cast<size_t>(j) + 1] + pmf_long[static_cast<size_t>(j)];

    Rational out;
    for (long i = 0; i <= p.n; ++i) {
        const long need = i + p.d;
        if (need > total) break;
        out += pmf_short[static_cast<size_t>(i)] * tail[static_cast<size_t>(need)];
    }
    return out;
}

// Number of outcome pairs in which the player with n+1 fair tosses strictly
// leads the player with n: sum_{i=0}^{n} sum_{j=i+1}^{n+1} C(n+1,j) C(n,i).
// By symmetry this is half of 2^(2n+1), i.e. 4^n; callers assert that.
inline Integer winning_outcome_count(long n) {
    if (n < 0) throw std::domain_error("winning_outcome_count: n must be >= 0");
    detail::check_exact_n(n);
    std::vector<Integer> tail(static_cast<size_t>(n) + 3);
    for (long j = n + 1; j >= 0; --j)
        tail[static_cast<size_t>(j)] = tail[static_cast<size_t>(j) + 1] +
            binomial(static_cast<unsigned long>(n + 1), static_cast<unsigned long>(j));
    Integer out(0);
    for (long i = 0; i <= n; ++i)
        out += binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i)) *
               tail[static_cast<size_t>(i) + 1];
    return out;
}

// Distribution of the head-count gap S'_n - S_n between two independent
// length-n toss sequences. Symmetric about zero, so only offsets 0..n are
// stored; it is strictly decreasing in |offset| and sums to one.
class GapDistribution {
public:
    static GapDistribution initial() {
        GapDistribution g;
        g.tosses_ = 0;
        g.probs_ = {Rational(1)};
        return g;
    }

    static GapDistribution build(long n, const Rational& alpha) {
        if (n < 0) throw std::domain_error("GapDistribution: n must be >= 0");
        detail::check_exact_n(n);
        GapDistribution g = initial();
        for (long i = 0; i < n; ++i) g.advance(alpha);
        return g;
    }

    // One more toss for each player:
    //   q_{n+1}(i) = a(1-a) (q_n(i-1) + q_n(i+1)) + (a^2 + (1-a)^2) q_n(i).
    void advance(const Rational& alpha) {
        const Rational beta = Rational(1) - alpha;
        const Rational cross = alpha * beta;
        const Rational stay = alpha * alpha + beta * beta;
        std::vector<Rational> next(probs_.size() + 1);
        for (long i = 0; i <= tosses_ + 1; ++i)
            next[static_cast<size_t>(i)] = cross * (at(i - 1) + at(i + 1)) + stay * at(i);
        probs_ = std::move(next);
        ++tosses_;
    }

    // P{gap = offset}; symmetric, zero outside [-n, n].
    Rational at(long offset) const {
        const long k = offset < 0 ? -offset : offset;
        if (k > tosses_) return Rational(0);
        return probs_[static_cast<size_t>(k)];
    }

    long tosses() const { return tosses_; }

private:
    long tosses_ = 0;
    std::vector<Rational> probs_;
};

inline GapDistribution gap_distribution(long n, const Rational& alpha) {
    return GapDistribution::build(n, alpha);
}

// p_{n+1} - p_n by conditioning on each player's final toss:
//   a(1-a) sum_{i=0}^{r} P{S_r = i} (q_n(i-d+1) - q_n(i-d)).
inline Rational step_difference(const DuelParams& p) {
    detail::check_exact_n(p.n);
    const GapDistribution gap = gap_distribution(p.n, p.alpha);
    const std::vector<Rational> pmf_r = binomial_pmf_row(p.r, p.alpha);
    Rational sum;
    for (int i = 0; i <= p.r; ++i)
        sum += pmf_r[static_cast<size_t>(i)] * (gap.at(i - p.d + 1) - gap.at(i - p.d));
    return p.alpha * (Rational(1) - p.alpha) * sum;
}

// Tail-swap identity: counting tails instead of heads exchanges
// (alpha, d) with (1-alpha, r-d+1), so
//   p(alpha, n, r, d) = 1 - p(1-alpha, n, r, r-d+1).
// Requires d <= r so that the swapped lead r-d+1 is at least 1.
inline Rational dual_win_probability(const DuelParams& p) {
    if (p.r - p.d + 1 < 1)
        throw std::domain_error("dual_win_probability: requires d <= r");
    DuelParams mirrored(Rational(1) - p.alpha, p.n, p.r, p.r - p.d + 1);
    return Rational(1) - win_probability(mirrored);
}

// For one extra toss and a lead of one, conditioning on the tie event gives
//   p = 1/2 + (2 alpha - 1)/2 * P{S_n = S'_n}.
inline Rational win_probability_via_tie(long n, const Rational& alpha) {
    if (n < 0) throw std::domain_error("win_probability_via_tie: n must be >= 0");
    const Rational tie = gap_distribution(n, alpha).at(0);
    return Rational(1, 2) + (Rational(2) * alpha - Rational(1)) / Rational(2) * tie;
}

// Incremental generator of the sequence p_0, p_1, ... for fixed
// (alpha, r, d). Each advance costs O(n) rational operations, so a full
// trace to N costs O(N^2) instead of the O(N^3) of repeated double sums.
class ExactDuelSequence {
public:
    ExactDuelSequence(Rational alpha, int r, int d)
        : alpha_(std::move(alpha)),
          r_(r),
          d_(d),
          pmf_r_(binomial_pmf_row(r, alpha_)),
          gap_(GapDistribution::initial()) {
        if (alpha_.sign() <= 0 || alpha_ >= Rational(1))
            throw std::domain_error("ExactDuelSequence: alpha must lie in (0,1)");
        if (r < 1 || d < 1) throw std::domain_error("ExactDuelSequence: r, d must be >= 1");
        // p_0 = P{S_r >= d}
        for (int j = d; j <= r; ++j) value_ += pmf_r_[static_cast<size_t>(j)];
        cross_ = alpha_ * (Rational(1) - alpha_);
    }

    long n() const { return gap_.tosses(); }
    const Rational& value() const { return value_; }

    // p_{n+1} - p_n at the current n.
    Rational step_difference() const {
        Rational sum;
        for (int i = 0; i <= r_; ++i)
            sum += pmf_r_[static_cast<size_t>(i)] * (gap_.at(i - d_ + 1) - gap_.at(i - d_));
        return cross_ * sum;
    }

    void advance() {
        detail::check_exact_n(n() + 1);
        value_ += step_difference();
        gap_.advance(alpha_);
    }

private:
    Rational alpha_;
    int r_;
    int d_;
    std::vector<Rational> pmf_r_;
    GapDistribution gap_;
    Rational value_;
    Rational cross_;
};

}  // namespace binduel
