#pragma once

// Seeded Monte Carlo validation of the exact kernel: direct simulation of
// the coin duel, and the positivity probability of sums of centered
// double-sided exponential variables, which reduces to the duel with one
// extra toss and a lead of one.
//
// The generator is counter-based (a splitmix64 finalizer applied to
// seed + counter), so draw j of trial t reads word(t * draws_per_trial + j)
// and results are bit-identical no matter how trials are scheduled.

#include "binduel/exact_kernel.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace binduel {

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t word(std::uint64_t counter) const {
        std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 random bits.
    double uniform01(std::uint64_t counter) const {
        return static_cast<double>(word(counter) >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t seed_;
};

// floor(alpha * 2^64): a 64-bit draw below this threshold is a head, so the
// Bernoulli bias is exact to within 2^-64 of the rational alpha.
inline std::uint64_t bernoulli_threshold(const Rational& alpha) {
    if (alpha.sign() < 0 || alpha >= Rational(1))
        throw std::domain_error("bernoulli_threshold: alpha must lie in [0,1)");
    Integer scaled = alpha.num() << 64;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), alpha.den().get_mpz_t());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, q.get_mpz_t());
    return out;
}

struct SimConfig {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0x1D0B5EEDu;
    static constexpr const char* kRngId = "splitmix64-counter";
};

struct Estimate {
    double p_hat = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double ci4_low = 0.0;   // p_hat - 4 sigma, clamped to [0,1]
    double ci4_high = 0.0;  // p_hat + 4 sigma, clamped to [0,1]

    bool operator==(const Estimate&) const = default;
};

namespace mc_detail {

inline Estimate make_estimate(std::uint64_t successes, std::uint64_t trials) {
    Estimate e;
    e.successes = successes;
    e.trials = trials;
    e.p_hat = static_cast<double>(successes) / static_cast<double>(trials);
    e.std_error = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(trials));
    e.ci4_low = std::max(0.0, e.p_hat - 4.0 * e.std_error);
    e.ci4_high = std::min(1.0, e.p_hat + 4.0 * e.std_error);
    return e;
}

}  // namespace mc_detail

// Empirical frequency of {S_{n+r} >= S'_n + d} over independent trials.
inline Estimate simulate_duel(const DuelParams& p, const SimConfig& cfg) {
    if (cfg.trials < 1) throw std::domain_error("simulate_duel: trials must be >= 1");
    const CounterRng rng(cfg.seed);
    const std::uint64_t thr = bernoulli_threshold(p.alpha);
    const std::uint64_t flips = static_cast<std::uint64_t>(2 * p.n + p.r);
    std::uint64_t successes = 0;
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        const std::uint64_t base = t * flips;
        long lead = 0;
        std::uint64_t j = 0;
        for (long i = 0; i < p.n + p.r; ++i, ++j)
            lead += rng.word(base + j) < thr;
        for (long i = 0; i < p.n; ++i, ++j)
            lead -= rng.word(base + j) < thr;
        successes += lead >= p.d;
    }
    return mc_detail::make_estimate(successes, cfg.trials);
}

// A centered double-sided exponential variable can be written as
//   Z = (1/a) (X Y - alpha/(1-alpha) (1-X) Y),
// X Bernoulli(alpha), Y standard exponential. The positivity of a sum of n
// such variables does not depend on a; the simulated indicator is
//   sum_i (X_i (1-alpha) - (1-X_i) alpha) Y_i > 0,
// which also avoids the 1/(1-alpha) division. The estimate must agree with
// the exact duel value at (alpha, n-1, r=1, d=1).
inline Estimate simulate_double_exponential(long n, const Rational& alpha, double scale,
                                            const SimConfig& cfg) {
    if (n < 1) throw std::domain_error("simulate_double_exponential: n must be >= 1");
    if (!(scale > 0.0)) throw std::domain_error("simulate_double_exponential: scale must be > 0");
    if (alpha.sign() <= 0 || alpha >= Rational(1))
        throw std::domain_error("simulate_double_exponential: alpha must lie in (0,1)");
    if (cfg.trials < 1) throw std::domain_error("simulate_double_exponential: trials must be >= 1");
    const CounterRng rng(cfg.seed);
    const std::uint64_t thr = bernoulli_threshold(alpha);
    const double a = alpha.to_double();
    const std::uint64_t draws = static_cast<std::uint64_t>(2 * n);
    std::uint64_t successes = 0;
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        const std::uint64_t base = t * draws;
        double sum = 0.0;
        for (long i = 0; i < n; ++i) {
            const bool head = rng.word(base + 2 * static_cast<std::uint64_t>(i)) < thr;
            const double y = -std::log1p(-rng.uniform01(base + 2 * static_cast<std::uint64_t>(i) + 1));
            sum += head ? (1.0 - a) * y : -a * y;
        }
        successes += sum > 0.0;
    }
    return mc_detail::make_estimate(successes, cfg.trials);
}

}  // namespace binduel
