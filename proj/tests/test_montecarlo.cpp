#include <catch2/catch.hpp>

#include "binduel/montecarlo.hpp"

#include <cmath>

using namespace binduel;

TEST_CASE("bernoulli thresholds are exact") {
    CHECK(bernoulli_threshold(Rational(1, 2)) == (std::uint64_t{1} << 63));
    CHECK(bernoulli_threshold(Rational(1, 4)) == (std::uint64_t{1} << 62));
    CHECK(bernoulli_threshold(Rational(0)) == 0);
}

TEST_CASE("fixed seeds reproduce bit-exactly") {
    const DuelParams p(Rational(3, 10), 5, 2, 1);
    const SimConfig cfg{20000, 977};
    const Estimate a = simulate_duel(p, cfg);
    const Estimate b = simulate_duel(p, cfg);
    CHECK(a == b);
    const Estimate c = simulate_duel(p, SimConfig{20000, 978});
    CHECK(a.successes != c.successes);
}

TEST_CASE("impossible duel never succeeds") {
    const Estimate e = simulate_duel(DuelParams(Rational(9, 10), 0, 2, 3), SimConfig{5000, 1});
    CHECK(e.successes == 0);
    CHECK(e.p_hat == 0.0);
    CHECK(e.std_error == 0.0);
}

TEST_CASE("duel estimates match the exact kernel within four sigma") {
    const SimConfig cfg{100000, 42};
    for (const DuelParams& p : {DuelParams(Rational(3, 10), 1, 1, 1),
                                DuelParams(Rational(1, 2), 10, 1, 1),
                                DuelParams(Rational(7, 10), 6, 3, 2)}) {
        const Estimate e = simulate_duel(p, cfg);
        const double exact = win_probability(p).to_double();
        CHECK(std::abs(e.p_hat - exact) <= 4.0 * std::sqrt(exact * (1 - exact) / cfg.trials));
        CHECK(e.std_error == Approx(std::sqrt(e.p_hat * (1 - e.p_hat) / cfg.trials)));
        CHECK(e.ci4_low <= exact);
        CHECK(exact <= e.ci4_high);
    }
}

TEST_CASE("double-sided exponential positivity matches the duel") {
    const SimConfig cfg{100000, 7};
    // P{Z_1 + ... + Z_n > 0} equals the duel value at (alpha, n-1, 1, 1)
    for (auto [n, alpha] : {std::pair<long, Rational>{3, Rational(3, 10)},
                            std::pair<long, Rational>{1, Rational(1, 2)},
                            std::pair<long, Rational>{6, Rational(7, 10)}}) {
        const Estimate e = simulate_double_exponential(n, alpha, 1.0, cfg);
        const double exact = win_probability(DuelParams(alpha, n - 1, 1, 1)).to_double();
        CHECK(std::abs(e.p_hat - exact) <= 4.0 * std::sqrt(exact * (1 - exact) / cfg.trials));
    }
}

TEST_CASE("the scale parameter cannot change the sign of the sum") {
    const SimConfig cfg{50000, 11};
    const Estimate a = simulate_double_exponential(3, Rational(3, 10), 1.0, cfg);
    const Estimate b = simulate_double_exponential(3, Rational(3, 10), 10.0, cfg);
    CHECK(a == b);
    CHECK_THROWS_AS(simulate_double_exponential(3, Rational(3, 10), 0.0, cfg), std::domain_error);
    CHECK_THROWS_AS(simulate_double_exponential(0, Rational(3, 10), 1.0, cfg), std::domain_error);
}

TEST_CASE("counter rng words depend only on (seed, counter)") {
    const CounterRng rng(123);
    CHECK(rng.word(0) == CounterRng(123).word(0));
    CHECK(rng.word(0) != rng.word(1));
    CHECK(rng.word(5) != CounterRng(124).word(5));
    const double u = rng.uniform01(9);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
}
