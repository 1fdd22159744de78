#include <catch2/catch.hpp>

#include "binduel/even_polynomial.hpp"

#include <vector>

using namespace binduel;

TEST_CASE("chebyshev U basics") {
    CHECK(chebyshev_u(0).coeffs == std::vector<Integer>{Integer(1)});
    CHECK(chebyshev_u(1).coeffs == std::vector<Integer>{Integer(0), Integer(2)});
    CHECK(chebyshev_u(2).coeffs == std::vector<Integer>{Integer(-1), Integer(0), Integer(4)});
    CHECK(chebyshev_u(3).coeffs == std::vector<Integer>{Integer(0), Integer(-4), Integer(0), Integer(8)});
    for (int k = 0; k <= 20; ++k) CHECK(chebyshev_u(k).at_one() == k + 1);
    CHECK_THROWS_AS(chebyshev_u(-1), std::domain_error);
}

TEST_CASE("even-index chebyshev U against the closed form") {
    // U_{2k}(x) = sum_j (-1)^(k-j) C(k+j, 2j) (2x)^(2j)
    for (int k = 0; k <= 8; ++k) {
        const ChebyshevU u = chebyshev_u(2 * k);
        for (int i = 0; i <= 2 * k; ++i) {
            if (i % 2 == 1) {
                CHECK(u.coeffs[static_cast<size_t>(i)] == 0);
                continue;
            }
            const int j = i / 2;
            Integer expected = binomial(static_cast<unsigned long>(k + j),
                                        static_cast<unsigned long>(2 * j));
            Integer four_pow;
            mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(j));
            expected *= four_pow;
            if ((k - j) % 2 == 1) expected = -expected;
            CHECK(u.coeffs[static_cast<size_t>(i)] == expected);
        }
    }
}

TEST_CASE("weight polynomial, single extra toss") {
    for (const Rational& alpha : {Rational(1, 10), Rational(1, 2), Rational(4, 5)}) {
        const EvenPolynomial p = polynomial_via_chebyshev(alpha, 1, 1);
        const Rational expected = Rational(2) * alpha - Rational(1);
        if (expected.is_zero()) {
            CHECK(p.is_zero());
        } else {
            CHECK(p.degree() == 0);
            CHECK(p.coeffs()[0] == expected);
        }
        const EvenPolynomial q = polynomial_via_derivatives(alpha, 1, 1);
        CHECK(q.coeffs() == p.coeffs());
    }
}

TEST_CASE("weight polynomial value at zero for d = 1") {
    // constant term is -(1-2a)^r
    for (int r = 1; r <= 6; ++r)
        for (const Rational& alpha : {Rational(1, 4), Rational(2, 5), Rational(3, 4)}) {
            const EvenPolynomial p = polynomial_via_chebyshev(alpha, r, 1);
            CHECK(p.evaluate(Rational(0)) ==
                  -pow(Rational(1) - Rational(2) * alpha, r));
        }
    CHECK(polynomial_via_chebyshev(Rational(1, 4), 3, 1).evaluate(Rational(0)) == Rational(-1, 8));
}

TEST_CASE("two constructions agree coefficientwise") {
    for (int r = 1; r <= 8; ++r)
        for (int d = 1; d <= 8; ++d)
            for (const Rational& alpha :
                 {Rational(1, 10), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(9, 10)}) {
                const EvenPolynomial via_cheb = polynomial_via_chebyshev(alpha, r, d);
                const EvenPolynomial via_deriv = polynomial_via_derivatives(alpha, r, d);
                CHECK(via_cheb.coeffs() == via_deriv.coeffs());
            }
}

TEST_CASE("endpoint value is the drift 2 alpha r - 2d + 1") {
    CHECK(polynomial_at_one(Rational(1, 2), 1, 1) == Rational(0));
    CHECK(polynomial_at_one(Rational(1, 6), 3, 1) == Rational(0));
    CHECK(polynomial_at_one(Rational(2, 5), 5, 4) == Rational(-3));
    for (int r = 1; r <= 8; ++r)
        for (int d = 1; d <= 8; ++d)
            for (const Rational& alpha : {Rational(1, 10), Rational(1, 2), Rational(9, 10)}) {
                const EvenPolynomial p = polynomial_via_chebyshev(alpha, r, d);
                CHECK(p.at_one() == polynomial_at_one(alpha, r, d));
                CHECK(p.evaluate(Rational(1)) == p.at_one());
            }
}

TEST_CASE("degree is 2 max(r-d, d-1), vanishing only in the constant duel") {
    CHECK(polynomial_via_chebyshev(Rational(2, 5), 5, 4).degree() == 6);
    for (int r = 1; r <= 6; ++r)
        for (int d = 1; d <= 6; ++d)
            for (const Rational& alpha : {Rational(1, 10), Rational(1, 2), Rational(9, 10)}) {
                const EvenPolynomial p = polynomial_via_chebyshev(alpha, r, d);
                if (alpha == Rational(1, 2) && r == 2 * d - 1)
                    CHECK(p.is_zero());
                else
                    CHECK(p.degree() == 2 * std::max(r - d, d - 1));
            }
}

TEST_CASE("critical slope closed form") {
    CHECK(critical_slope_at_one(2, 1) == Rational(1, 2));
    // matches the symbolic derivative of the constructed polynomial at x = 1
    for (int d = 1; d <= 4; ++d)
        for (int r = d; r <= 8; ++r) {
            const Rational alpha(2L * d - 1, 2L * r);
            if (alpha >= Rational(1)) continue;
            const EvenPolynomial p = polynomial_via_chebyshev(alpha, r, d);
            CHECK(p.derivative_at_one() == critical_slope_at_one(r, d));
        }
    // positive throughout r >= 2d; the minimum over r sits at r = 2d
    for (int d = 1; d <= 3; ++d)
        for (int r = 2 * d; r <= 8; ++r)
            CHECK(critical_slope_at_one(r, d).sign() > 0);
}

TEST_CASE("small-alpha coefficient signs for d = 1") {
    // alpha <= 1/(r+1): constant term -(1-2a)^r is the only non-positive one
    for (int r = 2; r <= 6; ++r)
        for (const Rational& alpha : {Rational(1, r + 1), Rational(1, 2 * (r + 1)), Rational(1, 8)}) {
            if (alpha > Rational(1, r + 1)) continue;
            const auto signs = coefficient_signs(polynomial_via_chebyshev(alpha, r, 1));
            CHECK(signs.front() < 0);
            for (size_t j = 1; j < signs.size(); ++j) CHECK(signs[j] > 0);
        }
}

TEST_CASE("transitional band has exactly one root in (0,1)") {
    for (int r : {2, 3, 4}) {
        const Rational lo(1, 2 * r), hi(1, r + 1);
        const Rational mid = lo + (hi - lo) / Rational(2);
        const EvenPolynomial p = polynomial_via_chebyshev(mid, r, 1);
        CHECK(p.evaluate(Rational(0)).sign() < 0);
        CHECK(p.at_one().sign() > 0);
        CHECK(distinct_roots_in_unit_interval(p) == 1);

        const RootBracket bracket = bracket_sign_change(p, 40);
        if (bracket.exact_root) {
            CHECK(p.evaluate(*bracket.exact_root).is_zero());
        } else {
            CHECK(p.evaluate(bracket.lo).sign() != p.evaluate(bracket.hi).sign());
            CHECK(bracket.hi - bracket.lo == Rational(Integer(1), Integer(1) << 40));
        }
    }
    // below the band the polynomial is negative on all of [0,1]: no roots
    CHECK(distinct_roots_in_unit_interval(polynomial_via_chebyshev(Rational(1, 10), 3, 1)) == 0);
}
