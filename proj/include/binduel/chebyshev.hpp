#pragma once

// Chebyshev polynomials of the second kind, exact monomial coefficients.
// U_0 = 1, U_1 = 2x, U_{k+1} = 2x U_k - U_{k-1}; U_k(1) = k + 1.

#include "binduel/rational.hpp"

#include <stdexcept>
#include <vector>

namespace binduel {

struct ChebyshevU {
    int k = 0;
    std::vector<Integer> coeffs;  // coeffs[i] multiplies x^i; size k+1

    Integer at_one() const {
        Integer v(0);
        for (const Integer& c : coeffs) v += c;
        return v;
    }
};

inline ChebyshevU chebyshev_u(int k) {
    if (k < 0) throw std::domain_error("chebyshev_u: k must be >= 0");
    std::vector<Integer> prev{Integer(1)};          // U_0
    if (k == 0) return {0, prev};
    std::vector<Integer> cur{Integer(0), Integer(2)};  // U_1
    for (int m = 1; m < k; ++m) {
        std::vector<Integer> next(static_cast<size_t>(m) + 2, Integer(0));
        for (size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
        for (size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {k, cur};
}

}  // namespace binduel
