#pragma once

// Floating-point evaluation of the duel probabilities through the
// characteristic-function integrals. With the substitution x = cos(t/2)
// every integrand becomes a plain cosine polynomial in t:
//
//   p_n          = 1/2 + (1/2pi) int_0^pi phi^n(t) P(cos(t/2)) dt
//   p_{n+1}-p_n  =     - (2 a(1-a)/pi) int_0^pi phi^n(t) sin^2(t/2) P(cos(t/2)) dt
//   P{gap = k}   =       (1/pi) int_0^pi phi^n(t) cos(kt) dt
//
// where phi(t) = 1 - 4 a(1-a) sin^2(t/2) is the characteristic function of
// a single-step gap. The integrand's cosine degree is known (n plus the
// polynomial's half-degree plus at most one), so node counts are sized to
// make the rule exact up to rounding. For large n the integrand lives in a
// shrinking window near t = 0; the domain is truncated where phi^n falls
// below 1e-320 and the node count rescales with the window, turning the
// cost from O(n) into O(sqrt n).

#include "binduel/even_polynomial.hpp"
#include "binduel/exact_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace binduel {

struct QuadratureNonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class QuadRule { GaussLegendre, Midpoint };

struct QuadratureConfig {
    int node_count = 0;             // 0 = auto from the integrand's cosine degree
    QuadRule rule = QuadRule::GaussLegendre;
    double target_abs_error = 1e-13;
    bool check_convergence = true;  // re-evaluate at 1.5x nodes and compare
};

struct CharacteristicKernel {
    double alpha;
    double phi(double t) const {
        const double s = std::sin(0.5 * t);
        return 1.0 - 4.0 * alpha * (1.0 - alpha) * s * s;
    }
    double q(double x) const {
        return 1.0 - 4.0 * alpha * (1.0 - alpha) * (1.0 - x * x);
    }
};

namespace quad_detail {

struct Nodes {
    std::vector<double> x;  // ascending on (-1, 1)
    std::vector<double> w;
};

// Newton iteration on the Legendre recurrence; nodes come out symmetric.
inline std::shared_ptr<const Nodes> gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const Nodes>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    auto nodes = std::make_shared<Nodes>();
    nodes->x.resize(static_cast<size_t>(n));
    nodes->w.resize(static_cast<size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes->x[static_cast<size_t>(n - 1 - i)] = x;
        nodes->w[static_cast<size_t>(n - 1 - i)] = w;
        nodes->x[static_cast<size_t>(i)] = -x;
        nodes->w[static_cast<size_t>(i)] = w;
    }
    std::lock_guard<std::mutex> lock(mu);
    cache[n] = nodes;
    return nodes;
}

inline double pairwise_sum(const double* v, size_t len) {
    if (len <= 8) {
        double s = 0.0;
        for (size_t i = 0; i < len; ++i) s += v[i];
        return s;
    }
    const size_t half = len / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, len - half);
}

// Window [0, t*] outside which phi^n is below 1e-320; pi if no useful cut.
inline double support_cut(double alpha, long n) {
    if (n <= 0) return std::numbers::pi;
    const double ab4 = 4.0 * alpha * (1.0 - alpha);
    const double phi_star = std::exp(-736.8 / static_cast<double>(n));
    const double s2 = (1.0 - phi_star) / ab4;
    if (s2 >= 1.0) return std::numbers::pi;
    const double cut = 2.0 * std::asin(std::sqrt(s2));
    return cut < 0.95 * std::numbers::pi ? cut : std::numbers::pi;
}

inline int auto_nodes(QuadRule rule, long degree, double upper) {
    if (rule == QuadRule::Midpoint)
        return static_cast<int>(degree / 2 + 16);
    return static_cast<int>(std::ceil(0.3 * static_cast<double>(degree) * upper)) + 32;
}

// Integral over [0, upper] of an even cosine polynomial of the given degree.
template <class F>
double integrate_once(F&& f, QuadRule rule, int n_nodes, double upper) {
    std::vector<double> terms(static_cast<size_t>(n_nodes));
    if (rule == QuadRule::Midpoint) {
        const double h = upper / n_nodes;
        for (int i = 0; i < n_nodes; ++i)
            terms[static_cast<size_t>(i)] = h * f((i + 0.5) * h);
    } else {
        const auto nodes = gauss_legendre(n_nodes);
        const double c = 0.5 * upper;
        for (int i = 0; i < n_nodes; ++i)
            terms[static_cast<size_t>(i)] =
                c * nodes->w[static_cast<size_t>(i)] * f(c * (nodes->x[static_cast<size_t>(i)] + 1.0));
    }
    return pairwise_sum(terms.data(), terms.size());
}

template <class F>
double integrate_cosine(F&& f, long degree, const QuadratureConfig& cfg, double alpha, long n_power) {
    double upper = std::numbers::pi;
    if (cfg.rule == QuadRule::GaussLegendre)
        upper = support_cut(alpha, n_power);
    const int n1 = cfg.node_count > 0 ? cfg.node_count
                                      : auto_nodes(cfg.rule, degree, upper);
    const double first = integrate_once(f, cfg.rule, n1, upper);
    if (!cfg.check_convergence) return first;
    const int n2 = n1 + std::max(16, n1 / 2);
    const double second = integrate_once(f, cfg.rule, n2, upper);
    const double tol = std::max(cfg.target_abs_error, 1e-13);
    if (std::abs(second - first) > tol)
        throw QuadratureNonConvergence(
            "quadrature did not settle: node counts " + std::to_string(n1) + " and " +
            std::to_string(n2) + " differ by " + std::to_string(std::abs(second - first)));
    return second;
}

inline double horner_x2(const std::vector<double>& coeffs, double x2) {
    double acc = 0.0;
    for (size_t j = coeffs.size(); j-- > 0;) acc = acc * x2 + coeffs[j];
    return acc;
}

}  // namespace quad_detail

inline double win_probability_quadrature(const DuelParams& p, const QuadratureConfig& cfg = {}) {
    const EvenPolynomial poly = polynomial_via_chebyshev(p.alpha, p.r, p.d);
    const std::vector<double> coeffs = poly.coeffs_as_double();
    const CharacteristicKernel kernel{p.alpha.to_double()};
    const long half_degree = std::max(p.r - p.d, p.d - 1);
    const long degree = p.n + half_degree;
    const double n_power = static_cast<double>(p.n);
    auto f = [&](double t) {
        const double x2 = 0.5 * (1.0 + std::cos(t));  // cos^2(t/2)
        return std::pow(kernel.phi(t), n_power) * quad_detail::horner_x2(coeffs, x2);
    };
    const double integral = quad_detail::integrate_cosine(f, degree, cfg, kernel.alpha, p.n);
    return 0.5 + integral / (2.0 * std::numbers::pi);
}

inline double step_difference_quadrature(const DuelParams& p, const QuadratureConfig& cfg = {}) {
    const EvenPolynomial poly = polynomial_via_chebyshev(p.alpha, p.r, p.d);
    const std::vector<double> coeffs = poly.coeffs_as_double();
    const CharacteristicKernel kernel{p.alpha.to_double()};
    const long half_degree = std::max(p.r - p.d, p.d - 1);
    const long degree = p.n + half_degree + 1;
    const double n_power = static_cast<double>(p.n);
    auto f = [&](double t) {
        const double s = std::sin(0.5 * t);
        const double x2 = 0.5 * (1.0 + std::cos(t));
        return std::pow(kernel.phi(t), n_power) * s * s * quad_detail::horner_x2(coeffs, x2);
    };
    const double integral = quad_detail::integrate_cosine(f, degree, cfg, kernel.alpha, p.n);
    const double cross = kernel.alpha * (1.0 - kernel.alpha);
    return -2.0 * cross / std::numbers::pi * integral;
}

// P{S'_n - S_n = k} by cosine inversion of phi^n. Offsets |k| > n are
// impossible and integrate to zero by orthogonality.
inline double gap_probability_fourier(long n, long k, double alpha,
                                      const QuadratureConfig& cfg = {}) {
    if (n < 1) throw std::domain_error("gap_probability_fourier: n must be >= 1");
    if (alpha <= 0.0 || alpha >= 1.0)
        throw std::domain_error("gap_probability_fourier: alpha must lie in (0,1)");
    const long freq = k < 0 ? -k : k;
    const CharacteristicKernel kernel{alpha};
    const double n_power = static_cast<double>(n);
    auto f = [&](double t) {
        return std::pow(kernel.phi(t), n_power) * std::cos(static_cast<double>(freq) * t);
    };
    const double integral = quad_detail::integrate_cosine(f, n + freq, cfg, alpha, n);
    return integral / std::numbers::pi;
}

}  // namespace binduel
