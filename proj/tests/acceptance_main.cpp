// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Each criterion runs at its pinned grid and tolerance; the details echo
// the measured margins.

#include "binduel/checks.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace {

using binduel::CheckResult;

struct Criterion {
    int number;
    const char* title;
    std::vector<CheckResult> parts;
};

CheckResult merge(const std::vector<CheckResult>& parts) {
    CheckResult out{"", true, ""};
    for (const CheckResult& part : parts) {
        if (!part.pass) {
            out.pass = false;
            out.detail = part.name + ": " + part.detail;
            return out;
        }
    }
    if (!parts.empty()) out.detail = parts.back().detail;
    if (parts.size() > 1) out.detail = std::to_string(parts.size()) + " sub-checks passed";
    return out;
}

}  // namespace

int main() {
    namespace checks = binduel::checks;

    const std::vector<Criterion> criteria = {
        {1, "quadrature vs exact oracle (9x5x5x41 grid, |diff| <= 1e-12)",
         {checks::quadrature_oracle(40, 5, 1e-12)}},
        {2, "exact identities at zero tolerance",
         {checks::double_sum_identity(20), checks::duality_identity(6, 30), checks::tie_identity(40),
          checks::polynomial_equivalence(8), checks::polynomial_endpoint(8),
          checks::polynomial_degree(8), checks::step_difference_identity(6, 40)}},
        {3, "single extra toss: monotone, constant, curvature (n <= 100, exact)",
         {checks::single_extra_toss_shapes(100)}},
        {4, "d=1 phases for r in {2,3,4} (n <= 120, exact)", {checks::d1_band_shapes(120)}},
        {5, "sqrt(n) drift constant (2% at n=10^4, 5% at n=10^3)", {checks::sqrt_n_drift()}},
        {6, "mode location law (ratio in [0.8, 1.2] at eps=1/400, trending to 1)",
         {checks::mode_law_ratios()}},
        {7, "peak height law (ratio in [0.7, 1.3] at eps=1/400)", {checks::peak_law_ratios()}},
        {8, "general case table: ten cells, tail signs with n0 <= 40",
         {checks::case_table_tails(60, 40)}},
        {9, "Monte Carlo: 30-point grid at 4 sigma, double-exponential identity, reproducibility",
         {checks::mc_duel_grid(100000), checks::mc_double_exponential_identity(1000000),
          checks::mc_reproducibility(), checks::mc_scale_invariance()}},
        {10, "conjecture scans complete and match proved claims",
         {checks::conjecture_band_scan(4, 2, 80), checks::coefficient_sign_table(2, 8),
          checks::curvature_scan(100)}},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const CheckResult merged = merge(criterion.parts);
        std::printf("[%s] criterion %2d: %s — %s\n", merged.pass ? "PASS" : "FAIL",
                    criterion.number, criterion.title, merged.detail.c_str());
        std::fflush(stdout);
        failures += merged.pass ? 0 : 1;
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
