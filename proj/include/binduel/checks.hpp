#pragma once

// Verification suites shared by the `verify` subcommand and the acceptance
// binary. Each check runs one named invariant over a pinned parameter grid
// and reports pass/fail with a short diagnostic. Exact identities use zero
// tolerance; floating-point comparisons carry the tolerance in the check.

#include "binduel/checks_detail.hpp"

#include <map>
#include <stdexcept>

namespace binduel::checks {

inline std::vector<std::string> suite_names() {
    return {"identities", "oracle", "phases", "asymptotics", "montecarlo", "conjectures"};
}

inline std::vector<CheckResult> identities_suite() {
    return {
        double_sum_identity(),
        duality_identity(),
        tie_identity(),
        step_difference_identity(),
        gap_invariants(),
        polynomial_equivalence(),
        polynomial_endpoint(),
        polynomial_degree(),
        critical_slope_identity(),
        small_alpha_sign_pattern(),
        transitional_single_root(),
    };
}

inline std::vector<CheckResult> oracle_suite() {
    return {
        quadrature_oracle(),
        gap_fourier_oracle(),
        difference_oracle(),
        difference_consistency(),
        node_plateau(),
        kernel_identity_check(),
        rule_agreement(),
    };
}

inline std::vector<CheckResult> phases_suite() {
    return {
        single_extra_toss_shapes(),
        d1_band_shapes(),
        case_table_tails(),
        classification_grid(),
        dual_mirror_grid(),
        mode_argmax_agreement(),
    };
}

inline std::vector<CheckResult> asymptotics_suite() {
    return {
        sqrt_n_drift(),
        mode_law_ratios(),
        peak_law_ratios(),
    };
}

inline std::vector<CheckResult> montecarlo_suite() {
    return {
        mc_duel_grid(),
        mc_double_exponential_identity(),
        mc_reproducibility(),
        mc_scale_invariance(),
    };
}

inline std::vector<CheckResult> conjectures_suite() {
    return {
        conjecture_band_scan(),
        coefficient_sign_table(),
        curvature_scan(),
    };
}

inline std::vector<CheckResult> suite(const std::string& name) {
    if (name == "identities") return identities_suite();
    if (name == "oracle") return oracle_suite();
    if (name == "phases") return phases_suite();
    if (name == "asymptotics") return asymptotics_suite();
    if (name == "montecarlo") return montecarlo_suite();
    if (name == "conjectures") return conjectures_suite();
    if (name == "all") {
        std::vector<CheckResult> all;
        for (const std::string& s : suite_names()) {
            auto part = suite(s);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace binduel::checks
