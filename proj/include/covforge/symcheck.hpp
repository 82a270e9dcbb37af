// Exact checks: one function per claim that can be decided in exact
// arithmetic, plus the randomized property suites (exact, seeded).
#pragma once

#include <cstdint>

#include "covforge/check.hpp"

namespace covforge::sym {

CheckResult check_basis();
CheckResult check_calibration();
CheckResult check_delta_expansion();
CheckResult check_fixed_locus();
CheckResult check_action_table();
CheckResult check_group_structure();
CheckResult check_invariant_subspaces();
CheckResult check_equivariance();
CheckResult check_tangent_spaces();
CheckResult check_sigma_fixed_plane();
CheckResult check_pi_chart();
CheckResult check_chart_equations();
CheckResult check_projection_centres();
CheckResult check_strata();
CheckResult check_scaling_identity();

CheckResult check_field_axioms(std::uint64_t seed, int samples = 1000);
CheckResult check_polynomial_identities(std::uint64_t seed, int samples = 100);
CheckResult check_transvectant_symmetry(std::uint64_t seed, int samples = 100);
CheckResult check_transvectant_equivariance(std::uint64_t seed, int samples = 100);

}  // namespace covforge::sym
