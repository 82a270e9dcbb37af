// Numeric checks built on the path tracker. Each prints the tolerances it used.
#pragma once

#include <array>

#include "covforge/check.hpp"
#include "covforge/numsolve.hpp"

namespace covforge::num {

/// r = (10, 1/2, 1/3): r1^2 - 36 = 64, so the L1 points are rational.
std::array<Rat, 3> default_sample_r();

/// The 32 points of delta = 0 on L(r) inside V(8), by stratum and by X1/X2.
CheckResult check_stratum_partition(const NumConfig& cfg, const std::array<Rat, 3>& r);
/// The same count at r = 0, where all of L0(0) is 16 points and the X2 image is u''(0).
CheckResult check_stratum_partition_zero(const NumConfig& cfg);
/// Degree, dimension and birationality evidence for the fiber of the chart equations over r = 0.
CheckResult check_fiber_zero(const NumConfig& cfg);
/// Three consecutive seeds give the same partition.
CheckResult check_seed_stability(const NumConfig& cfg, const std::array<Rat, 3>& r);

}  // namespace covforge::num
