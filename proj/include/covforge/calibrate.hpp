// Symbolic expansion of delta in basis coordinates and the calibration of the
// conventions the construction leaves implicit: which substitution action
// reproduces the printed action table, and which transvectant scale factors
// reproduce the printed expansion Q1..Q5.
#pragma once

#include <string>
#include <vector>

#include "covforge/binform.hpp"
#include "covforge/papermodel.hpp"

namespace covforge::model {

/// lambda = (1, 6 eps, 1, 6) with eps symbolic.
Lambda<Poly> standard_lambda();

/// V(4) coordinates (s1..s5) of delta_lambda(v).
std::vector<Poly> delta_coordinates(const Lambda<Poly>& lambda, const Vec15<Poly>& v,
                                    const TransvectantScalars& scalars);

/// delta_{(1,6eps,1,6)} at the generic point, in V(4) coordinates: Q1..Q5.
std::vector<Poly> delta_system(const TransvectantScalars& scalars);

/// The four terms of delta at the generic point with unit scalars, each in
/// V(4) coordinates: 6 psi6(f8,f8), psi4(f8,f4), 6 eps psi2(f4,f4), f4 f0.
struct DeltaBlocks {
  std::vector<Poly> b6, b4, b2, b0;
};
const DeltaBlocks& delta_blocks();

struct ConventionScore {
  ActionConvention convention;
  int mismatched_rows = 0;  // out of 4 generators x 15 coordinates
  std::vector<std::string> first_mismatches;
};

struct ScalarVote {
  std::string block;     // "psi6", "psi4", "psi2", "f4*f0"
  Cyc chosen;            // most frequent printed/computed ratio
  int votes_for = 0;
  int votes_total = 0;
  bool unique = false;   // strictly more votes than any other ratio
  bool exact_on_corrected = false;  // every corrected coefficient has exactly this ratio
};

struct CoefficientDiff {
  int equation;          // 1-based
  std::string monomial;
  Cyc printed;
  Cyc computed;
};

struct Calibration {
  std::vector<ConventionScore> conventions;
  std::vector<ActionConvention> matching_conventions;
  std::vector<ScalarVote> votes;
  TransvectantScalars scalars;
  bool scalars_unique = false;
  /// Calibrated expansion against the printed transcription.
  std::vector<CoefficientDiff> printed_diffs;
  /// Ledger entries for the expansion that the diffs do not explain, and
  /// diffs the ledger does not list.
  std::vector<std::string> ledger_unexplained, ledger_missing;
  /// Calibrated expansion against the corrected transcription.
  std::size_t corrected_residual_terms = 0;
  double millis = 0.0;  // wall time of the calibration run
  bool ok() const;
};

/// Runs once and caches; thread safe.
const Calibration& calibrate();

/// Monomial-level difference a - b as a list of (equation, monomial, a, b).
std::vector<CoefficientDiff> coefficient_diffs(const std::vector<Poly>& a, const std::vector<Poly>& b);

/// Checks Q(g v) == g4 Q(v) for a 15x15 action g whose s1..s5 block is g4.
/// Returns the number of nonzero residual terms.
std::size_t equivariance_residual(const std::vector<Poly>& system, const CMatrix& g);

}  // namespace covforge::model
