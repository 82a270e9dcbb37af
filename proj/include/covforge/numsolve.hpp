// Double-precision homotopy continuation for the small systems on L(r) and on
// the fibers of the chart map: total-degree start systems, an RK4/Newton path
// tracker, endpoint deduplication, and the numeric rank probes built on it.
#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covforge/mpoly.hpp"
#include "covforge/papermodel.hpp"
#include "covforge/scalar.hpp"

namespace covforge::num {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

struct Tolerances {
  double track = 1e-10;    // accepted endpoint residual
  double dedup = 1e-6;     // projective distance for merging endpoints
  double rank = 1e-8;      // relative singular value cutoff
  double cluster = 1e-4;   // six-fold root test
  double support = 1e-8;   // coordinate vanishing for strata
  double simple = 1e-6;    // smallest singular value of a multiplicity-one endpoint
};

struct NumConfig {
  std::uint64_t seed = 42;
  Tolerances tol;
  unsigned jobs = 1;
  double eps = 1.0;
};

/// A polynomial with complex-double coefficients in a fixed list of unknowns.
class NumPoly {
 public:
  NumPoly() = default;
  /// Every variable of p must be one of vars or bound in params.
  NumPoly(const Poly& p, const std::vector<Var>& vars, const std::map<Var, cplx>& params = {});
  /// sum_k coeffs[k] x_k + constant.
  static NumPoly linear(const CVec& coeffs, cplx constant = 0.0);

  std::size_t unknowns() const { return n_; }
  int degree() const { return degree_; }
  bool homogeneous() const;
  /// Euclidean norm of the coefficient vector.
  double coeff_norm() const;
  cplx eval(const CVec& x) const;
  /// Value and gradient in one pass.
  cplx eval_grad(const CVec& x, Eigen::Ref<Eigen::RowVectorXcd, 0, Eigen::InnerStride<>> grad) const;

 private:
  struct Term {
    cplx c;
    std::vector<std::uint8_t> e;
  };
  std::vector<Term> terms_;
  std::size_t n_ = 0;
  int degree_ = 0;
};

class NumSystem {
 public:
  NumSystem() = default;
  NumSystem(const std::vector<Poly>& system, const std::vector<Var>& vars, const std::map<Var, cplx>& params = {});
  explicit NumSystem(std::vector<NumPoly> polys);

  void append(NumPoly p);
  std::size_t equations() const { return polys_.size(); }
  std::size_t unknowns() const { return polys_.empty() ? 0 : polys_.front().unknowns(); }
  std::vector<int> degrees() const;
  bool homogeneous() const;
  const std::vector<NumPoly>& polys() const { return polys_; }

  CVec eval(const CVec& x) const;
  CMat jacobian(const CVec& x) const;
  /// max_i |F_i(x)| / (coeff_norm_i * max(1, |x|_inf)^deg_i).
  double residual(const CVec& x) const;

 private:
  std::vector<NumPoly> polys_;
};

/// F(A u + b): the unknowns u of a square system obtained by restricting to an
/// affine subspace (a chart of projective space, or a parametrized plane).
struct AffineMap {
  CMat A;
  CVec b;
  CVec apply(const CVec& u) const { return A * u + b; }
};

/// The chart {c . x = 1} of P^n for a random unit vector c, as x = b + A u with
/// the columns of A orthonormal and orthogonal to conj(c).
AffineMap random_chart(std::size_t homogeneous_unknowns, std::uint64_t seed);

struct TrackOptions {
  std::uint64_t seed = 42;
  double tol = 1e-10;
  double min_step = 1e-14;
  double max_step = 0.05;
  double divergence = 1e8;
  std::size_t max_steps = 200000;
  unsigned jobs = 1;
};

enum class PathStatus { accepted, diverged, failed };
std::string_view path_status_name(PathStatus s);

struct Endpoint {
  std::size_t path = 0;
  PathStatus status = PathStatus::failed;
  CVec u;                   // chart unknowns
  CVec x;                   // point of the original unknowns
  double residual = 0.0;    // after the final Newton polish
  double sigma_min = 0.0;   // of the row-normalized Jacobian
  std::size_t steps = 0;
};

struct TrackReport {
  std::size_t paths = 0, accepted = 0, diverged = 0, failed = 0;
  std::vector<Endpoint> endpoints;  // one per path, by path index
};

/// Total-degree homotopy (1 - t) gamma G + t F with G_i = u_i^{d_i} - 1,
/// tracking every start root of G to t = 1.
TrackReport track(const NumSystem& system, const AffineMap& map, const TrackOptions& opt);

/// Scales the coordinate of largest modulus to 1.
CVec projective_normalize(const CVec& x);
double projective_distance(const CVec& a, const CVec& b);
/// Number of singular values above tol times the largest.
std::size_t numeric_rank(const CMat& m, double tol);
double smallest_singular_value(const CMat& m);
CMat row_normalized(const CMat& m);

struct ProjectiveSolution {
  TrackReport first;
  std::optional<TrackReport> second;  // present when the first chart lost a path
  std::vector<Endpoint> points;       // accepted, deduplicated, x projectively normalized
};

/// Solves n homogeneous equations in n + 1 unknowns in a random chart; any
/// path that is not accepted triggers a second chart whose endpoints are merged.
ProjectiveSolution solve_projective(const NumSystem& system, const NumConfig& cfg, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Points of L(r) with delta = 0 inside V(8).

/// Octic coefficients (of z1^{8-k} z2^k) of the basis combination x1..x9.
std::array<cplx, 9> octic_coefficients(const std::array<cplx, 9>& x);

/// Relative size of the Taylor coefficients of orders 0..5 at the best
/// six-root cluster centre; near zero exactly when the octic has a six-fold root.
double six_fold_score(const std::array<cplx, 9>& x, std::uint64_t seed);

struct ClassifiedPoint {
  model::Vec15<cplx> v;       // x1..x9, s0..s5 with s = 0
  model::Stratum stratum;
  bool in_x1 = false;
  double score = 0.0;
  double sigma_min = 0.0;
  double residual = 0.0;
};

struct StratumPartition {
  std::array<Rat, 3> r;
  std::size_t paths = 0, accepted = 0, distinct = 0;
  bool second_chart = false;
  std::vector<ClassifiedPoint> points;
  std::map<model::Stratum, std::array<int, 2>> counts;  // {X1, X2}
  double min_sigma = 0.0;
  double max_residual = 0.0;
  /// The L0(r) n X2 points as one H-orbit, and their common chart image.
  double h_orbit_error = 0.0;
  bool h_orbit = false;
  std::vector<cplx> section;  // canonical P^8 point, empty when undefined
  double section_spread = 0.0;

  int count(model::Stratum s) const;
  int count(model::Stratum s, bool x1) const;
  /// "4+12+16=32" style summary: L0, the L_j and tilde strata, L0(r).
  std::string summary() const;
};

StratumPartition count_stratum_points(const std::array<Rat, 3>& r, const NumConfig& cfg);

/// Distance from an exact point of V(8) + V(0) + V(4) to the nearest classified point.
double nearest_distance(const StratumPartition& p, const model::Vec15<Cyc>& exact);

// ---------------------------------------------------------------------------
// Fibers of the chart equations over r.

struct FiberProbe {
  std::size_t slice_paths = 0, slice_points = 0;
  std::size_t samples = 0;
  std::size_t min_jacobian_rank = 0, max_jacobian_rank = 0;
  double max_residual = 0.0;
  /// Span of the projections of the samples to N along N(r).
  std::size_t image_rank = 0;
  /// Rank of the projection restricted to the tangent cone at the first sample.
  std::size_t differential_rank = 0;
  std::vector<std::size_t> preimage_counts;
};

/// section is u''(r) in chart coordinates; N(r) = <u', u'', e_y1, e_y2, e_y3>.
FiberProbe fiber_probe(const std::array<Rat, 3>& r, const std::vector<Cyc>& section, const NumConfig& cfg,
                       std::size_t targets = 10, std::size_t min_samples = 20);

/// The chart equations over r with eps fixed, in the chart unknowns.
NumSystem chart_system(const std::array<Rat, 3>& r, double eps);

}  // namespace covforge::num
