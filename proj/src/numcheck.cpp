#include "covforge/numcheck.hpp"

#include <chrono>
#include <cstdio>

#include "covforge/papermodel.hpp"

namespace covforge::num {
namespace {

using model::Stratum;

std::string fmt(const char* f, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string r_string(const std::array<Rat, 3>& r) {
  return "(" + r[0].get_str() + ", " + r[1].get_str() + ", " + r[2].get_str() + ")";
}

void note_tolerances(CheckLog& log, const NumConfig& cfg) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "seed %llu, eps %g; tolerances track %g, dedup %g, rank %g, cluster %g, support %g, simple %g",
                static_cast<unsigned long long>(cfg.seed), cfg.eps, cfg.tol.track, cfg.tol.dedup, cfg.tol.rank,
                cfg.tol.cluster, cfg.tol.support, cfg.tol.simple);
  log.note(buf);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// The inequations that keep the chart equations of full rank over r.
bool in_r0(const std::array<Rat, 3>& r) {
  const std::map<Var, Cyc> at{{Var::r1, r[0]}, {Var::r2, r[1]}, {Var::r3, r[2]}};
  for (const auto& p : model::r0_inequations())
    if (p.evaluate(at).is_zero()) return false;
  return true;
}

std::optional<Rat> rational_sqrt(const Rat& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rat(n, d);
}

model::Vec15<Cyc> instantiate(const model::Vec15<Poly>& v, const std::map<Var, Poly>& at) {
  model::Vec15<Cyc> out;
  for (const auto& c : v) out.push_back(c.substitute(at).constant_term());
  return out;
}

// Points of L1(r) known exactly: the two X1 points always, and the X2 family
// whenever 25(r1^2 - 36) is a rational square.
std::vector<std::pair<std::string, model::Vec15<Cyc>>> exact_l1_points(const Rat& r1) {
  std::vector<std::pair<std::string, model::Vec15<Cyc>>> out;
  const std::map<Var, Poly> at_r{{Var::r1, Poly(Cyc(r1))}};
  for (int sign : {1, -1}) {
    const std::string s = sign > 0 ? "+" : "-";
    out.emplace_back(s + "(e1 + r1 e4) + r1 e7 + e8", instantiate(model::l1_x1_point(sign), at_r));
  }
  if (const auto root = rational_sqrt(Rat(25) * (r1 * r1 - 36))) {
    std::map<Var, Poly> at = at_r;
    at[Var::a] = Poly(Cyc(*root));
    for (int sign : {1, -1})
      out.emplace_back(std::string(sign > 0 ? "+" : "-") + "(a e1 + r1 a e4) + (90 - 5r1^2)e7 - 5r1 e8 + 6e9, a = " +
                           root->get_str(),
                       instantiate(model::l1_family(sign), at));
  }
  return out;
}

void expect_partition(CheckLog& log, const StratumPartition& p) {
  const std::map<Stratum, std::array<int, 2>> want = {
      {Stratum::L0, {0, 4}},  {Stratum::L1, {2, 2}},  {Stratum::L2, {2, 2}},  {Stratum::L3, {2, 2}},
      {Stratum::Lt1, {0, 0}}, {Stratum::Lt2, {0, 0}}, {Stratum::Lt3, {0, 0}}, {Stratum::Lzero, {12, 4}}};
  for (const auto& [s, c] : want) {
    const int x1 = p.count(s, true), x2 = p.count(s, false);
    log.expect(x1 == c[0] && x2 == c[1], std::string(model::stratum_name(s)) + ": " + std::to_string(x1) + " in X1, " +
                                             std::to_string(x2) + " in X2 (expected " + std::to_string(c[0]) + " + " +
                                             std::to_string(c[1]) + ")");
  }
}

void expect_tracking(CheckLog& log, const StratumPartition& p, const NumConfig& cfg) {
  log.expect(p.paths == 32 && p.accepted == 32 && p.distinct == 32,
             std::to_string(p.paths) + " paths, " + std::to_string(p.accepted) + " accepted, " +
                 std::to_string(p.distinct) + " distinct endpoints" + (p.second_chart ? " (second chart used)" : ""));
  log.expect(p.min_sigma > cfg.tol.simple,
             fmt("all endpoints have multiplicity one: smallest singular value %.3g", p.min_sigma));
  log.expect(p.max_residual < cfg.tol.track, fmt("largest normalized residual %.3g", p.max_residual));
}

void expect_exact_nearby(CheckLog& log, const StratumPartition& p, const std::string& name,
                         const model::Vec15<Cyc>& exact) {
  const double d = nearest_distance(p, exact);
  log.expect(d < 1e-8, name + fmt(" lies within %.2g of an endpoint", d));
}

}  // namespace

std::array<Rat, 3> default_sample_r() { return {Rat(10), make_rat(1, 2), make_rat(1, 3)}; }

CheckResult check_stratum_partition(const NumConfig& cfg, const std::array<Rat, 3>& r) {
  CheckLog log;
  note_tolerances(log, cfg);
  if (!in_r0(r)) {
    log.expect(false, "r = " + r_string(r) + " violates the inequations of R0");
    return log.finish("numeric/stratum_partition", "delta = 0 on L(r) is 32 simple points split over the strata");
  }
  const auto start = std::chrono::steady_clock::now();
  const StratumPartition p = count_stratum_points(r, cfg);
  const double ms = elapsed_ms(start);
  log.note("r = " + r_string(r) + ": " + p.summary());
  expect_tracking(log, p, cfg);
  expect_partition(log, p);
  log.expect(p.h_orbit && p.h_orbit_error < 1e-8,
             fmt("the four points of L0(r) in X2 form one H-orbit, error %.2g", p.h_orbit_error));
  bool pattern = !p.section.empty();
  for (std::size_t k = 6; k < 9 && pattern; ++k) pattern = std::abs(p.section[k]) < 1e-8;
  log.expect(pattern && p.section_spread < 1e-8,
             fmt("their common chart image has y10 = y11 = y12 = 0 (spread %.2g)", p.section_spread));
  for (const auto& v : model::points_l0()) expect_exact_nearby(log, p, model::vector_to_string(v), v);
  for (const auto& [name, v] : exact_l1_points(r[0])) expect_exact_nearby(log, p, name, v);
  log.within("tracking and classification", ms, 60000.0);
  return log.finish("numeric/stratum_partition", "delta = 0 on L(r) is 32 simple points split over the strata");
}

CheckResult check_stratum_partition_zero(const NumConfig& cfg) {
  CheckLog log;
  note_tolerances(log, cfg);
  const StratumPartition p = count_stratum_points({0, 0, 0}, cfg);
  log.note("r = 0: " + p.summary());
  expect_tracking(log, p, cfg);
  log.expect(p.count(Stratum::Lzero) == 16,
             "L0(0) meets delta = 0 in " + std::to_string(p.count(Stratum::Lzero)) + " points");
  log.expect(p.count(Stratum::L0) == 4, "L0 contributes " + std::to_string(p.count(Stratum::L0)) + " points");
  for (const auto& v : model::points_l0()) expect_exact_nearby(log, p, model::vector_to_string(v), v);
  return log.finish("numeric/stratum_partition_zero", "over r = 0 the open stratum holds 16 points");
}

CheckResult check_fiber_zero(const NumConfig& cfg) {
  CheckLog log;
  note_tolerances(log, cfg);
  const std::vector<Cyc> exact = model::u_double_prime_zero();
  const StratumPartition p = count_stratum_points({0, 0, 0}, cfg);
  CVec recovered = CVec::Zero(9), expected(9);
  for (std::size_t k = 0; k < 9; ++k) expected[static_cast<Eigen::Index>(k)] = exact[k].to_complex();
  if (p.section.size() == 9)
    for (std::size_t k = 0; k < 9; ++k) recovered[static_cast<Eigen::Index>(k)] = p.section[k];
  const double d = p.section.size() == 9 ? projective_distance(recovered, expected) : 1.0;
  log.expect(d < 1e-6, fmt("the X2 points of L0(0) map to u''(0) = (-5/4:20:-20:65:0:13:0:0:0) within %.2g", d));

  const FiberProbe f = fiber_probe({0, 0, 0}, exact, cfg);
  log.expect(f.slice_paths == 4 && f.slice_points == 4,
             "a random codimension-3 slice of the fiber has " + std::to_string(f.slice_points) + " points from " +
                 std::to_string(f.slice_paths) + " paths");
  log.expect(f.samples >= 20 && f.min_jacobian_rank == 5 && f.max_jacobian_rank == 5,
             "Jacobian rank 5 at all " + std::to_string(f.samples) + " sampled fiber points, so the fiber is 3-dimensional");
  log.expect(f.max_residual < cfg.tol.track, fmt("largest sample residual %.3g", f.max_residual));
  log.expect(f.image_rank == 4, "projections of the samples from N(0) span N (projective dimension " +
                                    std::to_string(f.image_rank - 1) + ")");
  log.expect(f.differential_rank == 4, "the projection has projective differential rank " +
                                           std::to_string(f.differential_rank - 1) + " at a sample");
  std::size_t single = 0;
  std::string counts;
  for (std::size_t c : f.preimage_counts) {
    single += c == 1 ? 1 : 0;
    counts += (counts.empty() ? "" : " ") + std::to_string(c);
  }
  log.expect(f.preimage_counts.size() == 10 && single == 10,
             std::to_string(single) + " of " + std::to_string(f.preimage_counts.size()) +
                 " random targets in N have exactly one preimage (" + counts + ")");
  return log.finish("numeric/fiber_zero", "the fiber over r = 0 is 3-dimensional and projects birationally onto N");
}

CheckResult check_seed_stability(const NumConfig& cfg, const std::array<Rat, 3>& r) {
  CheckLog log;
  note_tolerances(log, cfg);
  std::optional<std::map<Stratum, std::array<int, 2>>> reference;
  for (std::uint64_t k = 0; k < 3; ++k) {
    NumConfig c = cfg;
    c.seed = cfg.seed + k;
    const StratumPartition p = count_stratum_points(r, c);
    std::map<Stratum, std::array<int, 2>> counts;
    for (Stratum s : model::kStrata) counts[s] = {p.count(s, true), p.count(s, false)};
    const bool same = !reference || counts == *reference;
    if (!reference) reference = counts;
    log.expect(same && p.distinct == 32,
               "seed " + std::to_string(c.seed) + ": " + p.summary() + (same ? "" : " differs from the first seed"));
  }
  return log.finish("numeric/seed_stability", "the point counts do not depend on the random seed");
}

}  // namespace covforge::num
