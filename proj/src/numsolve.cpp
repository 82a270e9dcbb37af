#include "covforge/numsolve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>
#include <unsupported/Eigen/Polynomials>

namespace covforge::num {
namespace {

using model::Stratum;

CVec random_complex_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CVec v(static_cast<Eigen::Index>(n));
  for (auto& c : v) c = cplx(normal(rng), normal(rng));
  return v;
}

cplx random_phase(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, uni(rng));
}

CMat to_complex_matrix(const CMatrix& m) {
  CMat out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = embed_complex(m(i, j));
  return out;
}

CVec to_complex_vector(const std::vector<Cyc>& v) {
  CVec out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = embed_complex(v[i]);
  return out;
}

// Runs f(0..n-1) on up to `jobs` threads; results are written by index, so
// the outcome does not depend on scheduling.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F f) {
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) f(i);
    });
  for (auto& t : pool) t.join();
}

class Homotopy {
 public:
  Homotopy(const NumSystem& f, const AffineMap& map, cplx gamma)
      : f_(f), map_(map), gamma_(gamma), deg_(f.degrees()) {}

  std::size_t size() const { return deg_.size(); }
  int degree(std::size_t i) const { return deg_[i]; }

  void eval(const CVec& u, double t, CVec& h, CMat& hu, CVec* ht) const {
    const CVec x = map_.apply(u);
    const CVec fx = f_.eval(x);
    const CMat jx = f_.jacobian(x) * map_.A;
    const auto n = static_cast<Eigen::Index>(deg_.size());
    CVec g(n);
    CMat gu = CMat::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const int d = deg_[static_cast<std::size_t>(i)];
      g(i) = std::pow(u(i), d) - 1.0;
      gu(i, i) = static_cast<double>(d) * std::pow(u(i), d - 1);
    }
    h = (1.0 - t) * gamma_ * g + t * fx;
    hu = (1.0 - t) * gamma_ * gu + t * jx;
    if (ht) *ht = fx - gamma_ * g;
  }

  // du/dt along the path.
  std::optional<CVec> velocity(const CVec& u, double t) const {
    CVec h, ht;
    CMat hu;
    eval(u, t, h, hu, &ht);
    Eigen::PartialPivLU<CMat> lu(hu);
    CVec v = -lu.solve(ht);
    if (!v.allFinite()) return std::nullopt;
    return v;
  }

 private:
  const NumSystem& f_;
  const AffineMap& map_;
  cplx gamma_;
  std::vector<int> deg_;
};

// Newton on the target system F(A u + b); returns the last correction norm.
double newton_polish(const NumSystem& f, const AffineMap& map, CVec& u, int iterations) {
  double last = 0.0;
  for (int it = 0; it < iterations; ++it) {
    const CVec x = map.apply(u);
    const CMat j = f.jacobian(x) * map.A;
    const CVec d = j.fullPivLu().solve(f.eval(x));
    if (!d.allFinite()) break;
    u -= d;
    last = d.norm();
    if (last < 1e-15 * (1.0 + u.norm())) break;
  }
  return last;
}

Endpoint track_path(const Homotopy& hom, const NumSystem& f, const AffineMap& map, CVec u, std::size_t index,
                    const TrackOptions& opt) {
  Endpoint ep;
  ep.path = index;
  double t = 0.0;
  double h = 0.01;
  int streak = 0;
  CVec hv;
  CMat hu;
  while (t < 1.0) {
    if (ep.steps++ > opt.max_steps) break;
    if (u.norm() > opt.divergence) {
      ep.status = PathStatus::diverged;
      ep.u = u;
      ep.x = map.apply(u);
      return ep;
    }
    h = std::min(h, 1.0 - t);
    bool ok = false;
    CVec u1;
    const auto k1 = hom.velocity(u, t);
    if (k1) {
      const auto k2 = hom.velocity(u + 0.5 * h * *k1, t + 0.5 * h);
      const auto k3 = k2 ? hom.velocity(u + 0.5 * h * *k2, t + 0.5 * h) : std::nullopt;
      const auto k4 = k3 ? hom.velocity(u + h * *k3, t + h) : std::nullopt;
      if (k4) {
        u1 = u + (h / 6.0) * (*k1 + 2.0 * *k2 + 2.0 * *k3 + *k4);
        const double t1 = t + h;
        const double scale = 1.0 + u1.norm();
        double prev = std::numeric_limits<double>::infinity();
        for (int it = 0; it < 3; ++it) {
          hom.eval(u1, t1, hv, hu, nullptr);
          const CVec d = hu.partialPivLu().solve(hv);
          if (!d.allFinite()) break;
          const double dn = d.norm();
          if (it == 0 && dn > 0.1 * scale) break;  // predictor left the path's basin
          if (dn > 0.5 * prev) break;              // no contraction
          u1 -= d;
          prev = dn;
          if (dn < 1e-9 * scale) {
            ok = true;
            break;
          }
        }
      }
    }
    if (ok) {
      u = u1;
      t += h;
      if (++streak >= 2) {
        h = std::min(2.0 * h, opt.max_step);
        streak = 0;
      }
    } else {
      streak = 0;
      h *= 0.5;
      if (h < opt.min_step) break;
    }
  }
  if (u.norm() > opt.divergence) {
    ep.status = PathStatus::diverged;
  } else if (t >= 1.0) {
    newton_polish(f, map, u, 8);
    const CVec x = map.apply(u);
    ep.residual = f.residual(f.homogeneous() ? projective_normalize(x) : x);
    ep.status = ep.residual < opt.tol && x.allFinite() ? PathStatus::accepted : PathStatus::failed;
    const bool projective = f.homogeneous() && f.unknowns() == f.equations() + 1;
    const CMat j = projective ? f.jacobian(projective_normalize(x)) : CMat(f.jacobian(x) * map.A);
    ep.sigma_min = smallest_singular_value(row_normalized(j));
  }
  ep.u = u;
  ep.x = map.apply(u);
  return ep;
}

std::vector<Endpoint> dedup(const std::vector<Endpoint>& in, double tol, bool projective) {
  std::vector<Endpoint> out;
  for (const auto& e : in) {
    if (e.status != PathStatus::accepted) continue;
    Endpoint n = e;
    if (projective) n.x = projective_normalize(e.x);
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Endpoint& o) {
      return projective ? projective_distance(o.x, n.x) < tol
                        : (o.x - n.x).norm() < tol * (1.0 + n.x.norm());
    });
    if (!seen) out.push_back(std::move(n));
  }
  return out;
}

// Ascending coefficient vectors.
using UPoly = std::vector<cplx>;

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  UPoly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

UPoly upoly_pow(const UPoly& a, int k) {
  UPoly out{1.0};
  for (int i = 0; i < k; ++i) out = upoly_mul(out, a);
  return out;
}

// Binary forms as coefficient k of z1^{d-k} z2^k.
using BForm = std::vector<cplx>;

BForm d_dz1(const BForm& f) {
  const std::size_t d = f.size() - 1;
  BForm out(d, 0.0);
  for (std::size_t k = 0; k < d; ++k) out[k] = static_cast<double>(d - k) * f[k];
  return out;
}

BForm d_dz2(const BForm& f) {
  const std::size_t d = f.size() - 1;
  BForm out(d, 0.0);
  for (std::size_t k = 1; k <= d; ++k) out[k - 1] = static_cast<double>(k) * f[k];
  return out;
}

// f(U w) in the basis w1^{d-m} w2^m, computed as a polynomial in w2 / w1.
BForm change_frame(const BForm& f, const Eigen::Matrix2cd& u) {
  const int d = static_cast<int>(f.size()) - 1;
  const UPoly z1{u(0, 0), u(0, 1)}, z2{u(1, 0), u(1, 1)};
  BForm out(f.size(), 0.0);
  for (int k = 0; k <= d; ++k) {
    const UPoly term = upoly_mul(upoly_pow(z1, d - k), upoly_pow(z2, k));
    for (std::size_t m = 0; m < term.size(); ++m) out[m] += f[static_cast<std::size_t>(k)] * term[m];
  }
  return out;
}

double bombieri_sq(const BForm& f, std::size_t from, std::size_t to) {
  const auto d = static_cast<unsigned>(f.size() - 1);
  double s = 0.0;
  for (std::size_t m = from; m < to && m < f.size(); ++m)
    s += std::norm(f[m]) / static_cast<double>(binomial(static_cast<int>(d), static_cast<int>(m)));
  return s;
}

// Unitary frame whose first column is the unit vector p.
Eigen::Matrix2cd frame_at(Eigen::Vector2cd p) {
  p.normalize();
  Eigen::Matrix2cd u;
  u << p(0), -std::conj(p(1)), p(1), std::conj(p(0));
  return u;
}

Eigen::Matrix2cd random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::Vector2cd p(cplx(normal(rng), normal(rng)), cplx(normal(rng), normal(rng)));
  return frame_at(p);
}

// Roots of a binary form as unit vectors, found in a random unitary frame so
// that none of them sits at the chart's infinity.
std::vector<Eigen::Vector2cd> binary_roots(const BForm& f, std::mt19937_64& rng) {
  const Eigen::Matrix2cd u = random_unitary(rng);
  BForm g = change_frame(f, u);
  double top = 0.0;
  for (const auto& c : g) top = std::max(top, std::abs(c));
  std::vector<Eigen::Vector2cd> out;
  if (top == 0.0) return out;
  while (g.size() > 1 && std::abs(g.back()) < 1e-13 * top) {
    g.pop_back();
    out.push_back(u.col(1));
  }
  if (g.size() > 1) {
    Eigen::VectorXcd coeffs = Eigen::Map<const Eigen::VectorXcd>(g.data(), static_cast<Eigen::Index>(g.size()));
    Eigen::PolynomialSolver<cplx, Eigen::Dynamic> solver(coeffs);
    for (const auto& t : solver.roots()) out.push_back((u.col(0) + t * u.col(1)).normalized());
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

NumPoly::NumPoly(const Poly& p, const std::vector<Var>& vars, const std::map<Var, cplx>& params) : n_(vars.size()) {
  std::map<std::vector<std::uint8_t>, cplx> acc;
  for (const auto& [e, c] : p.terms()) {
    cplx coeff = embed_complex(c);
    std::vector<std::uint8_t> local(n_, 0);
    for (std::size_t k = 0; k < kNumVars; ++k) {
      if (e[k] == 0) continue;
      const Var v = static_cast<Var>(k);
      const auto pos = std::find(vars.begin(), vars.end(), v);
      if (pos != vars.end()) {
        local[static_cast<std::size_t>(pos - vars.begin())] = e[k];
      } else if (auto it = params.find(v); it != params.end()) {
        coeff *= std::pow(it->second, static_cast<int>(e[k]));
      } else {
        throw std::invalid_argument("NumPoly: variable " + std::string(var_name(v)) + " is neither unknown nor bound");
      }
    }
    acc[local] += coeff;
  }
  for (auto& [e, c] : acc) {
    if (c == 0.0) continue;
    int d = 0;
    for (auto k : e) d += k;
    degree_ = std::max(degree_, d);
    terms_.push_back({c, e});
  }
}

NumPoly NumPoly::linear(const CVec& coeffs, cplx constant) {
  NumPoly p;
  p.n_ = static_cast<std::size_t>(coeffs.size());
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    if (coeffs(k) == 0.0) continue;
    std::vector<std::uint8_t> e(p.n_, 0);
    e[static_cast<std::size_t>(k)] = 1;
    p.terms_.push_back({coeffs(k), e});
    p.degree_ = 1;
  }
  if (constant != 0.0) p.terms_.push_back({constant, std::vector<std::uint8_t>(p.n_, 0)});
  return p;
}

bool NumPoly::homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    int d = 0;
    for (auto k : t.e) d += k;
    return d == degree_;
  });
}

double NumPoly::coeff_norm() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::norm(t.c);
  return std::sqrt(s);
}

cplx NumPoly::eval(const CVec& x) const {
  cplx v = 0.0;
  for (const auto& t : terms_) {
    cplx m = t.c;
    for (std::size_t k = 0; k < n_; ++k)
      if (t.e[k]) m *= std::pow(x(static_cast<Eigen::Index>(k)), static_cast<int>(t.e[k]));
    v += m;
  }
  return v;
}

cplx NumPoly::eval_grad(const CVec& x, Eigen::Ref<Eigen::RowVectorXcd, 0, Eigen::InnerStride<>> grad) const {
  grad.setZero();
  cplx v = 0.0;
  for (const auto& t : terms_) {
    cplx m = t.c;
    for (std::size_t k = 0; k < n_; ++k)
      if (t.e[k]) m *= std::pow(x(static_cast<Eigen::Index>(k)), static_cast<int>(t.e[k]));
    v += m;
    for (std::size_t k = 0; k < n_; ++k) {
      if (!t.e[k]) continue;
      cplx dm = t.c * static_cast<double>(t.e[k]);
      for (std::size_t j = 0; j < n_; ++j) {
        const int p = t.e[j] - (j == k ? 1 : 0);
        if (p > 0) dm *= std::pow(x(static_cast<Eigen::Index>(j)), p);
      }
      grad(static_cast<Eigen::Index>(k)) += dm;
    }
  }
  return v;
}

NumSystem::NumSystem(const std::vector<Poly>& system, const std::vector<Var>& vars,
                     const std::map<Var, cplx>& params) {
  for (const auto& p : system) polys_.emplace_back(p, vars, params);
}

NumSystem::NumSystem(std::vector<NumPoly> polys) : polys_(std::move(polys)) {}

void NumSystem::append(NumPoly p) {
  if (!polys_.empty() && p.unknowns() != unknowns())
    throw std::invalid_argument("NumSystem::append: unknown count mismatch");
  polys_.push_back(std::move(p));
}

std::vector<int> NumSystem::degrees() const {
  std::vector<int> d;
  for (const auto& p : polys_) d.push_back(p.degree());
  return d;
}

bool NumSystem::homogeneous() const {
  return std::all_of(polys_.begin(), polys_.end(), [](const NumPoly& p) { return p.homogeneous(); });
}

CVec NumSystem::eval(const CVec& x) const {
  CVec out(static_cast<Eigen::Index>(polys_.size()));
  for (std::size_t i = 0; i < polys_.size(); ++i) out(static_cast<Eigen::Index>(i)) = polys_[i].eval(x);
  return out;
}

CMat NumSystem::jacobian(const CVec& x) const {
  CMat j(static_cast<Eigen::Index>(polys_.size()), static_cast<Eigen::Index>(unknowns()));
  for (std::size_t i = 0; i < polys_.size(); ++i) polys_[i].eval_grad(x, j.row(static_cast<Eigen::Index>(i)));
  return j;
}

double NumSystem::residual(const CVec& x) const {
  const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
  double worst = 0.0;
  for (const auto& p : polys_) {
    const double norm = p.coeff_norm();
    if (norm == 0.0) continue;
    worst = std::max(worst, std::abs(p.eval(x)) / (norm * std::pow(scale, p.degree())));
  }
  return worst;
}

AffineMap random_chart(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CVec c = random_complex_vector(n, rng);
  c.normalize();
  const CVec cc = c.conjugate();
  Eigen::HouseholderQR<CMat> qr{CMat(cc)};
  const CMat q = qr.householderQ() * CMat::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  return {q.rightCols(static_cast<Eigen::Index>(n) - 1), cc};
}

std::string_view path_status_name(PathStatus s) {
  switch (s) {
    case PathStatus::accepted: return "accepted";
    case PathStatus::diverged: return "diverged";
    case PathStatus::failed: return "failed";
  }
  return "?";
}

TrackReport track(const NumSystem& system, const AffineMap& map, const TrackOptions& opt) {
  const std::size_t n = static_cast<std::size_t>(map.A.cols());
  if (system.equations() != n || static_cast<std::size_t>(map.A.rows()) != system.unknowns())
    throw std::invalid_argument("track: the system is not square in the chart unknowns");
  std::mt19937_64 rng(opt.seed);
  const Homotopy hom(system, map, random_phase(rng));

  std::size_t paths = 1;
  for (std::size_t i = 0; i < n; ++i) paths *= static_cast<std::size_t>(std::max(1, hom.degree(i)));

  TrackReport rep;
  rep.paths = paths;
  rep.endpoints.resize(paths);
  parallel_for(paths, opt.jobs, [&](std::size_t p) {
    CVec u(static_cast<Eigen::Index>(n));
    std::size_t rest = p;
    for (std::size_t i = 0; i < n; ++i) {
      const int d = std::max(1, hom.degree(i));
      const auto k = static_cast<double>(rest % static_cast<std::size_t>(d));
      rest /= static_cast<std::size_t>(d);
      u(static_cast<Eigen::Index>(i)) = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
    }
    rep.endpoints[p] = track_path(hom, system, map, u, p, opt);
  });
  for (const auto& e : rep.endpoints) {
    switch (e.status) {
      case PathStatus::accepted: ++rep.accepted; break;
      case PathStatus::diverged: ++rep.diverged; break;
      case PathStatus::failed: ++rep.failed; break;
    }
  }
  return rep;
}

CVec projective_normalize(const CVec& x) {
  Eigen::Index k = 0;
  x.cwiseAbs().maxCoeff(&k);
  if (x(k) == 0.0) return x;
  return x / x(k);
}

double projective_distance(const CVec& a, const CVec& b) {
  const CVec na = projective_normalize(a);
  Eigen::Index k = 0;
  na.cwiseAbs().maxCoeff(&k);
  if (b(k) == 0.0) return std::numeric_limits<double>::infinity();
  return (na - b / b(k)).norm();
}

std::size_t numeric_rank(const CMat& m, double tol) {
  if (m.size() == 0) return 0;
  const Eigen::VectorXd sv = Eigen::JacobiSVD<CMat>(m).singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * sv(0)) ++r;
  return r;
}

double smallest_singular_value(const CMat& m) {
  const Eigen::VectorXd sv = Eigen::JacobiSVD<CMat>(m).singularValues();
  return sv.size() == 0 ? 0.0 : sv(sv.size() - 1);
}

CMat row_normalized(const CMat& m) {
  CMat out = m;
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    const double n = out.row(i).norm();
    if (n > 0.0) out.row(i) /= n;
  }
  return out;
}

ProjectiveSolution solve_projective(const NumSystem& system, const NumConfig& cfg, std::uint64_t seed) {
  if (!system.homogeneous() || system.unknowns() != system.equations() + 1)
    throw std::invalid_argument("solve_projective: expected n homogeneous equations in n + 1 unknowns");
  TrackOptions opt;
  opt.seed = seed;
  opt.tol = cfg.tol.track;
  opt.jobs = cfg.jobs;
  ProjectiveSolution sol;
  sol.first = track(system, random_chart(system.unknowns(), seed), opt);
  std::vector<Endpoint> all = sol.first.endpoints;
  if (sol.first.accepted < sol.first.paths) {
    opt.seed = seed ^ 0x9e3779b97f4a7c15ULL;
    sol.second = track(system, random_chart(system.unknowns(), opt.seed), opt);
    all.insert(all.end(), sol.second->endpoints.begin(), sol.second->endpoints.end());
  }
  sol.points = dedup(all, cfg.tol.dedup, true);
  return sol;
}

// ---------------------------------------------------------------------------

std::array<cplx, 9> octic_coefficients(const std::array<cplx, 9>& x) {
  std::array<cplx, 9> out{};
  const auto& e = model::octic_basis();
  for (std::size_t i = 0; i < 9; ++i)
    for (int k = 0; k <= 8; ++k) out[static_cast<std::size_t>(k)] += x[i] * embed_complex(e[i].coeff(k));
  return out;
}

double six_fold_score(const std::array<cplx, 9>& x, std::uint64_t seed) {
  const auto c = octic_coefficients(x);
  const BForm f(c.begin(), c.end());
  const double total = bombieri_sq(f, 0, f.size());
  if (total == 0.0) throw std::invalid_argument("six_fold_score: zero octic");

  // The linear factor of a six-fold root is a simple root of every fifth
  // partial derivative, so the roots of a random combination are candidates.
  std::mt19937_64 rng(seed);
  std::vector<BForm> fifth{f};
  for (int order = 0; order < 5; ++order) {
    std::vector<BForm> next;
    for (const auto& g : fifth) next.push_back(d_dz1(g));
    next.push_back(d_dz2(fifth.back()));
    fifth = std::move(next);
  }
  BForm cubic(4, 0.0);
  std::normal_distribution<double> normal;
  for (const auto& g : fifth) {
    const cplx beta(normal(rng), normal(rng));
    for (std::size_t k = 0; k < 4; ++k) cubic[k] += beta * g[k];
  }

  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : binary_roots(cubic, rng)) {
    const BForm local = change_frame(f, frame_at(p));
    best = std::min(best, std::sqrt(bombieri_sq(local, 0, 6) / total));
  }
  return best;
}

int StratumPartition::count(Stratum s) const {
  const auto it = counts.find(s);
  return it == counts.end() ? 0 : it->second[0] + it->second[1];
}

int StratumPartition::count(Stratum s, bool x1) const {
  const auto it = counts.find(s);
  return it == counts.end() ? 0 : it->second[x1 ? 0 : 1];
}

std::string StratumPartition::summary() const {
  int middle = 0;
  for (Stratum s : {Stratum::L1, Stratum::L2, Stratum::L3, Stratum::Lt1, Stratum::Lt2, Stratum::Lt3})
    middle += count(s);
  return std::to_string(count(Stratum::L0)) + "+" + std::to_string(middle) + "+" +
         std::to_string(count(Stratum::Lzero)) + "=" + std::to_string(distinct);
}

StratumPartition count_stratum_points(const std::array<Rat, 3>& r, const NumConfig& cfg) {
  using model::xi;
  StratumPartition out;
  out.r = r;
  const std::vector<Var> vars = {xvar(1), xvar(2), xvar(3), xvar(7), xvar(8), xvar(9)};
  std::map<Var, Poly> on_l;
  for (int j = 1; j <= 3; ++j) on_l[xvar(j + 3)] = Poly::var(xvar(j)).scaled(Cyc(r[static_cast<std::size_t>(j - 1)]));
  std::vector<Poly> eqs;
  for (const auto& q : model::corrected_q()) eqs.push_back(q.substitute(on_l));
  const NumSystem system(eqs, vars);

  const ProjectiveSolution sol = solve_projective(system, cfg, cfg.seed);
  out.paths = sol.first.paths;
  out.accepted = sol.first.accepted;
  out.second_chart = sol.second.has_value();
  out.distinct = sol.points.size();
  out.min_sigma = std::numeric_limits<double>::infinity();

  for (const auto& ep : sol.points) {
    ClassifiedPoint pt;
    pt.v.assign(model::kDim, 0.0);
    pt.v[xi(1)] = ep.x(0);
    pt.v[xi(2)] = ep.x(1);
    pt.v[xi(3)] = ep.x(2);
    for (int j = 1; j <= 3; ++j)
      pt.v[xi(j + 3)] = to_complex(r[static_cast<std::size_t>(j - 1)]) * pt.v[xi(j)];
    pt.v[xi(7)] = ep.x(3);
    pt.v[xi(8)] = ep.x(4);
    pt.v[xi(9)] = ep.x(5);
    const double top = Eigen::Map<const CVec>(pt.v.data(), 9).cwiseAbs().maxCoeff();
    const auto nz = [&](int j) { return std::abs(pt.v[xi(j)]) > cfg.tol.support * top; };
    pt.stratum = model::stratum_from_support(nz(1), nz(2), nz(3));
    std::array<cplx, 9> x{};
    for (int i = 1; i <= 9; ++i) x[static_cast<std::size_t>(i - 1)] = pt.v[xi(i)] / top;
    pt.score = six_fold_score(x, cfg.seed);
    pt.in_x1 = pt.score < cfg.tol.cluster;
    pt.sigma_min = ep.sigma_min;
    pt.residual = ep.residual;
    out.min_sigma = std::min(out.min_sigma, pt.sigma_min);
    out.max_residual = std::max(out.max_residual, pt.residual);
    ++out.counts[pt.stratum][pt.in_x1 ? 0 : 1];
    out.points.push_back(std::move(pt));
  }

  std::vector<CVec> orbit;
  for (const auto& p : out.points)
    if (p.stratum == Stratum::Lzero && !p.in_x1) orbit.push_back(Eigen::Map<const CVec>(p.v.data(), model::kDim));
  if (!orbit.empty()) {
    std::vector<bool> hit(orbit.size(), false);
    for (const auto& h : model::klein_subgroup()) {
      const CVec image = to_complex_matrix(model::induced_action(h)) * orbit.front();
      std::size_t best = 0;
      double dist = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        const double d = projective_distance(image, orbit[k]);
        if (d < dist) {
          dist = d;
          best = k;
        }
      }
      out.h_orbit_error = std::max(out.h_orbit_error, dist);
      hit[best] = true;
    }
    out.h_orbit = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }) &&
                  orbit.size() == model::klein_subgroup().size() && out.h_orbit_error < cfg.tol.support;

    std::vector<CVec> images;
    for (const auto& v : orbit) {
      const cplx x1 = v(0), x2 = v(1), x3 = v(2);
      CVec y(9);
      y << x2 * x3 / x1, x3 * x1 / x2, x1 * x2 / x3, v(6), v(7), v(8), v(9), v(10), v(11);
      images.push_back(projective_normalize(y));
    }
    for (const auto& a : images)
      for (const auto& b : images) out.section_spread = std::max(out.section_spread, projective_distance(a, b));
    out.section.assign(images.front().data(), images.front().data() + images.front().size());
  }
  return out;
}

double nearest_distance(const StratumPartition& p, const model::Vec15<Cyc>& exact) {
  const CVec e = to_complex_vector(exact);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& pt : p.points)
    best = std::min(best, projective_distance(e, Eigen::Map<const CVec>(pt.v.data(), model::kDim)));
  return best;
}

// ---------------------------------------------------------------------------

NumSystem chart_system(const std::array<Rat, 3>& r, double eps) {
  const auto& y = model::chart_vars();
  const std::vector<Var> vars(y.begin(), y.end());
  std::map<Var, cplx> params{{Var::eps, eps}};
  for (int j = 1; j <= 3; ++j) params[rvar(j)] = to_complex(r[static_cast<std::size_t>(j - 1)]);
  return NumSystem(model::corrected_equations(model::System::chart_equations), vars, params);
}

FiberProbe fiber_probe(const std::array<Rat, 3>& r, const std::vector<Cyc>& section, const NumConfig& cfg,
                       std::size_t targets, std::size_t min_samples) {
  const NumSystem fiber = chart_system(r, cfg.eps);
  const std::size_t n = fiber.unknowns();
  FiberProbe out;
  out.min_jacobian_rank = n;
  std::mt19937_64 rng(cfg.seed);

  std::vector<CVec> samples;
  for (std::size_t slice = 0; samples.size() < min_samples && slice < 4 * min_samples; ++slice) {
    NumSystem cut = fiber;
    for (int k = 0; k < 3; ++k) cut.append(NumPoly::linear(random_complex_vector(n, rng)));
    const ProjectiveSolution sol = solve_projective(cut, cfg, rng());
    if (slice == 0) {
      out.slice_paths = sol.first.paths;
      out.slice_points = sol.points.size();
    }
    for (const auto& ep : sol.points) samples.push_back(ep.x);
  }
  out.samples = samples.size();
  if (samples.empty()) return out;

  for (const auto& s : samples) {
    const std::size_t rk = numeric_rank(row_normalized(fiber.jacobian(s)), cfg.tol.rank);
    out.min_jacobian_rank = std::min(out.min_jacobian_rank, rk);
    out.max_jacobian_rank = std::max(out.max_jacobian_rank, rk);
    out.max_residual = std::max(out.max_residual, fiber.residual(s));
  }

  // Coordinates along N(r) + N; the last four are the projection to N.
  std::vector<CVec> cols = {to_complex_vector(model::u_prime()), to_complex_vector(section)};
  for (std::size_t k = 0; k < 3; ++k) cols.push_back(CVec::Unit(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k)));
  const std::size_t centre_dim = cols.size();
  for (const auto& b : model::subspace_n_basis()) cols.push_back(to_complex_vector(b));
  CMat basis(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) basis.col(static_cast<Eigen::Index>(k)) = cols[k];
  if (basis.cols() != basis.rows())
    throw std::logic_error("fiber_probe: N(r) and N do not fill the chart space");
  const CMat coords = basis.fullPivLu().inverse();
  const auto ndim = static_cast<Eigen::Index>(cols.size() - centre_dim);
  const CMat to_n = coords.bottomRows(ndim);

  CMat images(static_cast<Eigen::Index>(samples.size()), ndim);
  for (std::size_t k = 0; k < samples.size(); ++k)
    images.row(static_cast<Eigen::Index>(k)) = (to_n * projective_normalize(samples[k])).transpose();
  out.image_rank = numeric_rank(images, cfg.tol.rank);

  const CVec& s0 = projective_normalize(samples.front());
  Eigen::JacobiSVD<CMat> svd(fiber.jacobian(s0), Eigen::ComputeFullV);
  const auto rank = static_cast<Eigen::Index>(numeric_rank(fiber.jacobian(s0), cfg.tol.rank));
  const CMat tangent = svd.matrixV().rightCols(static_cast<Eigen::Index>(n) - rank);
  out.differential_rank = numeric_rank(to_n * tangent, cfg.tol.rank);

  // Preimages of a random point of N: y = B c + n in the unknowns c.
  TrackOptions opt;
  opt.tol = cfg.tol.track;
  opt.jobs = cfg.jobs;
  const CMat centre = basis.leftCols(static_cast<Eigen::Index>(centre_dim));
  for (std::size_t k = 0; k < targets; ++k) {
    const CVec target = basis.rightCols(ndim) * random_complex_vector(static_cast<std::size_t>(ndim), rng);
    opt.seed = rng();
    const TrackReport rep = track(fiber, AffineMap{centre, target}, opt);
    out.preimage_counts.push_back(dedup(rep.endpoints, cfg.tol.dedup, false).size());
  }
  return out;
}

}  // namespace covforge::num
