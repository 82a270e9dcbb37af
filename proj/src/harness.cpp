#include "covforge/harness.hpp"

#include <fnmatch.h>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "covforge/numcheck.hpp"
#include "covforge/symcheck.hpp"

namespace covforge {
namespace {

using Json = nlohmann::ordered_json;

CheckSpec exact(std::string id, CheckResult (*f)()) {
  return {std::move(id), "symbolic", [f](const RunConfig&) { return f(); }};
}

CheckSpec property(std::string id, CheckResult (*f)(std::uint64_t, int), int samples) {
  return {std::move(id), "property", [f, samples](const RunConfig& c) { return f(c.num.seed, samples); }};
}

std::string limit_line(const TimeLimit& l, bool timing) {
  char buf[64];
  std::string out = l.ok() ? "ok    " : "FAIL  ";
  if (timing) {
    std::snprintf(buf, sizeof buf, " took %.0f ms (limit %.0f ms)", l.millis, l.limit);
  } else {
    std::snprintf(buf, sizeof buf, " within the %.0f ms limit", l.limit);
  }
  return out + l.what + (timing || l.ok() ? buf : " exceeded its time limit");
}

std::vector<std::string> all_details(const CheckResult& r, bool timing) {
  std::vector<std::string> out = r.details;
  for (const auto& l : r.limits) out.push_back(limit_line(l, timing));
  return out;
}

CheckResult failed_by_exception(const CheckSpec& spec, const std::string& what) {
  CheckResult r;
  r.id = spec.id;
  r.anchor = "check raised an exception";
  r.status = Status::fail;
  r.residual_count = 1;
  r.details.push_back("FAIL  exception: " + what);
  return r;
}

std::string rat_text(const Rat& q) { return q.get_str(); }

}  // namespace

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> checks = [] {
    std::vector<CheckSpec> c = {
        exact("symbolic/basis", sym::check_basis),
        exact("symbolic/calibration", sym::check_calibration),
        exact("symbolic/delta_expansion", sym::check_delta_expansion),
        exact("symbolic/fixed_locus", sym::check_fixed_locus),
        exact("symbolic/action_table", sym::check_action_table),
        exact("symbolic/group_structure", sym::check_group_structure),
        exact("symbolic/invariant_subspaces", sym::check_invariant_subspaces),
        exact("symbolic/equivariance", sym::check_equivariance),
        exact("symbolic/tangent_spaces", sym::check_tangent_spaces),
        exact("symbolic/sigma_fixed_plane", sym::check_sigma_fixed_plane),
        exact("symbolic/pi_chart", sym::check_pi_chart),
        exact("symbolic/chart_equations", sym::check_chart_equations),
        exact("symbolic/projection_centres", sym::check_projection_centres),
        exact("symbolic/strata", sym::check_strata),
        exact("symbolic/scaling_identity", sym::check_scaling_identity),
        property("property/field_axioms", sym::check_field_axioms, 1000),
        property("property/polynomial_identities", sym::check_polynomial_identities, 100),
        property("property/transvectant_symmetry", sym::check_transvectant_symmetry, 100),
        property("property/transvectant_equivariance", sym::check_transvectant_equivariance, 100),
    };
    c.push_back({"numeric/stratum_partition", "numeric",
                 [](const RunConfig& r) { return num::check_stratum_partition(r.num, r.sample_r); }});
    c.push_back({"numeric/stratum_partition_zero", "numeric",
                 [](const RunConfig& r) { return num::check_stratum_partition_zero(r.num); }});
    c.push_back({"numeric/fiber_zero", "numeric", [](const RunConfig& r) { return num::check_fiber_zero(r.num); }});
    c.push_back({"numeric/seed_stability", "numeric",
                 [](const RunConfig& r) { return num::check_seed_stability(r.num, r.sample_r); }});
    return c;
  }();
  return checks;
}

bool glob_match(const std::string& pattern, const std::string& id) {
  return fnmatch(pattern.c_str(), id.c_str(), 0) == 0;
}

void validate(const RunConfig& cfg) {
  const auto& t = cfg.num.tol;
  for (double v : {t.track, t.dedup, t.rank, t.cluster, t.support, t.simple})
    if (!(v > 0.0) || !std::isfinite(v)) throw UsageError("tolerances must be positive and finite");
  if (!(cfg.num.eps != 0.0) || !std::isfinite(cfg.num.eps)) throw UsageError("eps must be finite and nonzero");
  if (cfg.jobs == 0 || cfg.num.jobs == 0) throw UsageError("jobs must be at least 1");
  if (cfg.filter.empty()) throw UsageError("empty check filter");
}

std::vector<const CheckSpec*> select(const RunConfig& cfg) {
  validate(cfg);
  std::vector<const CheckSpec*> out;
  std::stringstream patterns(cfg.filter);
  std::vector<std::string> globs;
  for (std::string g; std::getline(patterns, g, ',');)
    if (!g.empty()) globs.push_back(g);
  for (const auto& spec : registry())
    for (const auto& g : globs)
      if (glob_match(g, spec.id)) {
        out.push_back(&spec);
        break;
      }
  if (out.empty()) throw UsageError("no check matches '" + cfg.filter + "'");
  return out;
}

Report run(const RunConfig& cfg) { return run(cfg, nullptr); }

Report run(const RunConfig& cfg, const std::function<void(const CheckResult&)>& progress) {
  const auto selected = select(cfg);
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.results.resize(selected.size());
  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < selected.size();) {
      const CheckSpec& spec = *selected[k];
      const auto t0 = std::chrono::steady_clock::now();
      CheckResult r;
      try {
        r = spec.run(cfg);
      } catch (const std::exception& e) {
        r = failed_by_exception(spec, e.what());
      }
      r.id = spec.id;
      r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      if (progress) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        progress(r);
      }
      report.results[k] = std::move(r);
    }
  };
  const unsigned threads = std::min<unsigned>(cfg.jobs, static_cast<unsigned>(selected.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& r : report.results) {
    if (r.status == Status::pass) ++report.passed;
    if (r.status == Status::fail) ++report.failed;
    if (r.status == Status::skipped) ++report.skipped;
  }
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string render_text(const Report& report, const RunConfig& cfg) {
  std::ostringstream out;
  char buf[64];
  for (const auto& r : report.results) {
    std::string status(status_name(r.status));
    for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    out << status << std::string(8 - status.size(), ' ') << r.id;
    if (cfg.timing) {
      std::snprintf(buf, sizeof buf, "  (%.0f ms)", r.millis);
      out << buf;
    }
    out << "\n        " << r.anchor << "\n";
    if (cfg.verbose || r.status != Status::pass)
      for (const auto& d : all_details(r, cfg.timing)) out << "        " << d << "\n";
  }
  out << report.passed << " passed, " << report.failed << " failed, " << report.skipped << " skipped (seed "
      << cfg.num.seed << ")";
  if (cfg.timing) {
    std::snprintf(buf, sizeof buf, " in %.1f s", report.millis / 1000.0);
    out << buf;
  }
  out << "\n";
  return out.str();
}

std::string render_json(const Report& report, const RunConfig& cfg) {
  Json checks = Json::array();
  for (const auto& r : report.results) {
    Json c;
    c["check_id"] = r.id;
    c["anchor"] = r.anchor;
    c["status"] = std::string(status_name(r.status));
    c["residual_count"] = r.residual_count;
    c["details"] = all_details(r, cfg.timing);
    c["millis"] = cfg.timing ? std::round(r.millis * 1000.0) / 1000.0 : 0.0;
    checks.push_back(std::move(c));
  }
  const auto& t = cfg.num.tol;
  Json doc;
  doc["config"] = {{"filter", cfg.filter},
                   {"seed", cfg.num.seed},
                   {"eps", cfg.num.eps},
                   {"sample_r", {rat_text(cfg.sample_r[0]), rat_text(cfg.sample_r[1]), rat_text(cfg.sample_r[2])}},
                   {"tolerances",
                    {{"track", t.track},
                     {"dedup", t.dedup},
                     {"rank", t.rank},
                     {"cluster", t.cluster},
                     {"support", t.support},
                     {"simple", t.simple}}}};
  doc["checks"] = std::move(checks);
  doc["summary"] = {{"total", report.results.size()},
                    {"passed", report.passed},
                    {"failed", report.failed},
                    {"skipped", report.skipped},
                    {"millis", cfg.timing ? std::round(report.millis) : 0.0}};
  return doc.dump(2) + "\n";
}

std::string render(const Report& report, const RunConfig& cfg) {
  return cfg.format == Format::json ? render_json(report, cfg) : render_text(report, cfg);
}

}  // namespace covforge
