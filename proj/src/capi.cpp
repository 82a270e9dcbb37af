#include "covforge.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include <json.hpp>

#include "covforge/calibrate.hpp"
#include "covforge/harness.hpp"
#include "covforge/papermodel.hpp"

struct covforge_config {
  covforge::RunConfig run;
};

struct covforge_report {
  covforge::Report report;
  std::string rendered;
};

namespace {

thread_local std::string last_error;

covforge_status fail(covforge_status code, const std::string& message) {
  last_error = message;
  return code;
}

// Runs f, translating exceptions into status codes.
template <class F>
covforge_status guarded(F&& f) {
  try {
    return f();
  } catch (const covforge::UsageError& e) {
    return fail(COVFORGE_USAGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(COVFORGE_USAGE, e.what());
  } catch (const std::exception& e) {
    return fail(COVFORGE_INTERNAL, e.what());
  } catch (...) {
    return fail(COVFORGE_INTERNAL, "unknown exception");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

covforge_status give(char** out, const std::string& s) {
  *out = duplicate(s);
  return *out ? COVFORGE_OK : fail(COVFORGE_INTERNAL, "out of memory");
}

#define REQUIRE(cond, what) \
  if (!(cond)) return fail(COVFORGE_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* covforge_version(void) { return "0.1.0"; }

const char* covforge_last_error(void) { return last_error.c_str(); }

void covforge_string_free(char* s) { std::free(s); }

covforge_status covforge_config_new(covforge_config** out) {
  REQUIRE(out, "null output pointer");
  return guarded([&] {
    *out = new covforge_config();
    return COVFORGE_OK;
  });
}

void covforge_config_free(covforge_config* cfg) { delete cfg; }

covforge_status covforge_config_set_filter(covforge_config* cfg, const char* filter) {
  REQUIRE(cfg && filter, "null argument");
  REQUIRE(*filter, "empty filter");
  cfg->run.filter = filter;
  return COVFORGE_OK;
}

covforge_status covforge_config_set_seed(covforge_config* cfg, uint64_t seed) {
  REQUIRE(cfg, "null config");
  cfg->run.num.seed = seed;
  return COVFORGE_OK;
}

covforge_status covforge_config_set_format(covforge_config* cfg, const char* format) {
  REQUIRE(cfg && format, "null argument");
  const std::string f = format;
  if (f == "text") {
    cfg->run.format = covforge::Format::text;
  } else if (f == "json") {
    cfg->run.format = covforge::Format::json;
  } else {
    return fail(COVFORGE_USAGE, "unknown format '" + f + "' (expected text or json)");
  }
  return COVFORGE_OK;
}

covforge_status covforge_config_set_jobs(covforge_config* cfg, unsigned jobs, unsigned track_jobs) {
  REQUIRE(cfg, "null config");
  if (jobs == 0 || track_jobs == 0) return fail(COVFORGE_USAGE, "jobs must be at least 1");
  cfg->run.jobs = jobs;
  cfg->run.num.jobs = track_jobs;
  return COVFORGE_OK;
}

covforge_status covforge_config_set_tolerance(covforge_config* cfg, const char* name, double value) {
  REQUIRE(cfg && name, "null argument");
  if (!(value > 0.0) || !std::isfinite(value)) return fail(COVFORGE_USAGE, "tolerances must be positive and finite");
  auto& t = cfg->run.num.tol;
  const std::string n = name;
  double* slot = n == "track"     ? &t.track
                 : n == "dedup"   ? &t.dedup
                 : n == "rank"    ? &t.rank
                 : n == "cluster" ? &t.cluster
                 : n == "support" ? &t.support
                 : n == "simple"  ? &t.simple
                                  : nullptr;
  if (!slot) return fail(COVFORGE_USAGE, "unknown tolerance '" + n + "'");
  *slot = value;
  return COVFORGE_OK;
}

covforge_status covforge_config_set_sample_r(covforge_config* cfg, const char* r1, const char* r2, const char* r3) {
  REQUIRE(cfg && r1 && r2 && r3, "null argument");
  return guarded([&] {
    cfg->run.sample_r = {covforge::parse_rat(r1), covforge::parse_rat(r2), covforge::parse_rat(r3)};
    return COVFORGE_OK;
  });
}

covforge_status covforge_config_set_eps(covforge_config* cfg, double eps) {
  REQUIRE(cfg, "null config");
  if (eps == 0.0 || !std::isfinite(eps)) return fail(COVFORGE_USAGE, "eps must be finite and nonzero");
  cfg->run.num.eps = eps;
  return COVFORGE_OK;
}

covforge_status covforge_config_set_timing(covforge_config* cfg, int enabled) {
  REQUIRE(cfg, "null config");
  cfg->run.timing = enabled != 0;
  return COVFORGE_OK;
}

covforge_status covforge_config_set_verbose(covforge_config* cfg, int enabled) {
  REQUIRE(cfg, "null config");
  cfg->run.verbose = enabled != 0;
  return COVFORGE_OK;
}

size_t covforge_check_count(void) { return covforge::registry().size(); }

const char* covforge_check_id(size_t index) {
  const auto& r = covforge::registry();
  return index < r.size() ? r[index].id.c_str() : nullptr;
}

covforge_status covforge_run(const covforge_config* cfg, covforge_report** out) {
  REQUIRE(cfg && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto report = std::make_unique<covforge_report>();
    report->report = covforge::run(cfg->run);
    report->rendered = covforge::render(report->report, cfg->run);
    *out = report.release();
    return COVFORGE_OK;
  });
}

void covforge_report_free(covforge_report* report) { delete report; }

int covforge_report_exit_code(const covforge_report* report) { return report ? report->report.exit_code() : 2; }

size_t covforge_report_size(const covforge_report* report) { return report ? report->report.results.size() : 0; }

const char* covforge_report_check_id(const covforge_report* report, size_t index) {
  if (!report || index >= report->report.results.size()) return nullptr;
  return report->report.results[index].id.c_str();
}

covforge_status covforge_report_check_status(const covforge_report* report, size_t index,
                                             covforge_check_status* out) {
  REQUIRE(report && out, "null argument");
  REQUIRE(index < report->report.results.size(), "check index out of range");
  switch (report->report.results[index].status) {
    case covforge::Status::pass: *out = COVFORGE_CHECK_PASS; break;
    case covforge::Status::fail: *out = COVFORGE_CHECK_FAIL; break;
    case covforge::Status::skipped: *out = COVFORGE_CHECK_SKIPPED; break;
  }
  return COVFORGE_OK;
}

const char* covforge_report_render(const covforge_report* report) {
  return report ? report->rendered.c_str() : nullptr;
}

covforge_status covforge_errata_json(char** out) {
  REQUIRE(out, "null output pointer");
  return guarded([&] {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& e : covforge::model::errata())
      doc.push_back({{"id", e.id},
                     {"location", e.location},
                     {"equation", e.equation},
                     {"monomial", e.monomial},
                     {"printed", e.printed},
                     {"corrected", e.corrected},
                     {"reason", e.reason}});
    return give(out, doc.dump(2) + "\n");
  });
}

covforge_status covforge_constants_json(char** out) {
  REQUIRE(out, "null output pointer");
  return guarded([&] {
    using covforge::model::calibrate;
    const auto& cal = calibrate();
    const covforge::RunConfig defaults;
    const auto& t = defaults.num.tol;
    nlohmann::ordered_json doc;
    doc["action_convention"] = cal.matching_conventions.size() == 1
                                   ? std::string(covforge::convention_name(cal.matching_conventions.front()))
                                   : std::string("ambiguous");
    doc["transvectant_scalars"] = {
        {"s6", cal.scalars.s6.get_str()}, {"s4", cal.scalars.s4.get_str()}, {"s2", cal.scalars.s2.get_str()}};
    doc["lambda"] = {"1", "6*eps", "1", "6"};
    doc["default_seed"] = defaults.num.seed;
    doc["default_eps"] = defaults.num.eps;
    doc["sample_r"] = {defaults.sample_r[0].get_str(), defaults.sample_r[1].get_str(), defaults.sample_r[2].get_str()};
    doc["tolerances"] = {{"track", t.track},     {"dedup", t.dedup},     {"rank", t.rank},
                         {"cluster", t.cluster}, {"support", t.support}, {"simple", t.simple}};
    return give(out, doc.dump(2) + "\n");
  });
}

}  // extern "C"
