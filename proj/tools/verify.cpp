// verify: runs the covforge checks and prints a text or JSON report.
//
// Exit status: 0 when every selected check passes, 1 when any fails,
// 2 on usage errors (unknown check filter, malformed option).
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "covforge.h"

namespace {

constexpr int kUsage = 2;

int usage(const std::string& message) {
  std::cerr << "verify: " << message << "\n";
  return kUsage;
}

int print_owned(covforge_status (*producer)(char**)) {
  char* text = nullptr;
  if (producer(&text) != COVFORGE_OK) return usage(covforge_last_error());
  std::fputs(text, stdout);
  covforge_string_free(text);
  return 0;
}

struct ConfigDeleter {
  void operator()(covforge_config* c) const { covforge_config_free(c); }
};
struct ReportDeleter {
  void operator()(covforge_report* r) const { covforge_report_free(r); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reproduces the exact and numeric computations of the rationality construction for genus-3 moduli."};
  app.set_version_flag("--version", covforge_version());

  std::string filter = "*";
  std::uint64_t seed = 42;
  std::string format = "text";
  unsigned jobs = 1, track_jobs = 1;
  double tol_track = 1e-10, tol_dedup = 1e-6, tol_rank = 1e-8, tol_cluster = 1e-4, tol_support = 1e-8,
         tol_simple = 1e-6;
  std::vector<std::string> sample_r = {"10", "1/2", "1/3"};
  double eps = 1.0;
  bool no_timing = false, verbose = false, list = false, errata = false, constants = false;

  app.add_option("--filter", filter, "Comma-separated globs over check ids")->envname("COVFORGE_FILTER");
  app.add_option("--seed", seed, "Seed for every random choice")->envname("COVFORGE_SEED");
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("COVFORGE_FORMAT");
  app.add_option("--jobs", jobs, "Checks run concurrently")->check(CLI::PositiveNumber)->envname("COVFORGE_JOBS");
  app.add_option("--track-jobs", track_jobs, "Threads per path tracker")
      ->check(CLI::PositiveNumber)
      ->envname("COVFORGE_TRACK_JOBS");
  app.add_option("--tol-track", tol_track, "Residual for accepting an endpoint")->envname("COVFORGE_TOL_TRACK");
  app.add_option("--tol-dedup", tol_dedup, "Projective distance merging endpoints")->envname("COVFORGE_TOL_DEDUP");
  app.add_option("--tol-rank", tol_rank, "Relative singular value cutoff")->envname("COVFORGE_TOL_RANK");
  app.add_option("--tol-cluster", tol_cluster, "Six-fold root score threshold")->envname("COVFORGE_TOL_CLUSTER");
  app.add_option("--tol-support", tol_support, "Relative size of a vanishing coordinate")
      ->envname("COVFORGE_TOL_SUPPORT");
  app.add_option("--tol-simple", tol_simple, "Smallest singular value of a simple endpoint")
      ->envname("COVFORGE_TOL_SIMPLE");
  app.add_option("--sample-r", sample_r, "Rational point r1 r2 r3 for the stratum count")
      ->expected(3)
      ->delimiter(' ')
      ->envname("COVFORGE_SAMPLE_R");
  app.add_option("--eps", eps, "Value of eps in the numeric systems")->envname("COVFORGE_EPS");
  app.add_flag("--no-timing", no_timing, "Leave wall times out of the report")->envname("COVFORGE_NO_TIMING");
  app.add_flag("-v,--verbose", verbose, "Show details of passing checks in text output");
  app.add_flag("--list", list, "List check ids and exit");
  app.add_flag("--errata", errata, "Print the erratum ledger as JSON and exit");
  app.add_flag("--constants", constants, "Print the calibrated constants and defaults as JSON and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (list) {
    for (std::size_t k = 0; k < covforge_check_count(); ++k) std::cout << covforge_check_id(k) << "\n";
    return 0;
  }
  if (errata) return print_owned(covforge_errata_json);
  if (constants) return print_owned(covforge_constants_json);

  covforge_config* raw = nullptr;
  if (covforge_config_new(&raw) != COVFORGE_OK) return usage(covforge_last_error());
  std::unique_ptr<covforge_config, ConfigDeleter> cfg(raw);

  const std::pair<const char*, double> tolerances[] = {{"track", tol_track},     {"dedup", tol_dedup},
                                                       {"rank", tol_rank},       {"cluster", tol_cluster},
                                                       {"support", tol_support}, {"simple", tol_simple}};
  bool ok = covforge_config_set_filter(cfg.get(), filter.c_str()) == COVFORGE_OK &&
            covforge_config_set_seed(cfg.get(), seed) == COVFORGE_OK &&
            covforge_config_set_format(cfg.get(), format.c_str()) == COVFORGE_OK &&
            covforge_config_set_jobs(cfg.get(), jobs, track_jobs) == COVFORGE_OK &&
            covforge_config_set_sample_r(cfg.get(), sample_r[0].c_str(), sample_r[1].c_str(), sample_r[2].c_str()) ==
                COVFORGE_OK &&
            covforge_config_set_eps(cfg.get(), eps) == COVFORGE_OK &&
            covforge_config_set_timing(cfg.get(), no_timing ? 0 : 1) == COVFORGE_OK &&
            covforge_config_set_verbose(cfg.get(), verbose ? 1 : 0) == COVFORGE_OK;
  for (const auto& [name, value] : tolerances)
    ok = ok && covforge_config_set_tolerance(cfg.get(), name, value) == COVFORGE_OK;
  if (!ok) return usage(covforge_last_error());

  covforge_report* report_raw = nullptr;
  const covforge_status status = covforge_run(cfg.get(), &report_raw);
  if (status == COVFORGE_USAGE) return usage(covforge_last_error());
  if (status != COVFORGE_OK) {
    std::cerr << "verify: " << covforge_last_error() << "\n";
    return 1;
  }
  std::unique_ptr<covforge_report, ReportDeleter> report(report_raw);
  std::fputs(covforge_report_render(report.get()), stdout);
  return covforge_report_exit_code(report.get());
}
