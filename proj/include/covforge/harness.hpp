// Check registry, selection by glob, concurrent execution and report rendering.
#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "covforge/check.hpp"
#include "covforge/numsolve.hpp"

namespace covforge {

enum class Format { text, json };

struct RunConfig {
  std::string filter = "*";
  num::NumConfig num;  // seed, tolerances, eps, threads per tracker
  std::array<Rat, 3> sample_r = {Rat(10), make_rat(1, 2), make_rat(1, 3)};
  Format format = Format::text;
  unsigned jobs = 1;   // checks run concurrently
  bool timing = true;  // false drops wall times from reports
  bool verbose = false;  // text format: details of passing checks too
};

/// Bad filter or malformed configuration; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CheckSpec {
  std::string id;
  std::string kind;  // symbolic, property, numeric
  std::function<CheckResult(const RunConfig&)> run;
};

/// All checks, symbolic first, then property suites, then numeric.
const std::vector<CheckSpec>& registry();
bool glob_match(const std::string& pattern, const std::string& id);
/// Throws UsageError when nothing matches or the config is invalid.
std::vector<const CheckSpec*> select(const RunConfig& cfg);

struct Report {
  std::vector<CheckResult> results;  // registry order
  std::size_t passed = 0, failed = 0, skipped = 0;
  double millis = 0.0;
  int exit_code() const { return failed == 0 ? 0 : 1; }
};

/// Runs the selected checks; a check that throws is reported as failed.
Report run(const RunConfig& cfg);
/// Called as each check finishes, in completion order.
Report run(const RunConfig& cfg, const std::function<void(const CheckResult&)>& progress);

std::string render_text(const Report& report, const RunConfig& cfg);
std::string render_json(const Report& report, const RunConfig& cfg);
std::string render(const Report& report, const RunConfig& cfg);

void validate(const RunConfig& cfg);

}  // namespace covforge
