#include "doctest.h"

#include <json.hpp>

#include "covforge/harness.hpp"

using namespace covforge;

TEST_CASE("registry order is symbolic, property, numeric") {
  const auto& reg = registry();
  REQUIRE(reg.size() == 23);
  CHECK(reg.front().id == "symbolic/basis");
  CHECK(reg.back().id == "numeric/seed_stability");
  std::string last_kind = "symbolic";
  for (const auto& c : reg) {
    if (c.kind != last_kind) CHECK((last_kind == "symbolic" ? c.kind == "property" : c.kind == "numeric"));
    last_kind = c.kind;
  }
}

TEST_CASE("selection by comma-separated globs") {
  RunConfig cfg;
  cfg.filter = "symbolic/*";
  CHECK(select(cfg).size() == 15);
  cfg.filter = "numeric/fiber_zero,property/*";
  CHECK(select(cfg).size() == 5);
  cfg.filter = "nonexistent";
  CHECK_THROWS_AS(select(cfg), UsageError);
}

TEST_CASE("invalid configurations are usage errors") {
  RunConfig cfg;
  cfg.num.tol.track = 0.0;
  CHECK_THROWS_AS(validate(cfg), UsageError);
  cfg = RunConfig{};
  cfg.num.eps = 0.0;
  CHECK_THROWS_AS(validate(cfg), UsageError);
  cfg = RunConfig{};
  cfg.jobs = 0;
  CHECK_THROWS_AS(validate(cfg), UsageError);
}

TEST_CASE("json report is reproducible with timing off") {
  RunConfig cfg;
  cfg.filter = "symbolic/strata,property/transvectant_symmetry";
  cfg.format = Format::json;
  cfg.timing = false;
  const std::string first = render(run(cfg), cfg);
  cfg.jobs = 2;
  const std::string second = render(run(cfg), cfg);
  CHECK(first == second);
  const auto doc = nlohmann::ordered_json::parse(first);
  const auto& check = doc["checks"][0];
  std::vector<std::string> keys;
  for (auto it = check.begin(); it != check.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"check_id", "anchor", "status", "residual_count", "details", "millis"});
  CHECK(check["check_id"] == "symbolic/strata");
  CHECK(doc["summary"]["failed"] == 0);
}

TEST_CASE("a sample point outside R0 fails the partition check") {
  RunConfig cfg;
  cfg.filter = "numeric/stratum_partition";
  cfg.sample_r = {Rat(10), Rat(1), Rat(1)};
  const Report rep = run(cfg);
  REQUIRE(rep.results.size() == 1);
  CHECK(rep.results[0].status == Status::fail);
  CHECK(rep.exit_code() == 1);
}
