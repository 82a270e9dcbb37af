// Exercises the shared library through its C header only.
#include "doctest.h"

#include <cstring>
#include <fstream>
#include <string>

#include <json.hpp>

#include "covforge.h"

namespace {

struct Config {
  covforge_config* p = nullptr;
  Config() { REQUIRE(covforge_config_new(&p) == COVFORGE_OK); }
  ~Config() { covforge_config_free(p); }
};

std::string take(covforge_status (*producer)(char**)) {
  char* s = nullptr;
  REQUIRE(producer(&s) == COVFORGE_OK);
  std::string out = s;
  covforge_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("check ids") {
  CHECK(covforge_check_count() == 23);
  CHECK(std::string(covforge_check_id(0)) == "symbolic/basis");
  CHECK(covforge_check_id(covforge_check_count()) == nullptr);
}

TEST_CASE("configuration errors carry messages") {
  Config cfg;
  CHECK(covforge_config_set_format(cfg.p, "xml") == COVFORGE_USAGE);
  CHECK(std::strstr(covforge_last_error(), "xml") != nullptr);
  CHECK(covforge_config_set_tolerance(cfg.p, "track", -1.0) == COVFORGE_USAGE);
  CHECK(covforge_config_set_tolerance(cfg.p, "bogus", 1.0) == COVFORGE_USAGE);
  CHECK(covforge_config_set_sample_r(cfg.p, "1", "2/0", "3") == COVFORGE_USAGE);
  CHECK(covforge_config_set_jobs(cfg.p, 0, 1) == COVFORGE_USAGE);
  CHECK(covforge_config_set_eps(cfg.p, 0.0) == COVFORGE_USAGE);
  CHECK(covforge_config_set_seed(nullptr, 1) == COVFORGE_INVALID_ARGUMENT);
}

TEST_CASE("unknown filter is a usage error") {
  Config cfg;
  REQUIRE(covforge_config_set_filter(cfg.p, "nonexistent") == COVFORGE_OK);
  covforge_report* rep = nullptr;
  CHECK(covforge_run(cfg.p, &rep) == COVFORGE_USAGE);
  CHECK(rep == nullptr);
}

TEST_CASE("run and inspect a report") {
  Config cfg;
  REQUIRE(covforge_config_set_filter(cfg.p, "symbolic/group_structure,property/field_axioms") == COVFORGE_OK);
  REQUIRE(covforge_config_set_format(cfg.p, "json") == COVFORGE_OK);
  REQUIRE(covforge_config_set_timing(cfg.p, 0) == COVFORGE_OK);
  covforge_report* rep = nullptr;
  REQUIRE(covforge_run(cfg.p, &rep) == COVFORGE_OK);
  CHECK(covforge_report_size(rep) == 2);
  CHECK(covforge_report_exit_code(rep) == 0);
  CHECK(std::string(covforge_report_check_id(rep, 1)) == "property/field_axioms");
  covforge_check_status st = COVFORGE_CHECK_FAIL;
  CHECK(covforge_report_check_status(rep, 0, &st) == COVFORGE_OK);
  CHECK(st == COVFORGE_CHECK_PASS);
  CHECK(covforge_report_check_status(rep, 2, &st) == COVFORGE_INVALID_ARGUMENT);
  const auto doc = nlohmann::json::parse(covforge_report_render(rep));
  CHECK(doc["summary"]["passed"] == 2);
  CHECK(doc["checks"][0]["millis"] == 0.0);
  covforge_report_free(rep);
}

TEST_CASE("ledger and constants match the files in data/") {
  const auto errata = nlohmann::json::parse(take(covforge_errata_json));
  const auto constants = nlohmann::json::parse(take(covforge_constants_json));
  CHECK(errata.size() == 46);
  CHECK(constants["action_convention"] == "f -> f o g^-1");
  CHECK(constants["transvectant_scalars"]["s6"] == "1/2");
  std::ifstream ef(COVFORGE_DATA_DIR "/errata.json"), cf(COVFORGE_DATA_DIR "/constants.json");
  REQUIRE(ef.good());
  REQUIRE(cf.good());
  CHECK(nlohmann::json::parse(ef) == errata);
  CHECK(nlohmann::json::parse(cf) == constants);
}
