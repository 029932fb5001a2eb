#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "weyl/weyl.h"

using nlohmann::json;

namespace {

json run_json(weyl_report* rep) {
  json j = json::parse(weyl_report_json(rep));
  weyl_report_free(rep);
  return j;
}

}  // namespace

TEST_CASE("abi and options lifecycle") {
  CHECK(weyl_abi_version() == 1);

  weyl_options* opts = weyl_options_new();
  CHECK(weyl_options_set_primes(opts, 2147483647ull, 2147483629ull) == WEYL_OK);
  CHECK(weyl_options_set_primes(opts, 4, 6) == WEYL_ERR_USAGE);
  CHECK(std::string(weyl_last_error()).size() > 0);
  CHECK(weyl_options_set_exact(opts, 1) == WEYL_OK);
  CHECK(weyl_options_set_max_total_degree(opts, -1) == WEYL_ERR_USAGE);
  CHECK(weyl_options_set_truncation(opts, 3) == WEYL_OK);
  weyl_options_free(opts);
}

TEST_CASE("origin character through the C surface") {
  weyl_report* rep = nullptr;
  REQUIRE(weyl_character_origin(2, 2, 1, nullptr, &rep) == WEYL_OK);
  CHECK(weyl_report_passed(rep) == 1);
  json j = run_json(rep);
  CHECK(j["command"] == "character");
  CHECK(j["total"] == "5");
  CHECK(j["character"].size() == 3);
  CHECK(j["provenance"]["mode"] == "crosscheck");

  CHECK(weyl_character_origin(-1, 1, 1, nullptr, &rep) == WEYL_ERR_USAGE);
}

TEST_CASE("point characters through the C surface") {
  long long num[] = {0, 1};
  long long den[] = {1, 1};
  weyl_report* rep = nullptr;
  REQUIRE(weyl_character_points(num, den, 2, 1, nullptr, &rep) == WEYL_OK);
  json j = run_json(rep);
  CHECK(j["total"] == "4");

  // truncation below n is a usage error
  weyl_options* opts = weyl_options_new();
  weyl_options_set_truncation(opts, 1);
  CHECK(weyl_character_points(num, den, 2, 1, opts, &rep) == WEYL_ERR_USAGE);
  weyl_options_free(opts);

  CHECK(weyl_character_points(nullptr, nullptr, 2, 1, nullptr, &rep) == WEYL_ERR_USAGE);
}

TEST_CASE("verification and tables through the C surface") {
  weyl_report* rep = nullptr;
  REQUIRE(weyl_verify("martini", 1, -1, -1, 1, nullptr, &rep) == WEYL_OK);
  CHECK(weyl_report_passed(rep) == 1);
  json j = run_json(rep);
  CHECK(j["suite"] == "martini");
  CHECK(j["cases"].size() == 1);

  CHECK(weyl_verify("bogus", -1, -1, -1, -1, nullptr, &rep) == WEYL_ERR_USAGE);
  CHECK(weyl_verify(nullptr, -1, -1, -1, -1, nullptr, &rep) == WEYL_ERR_USAGE);

  REQUIRE(weyl_table("narayana", 3, -1, -1, nullptr, &rep) == WEYL_OK);
  json t = run_json(rep);
  CHECK(t["rows"].size() == 4);
  CHECK(t["rows"][2]["values"] == json::array({"1", "3", "1"}));
}

TEST_CASE("resource cap surfaces as a status code") {
  weyl_options* opts = weyl_options_new();
  weyl_options_set_max_total_degree(opts, 0);
  weyl_report* rep = nullptr;
  CHECK(weyl_character_origin(2, 1, 1, opts, &rep) == WEYL_ERR_RESOURCE);
  weyl_options_free(opts);
}
