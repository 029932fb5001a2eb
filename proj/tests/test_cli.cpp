#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <string>

using nlohmann::json;

namespace {

std::string cli_path() {
  const char* path = std::getenv("WEYL_CLI");
  REQUIRE(path != nullptr);
  return path;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  RunResult res;
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  int rc = pclose(pipe);
  res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

}  // namespace

TEST_CASE("json reports are byte-identical across runs, timing aside") {
  auto a = run("character --n 2 --d 2 --r 1 --format json");
  auto b = run("character --n 2 --d 2 --r 1 --format json");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  json ja = json::parse(a.out), jb = json::parse(b.out);
  ja.erase("timing_ms");
  jb.erase("timing_ms");
  CHECK(ja.dump() == jb.dump());
  CHECK(ja["total"] == "5");

  auto v1 = run("verify catalan --n 2 --format json");
  auto v2 = run("verify catalan --n 2 --format json");
  json jv1 = json::parse(v1.out), jv2 = json::parse(v2.out);
  jv1.erase("timing_ms");
  jv2.erase("timing_ms");
  CHECK(jv1.dump() == jv2.dump());
}

TEST_CASE("spec'd command examples") {
  auto c0 = run("character --n 0 --d 1 --r 1 --format json");
  CHECK(c0.exit_code == 0);
  CHECK(json::parse(c0.out)["total"] == "1");

  auto c3 = run("character --n 3 --d 1 --r 1 --format json");
  json j3 = json::parse(c3.out);
  CHECK(j3["total"] == "8");
  CHECK(j3["character"].size() == 4);

  auto tw = run("verify three-way --n 3 --r 1 --format json");
  CHECK(tw.exit_code == 0);
  CHECK(json::parse(tw.out)["passed"] == true);

  auto mt = run("verify martini --n 2 --m 2 --format json");
  CHECK(mt.exit_code == 0);

  auto cj = run("verify conjecture --n 2 --d 3 --format json");
  CHECK(cj.exit_code == 0);
  CHECK(json::parse(cj.out)["match"] == true);
}

TEST_CASE("exit status contract") {
  CHECK(run("character --n 1 --d 1 --r 1").exit_code == 0);
  CHECK(run("verify bogus").exit_code == 2);
  CHECK(run("character --n 1 --d 2 --r 1 --points 0").exit_code == 2);
  CHECK(run("character --n 2 --d 1 --r 1 --max-degree 0").exit_code == 3);
  CHECK(run("table catalan --n 4").exit_code == 0);
  CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("csv output shape") {
  auto t = run("table narayana --n 3 --format csv");
  CHECK(t.exit_code == 0);
  CHECK(t.out.rfind("n,values", 0) == 0);  // header first
  CHECK(t.out.find("1 3 1") != std::string::npos);

  auto c = run("character --n 2 --d 1 --r 1 --format csv");
  CHECK(c.out.rfind("composition,weight,dim", 0) == 0);
}
