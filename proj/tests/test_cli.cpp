#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with stderr discarded; stdout is captured.
Run run(const std::string& args) {
  const std::string cmd = std::string(NZETA_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(NZETA_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("nzeta_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("pair") {
  auto r = run("pair --num 'x^3 - x*y' --den y --vars x,y");
  CHECK(r.code == 0);
  CHECK(r.out == "zeta0 = (1-t)^-1\nzetaInf = 1\n");

  r = run("pair --num 'x*y*z + x^7 + y^6 + z^5' --den 'x^4 + y^4 + z^4'");
  CHECK(r.code == 0);
  CHECK(r.out == "zeta0 = (1-t)(1-t^2)(1-t^3)\nzetaInf = (1-t)^16\n");
}

TEST_CASE("pair --json and --trace") {
  auto r = run("pair --num 'x^3 - x*y' --den y --vars x,y --json --trace");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["zeta0"]["factors"] == nlohmann::json::parse(R"([{"m":1,"e":-1}])"));
  CHECK(j["zetaInf"]["factors"].empty());
  CHECK(j["assumptions"] == nlohmann::json::array({"newton-nondegenerate"}));
  CHECK(j["trace"].size() == 3);

  r = run("pair --num 'x*y*z + x^7 + y^6 + z^5' --den 'x^4 + y^4 + z^4' --trace");
  CHECK(r.code == 0);
  CHECK(r.out.find("(1,1,1)") != std::string::npos);
  CHECK(r.out.find("infinity") != std::string::npos);
}

TEST_CASE("powerdenom") {
  auto r = run("powerdenom --num 'x0^2 + x1^3' --degree 1 --axis x0");
  CHECK(r.code == 0);
  CHECK(r.out == "zeta0 = (1-t)(1-t^3)^-1\nzetaInf = 1\n");
  r = run("powerdenom --num 'x0^2 + x1^3' --degree 9 --axis x0 --vars x0,x1");
  CHECK(r.code == 0);
  CHECK(r.out.find("(1-t^7)") != std::string::npos);
  CHECK(run("powerdenom --num 'x0^2' --degree 0 --axis x0").code == 2);
  CHECK(run("powerdenom --num 'x0^2' --degree 2 --axis q --vars x0,x1").code == 2);
}

TEST_CASE("strata subcommands") {
  auto r = run("acampo " + data("acampo_simple.json"));
  CHECK(r.code == 0);
  CHECK(r.out == "zeta0 = (1-t)^3\nzetaInf = 1\n");
  r = run("acampo --json " + data("acampo_simple.json"));
  CHECK(nlohmann::json::parse(r.out)["assumptions"].empty());

  r = run("partial " + data("example2_partial.json"));
  CHECK(r.code == 0);
  CHECK(r.out == "zeta0 = (1-t)(1-t^2)(1-t^3)\nzetaInf = (1-t)^16\n");
}

TEST_CASE("mixvol") {
  auto r = run("mixvol " + data("mixvol_segments.json"));
  CHECK(r.code == 0);
  CHECK(r.out == "1/2 (oracle: 1/2)\n");
}

TEST_CASE("input errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("pair --num x").code == 2);
  CHECK(run("pair --num 'x^-1' --den y --vars x,y").code == 2);
  CHECK(run("pair --num 'x + w' --den y --vars x,y").code == 2);
  CHECK(run("pair --num 1 --den y --vars x,y").code == 2);
  CHECK(run("acampo /nonexistent/strata.json").code == 2);
  CHECK(run("acampo " + temp_file("bad.json", "{not json")).code == 2);
  CHECK(run("partial " + temp_file("schema.json", R"({"strata":[{"zeta0":{"factors":[]},"chi":1}]})")).code == 2);
  CHECK(run("mixvol " + temp_file("mv.json", R"({"dim":2,"polytopes":[[[0,0]]]})")).code == 2);
}

TEST_CASE("results go to stdout only") {
  auto r = run("pair --num 'x^-1' --den y --vars x,y");
  CHECK(r.out.empty());
}
