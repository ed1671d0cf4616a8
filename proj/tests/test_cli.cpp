#include <sstream>

#include "doctest.h"
#include "halphen_cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "halphen");
  std::ostringstream out, err;
  const int code = halphen::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kX = "t^3 - x^3 + y^2*z + 2*x*z^2 - z^3";

}  // namespace

TEST_CASE("check-surface") {
  auto r = run({"check-surface", "--surface", kX});
  CHECK(r.code == 0);
  CHECK(r.out.find("nonsingular: true") != std::string::npos);
  r = run({"check-surface", "--surface", "x^3 + y^3 + z^3 + x*y*z"});
  CHECK(r.code == 0);
  CHECK(r.out.find("nonsingular: false") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"check-surface"}).code == 2);
  CHECK(run({"check-surface", "--surface", "x^3 +* y"}).code == 2);
  CHECK(run({"check-surface", "--surface", "@/nonexistent/file"}).code == 2);
  auto r = run({"--json", "geiser", "--surface", kX, "--point", "x", "y", "z"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["error"] == "NotOnSurface");
  CHECK(run({"bertini", "--surface", kX, "--point", "y", "z", "t"}).code == 1);
}

TEST_CASE("JSON reports are stable") {
  const std::vector<std::string> args{"impose", "--surface", kX, "--degree", "2", "--point", "x", "z", "t", "--mult", "2", "--json"};
  auto a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["count"] == 10 - 3);
  CHECK(j["sections"].size() == 7);
}

TEST_CASE("halphen and base-locus") {
  auto r = run({"--json", "halphen", "--surface", kX, "--G", "t", "--point", "x^2 + x*z - z^2", "y", "t", "--point", "x",
                "z", "t", "--mu", "2", "--case", "B"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 2);
  const std::string f1 = j["sections"][0], f2 = j["sections"][1];
  r = run({"--json", "untwist", "--surface", kX, "--f1", f1, "--f2", f2});
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "halphen_with_centres");
  CHECK(j["involutions"].empty());
  CHECK(j["nfi"]["holds"] == true);
  CHECK(j["base_points"].size() == 2);
}

TEST_CASE("geiser at a point on an Eckardt line") {
  auto r = run({"--json", "geiser", "--surface", "x^3 + y^3 + z^3 + 2*t^3", "--point", "x + y", "z", "t"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "geiser");
  CHECK(j["equations"] == nlohmann::json::array({"y", "x", "z", "t"}));
}

TEST_CASE("image of a projection") {
  auto r = run({"--json", "image", "--surface", kX, "--map", "x", "y", "z", "t"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["generators"].size() == 1);
}
