#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "pdl/closedform.hpp"
#include "pdl/format.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const std::string tag = std::to_string(counter++);
  const std::filesystem::path out = "cli_out_" + tag + ".txt";
  const std::filesystem::path err = "cli_err_" + tag + ".txt";
  const std::string cmd = std::string("\"") + PDLCAP_BIN + "\" " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int rc = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  std::filesystem::remove(out);
  std::filesystem::remove(err);
  return r;
}

}  // namespace

TEST_CASE("point JSON carries exactly the six report keys") {
  const RunResult r = run("point --ph 0.7 --pv 0.2 --n 4 --format json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.is_object());
  CHECK(j.size() == 6);
  for (const char* key :
       {"classification", "q1", "w_n", "benefit", "qn_lower", "doubling_bound"})
    CHECK(j.contains(key));

  // 17-digit serialization round-trips the library doubles exactly
  const pdl::ChannelParams p(0.7, 0.2);
  const pdl::SuperadditivityReport report = pdl::superadditivity_report(p, 4);
  CHECK(j["classification"].get<std::string>() == "neither");
  CHECK(j["q1"].get<double>() == report.q1);
  CHECK(j["w_n"].get<double>() == report.w_n);
  CHECK(j["benefit"].get<double>() == report.benefit);
  CHECK(j["qn_lower"].get<double>() == report.qn_lower);
}

TEST_CASE("point JSON re-serializes byte-identically") {
  const RunResult first = run("point --ph 0.7 --pv 0.2 --n 4 --format json");
  const RunResult second = run("point --ph 0.7 --pv 0.2 --n 4 --format json");
  REQUIRE(first.code == 0);
  CHECK(first.out == second.out);

  const json j = json::parse(first.out);
  pdl::JsonWriter w;
  w.begin_object();
  w.key("classification").value(j["classification"].get<std::string>());
  w.key("q1").value(j["q1"].get<double>());
  w.key("w_n").value(j["w_n"].get<double>());
  w.key("benefit").value(j["benefit"].get<double>());
  w.key("qn_lower").value(j["qn_lower"].get<double>());
  w.key("doubling_bound").value(j["doubling_bound"].get<double>());
  w.end_object();
  CHECK(w.str() + "\n" == first.out);
}

TEST_CASE("point text output lists the report fields") {
  const RunResult r = run("point --ph 0.7 --pv 0.2 --n 4");
  REQUIRE(r.code == 0);
  for (const char* key :
       {"classification:", "q1:", "w_n:", "benefit:", "qn_lower:", "doubling_bound:"})
    CHECK(r.out.find(key) != std::string::npos);
  CHECK(r.out.find("neither") != std::string::npos);
}

TEST_CASE("antidegradable point reports zero benefits") {
  const RunResult r = run("point --ph 0.3 --pv 0.4 --n 5 --format json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["classification"].get<std::string>() == "antidegradable");
  CHECK(j["q1"].get<double>() == 0.0);
  CHECK(j["benefit"].get<double>() == 0.0);
  CHECK(j["qn_lower"].get<double>() == 0.0);
  CHECK(j["doubling_bound"].get<double>() == 0.0);
}

TEST_CASE("bad flags exit with the usage code and name the flag") {
  const RunResult r = run("point --ph 1.2 --pv 0.2 --n 4");
  CHECK(r.code == 2);
  CHECK(r.err.find("--ph") != std::string::npos);

  CHECK(run("point --ph 0.7 --pv 0.2 --n 0").code == 2);
  CHECK(run("point --ph 0.7 --pv 0.2 --n 4 --format svg").code == 2);
  CHECK(run("region --res 2001 --n-list 2").code == 2);
  CHECK(run("nonsense").code == 2);
}

TEST_CASE("region CSV is deterministic with the documented shape") {
  const RunResult a = run("region --res 3 --n-list 2 --format csv");
  const RunResult b = run("region --res 3 --n-list 2 --format csv");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(static_cast<int>(std::count(a.out.begin(), a.out.end(), '\n')) == 1 + 9);
  CHECK(a.out.rfind("p_h,p_v,classification,w_2,benefit_2,superadditive_2\n", 0) == 0);
}

TEST_CASE("region CSV to file has 1681 data rows at res 41") {
  const std::filesystem::path path = "cli_region41.csv";
  const RunResult r =
      run("region --res 41 --n-list 2,3,10 --format csv --out " + path.string());
  REQUIRE(r.code == 0);
  const std::string body = slurp(path);
  std::filesystem::remove(path);
  CHECK(static_cast<int>(std::count(body.begin(), body.end(), '\n')) == 1 + 41 * 41);
}

TEST_CASE("region SVG contour for n = 2 sits on the antidiagonal") {
  const RunResult r = run("region --res 21 --n-list 2 --format svg");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("<svg", 0) == 0);
  std::size_t at = 0;
  int circles = 0;
  while ((at = r.out.find("<circle cx=\"", at)) != std::string::npos) {
    at += 12;
    const double cx = std::strtod(r.out.c_str() + at, nullptr);
    const std::size_t cy_at = r.out.find("cy=\"", at) + 4;
    const double cy = std::strtod(r.out.c_str() + cy_at, nullptr);
    // p_h + p_v = 1 maps to cx == cy in viewport coordinates
    CHECK(std::abs(cx - cy) < 0.6);
    ++circles;
  }
  CHECK(circles >= 21);
}

TEST_CASE("boundary CSV rows carry the requested n") {
  const RunResult r = run("boundary --n 2 --res 11 --format csv");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("n,p_h,p_v\n", 0) == 0);
  CHECK(r.out.find("\n2,") != std::string::npos);
}

TEST_CASE("unwritable output path exits with the I/O code") {
  const RunResult r =
      run("region --res 3 --n-list 2 --out /nonexistent-dir-xyz/out.csv");
  CHECK(r.code == 3);
}

TEST_CASE("q1, wn and bound subcommands") {
  const RunResult q = run("q1 --ph 0.7 --pv 0.2 --format json");
  REQUIRE(q.code == 0);
  const json jq = json::parse(q.out);
  CHECK(jq["degenerate"].get<bool>() == false);
  CHECK(jq["q1"].get<double>() == pdl::solve_q1(pdl::ChannelParams(0.7, 0.2)).q1);

  const RunResult w = run("wn --ph 0.7 --pv 0.3 --n 3 --format json");
  REQUIRE(w.code == 0);
  CHECK(json::parse(w.out)["w_n"].get<double>() ==
        pdl::w_n(pdl::ChannelParams(0.7, 0.3), 3));

  const RunResult b = run("bound --ph 0.7 --pv 0.2 --mmax 4 --format json");
  REQUIRE(b.code == 0);
  CHECK(json::parse(b.out)["m_max"].get<int>() == 4);
}

TEST_CASE("verify fast passes") {
  const RunResult r = run("verify --level fast --seed 7");
  CHECK(r.code == 0);
  CHECK(r.out.find("verification:") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("verify full passes") {
  const RunResult r = run("verify --level full --seed 11");
  CHECK(r.code == 0);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
}
