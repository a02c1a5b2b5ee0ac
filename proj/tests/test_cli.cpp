// End-to-end tests of the eqcut executable: output contracts and exit codes.

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "eqcut/report_io.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(EQCUT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "eqcut_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

using eqcut::Json;

TEST_CASE("cohomology command") {
  auto r = run("cohomology 2:0");
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["h0"].dump() == R"({"0":1,"1":1,"2":1})");
  CHECK(j["h1"].dump() == "{}");
  CHECK(j["n"] == 1);

  CHECK(Json::parse(run("cohomology 0:0").out)["h0"].dump() == R"({"0":1})");
  CHECK(Json::parse(run("cohomology -3:0").out)["h1"].dump() == R"({"-2":1,"-1":1})");
  CHECK(run("cohomology 2-0").code == 2);
  CHECK(run("cohomology").code == 2);
}

TEST_CASE("cut command") {
  auto j = Json::parse(run("cut 2:2").out);
  CHECK(j["plus"] == "2:0");
  CHECK(j["minus"] == "0:2");
  CHECK(j["red_dims"].dump() == "[1,0]");
  CHECK(j["cut_cohomology"]["h0"].dump() == R"({"1":1,"2":1})");

  auto trivial = Json::parse(run("cut 0:0").out);
  CHECK(trivial["plus"] == "0:0");
  CHECK(trivial["minus"] == "0:0");

  auto r2 = Json::parse(run("cut 3:1,0:-2").out);
  CHECK(r2["plus"] == "3:0,0:0");
  CHECK(r2["minus"] == "0:1,0:-2");
  CHECK(r2["red_dims"].dump() == "[2,0]");
}

TEST_CASE("verify command") {
  auto r = run("verify 3:3 --checks morse");
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["results"][0][0]["witness"].dump() == R"([{"0":1,"1":1,"2":1}])");

  CHECK(run("verify 0:0 --checks all").code == 0);
  auto mcut = Json::parse(run("verify 2:2 --checks mcut").out);
  CHECK(mcut["results"][0][0]["passed"] == true);
  CHECK(mcut["results"][0][0]["witness"].dump() == R"([{"1":1}])");

  // Weights this large overflow: the check fails instead of aborting.
  CHECK(run("verify 9223372036854775807:9223372036854775807 --checks morse").code == 1);
  CHECK(run("verify 0:0 --checks nonsense").code == 2);
  CHECK(run("verify 0:0 --format xml").code == 2);
}

TEST_CASE("sweep command") {
  auto r = run("sweep --rp-range -2..2 --rq-range -2..2 --checks all");
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["grid"].size() == 25);
  for (const auto& [name, tally] : j["summary"].items()) {
    CHECK(tally["passed"] == 25);
    CHECK(tally["failed"] == 0);
  }

  SUBCASE("byte-stable across runs and thread counts") {
    auto again = run("sweep --rp-range -2..2 --rq-range -2..2 --checks all --threads 3");
    CHECK(again.out == r.out);
  }

  SUBCASE("single point matches verify") {
    CHECK(run("sweep --rp-range 3..3 --rq-range 3..3 --checks morse").out == run("verify 3:3 --checks morse").out);
  }

  SUBCASE("csv") {
    auto csv = run("sweep --rp-range 0..0 --rq-range 0..0 --checks gluing --format csv");
    CHECK(csv.out.rfind("r_P,r_Q,check_id,passed,witness\n", 0) == 0);
    CHECK(csv.out == "r_P,r_Q,check_id,passed,witness\n0,0,gluing,true,\n");
  }

  SUBCASE("bad ranges") {
    CHECK(run("sweep --rp-range 2..-2 --rq-range 0..0").code == 2);
    CHECK(run("sweep --rp-range 0..0").code == 2);
    CHECK(run("sweep --rp-range x --rq-range 0..0").code == 2);
  }

  SUBCASE("timestamps only on request") {
    CHECK(r.out.find("generated_at") == std::string::npos);
    auto stamped = run("sweep --rp-range 0..0 --rq-range 0..0 --checks gluing --timestamps");
    CHECK(stamped.out.find("generated_at") != std::string::npos);
  }

  SUBCASE("report file round trip") {
    const auto path = scratch_dir() / "sweep.json";
    auto w = run("sweep --rp-range -1..1 --rq-range -1..1 --out " + path.string());
    CHECK(w.code == 0);
    CHECK(w.out.empty());
    const auto text = slurp(path);
    const auto report = eqcut::sweep_report_from_json(Json::parse(text));
    CHECK(eqcut::dump(eqcut::to_json(report)) == text);
  }
}

TEST_CASE("sweep from a config file") {
  const auto dir = scratch_dir();
  const auto cfg = dir / "run.json";
  const auto out = dir / "run.md";
  {
    std::ofstream f(cfg);
    f << R"({"bundles": ["2:2", "3:1,0:-2"], "grid": {"rp_range": "-1..1", "rq_range": "-1..1"},
             "checks": ["all"], "output": {"path": ")"
      << out.string() << R"(", "format": "md"}})";
  }
  auto r = run("sweep --config " + cfg.string());
  CHECK(r.code == 0);
  const auto md = slurp(out);
  CHECK(md.find("Points: 11") != std::string::npos);
  CHECK(md.find("| oracle | 11 | 0 |") != std::string::npos);

  const auto bad = dir / "bad.json";
  {
    std::ofstream f(bad);
    f << R"({"bundles": ["0:0"], "checks": ["unknown"]})";
  }
  CHECK(run("sweep --config " + bad.string()).code == 2);
  CHECK(run("sweep --config " + (dir / "missing.json").string()).code == 2);
}

TEST_CASE("equality-region command") {
  auto r = run("equality-region --rp-range -1..1 --rq-range -1..1 --format json");
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  // Hand check: on [-1, 1]^2 every cut has the same cohomology as M, and at
  // (-1, 1) the node's extra H^1 cancels the red term, so Q' = 0 there.
  CHECK(j["q_zero_set"].dump() == R"(["-1:-1","-1:0","-1:1","0:-1","0:0","0:1","1:-1","1:0","1:1"])");
  CHECK(j["q_prime_zero_set"].dump() == R"(["-1:1"])");
  CHECK(j["claimed_region"].dump() == R"(["0:-1","0:0","1:-1","1:0"])");

  auto single = run("equality-region --rp-range 0..0 --rq-range 0..0");
  CHECK(single.code == 0);
  CHECK(single.out.find("| 0 | 0 |") != std::string::npos);
  CHECK(run("equality-region --rp-range 1..0 --rq-range 0..0").code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--help").code == 0);
}
