#include "catch_amalgamated.hpp"

#include "ncgalois/suites.hpp"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

using namespace ncg;
using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the CLI with stderr folded into the captured output.
Run cli(const std::string& args) {
  std::string cmd = std::string(NCGALOIS_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

SuiteOptions quiet() {
  SuiteOptions o;
  o.timing = false;
  return o;
}

}  // namespace

TEST_CASE("suite names", "[suites]") {
  const auto& names = suite_names();
  CHECK(names.size() == 10);
  CHECK(names.front() == "relations");
  CHECK(names.back() == "erratum");
  CHECK_THROWS_AS(run_suite("nope", quiet()), std::invalid_argument);
}

TEST_CASE("JSON report schema", "[suites]") {
  SuiteReport rep = run_suite("relations", quiet());
  json j = json::parse(render_json(rep));
  CHECK(j["suite"] == "relations");
  CHECK(j["params"]["degree"] == 3);
  CHECK(j["params"]["seed"] == 0);
  CHECK(j["params"]["backend"] == "symbolic");
  REQUIRE(j["checks"].is_array());
  REQUIRE(j["checks"].size() == rep.checks.size());
  for (const auto& c : j["checks"]) {
    CHECK(c["id"].get<std::string>().rfind("relations/", 0) == 0);
    CHECK(c["anchor"].is_string());
    CHECK(c["status"] == "pass");
    CHECK(c["ms"] == 0);
  }
  CHECK(rep.find("relations/x1#1") != nullptr);
  CHECK(rep.find("relations/x1#1")->anchor == "Eq (x1)");
}

TEST_CASE("reports are deterministic without timing", "[suites]") {
  SuiteOptions o = quiet();
  o.jobs = 2;
  CHECK(render_json(run_suite("galois", o)) == render_json(run_suite("galois", o)));
  CHECK(render_text(run_suite("action", o)) == render_text(run_suite("action", o)));
}

TEST_CASE("expected failures are reported as such", "[suites]") {
  SuiteReport rep = run_suite("erratum", quiet());
  CHECK(rep.ok());
  CHECK(rep.find("erratum/swapped-completion")->status == "expected-failure-observed");
  CHECK(rep.find("erratum/control-completion")->status == "pass");
}

TEST_CASE("the numeric backend uses the seeded point", "[suites]") {
  SuiteOptions o = quiet();
  o.numeric = true;
  o.seed = 9;
  SuiteReport rep = run_suite("relations", o);
  CHECK(rep.backend == "numeric");
  CHECK(rep.seed == 9);
  CHECK(rep.ok());
  CHECK(o.resolved_params().describe() == Params::random(9, 0).describe());
}

TEST_CASE("CLI exit codes", "[cli]") {
  CHECK(cli("--help").status == 0);
  CHECK(cli("check --suite relations --no-timing").status == 0);
  CHECK(cli("check --suite bogus").status == 2);
  CHECK(cli("check --degree 0").status == 2);
  CHECK(cli("frobnicate").status == 2);
  CHECK(cli("nf --algebra nope x").status == 2);
}

TEST_CASE("CLI normal forms", "[cli]") {
  CHECK(cli("nf --algebra frame_bundle 'x*a'").out == "x*a\n");
  CHECK(cli("nf --algebra frame_bundle 'a*x'").out == "p^-1*q^-1*x*a\n");
  CHECK(cli("nf --algebra quantum_plane 'x*y - p*y*x'").out == "0\n");
  CHECK(cli("nf --algebra gl2 'D*Dinv'").out == "1\n");
  Run bad = cli("nf --algebra gl2 'a*+'");
  CHECK(bad.status == 2);
  CHECK_THAT(bad.out, Catch::Matchers::StartsWith("<expression>:1:"));
}

TEST_CASE("CLI JSON is byte-identical across runs and job counts", "[cli]") {
  Run a = cli("check --suite hopf --format json --no-timing --jobs 1");
  Run b = cli("check --suite hopf --format json --no-timing --jobs 3");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  json j = json::parse(a.out);
  CHECK(j["suite"] == "hopf");
}

TEST_CASE("CLI erratum suite passes by observing the failure", "[cli]") {
  Run r = cli("check --suite erratum --no-timing");
  CHECK(r.status == 0);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("XFAIL  erratum/swapped-completion"));
}

TEST_CASE("CLI load reports on a DSL file", "[cli]") {
  std::string path = "cli_load_test.ncg";
  {
    std::ofstream f(path);
    f << "algebra twisted {\n  generators: u, v;\n  relations: u*v = 3*v*u;\n}\n"
         "morphism m : twisted -> twisted {\n  u |-> 2*u;\n  v |-> v;\n}\n";
  }
  Run ok = cli("load " + path);
  CHECK(ok.status == 0);
  CHECK_THAT(ok.out, Catch::Matchers::ContainsSubstring("algebra twisted"));
  {
    std::ofstream f(path);
    f << "algebra broken {\n  generators: u;\n  relations: u*w = u;\n}\n";
  }
  Run bad = cli("load " + path);
  CHECK(bad.status == 2);
  CHECK_THAT(bad.out, Catch::Matchers::StartsWith(path + ":3:"));
  std::remove(path.c_str());
}
