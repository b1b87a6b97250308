#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "ihc/ihc.h"
#include "ihc/report.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(IHC_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(IHC_FIXTURE_DIR) + "/" + name + ".cx"; }

}  // namespace

TEST_CASE("cohomology tables") {
  auto r = run("cohomology --space " + fixture("cone_sphere1") + " --perversity 'gm 0 0 0' --ring q");
  CHECK(r.code == 0);
  CHECK(r.out == "H^0=Q^1, H^1=0, H^2=0\n");
  r = run("cohomology --space " + fixture("sphere2") + " --ring z");
  CHECK(r.out == "H^0=Z^1, H^1=0, H^2=Z^1\n");
  r = run("cohomology --space " + fixture("susp_torus") + " --perversity top --ring q");
  CHECK(r.out == "H^0=Q^1, H^1=Q^2, H^2=0, H^3=Q^1\n");
}

TEST_CASE("cohomology is deterministic") {
  const std::string args = "cohomology --fixture susp_torus --perversity zero --ring z --json";
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("json reports carry the schema version") {
  const auto r = run("cohomology --fixture cone_sphere1 --json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "ihc-report");
  CHECK(j["version"] == ihc::kSchemaVersion);
  CHECK(j["groups"].size() == 3);
  CHECK(j["groups"][0]["rank"] == 1);
}

TEST_CASE("input errors exit 1") {
  CHECK(run("cohomology --space /nonexistent.cx").code == 1);
  CHECK(run("cohomology --fixture cone_sphere1 --ring r").code == 1);
  CHECK(run("cohomology --fixture cone_sphere1 --perversity 'gm 0 0 5'").code == 1);
  CHECK(run("cohomology").code == 1);
  CHECK(run("frobnicate").code == 1);
  const std::string bad = std::string(IHC_FIXTURE_DIR) + "/../build_bad_input.cx";
  std::ofstream(bad) << "dim 1\nvertex a 1\nsimplex a a\n";
  CHECK(run("cohomology --space " + bad).code == 1);
  std::remove(bad.c_str());
}

TEST_CASE("compare") {
  auto r = run("compare ordinary --fixture susp_torus --perversity zero --ring q");
  CHECK(r.code == 0);
  CHECK(r.out.find("isomorphism in every degree") != std::string::npos);
  r = run("compare dual-tame --fixture cone_sphere1 --perversity 'gm 0 0 0' --ring q --json");
  CHECK(nlohmann::json::parse(r.out)["iso"] == true);
  CHECK(run("compare regular --fixture cone_sphere1 --perversity zero").code == 1);
  r = run("compare refinement --fixture fake_sphere --recode '0->2,1->2,2->2' --perversity zero --ring z");
  CHECK(r.code == 0);
  CHECK(r.out.find("isomorphism in every degree") != std::string::npos);
}

TEST_CASE("verify suites") {
  auto r = run("verify signs");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = run("verify signs --inject-sign-flip");
  CHECK(r.code == 2);
  CHECK(r.out.find("FAIL signs: differentials") != std::string::npos);
  CHECK(r.out.find("(degree ") != std::string::npos);
  CHECK(run("verify nonsense").code == 1);
}

TEST_CASE("strata and export") {
  auto r = run("strata --fixture susp_torus --json");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["strata"].size() == 3);
  r = run("export --fixture cone_sphere1");
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["formal_dimension"] == 2);
  CHECK(j["vertices"].size() == 4);
  r = run("export --fixture interval --differential 0");
  CHECK(r.out.rfind("1 2\n", 0) == 0);
}

TEST_CASE("shipped fixture files match the built-in corpus") {
  char* names = nullptr;
  REQUIRE(ihc_fixture_names(&names) == IHC_OK);
  std::string list = names;
  ihc_string_free(names);
  std::istringstream in(list);
  std::string name;
  while (std::getline(in, name)) {
    ihc_space* a = nullptr;
    ihc_space* b = nullptr;
    REQUIRE(ihc_space_fixture(name.c_str(), &a) == IHC_OK);
    REQUIRE_MESSAGE(ihc_space_load_file(fixture(name).c_str(), &b) == IHC_OK, name);
    char* ta = nullptr;
    char* tb = nullptr;
    ihc_space_text(a, &ta);
    ihc_space_text(b, &tb);
    CHECK_MESSAGE(std::string(ta) == std::string(tb), name);
    ihc_string_free(ta);
    ihc_string_free(tb);
    ihc_space_free(a);
    ihc_space_free(b);
  }
}

TEST_CASE("run requests round-trip") {
  const auto r = run("cohomology --fixture cone_sphere1 --perversity 'gm 0 0 0' --ring zp:3 --recode '0->2,1->2,2->2' "
                     "--json --dump-request");
  REQUIRE(r.code == 0);
  const auto parsed = ihc::RunRequest::from_json(r.out);
  CHECK(parsed.command == "cohomology");
  CHECK(parsed.space == "fixture:cone_sphere1");
  CHECK(parsed.perversity == "gm 0 0 0");
  CHECK(parsed.ring == "zp:3");
  CHECK(parsed.recoding == std::optional<std::string>("0->2,1->2,2->2"));
  CHECK(parsed.json);
  CHECK(ihc::RunRequest::from_json(parsed.to_json()) == parsed);
  CHECK_THROWS_AS(ihc::RunRequest::from_json("{\"command\": 3}"), ihc::InputError);
}

TEST_CASE("C API status codes") {
  ihc_space* s = nullptr;
  CHECK(ihc_space_load_text("dim 1; vertex a 1; vertex a 1", &s) == IHC_ERR_INPUT);
  CHECK(std::string(ihc_last_error()).find("duplicate") != std::string::npos);
  REQUIRE(ihc_space_fixture("cone_sphere1", &s) == IHC_OK);
  char* out = nullptr;
  CHECK(ihc_compare(s, "regular", "zero", "q", nullptr, 0, &out) == IHC_ERR_PRECONDITION);
  CHECK(ihc_compare(s, "ordinary", "zero", "q", nullptr, 0, &out) == IHC_OK);
  CHECK(ihc_last_compare_iso() == 1);
  ihc_string_free(out);
  CHECK(ihc_cohomology(nullptr, "zero", "q", 0, &out) == IHC_ERR_INPUT);
  CHECK(ihc_space_dimension(s) == 2);
  CHECK(ihc_space_stratum_count(s) == 2);
  ihc_space_free(s);
}
