#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "circnet/network.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int status = -1;
  std::string output;  // stdout + stderr interleaved
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CIRCNET_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (size_t got = fread(buf.data(), 1, buf.size(), pipe))
    r.output.append(buf.data(), got);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(CIRCNET_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("validate") {
  auto ok = run("validate " + fixture("fig1.json"));
  CHECK(ok.status == 0);
  CHECK(ok.output.find("ok: fig1") != std::string::npos);

  std::string bad_path = "/tmp/circnet_bad.json";
  std::ofstream(bad_path) << "{\"planar\": false}";
  CHECK(run("validate " + bad_path).status == 1);
  CHECK(run("validate /nonexistent.json").status == 1);
  CHECK(run("nonsense").status == 1);
}

TEST_CASE("minor text output matches the closed form") {
  auto r = run("minor " + fixture("fig1.json") + " --cols 1,5");
  CHECK(r.status == 0);
  CHECK(r.output.find("(a4*a5*f*w2*y2 + a4*a5*f*w2*y2*z1*z2*z3*z4) / (1 + ") == 0);

  auto checked =
      run("minor " + fixture("fig1.json") +
          " --cols 1,5 --reduced-check \"(a4*w2*f*y2*a5) / "
          "((1+w1*w2*w3*w4)*(1+y1*y2*y3*y4)+f*y2*y3*y4*g*w4*w1*w2)\"");
  CHECK(checked.status == 0);
  CHECK(checked.output.find("reduced form confirmed") != std::string::npos);

  auto rejected = run("minor " + fixture("fig1.json") +
                      " --cols 1,5 --reduced-check \"(a4) / (1)\"");
  CHECK(rejected.status == 2);

  auto spec = run("minor " + fixture("fig6.json") +
                  " --cols 2,4 --specialize a1=1,a2=2,c=1,d=1,e=1,f=1/2");
  CHECK(spec.status == 0);
  // M_12 = a1*f*a2 / (1+cdef) = (1 * 1/2 * 2) / (1 + 1/2) = 2/3
  CHECK(spec.output.find("value: 2/3") != std::string::npos);

  CHECK(run("minor " + fixture("fig1.json") + " --cols 1").status == 1);
}

TEST_CASE("minor warns when the flow formula is invalid") {
  auto r = run("minor " + fixture("fig6.json") + " --cols 2,3");
  CHECK(r.status == 0);
  CHECK(r.output.find("warning:") != std::string::npos);
  CHECK(r.output.find("determinant route") != std::string::npos);

  // Measurement-type minors carry no warning.
  auto m = run("minor " + fixture("fig6.json") + " --cols 2,4");
  CHECK(m.status == 0);
  CHECK(m.output.find("warning") == std::string::npos);
}

TEST_CASE("measure") {
  auto r = run("measure " + fixture("fig6.json") + " --from 1 --to 2 --series-degree 11");
  CHECK(r.status == 0);
  CHECK(r.output.find("(a1*a2*f) / (1 + c*d*e*f)") != std::string::npos);
  CHECK(r.output.find("series[<=11]: a1*a2*f - a1*a2*c*d*e*f^2 + a1*a2*c^2*d^2*e^2*f^3") !=
        std::string::npos);
}

TEST_CASE("flows and conservative") {
  auto f = run("flows " + fixture("fig1.json") + " --cols 1,5");
  CHECK(f.status == 0);
  CHECK(f.output.find("2 flow(s)") != std::string::npos);

  auto c = run("conservative " + fixture("fig1.json"));
  CHECK(c.status == 0);
  CHECK(c.output.find("10 conservative flow(s)") != std::string::npos);

  auto alt = run("flows " + fixture("fig1.json") + " --cols 1,5 --alternating");
  CHECK(alt.status == 0);
  CHECK(alt.output.find("2 flow(s)") != std::string::npos);
}

TEST_CASE("json mode emits valid json with the same polynomials") {
  auto text = run("minor " + fixture("fig1.json") + " --cols 1,5");
  auto as_json = run("minor " + fixture("fig1.json") + " --cols 1,5 --json");
  CHECK(as_json.status == 0);
  auto doc = nlohmann::json::parse(as_json.output);
  std::string combined =
      "(" + doc["numer"].get<std::string>() + ") / (" + doc["denom"].get<std::string>() + ")";
  CHECK(text.output.find(combined) == 0);
  CHECK(doc["route"] == "flow-formula");
}

TEST_CASE("reduce writes a perfectly oriented document plus a trace sidecar") {
  std::string tmp = "/tmp/circnet_reduced.json";
  // The four-star has a blowup vertex; build it here as a document.
  std::string star = "/tmp/circnet_star.json";
  std::ofstream(star) << R"({
    "name": "star4", "planar": true,
    "boundary": [{"id": "b1", "role": "source"}, {"id": "b2", "role": "sink"},
                  {"id": "b3", "role": "source"}, {"id": "b4", "role": "sink"}],
    "interior": ["v"],
    "edges": [{"id": "x1", "tail": "b1", "head": "v", "weight": "x1"},
              {"id": "x2", "tail": "v", "head": "b2", "weight": "x2"},
              {"id": "x3", "tail": "b3", "head": "v", "weight": "x3"},
              {"id": "x4", "tail": "v", "head": "b4", "weight": "x4"}],
    "rotation": {"v": [["x1", "head"], ["x2", "tail"], ["x3", "head"], ["x4", "tail"]]}
  })";
  auto r = run("reduce " + star + " -o " + tmp);
  CHECK(r.status == 0);

  circnet::Network reduced = circnet::load_network(tmp);
  CHECK(circnet::is_perfectly_oriented(reduced));
  CHECK(circnet::validate(reduced).empty());
  CHECK(reduced.edge("x1")->weight.str() == "2*x1");

  std::ifstream side(tmp + ".trace.json");
  REQUIRE(side.good());
  auto trace = nlohmann::json::parse(side);
  CHECK(trace["doubled_edges"].size() == 2);
  CHECK(trace["new_edges"].size() == 4);

  // The reduced closed form cross-checks against the original's value; its
  // walk series are ill-defined (unit-weight ring edges) and say so.
  auto closed = run("minor " + tmp + " --cols 2,4 --reduced-check \"2*x1*x2*x3*x4\"");
  CHECK(closed.status == 0);
  CHECK(closed.output.find("reduced form confirmed") != std::string::npos);
  auto series = run("verify " + tmp + " --cols 2,4 --degree 8");
  CHECK(series.status == 1);
  CHECK(series.output.find("ill-defined") != std::string::npos);
}

TEST_CASE("verify exits 0 on planar identities and 2 on the non-planar counterexample") {
  CHECK(run("verify " + fixture("fig1.json") + " --cols 2,3 --degree 12").status == 0);
  CHECK(run("verify " + fixture("fig6.json") + " --cols 1,3 --degree 10").status == 0);
  auto bad = run("verify " + fixture("fig6.json") + " --cols 2,3 --degree 10");
  CHECK(bad.status == 2);
  CHECK(bad.output.find("MISMATCH") != std::string::npos);
}

TEST_CASE("fuzz") {
  auto empty = run("fuzz --seed 1 --count 0 --degree 6");
  CHECK(empty.status == 0);
  CHECK(empty.output.empty());

  auto r = run("fuzz --seed 7 --count 8 --degree 7");
  CHECK(r.status == 0);
  int lines = 0;
  size_t pos = 0;
  while ((pos = r.output.find('\n', pos)) != std::string::npos) {
    ++pos;
    ++lines;
  }
  CHECK(lines >= 8);
  // Every line parses as a JSON object with the report fields.
  std::istringstream in(r.output);
  std::string line;
  while (std::getline(in, line)) {
    auto doc = nlohmann::json::parse(line);
    CHECK(doc.contains("case"));
    CHECK(doc["status"] == "pass");
  }
}

TEST_CASE("identical invocations are byte-identical") {
  for (auto* args : {"minor", "conservative"}) {
    std::string cmd = args == std::string("minor")
                          ? "minor " + fixture("fig1.json") + " --cols 2,5 --json"
                          : "conservative " + fixture("fig1.json");
    auto a = run(cmd);
    auto b = run(cmd);
    CHECK(a.status == b.status);
    CHECK(a.output == b.output);
  }
  auto f1 = run("fuzz --seed 3 --count 4 --degree 6");
  auto f2 = run("fuzz --seed 3 --count 4 --degree 6");
  CHECK(f1.output == f2.output);
}
