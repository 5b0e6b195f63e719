// End-to-end checks of the command-line surface: exit codes, artifact shape,
// config round-trip, determinism.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

std::string tmpdir() {
  static int counter = 0;
  std::string d = "cli_test_" + std::to_string(counter++);
  std::system(("rm -rf " + d + " && mkdir -p " + d).c_str());
  return d;
}

int run(const std::string& args) {
  std::string cmd = std::string(ELASTODISK_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("resonances artifact: roots, degenerate pair, embedded config") {
  std::string d = tmpdir();
  int rc = run("resonances --epsilon 1e-4 --tau 1 --out " + d + "/r.json");
  CHECK(rc == 0);
  json j = json::parse(slurp(d + "/r.json"));
  REQUIRE(j.contains("roots"));
  REQUIRE(j["roots"].size() == 3);
  CHECK(j["roots"][0]["omega_hat"]["re"] == j["roots"][1]["omega_hat"]["re"]);
  CHECK(j["roots"][0]["omega_hat"]["im"] == j["roots"][1]["omega_hat"]["im"]);
  CHECK(j["config"]["contrast"]["epsilon"] == 1e-4);
  CHECK(j["case"] == "Case2");
  for (auto& dip : j["svd_dips"]) CHECK(dip["rel_distance"].get<double>() < 0.05);
}

TEST_CASE("resonances epsilon sweep emits CSV") {
  std::string d = tmpdir();
  int rc = run("resonances --tau 1 --sweep epsilon=1e-4:1e-3:2:log --format csv --out " + d + "/r.csv");
  CHECK(rc == 0);
  std::string csv = slurp(d + "/r.csv");
  CHECK(csv.rfind("epsilon,re_omega,im_omega,residual", 0) == 0);
  int lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 1 + 2 * 3);  // header + 3 roots per epsilon
}

TEST_CASE("invalid convexity is a config error naming the condition") {
  std::string d = tmpdir();
  std::string cmd = std::string(ELASTODISK_CLI_PATH) + " resonances --lambda -2 --mu 1 --out " + d +
                    "/x.json 2> " + d + "/err.txt";
  int rc = WEXITSTATUS(std::system(cmd.c_str()));
  CHECK(rc == 2);
  CHECK(slurp(d + "/err.txt").find("convexity") != std::string::npos);
}

TEST_CASE("scatter artifact and determinism") {
  std::string d = tmpdir();
  std::string args = "scatter --epsilon 1e-4 --tau 1 --nodes 64 --omega 0.02 --direction 40 --out ";
  CHECK(run(args + d + "/a.json") == 0);
  CHECK(run(args + d + "/b.json") == 0);
  CHECK(slurp(d + "/a.json") == slurp(d + "/b.json"));  // bit-identical rerun
  json j = json::parse(slurp(d + "/a.json"));
  CHECK(j["xi"].size() == 3);
  CHECK(j["zeta"].size() == 2);
  CHECK(j.contains("regime"));
}

TEST_CASE("farfield CSV has projector check columns") {
  std::string d = tmpdir();
  int rc = run("farfield --epsilon 1e-3 --tau 1 --nodes 64 --omega 0.5 --format csv --out " + d + "/f.csv");
  CHECK(rc == 0);
  std::string csv = slurp(d + "/f.csv");
  CHECK(csv.find("p_parallel_ok") != std::string::npos);
  CHECK(csv.find("false") == std::string::npos);
  CHECK(slurp(d + "/f.csv.decay.csv").rfind("radius", 0) == 0);
}

TEST_CASE("bandgap dilute JSON and scale sweep agreement column") {
  std::string d = tmpdir();
  CHECK(run("bandgap --epsilon 1e-5 --tau 1 --dilute --scale 0.05 --out " + d + "/b.json") == 0);
  json j = json::parse(slurp(d + "/b.json"));
  CHECK(j["mode"] == "dilute");
  CHECK(j["omega_star"].get<double>() > 0.0);
  CHECK(j.contains("t"));

  CHECK(run("bandgap --epsilon 1e-5 --tau 1 --nodes 32 --sweep scale=0.2:0.1:2 --format csv --out " + d +
            "/s.csv") == 0);
  std::string csv = slurp(d + "/s.csv");
  CHECK(csv.rfind("scale,omega_star_full,omega_star_dilute,relative_gap", 0) == 0);
}

TEST_CASE("config file with flag override") {
  std::string d = tmpdir();
  {
    std::ofstream cfg(d + "/cfg.json");
    cfg << R"({"material": {"lambda": 1.0, "mu": 1.0, "rho": 1.0},
               "contrast": {"epsilon": 1e-3, "tau": 1.0},
               "geometry": {"radius": 1.0, "nodes": 64},
               "omega": {"re": 0.02, "im": 0.0}})";
  }
  int rc = run("--config " + d + "/cfg.json scatter --epsilon 1e-4 --out " + d + "/o.json");
  CHECK(rc == 0);
  json j = json::parse(slurp(d + "/o.json"));
  CHECK(j["config"]["contrast"]["epsilon"] == 1e-4);      // flag wins
  CHECK(j["config"]["geometry"]["nodes"] == 64);          // file value survives
}

TEST_CASE("unknown sweep parameter is a config error") {
  CHECK(run("resonances --sweep radius=1:2:2") == 2);
}

TEST_CASE("JSON artifacts round-trip through the bundled schema") {
  json schema = json::parse(slurp(ELASTODISK_SCHEMA_PATH));
  auto conforms = [&](const json& obj, const std::string& kind) {
    for (auto& key : schema.at(kind).at("required")) {
      INFO(kind, " missing ", key.get<std::string>());
      CHECK(obj.contains(key.get<std::string>()));
    }
  };
  std::string d = tmpdir();
  REQUIRE(run("resonances --epsilon 1e-3 --tau 1 --out " + d + "/r.json") == 0);
  json r = json::parse(slurp(d + "/r.json"));
  conforms(r, "resonances");
  conforms(r["config"], "config");
  for (auto& root : r["roots"]) {
    conforms(root, "resonances.root");
    conforms(root["omega_hat"], "complex");
  }
  REQUIRE(run("scatter --epsilon 1e-4 --tau 1 --nodes 64 --omega 0.02 --out " + d + "/s.json") == 0);
  json s = json::parse(slurp(d + "/s.json"));
  conforms(s, "scatter");
  for (auto& x : s["xi"]) conforms(x, "complex");
  REQUIRE(run("farfield --epsilon 1e-3 --tau 1 --nodes 64 --omega 0.5 --out " + d + "/f.json") == 0);
  json f = json::parse(slurp(d + "/f.json"));
  conforms(f, "farfield");
  conforms(f["samples"][0], "farfield.sample");
  REQUIRE(run("bandgap --epsilon 1e-5 --tau 1 --dilute --scale 0.05 --out " + d + "/b.json") == 0);
  conforms(json::parse(slurp(d + "/b.json")), "bandgap");
}
