#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "pathtrans/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() /
          ("pathtrans-test-" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  fs::path file(const std::string& name) const { return dir / name; }
};

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run(std::vector<std::string> args) {
  std::vector<const char*> argv{"pathtrans"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return pathtrans::cli::run_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("transport command prints the matrix") {
  TempDir tmp;
  write_file(tmp.file("cfg.json"), R"({
    "schema_version": 1,
    "command": "transport",
    "connection": {"kind": "constant", "matrix": [[0.0, 1.0], [0.0, 0.0]]},
    "path": {"kind": "line", "from": [0.0], "to": [1.0]},
    "s": 0.0, "t": 1.0, "steps": 200
  })");
  const fs::path out = tmp.file("h.json");
  const int code =
      run({"transport", "--config", tmp.file("cfg.json").string(), "--out",
           out.string()});
  CHECK(code == 0);
  const std::string text = read_file(out);
  // nilpotent generator: H = id - (t-s) N, so the (0,1) entry is -1
  CHECK(text.find("\"kind\":\"transport\"") != std::string::npos);
  CHECK(text.find("[-1.000") != std::string::npos);
}

TEST_CASE("wilson command reports the flux phase") {
  TempDir tmp;
  write_file(tmp.file("cfg.json"), R"({
    "command": "wilson",
    "potential": {"kind": "u1_uniform", "B": 3.141592653589793},
    "loop": {"kind": "circle", "center": [0.0, 0.0], "radius": 1.0},
    "steps": 500
  })");
  const fs::path out = tmp.file("w.json");
  const int code = run(
      {"wilson", "--config", tmp.file("cfg.json").string(), "--out", out.string()});
  CHECK(code == 0);
  const std::string text = read_file(out);
  CHECK(text.find("\"group\":\"U1\"") != std::string::npos);
  // phase of exp(i pi^2) wrapped into (-pi, pi]
  const double pi = std::numbers::pi;
  const double wrapped = pi * pi - 4.0 * pi;
  char needle[64];
  std::snprintf(needle, sizeof(needle), "\"phase\":%.8g", wrapped);
  CHECK(text.find(std::string(needle).substr(0, 18)) != std::string::npos);
}

TEST_CASE("laws on the flat entry pass and are byte-deterministic") {
  TempDir tmp;
  write_file(tmp.file("cfg.json"), R"({
    "command": "laws",
    "entry": "flat",
    "suites": ["groupoid", "restriction", "segment-law"],
    "steps": 300
  })");
  const fs::path out1 = tmp.file("r1.json"), out2 = tmp.file("r2.json");
  CHECK(run({"laws", "--config", tmp.file("cfg.json").string(), "--out",
             out1.string()}) == 0);
  CHECK(run({"laws", "--config", tmp.file("cfg.json").string(), "--out",
             out2.string()}) == 0);
  const std::string a = read_file(out1), b = read_file(out2);
  CHECK(a == b);
  CHECK(a.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("laws on a negative control fail with the law named") {
  TempDir tmp;
  write_file(tmp.file("cfg.json"), R"({
    "command": "laws",
    "entry": "mock_parameter_clock"
  })");
  const fs::path out = tmp.file("r.json");
  const int code = run(
      {"laws", "--config", tmp.file("cfg.json").string(), "--out", out.string()});
  CHECK(code == 1);
  const std::string text = read_file(out);
  CHECK(text.find("\"law\":\"reparam\"") != std::string::npos);
  CHECK(text.find("\"pass\":false") != std::string::npos);
}

TEST_CASE("csv output carries the documented columns") {
  TempDir tmp;
  write_file(tmp.file("cfg.json"), R"({
    "command": "laws",
    "entry": "mock_rule_domain_length",
    "format": "csv"
  })");
  const fs::path out = tmp.file("r.csv");
  run({"laws", "--config", tmp.file("cfg.json").string(), "--out", out.string()});
  const std::string text = read_file(out);
  CHECK(text.rfind("law,path,s,t,residual,pass\n", 0) == 0);
  CHECK(text.find("rule-reparam") != std::string::npos);
}

TEST_CASE("exit codes") {
  TempDir tmp;
  SUBCASE("malformed json is a config error") {
    write_file(tmp.file("bad.json"), "{ not json");
    CHECK(run({"laws", "--config", tmp.file("bad.json").string()}) == 2);
  }
  SUBCASE("unknown entry is a config error") {
    write_file(tmp.file("cfg.json"), R"({"command":"laws","entry":"nope"})");
    CHECK(run({"laws", "--config", tmp.file("cfg.json").string()}) == 2);
  }
  SUBCASE("missing command is a config error") {
    write_file(tmp.file("cfg.json"), R"({"entry":"flat"})");
    CHECK(run({"--config", tmp.file("cfg.json").string()}) == 2);
  }
  SUBCASE("transport refuses csv") {
    write_file(tmp.file("cfg.json"), R"({
      "command": "transport",
      "connection": {"kind": "constant", "matrix": [[0.0]]},
      "path": {"kind": "line", "from": [0.0], "to": [1.0]},
      "format": "csv"
    })");
    CHECK(run({"transport", "--config", tmp.file("cfg.json").string()}) == 2);
  }
  SUBCASE("unknown flag is a config error") {
    CHECK(run({"laws", "--nonsense"}) == 2);
  }
  SUBCASE("an open wilson loop is a runtime failure, not a config error") {
    write_file(tmp.file("cfg.json"), R"({
      "command": "wilson",
      "potential": {"kind": "u1_uniform", "B": 1.0},
      "loop": {"kind": "line", "from": [0.0, 0.0], "to": [1.0, 0.0]}
    })");
    CHECK(run({"wilson", "--config", tmp.file("cfg.json").string()}) == 3);
  }
}

TEST_CASE("flags override the config file") {
  TempDir tmp;
  // an impossible tolerance in the config, overridden by a sane flag
  write_file(tmp.file("cfg.json"), R"({
    "command": "laws",
    "entry": "flat",
    "suites": ["groupoid"],
    "steps": 200,
    "tol": 1e-300
  })");
  const fs::path out = tmp.file("r.json");
  CHECK(run({"laws", "--config", tmp.file("cfg.json").string(), "--tol", "1e-8",
             "--out", out.string()}) == 0);
  const std::string text = read_file(out);
  CHECK(text.find("\"tol\":1e-08") != std::string::npos);
}

TEST_CASE("roundtrip and convergence commands") {
  TempDir tmp;
  SUBCASE("roundtrip on the flat entry") {
    write_file(tmp.file("cfg.json"),
               R"({"command":"roundtrip","entry":"flat","steps":300})");
    const fs::path out = tmp.file("r.json");
    CHECK(run({"roundtrip", "--config", tmp.file("cfg.json").string(), "--out",
               out.string()}) == 0);
    CHECK(read_file(out).find("roundtrip-transport") != std::string::npos);
  }
  SUBCASE("convergence on the constant entry") {
    write_file(tmp.file("cfg.json"), R"({
      "command": "convergence",
      "entry": "constant_gamma",
      "steps_list": [100, 200, 400]
    })");
    const fs::path out = tmp.file("c.csv");
    CHECK(run({"convergence", "--config", tmp.file("cfg.json").string(),
               "--format", "csv", "--out", out.string()}) == 0);
    const std::string text = read_file(out);
    CHECK(text.rfind("law,path,s,t,residual,pass\n", 0) == 0);
    CHECK(text.find("convergence-order,constant_gamma/unit-line") !=
          std::string::npos);
  }
}
