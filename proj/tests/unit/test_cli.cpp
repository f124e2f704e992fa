// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Sandbox {
  fs::path dir;
  Sandbox() {
    dir = fs::temp_directory_path() / ("bpl_cli_" + std::to_string(std::rand()) + "_" +
                                       std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Sandbox() { fs::remove_all(dir); }

  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(dir / name) << text;
    return dir / name;
  }

  int run(const std::string& args, const std::string& out = "out") const {
    const std::string cmd = std::string(BPL_CLI_PATH) + " --out " + (dir / out).string() + " " + args +
                            " > " + (dir / "stdout.txt").string() + " 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  }

  nlohmann::json json(const std::string& rel) const {
    std::ifstream in(dir / rel);
    return nlohmann::json::parse(in);
  }

  std::string text(const std::string& rel) const {
    std::ifstream in(dir / rel);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

}  // namespace

TEST_CASE("solve writes a report with echoed inputs") {
  Sandbox s;
  REQUIRE(s.run("solve") == 0);
  const auto r = s.json("out/report.json");
  CHECK(r["command"] == "solve");
  CHECK(r["seed"] == 42);
  CHECK(r["pass"] == true);
  CHECK(r["results"]["p"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fs::exists(s.dir / "out/rho_bar.csv"));
  CHECK(s.text("out/rho_bar.csv").rfind("# seed = 42", 0) == 0);
}

TEST_CASE("outputs are deterministic for a fixed seed") {
  Sandbox s;
  REQUIRE(s.run("--seed 7 forms-check", "a") == 0);
  REQUIRE(s.run("--seed 7 forms-check", "b") == 0);
  CHECK(s.text("a/report.json") == s.text("b/report.json"));
  CHECK(s.text("a/forms_pairs.csv") == s.text("b/forms_pairs.csv"));
  REQUIRE(s.run("--seed 8 forms-check", "c") == 0);
  CHECK(s.text("a/forms_pairs.csv") != s.text("c/forms_pairs.csv"));
}

TEST_CASE("config files and overrides") {
  Sandbox s;
  const auto cfg = s.write("e.cfg",
                           "# ellipse with a shifted quartic\n"
                           "body.kind = ellipse\nbody.a = 2\nbody.b = 1\n"
                           "potential.kind = even-quartic\npotential.epsilon = 0.1\n"
                           "potential.shift = 0.1, 0.0\n");
  REQUIRE(s.run("--config " + cfg.string() + " --modes 48 --quad-m 512 solve") == 0);
  const auto r = s.json("out/report.json");
  CHECK(r["basis_N"] == 48);
  CHECK(r["quad"]["M"] == 512);
  CHECK(r["config"]["body.kind"] == "ellipse");
}

TEST_CASE("flow, spectral, bm, bounds and scan run") {
  Sandbox s;
  CHECK(s.run("--plot flow", "flow") == 0);
  CHECK(fs::exists(s.dir / "flow/flow.svg"));
  CHECK(s.run("spectral", "spectral") == 0);
  CHECK(s.json("spectral/report.json")["results"]["coercivity_C"].get<double>() ==
        doctest::Approx(0.5).epsilon(1e-9));
  const auto bm = s.write("bm.cfg", "body2.kind = disk\nbody2.radius = 1.5\n");
  CHECK(s.run("--config " + bm.string() + " bm", "bm") == 0);
  CHECK(s.run("bounds", "bounds") == 0);
  CHECK(s.run("--plot scan", "scan") == 0);
  CHECK(fs::exists(s.dir / "scan/scan.csv"));
}

TEST_CASE("configuration errors exit with status 2 and a failure record") {
  Sandbox s;
  const auto bad = s.write("bad.cfg", "bogus.key = 1\n");
  CHECK(s.run("--config " + bad.string() + " solve", "bad") == 2);
  CHECK(s.json("bad/failure.json")["error"] == "ConfigError");
  const auto nc = s.write("nc.cfg", "body.kind = fourier\nbody.cos = 1, 0, 2\n");
  CHECK(s.run("--config " + nc.string() + " solve", "nc") == 2);
  const auto dup = s.write("dup.cfg", "seed = 1\nseed = 2\n");
  CHECK(s.run("--config " + dup.string() + " solve", "dup") == 2);
  CHECK(s.run("--modes 2 solve", "modes") == 2);
  CHECK(s.run("nonsense", "cmd") == 2);
  const auto q = s.write("q.cfg", "potential.kind = even-quartic\npotential.epsilon = 0.1\n");
  CHECK(s.run("--config " + q.string() + " bounds", "q") == 2);
  CHECK(s.json("q/failure.json")["error"] == "PinchingUndeclared");
}

#include "bpl/config.hpp"
#include "bpl/errors.hpp"

TEST_CASE("config parsing") {
  const bpl::Config c = bpl::Config::parse(
      "seed = 9  # trailing comment\nquad.M = 128\nbody.kind = hull\nbody.points = 1,0; 0,1; -1,0; 0,-1\n"
      "spectral.deltas = 1e-3, 1e-1\n",
      "t.cfg");
  CHECK(c.seed(0) == 9);
  CHECK(c.integer("quad.M", 0) == 128);
  CHECK(c.points("body.points").size() == 4);
  CHECK(c.list("spectral.deltas", {}).size() == 2);
  CHECK(c.real("flow.epsilon", 0.25) == 0.25);
  const bpl::SupportFunction h = bpl::make_body(bpl::body_from_config(c), 128);
  CHECK(h.contains_origin());
  const auto msg = [](const std::string& text) {
    try {
      (void)bpl::Config::parse(text, "x.cfg");
    } catch (const bpl::Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(msg("seed = 1\nunknown = 2\n").find("x.cfg:2") != std::string::npos);
  CHECK(msg("seed = 1\nseed = 2\n").find("x.cfg:2") != std::string::npos);
  CHECK(msg("no equals sign\n").find("x.cfg:1") != std::string::npos);
}
