#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "prahm/config.hpp"
#include "prahm/csv.hpp"
#include "prahm/error.hpp"
#include "prahm/suites.hpp"

using namespace prahm;

TEST_CASE("an empty document yields the reference configuration") {
  const RunConfig c = parse_config("{}");
  CHECK(c.kind == ModeKind::TE);
  CHECK(c.n0 == 1.5);
  CHECK(c.n1 == 0.0);
  CHECK(c.omega == 2.0 * M_PI);
  CHECK(c.kappa_ratio == 0.6);
  CHECK(c.profile == ProfileKind::separable_cosine);
  CHECK(c.amplitude == 1.0);
  CHECK(c.nx == 32);
  CHECK(c.nt == 64);
  CHECK(c.hx == 0.015);
  CHECK(c.ht == 0.005);
  CHECK(c.M_list == std::vector<int>{0, 1, 2, 5});
  CHECK(c.phi == 0.5 * M_PI);
  CHECK(c.Q == 1);
  CHECK(c.map == "phi90");
  CHECK(c.sweep_from == 0.8);
  CHECK(c.sweep_to == 1.2);
  CHECK(c.sweep_steps == 41);
  CHECK(c.z_probes.size() == 5);
  CHECK(c.n1_weak == 2e-5);
  CHECK(c.tx_Z0 == 377.0);
  CHECK(c.tx_steps == 512);
  CHECK(c.out.empty());

  // derived accessors reproduce the canonical setup
  const GridSpec g = c.grid();
  CHECK(g.x0 == 0.131);
  CHECK(g.t0 == -0.5 * 0.005 * 63);
  const ModeSpec m = c.mode();
  CHECK(m.n == 1.5);
  CHECK(m.kappa() == doctest::Approx(0.6 * 1.5 * 2.0 * M_PI).epsilon(1e-15));
}

TEST_CASE("every section overrides its keys") {
  const std::string doc = R"({
    "mode": {"kind": "TM", "n0": 1.4, "n1": 0.01, "omega": 3.0,
             "omega_ref": 3.0, "kappa_ratio": 0.5, "profile": "circular",
             "amplitude": 2.0, "modal_phase": 0.1},
    "grid": {"nx": 16, "ny": 12, "nz": 5, "nt": 8,
             "hx": 0.02, "hy": 0.03, "hz": 0.01, "ht": 0.002},
    "packet": {"M": [0, 2], "phi": 0.3, "Q": 4, "map": "PHI0"},
    "sweep": {"from": 0.9, "to": 1.1, "steps": 11, "Omega_over_omega": 1.5},
    "dispersion": {"z_probes": [0.0, 3.0], "n1_weak": 1e-4},
    "txline": {"Z0": 50.0, "omega": 3.0, "zeta": 2.0, "steps_per_transit": 128},
    "tolerances": {"some check": 0.5},
    "out": "table.csv"
  })";
  const RunConfig c = parse_config(doc);
  CHECK(c.kind == ModeKind::TM);
  CHECK(c.n0 == 1.4);
  CHECK(c.n1 == 0.01);
  CHECK(c.omega == 3.0);
  CHECK(c.kappa_ratio == 0.5);
  CHECK(c.profile == ProfileKind::bessel_circular);
  CHECK(c.amplitude == 2.0);
  CHECK(c.modal_phase == 0.1);
  CHECK(c.nx == 16);
  CHECK(c.ny == 12);
  CHECK(c.nz == 5);
  CHECK(c.nt == 8);
  CHECK(c.hy == 0.03);
  CHECK(c.M_list == std::vector<int>{0, 2});
  CHECK(c.phi == 0.3);
  CHECK(c.Q == 4);
  CHECK(c.map == "phi0");
  CHECK(c.sweep_steps == 11);
  CHECK(c.sweep_Omega_over_omega == 1.5);
  CHECK(c.z_probes == std::vector<double>{0.0, 3.0});
  CHECK(c.n1_weak == 1e-4);
  CHECK(c.tx_Z0 == 50.0);
  CHECK(c.tx_zeta == 2.0);
  CHECK(c.tx_steps == 128);
  CHECK(c.out == "table.csv");
  CHECK(c.tolerance("some check", 9.0) == 0.5);
  CHECK(c.tolerance("other check", 9.0) == 9.0);
}

TEST_CASE("malformed documents are rejected") {
  for (const char* doc : {"not json", "[1, 2]", "{\"mode\": {\"kind\": \"xy\"}}",
                          "{\"packet\": {\"map\": \"bogus\"}}",
                          "{\"mode\": {\"n0\": \"abc\"}}"}) {
    try {
      parse_config(doc);
      FAIL("expected bad_config for: ", doc);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::bad_config);
    }
  }
}

TEST_CASE("physical validation of parsed values") {
  auto code_of = [](const std::string& doc) {
    try {
      parse_config(doc);
      return Errc::io_error;  // anything distinguishable; parse must throw
    } catch (const Error& e) {
      return e.code();
    }
  };
  CHECK(code_of("{\"mode\": {\"omega\": -1.0}}") == Errc::bad_config);
  CHECK(code_of("{\"mode\": {\"kappa_ratio\": 0.0}}") == Errc::kappa_zero);
  CHECK(code_of("{\"mode\": {\"kappa_ratio\": 1.0}}") == Errc::below_cutoff);
  CHECK(code_of("{\"grid\": {\"nz\": 2}}") == Errc::grid_too_small);
  CHECK(code_of("{\"packet\": {\"Q\": 0}}") == Errc::bad_config);
  CHECK(code_of("{\"packet\": {\"M\": [-1]}}") == Errc::bad_config);
  CHECK(code_of("{\"sweep\": {\"steps\": 0}}") == Errc::bad_config);
  CHECK(code_of("{\"sweep\": {\"from\": -0.5}}") == Errc::bad_config);

  // a cutoff-crossing ratio set after parsing still trips the mode factory
  RunConfig c;
  c.kappa_ratio = 1.2;
  try {
    c.mode();
    FAIL("expected below_cutoff");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::below_cutoff);
    CHECK(std::string(e.what()).find("below cutoff") != std::string::npos);
  }
}

TEST_CASE("numbers print as the shortest round-tripping decimal") {
  CHECK(fmt(0.1) == "0.1");
  CHECK(fmt(2.0) == "2");
  CHECK(fmt(-0.25) == "-0.25");
  CHECK(fmt(0.0) == "0");

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 50; ++i) {
    const double v = u(rng);
    CHECK(std::stod(fmt(v)) == v);
  }
  CHECK(std::stod(fmt(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("table layout is header plus comma-joined rows") {
  const std::string t = csv_table("a,b", {{1.0, 2.0}, {0.5, 3.0}});
  CHECK(t == "a,b\n1,2\n0.5,3\n");
  CHECK(csv_table("only", {}) == "only\n");
}

TEST_CASE("file output validates its path") {
  CHECK_THROWS_AS(write_file("", "x"), Error);
  try {
    write_file("/nonexistent-dir-for-sure/out.csv", "x");
    FAIL("expected io_error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::io_error);
  }

  const std::string path = "/tmp/prahm_csv_roundtrip.csv";
  write_file(path, "h\n1,2\n");
  std::ifstream f(path, std::ios::binary);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == "h\n1,2\n");
  std::remove(path.c_str());
}

TEST_CASE("table producers are byte-stable across calls") {
  const RunConfig cfg = parse_config("{}");

  const std::string synth1 = synth_csv(cfg, 0, cfg.phi, 1, 65);
  const std::string synth2 = synth_csv(cfg, 0, cfg.phi, 1, 65);
  CHECK(synth1 == synth2);
  CHECK(synth1.rfind("tau,envelope,", 0) == 0);

  const std::string sweep1 = sweep_csv(cfg, 0.9, 1.1, 5);
  CHECK(sweep1 == sweep_csv(cfg, 0.9, 1.1, 5));
  CHECK(sweep1.rfind("ratio,residual", 0) == 0);
  CHECK_THROWS_AS(sweep_csv(cfg, -1.0, 1.0, 5), Error);

  const std::string disp1 = dispersion_csv(cfg, {0});
  CHECK(disp1 == dispersion_csv(cfg, {0}));
  CHECK(disp1.rfind("M,velocity,distortion", 0) == 0);

  const std::string tx1 = txline_csv(cfg, 1.0);
  CHECK(tx1 == txline_csv(cfg, 1.0));
  CHECK(tx1.rfind("t,power,energy", 0) == 0);
  CHECK_THROWS_AS(txline_csv(cfg, 0.0), Error);

  const std::string sp1 = spectrum_csv(cfg, {0}, 1);
  CHECK(sp1 == spectrum_csv(cfg, {0}, 1));
  CHECK(sp1.rfind("M,Q,dw,dt,product", 0) == 0);
}

TEST_CASE("suite runner resolves names and reports passes") {
  CHECK(suite_from_name("maxwell") == Suite::maxwell);
  CHECK(suite_from_name("txline") == Suite::txline);
  CHECK_THROWS_AS(suite_from_name("bogus"), Error);

  const RunConfig cfg = parse_config("{}");
  const auto reports = run_suites("txline", cfg);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].suite == "txline");
  CHECK(reports[0].all_pass());
  REQUIRE(!reports[0].checks.empty());
  for (const auto& line : reports[0].checks) {
    CHECK(!line.name.empty());
    CHECK(line.pass);
  }

  const std::string text = format_reports(reports);
  CHECK(text.find("[PASS]") != std::string::npos);
  CHECK(text.find("txline") != std::string::npos);
  CHECK(text.find("OK") != std::string::npos);
  CHECK(text.find("[FAIL]") == std::string::npos);
}

TEST_CASE("tolerance overrides flow into suite checks") {
  // force a failure by making an always-satisfied check impossible
  RunConfig cfg = parse_config(
      "{\"tolerances\": {\"trapped energy offset\": -1.0}}");
  const auto reports = run_suites("txline", cfg);
  REQUIRE(reports.size() == 1);
  CHECK_FALSE(reports[0].all_pass());
  bool saw_fail = false;
  for (const auto& line : reports[0].checks)
    if (line.name == "trapped energy offset") {
      CHECK(line.tolerance == -1.0);
      CHECK_FALSE(line.pass);
      saw_fail = true;
    }
  REQUIRE(saw_fail);
  const std::string text = format_reports(reports);
  CHECK(text.find("[FAIL]") != std::string::npos);
  CHECK(text.find("FAILED") != std::string::npos);
}
