#include <cmath>
#include <cstddef>

#include "doctest.h"
#include "prahm/error.hpp"
#include "prahm/txline.hpp"

using namespace prahm;

TEST_CASE("trapped energy equals Z0 I^2 tau0 regardless of resolution") {
  TxLineSpec spec;  // 377 ohm, one-hertz carrier, one ampere
  const double expect = spec.Z0 * spec.I * spec.I * spec.tau0();
  CHECK(expect == doctest::Approx(377.0).epsilon(1e-15));

  const double coarse = trapped_energy(spec);
  CHECK(coarse == doctest::Approx(expect).epsilon(1e-12));

  TxLineSpec dense = spec;
  dense.steps_per_transit = 2048;
  CHECK(trapped_energy(dense) == doctest::Approx(coarse).epsilon(1e-12));

  TxLineSpec loud = spec;
  loud.I = 3.0;
  CHECK(trapped_energy(loud) == doctest::Approx(9.0 * coarse).epsilon(1e-12));
}

TEST_CASE("the input short freezes the line after two transits") {
  TxLineSpec spec;
  const EnergyTrace tr = simulate(spec, 4.0 * spec.tau0());
  REQUIRE(!tr.t.empty());
  REQUIRE(tr.power.size() == tr.t.size());

  const double t_short = 2.0 * spec.tau0();
  double frozen = 0.0;
  bool seen_short = false;
  for (std::size_t m = 0; m < tr.t.size(); ++m) {
    if (tr.t[m] < t_short - 1e-12) {
      continue;
    }
    if (!seen_short) {
      frozen = tr.stored[m];
      seen_short = true;
    }
    CHECK(tr.power[m] == 0.0);
    CHECK(tr.stored[m] == frozen);
  }
  REQUIRE(seen_short);
  CHECK(frozen == doctest::Approx(377.0).epsilon(1e-12));
}

TEST_CASE("the lossless line stores exactly what the source delivers") {
  TxLineSpec spec;
  spec.steps_per_transit = 256;
  const EnergyTrace tr = simulate(spec, 3.0 * spec.tau0());
  for (std::size_t m = 0; m < tr.t.size(); ++m)
    CHECK(tr.delivered[m] == tr.stored[m]);
}

TEST_CASE("line configuration is validated") {
  TxLineSpec bad;
  bad.Z0 = 0.0;
  CHECK_THROWS_AS(simulate(bad, 1.0), Error);

  TxLineSpec coarse;
  coarse.steps_per_transit = 3;
  try {
    simulate(coarse, 1.0);
    FAIL("expected bad_config");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_config);
  }
}

TEST_CASE("one-electron drive traps a fixed fraction of a quantum") {
  const PlanckRatio r = planck_xi(1.0);

  // pinned against the closed form 4 pi^2 Z0 zeta^2 e^2 / h
  constexpr double e_charge = 1.602176634e-19;
  constexpr double h_planck = 6.62607015e-34;
  const double closed =
      4.0 * M_PI * M_PI * 377.0 * e_charge * e_charge / h_planck;
  CHECK(r.xi == doctest::Approx(closed).epsilon(1e-12));
  CHECK(r.xi == doctest::Approx(0.5765883257877817).epsilon(1e-12));

  // near but not at the heuristic 0.6 estimate
  CHECK(std::abs(r.xi - 0.576) <= 0.01);
  CHECK(std::abs(r.xi / 0.6 - 1.0) <= 0.1);

  // trapped energy is the ratio times one quantum
  const double hbar = h_planck / (2.0 * M_PI);
  CHECK(r.trapped == doctest::Approx(r.xi * hbar * 2.0 * M_PI).epsilon(1e-12));
}

TEST_CASE("the quantum fraction does not depend on the frequency") {
  const double base = planck_xi(1.0).xi;
  for (double omega : {2.0 * M_PI * 1e9, 2.0 * M_PI * 1e15, 0.3}) {
    CHECK(std::abs(planck_xi(1.0, omega).xi / base - 1.0) <= 1e-9);
  }
  // and scales with the square of the charge multiple
  CHECK(planck_xi(2.0).xi == doctest::Approx(4.0 * base).epsilon(1e-12));
}
