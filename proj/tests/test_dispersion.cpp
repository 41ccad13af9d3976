#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "prahm/dispersion.hpp"
#include "prahm/error.hpp"
#include "prahm/mode.hpp"
#include "prahm/packet.hpp"

using namespace prahm;

namespace {

// Weakly guided carrier so both sideband lines of every tested packet
// propagate: kappa at 1% of n*omega.
ModeSpec weak_mode(double n1) {
  return ModeSpec::make(ModeKind::TE, 2.0 * M_PI, {1.5, n1, 2.0 * M_PI}, 0.01);
}

const std::vector<double> probes{0.0, 5.0, 10.0, 15.0, 20.0};

// Two propagating lines drift at their beat slope (w1 - w2) / (k1 - k2).
// The lower line keeps its signed frequency and a matching signed
// wavenumber: a negative-frequency, negative-k line is the same real wave
// as its positive-frequency mirror.
double beat_velocity(const ModeSpec& mode, int M) {
  const double omega = mode.omega;
  const double Omega = (2 * M + 1) * omega / 2.0;
  const double kap = mode.kappa();
  const double w_up = omega + Omega;
  const double w_dn = omega - Omega;
  const double k1 = axial_wavenumber(mode.refr, kap, w_up);
  const double k2 = (w_dn < 0.0 ? -1.0 : 1.0) *
                    axial_wavenumber(mode.refr, kap, std::abs(w_dn));
  return (w_up - w_dn) / (k1 - k2);
}

}  // namespace

TEST_CASE("packet envelopes travel at the group velocity") {
  const ModeSpec mode = weak_mode(0.0);
  const double vg = mode.v_group();

  std::vector<double> vels;
  for (int M : {0, 1, 2, 5}) {
    const PacketSpec ps = PacketSpec::make(mode, M, 0.5 * M_PI, 1);
    const VelocityMeasure vm = envelope_velocity_measure(ps, probes);

    REQUIRE(vm.centroids.size() == probes.size());
    for (std::size_t i = 1; i < vm.centroids.size(); ++i)
      CHECK(vm.centroids[i] > vm.centroids[i - 1]);

    CHECK(std::abs(vm.velocity / vg - 1.0) <= 1e-3);
    CHECK(std::abs(vm.velocity / beat_velocity(mode, M) - 1.0) <= 1e-4);

    // two non-dispersive lines keep their relative phase in the co-moving
    // frame, so the envelope shape survives propagation
    CHECK(vm.distortion <= 1e-9);
    vels.push_back(vm.velocity);
  }

  const auto [mn, mx] = std::minmax_element(vels.begin(), vels.end());
  CHECK((*mx - *mn) / *mn <= 1e-3);
}

TEST_CASE("weak material dispersion keeps the drift near the group slope") {
  const ModeSpec mode = weak_mode(2e-5);
  const double vg = mode.v_group();
  for (int M : {0, 5}) {
    const PacketSpec ps = PacketSpec::make(mode, M, 0.5 * M_PI, 1);
    const VelocityMeasure vm = envelope_velocity_measure(ps, probes);
    CHECK(std::abs(vm.velocity / vg - 1.0) <= 5e-3);
  }
}

TEST_CASE("at least two distinct probe distances are required") {
  const PacketSpec ps = PacketSpec::make(weak_mode(0.0), 0, 0.5 * M_PI, 1);
  for (const std::vector<double>& bad :
       {std::vector<double>{}, std::vector<double>{5.0},
        std::vector<double>{5.0, 5.0}}) {
    try {
      envelope_velocity_measure(ps, bad);
      FAIL("expected need_two_probes");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::need_two_probes);
    }
  }
}

TEST_CASE("a strongly guided carrier pushes a sideband below cutoff") {
  // kappa at 60% of n*omega: the lower line |omega - Omega| of the ground
  // packet sits under the guide's cutoff frequency
  const ModeSpec tight = canonical_mode(ModeKind::TE);
  const PacketSpec ps = PacketSpec::make(tight, 0, 0.5 * M_PI, 1);
  try {
    envelope_velocity_measure(ps, probes);
    FAIL("expected below_cutoff");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::below_cutoff);
    CHECK(std::string(e.what()).find("lower sideband") != std::string::npos);
  }
}
