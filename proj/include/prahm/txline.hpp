#pragma once
// Shorted delay-line energy trap, in SI units. A current source drives a
// matched line whose one-way transit equals one carrier period; when the
// first reflection returns the input collapses to a short, freezing the
// delivered energy inside the line.
#include <cmath>
#include <vector>

namespace prahm {

struct TxLineSpec {
  double Z0{377.0};                // characteristic impedance, ohms
  double omega{2.0 * M_PI};        // source angular frequency, rad/s
  double I{1.0};                   // source current amplitude, amperes
  int steps_per_transit{512};

  double tau0() const { return 2.0 * M_PI / omega; }  // one-way transit time
};

struct EnergyTrace {
  std::vector<double> t;
  std::vector<double> power;      // instantaneous source power
  std::vector<double> delivered;  // cumulative source energy
  std::vector<double> stored;     // energy held in the line slots
};

EnergyTrace simulate(const TxLineSpec& spec, double duration);

// Energy left ringing in the line after the input shorts at t = 2 tau0;
// exactly Z0 I^2 tau0 independent of step resolution.
double trapped_energy(const TxLineSpec& spec);

// Drive with I = zeta * omega * e_charge and compare the trapped energy to
// one quantum h_bar * omega; the ratio 4 pi^2 Z0 e^2 / h is frequency-free.
struct PlanckRatio {
  double xi{0.0};
  double trapped{0.0};
};

PlanckRatio planck_xi(double zeta, double omega = 2.0 * M_PI, double Z0 = 377.0);

}  // namespace prahm
