#include "prahm/txline.hpp"

#include <cmath>
#include <deque>

#include "prahm/error.hpp"

namespace prahm {

EnergyTrace simulate(const TxLineSpec& spec, double duration) {
  if (!(spec.Z0 > 0.0) || !(spec.omega > 0.0) || spec.steps_per_transit < 4)
    throw Error(Errc::bad_config, "line needs Z0 > 0, omega > 0, >= 4 steps per transit");
  const int S = spec.steps_per_transit;
  const double dt = spec.tau0() / S;
  const int steps = static_cast<int>(std::llround(duration / dt));
  const double t_short = 2.0 * spec.tau0();

  // fwd[0] is the slot entering at the source; fwd[S-1] reaches the far short
  // next step. bwd runs the other way.
  std::deque<double> fwd(S, 0.0), bwd(S, 0.0);
  EnergyTrace tr;
  tr.t.reserve(steps);
  tr.power.reserve(steps);
  tr.delivered.reserve(steps);
  tr.stored.reserve(steps);

  double delivered = 0.0;
  double stored = 0.0;
  for (int m = 0; m < steps; ++m) {
    const double t = m * dt;
    const double vb_in = bwd.front();
    double vf_new, p;
    if (t < t_short - 0.5 * dt) {
      const double drive = spec.Z0 * spec.I * std::cos(spec.omega * t);
      vf_new = drive + vb_in;
      p = (vf_new * vf_new - vb_in * vb_in) / spec.Z0;
    } else {
      vf_new = -vb_in;
      p = 0.0;
    }
    const double vf_far = fwd.back();

    // advance both directions one slot; shorts reflect with sign flip
    fwd.pop_back();
    fwd.push_front(vf_new);
    bwd.pop_front();
    bwd.push_back(-vf_far);

    stored += (vf_new * vf_new - vb_in * vb_in) * dt / spec.Z0;
    delivered += p * dt;
    tr.t.push_back(t);
    tr.power.push_back(p);
    tr.delivered.push_back(delivered);
    tr.stored.push_back(stored);
  }
  return tr;
}

double trapped_energy(const TxLineSpec& spec) {
  const EnergyTrace tr = simulate(spec, 2.0 * spec.tau0());
  return tr.stored.back();
}

PlanckRatio planck_xi(double zeta, double omega, double Z0) {
  constexpr double e_charge = 1.602176634e-19;
  constexpr double h_planck = 6.62607015e-34;
  TxLineSpec spec;
  spec.Z0 = Z0;
  spec.omega = omega;
  spec.I = zeta * omega * e_charge;
  PlanckRatio r;
  r.trapped = trapped_energy(spec);
  const double hbar = h_planck / (2.0 * M_PI);
  r.xi = r.trapped / (hbar * omega);
  return r;
}

}  // namespace prahm
