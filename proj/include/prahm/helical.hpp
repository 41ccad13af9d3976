#pragma once
// Helical modulation: a z- and t-linear rotation of the transverse field pair
// riding on a guided mode, plus the v_h sweep experiment that locates the
// group velocity as the only modulation speed keeping the full system exact,
// and the period-averaged classical energy density the rotation leaves alone.
#include <vector>

#include "prahm/grid.hpp"
#include "prahm/mode.hpp"
#include "prahm/residual.hpp"

namespace prahm {

struct HelicalModulation {
  double Omega{0.0};
  double v_h{0.0};
  int helicity{+1};

  double angle(double t, double z) const {
    return helicity * Omega * (t - z / v_h);
  }
};

ModMeta meta_of(const HelicalModulation& hm);

// Rotates the transverse pairs by the given angle; axial components pass
// through unchanged.
FieldSample apply_helical(const FieldSample& f, double angle);

class HelicalSampler {
 public:
  HelicalSampler(const ModeSpec& spec, const HelicalModulation& hm);
  FieldSample operator()(double x, double y, double z, double t) const;
  const HelicalModulation& modulation() const { return hm_; }
  const ModeSpec& spec() const { return base_.spec(); }

 private:
  ModeSampler base_;
  HelicalModulation hm_;
};

struct SweepPoint {
  double ratio{0.0};     // v_h / v_group
  double v_h{0.0};
  double residual{0.0};  // dominant curl-equation l2, normalized
};

// Evaluation lattice sized so the bare-mode stencil floor sits near 5e-5:
// each spacing is sqrt(6 * 5e-5) over the largest angular rate along
// that axis.
GridSpec sweep_grid_for(const ModeSpec& spec, double Omega);

std::vector<SweepPoint> vh_sweep(const ModeSpec& spec, double Omega,
                                 const std::vector<double>& ratios,
                                 int helicity = +1);

// (1/2) <n^2 |Re E|^2 + |Re cB|^2> averaged over the grid; the time window
// must cover exactly one carrier period.
double classical_energy_density(const FieldGrid& f);

}  // namespace prahm
