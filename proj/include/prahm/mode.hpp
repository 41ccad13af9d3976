#pragma once
// Guided monochromatic modes in natural units (c = eps0 = mu0 = 1).
// A mode is fixed by its polarization family (TE or TM), angular frequency,
// refractive model, and transverse profile; the axial wavenumber follows from
// k^2 = n^2 omega^2 - kappa^2.
#include <functional>

#include "prahm/profile.hpp"
#include "prahm/sigma.hpp"

namespace prahm {

struct RefractiveModel {
  double n0{1.5};
  double n1{0.0};  // linear frequency slope, zero means dispersionless
  double omega_ref{2.0 * M_PI};

  double n(double omega) const { return n0 + n1 * (omega - omega_ref); }
  bool dispersive() const { return n1 != 0.0; }
};

// k(omega) for a fixed transverse eigenvalue kappa; throws below cutoff.
double axial_wavenumber(const RefractiveModel& refr, double kappa, double omega);

// dk/domega -> group velocity. Closed form k/(n^2 omega) when n is constant,
// otherwise the reciprocal of a central-difference dk/domega.
double group_velocity(const RefractiveModel& refr, double kappa, double omega);

double phase_velocity(const RefractiveModel& refr, double kappa, double omega);

enum class ModeKind { TE, TM };

struct ModeSpec {
  ModeKind kind{ModeKind::TE};
  double omega{2.0 * M_PI};
  RefractiveModel refr{};
  TransverseProfile profile{};
  double k{0.0};          // derived axial wavenumber
  double n{1.5};          // refractive index at this omega
  double amplitude{1.0};
  double modal_phase{0.0};

  // kappa = kappa_ratio * n * omega; kappa_ratio must lie in (0, 1).
  static ModeSpec make(ModeKind kind, double omega, const RefractiveModel& refr,
                       double kappa_ratio,
                       ProfileKind pk = ProfileKind::separable_cosine,
                       double amplitude = 1.0, double modal_phase = 0.0);

  double kappa() const { return profile.kappa; }
  double v_group() const { return group_velocity(refr, kappa(), omega); }
  double v_phase() const { return omega / k; }
};

// TE family, kappa ratio 0.6 of n*omega, unit amplitude, cosine profile.
ModeSpec canonical_mode(ModeKind kind, double kappa_ratio = 0.6);

// One field sample: complex transverse E and cB plus axial components.
// The physical fields are the real parts.
struct FieldSample {
  TransverseVec Et{};
  TransverseVec cBt{};
  cplx Ez{0.0, 0.0};
  cplx cBz{0.0, 0.0};
};

inline FieldSample operator+(const FieldSample& a, const FieldSample& b) {
  return {a.Et + b.Et, a.cBt + b.cBt, a.Ez + b.Ez, a.cBz + b.cBz};
}
inline FieldSample operator*(const cplx& s, const FieldSample& f) {
  return {s * f.Et, s * f.cBt, s * f.Ez, s * f.cBz};
}
inline FieldSample operator*(double s, const FieldSample& f) {
  return {s * f.Et, s * f.cBt, s * f.Ez, s * f.cBz};
}

class ModeSampler {
 public:
  explicit ModeSampler(const ModeSpec& spec);
  FieldSample operator()(double x, double y, double z, double t) const;
  const ModeSpec& spec() const { return spec_; }

 private:
  ModeSpec spec_;
};

ModeSampler te_mode_sampler(const ModeSpec& spec);
ModeSampler tm_mode_sampler(const ModeSpec& spec);

using FieldFn = std::function<FieldSample(double, double, double, double)>;

}  // namespace prahm
