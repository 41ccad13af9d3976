#include "prahm/mode.hpp"

#include <cmath>

#include "prahm/error.hpp"

namespace prahm {

double axial_wavenumber(const RefractiveModel& refr, double kappa, double omega) {
  const double n = refr.n(omega);
  const double arg = n * n * omega * omega - kappa * kappa;
  if (arg <= 0.0) throw Error(Errc::below_cutoff, "n*omega does not exceed kappa");
  return std::sqrt(arg);
}

double group_velocity(const RefractiveModel& refr, double kappa, double omega) {
  if (!refr.dispersive()) {
    return axial_wavenumber(refr, kappa, omega) / (refr.n0 * refr.n0 * omega);
  }
  const double h = 1e-6 * omega;
  const double dk = (axial_wavenumber(refr, kappa, omega + h) -
                     axial_wavenumber(refr, kappa, omega - h)) /
                    (2.0 * h);
  return 1.0 / dk;
}

double phase_velocity(const RefractiveModel& refr, double kappa, double omega) {
  return omega / axial_wavenumber(refr, kappa, omega);
}

ModeSpec ModeSpec::make(ModeKind kind, double omega, const RefractiveModel& refr,
                        double kappa_ratio, ProfileKind pk, double amplitude,
                        double modal_phase) {
  if (!(omega > 0.0)) throw Error(Errc::bad_config, "omega must be positive");
  if (!(kappa_ratio > 0.0)) throw Error(Errc::kappa_zero, "kappa ratio must be positive");
  const double n = refr.n(omega);
  if (!(n > 0.0)) throw Error(Errc::bad_config, "refractive index not positive");
  if (kappa_ratio >= 1.0) throw Error(Errc::below_cutoff, "kappa ratio must stay under 1");
  const double kappa = kappa_ratio * n * omega;

  ModeSpec s;
  s.kind = kind;
  s.omega = omega;
  s.refr = refr;
  s.profile = pk == ProfileKind::separable_cosine ? TransverseProfile::cosine(kappa)
                                                  : TransverseProfile::circular(kappa);
  s.k = axial_wavenumber(refr, kappa, omega);
  s.n = n;
  s.amplitude = amplitude;
  s.modal_phase = modal_phase;
  return s;
}

ModeSpec canonical_mode(ModeKind kind, double kappa_ratio) {
  return ModeSpec::make(kind, 2.0 * M_PI, RefractiveModel{}, kappa_ratio);
}

ModeSampler::ModeSampler(const ModeSpec& spec) : spec_(spec) {
  if (!(spec_.kappa() > 0.0)) throw Error(Errc::kappa_zero, "mode sampler needs kappa > 0");
}

FieldSample ModeSampler::operator()(double x, double y, double z, double t) const {
  const double a = spec_.profile.value(x, y);
  const Grad2 g = spec_.profile.grad(x, y);
  const double phase = spec_.omega * t - spec_.k * z + spec_.modal_phase;
  const cplx p = spec_.amplitude * cplx{std::cos(phase), std::sin(phase)};
  const double k = spec_.k;
  const double omega = spec_.omega;
  const double kap2 = spec_.kappa() * spec_.kappa();
  const double n = spec_.n;
  const TransverseVec grad{cplx{g.x, 0.0}, cplx{g.y, 0.0}};

  FieldSample f;
  if (spec_.kind == ModeKind::TE) {
    f.cBz = a * p;
    f.cBt = (cplx{0.0, -k / kap2} * p) * grad;
    f.Et = (cplx{0.0, omega / kap2} * p) * sigma_apply(grad);
    f.Ez = 0.0;
  } else {
    f.Ez = a * p / n;
    f.Et = (cplx{0.0, -k / (n * kap2)} * p) * grad;
    f.cBt = (cplx{0.0, -n * omega / kap2} * p) * sigma_apply(grad);
    f.cBz = 0.0;
  }
  return f;
}

ModeSampler te_mode_sampler(const ModeSpec& spec) {
  ModeSpec s = spec;
  s.kind = ModeKind::TE;
  return ModeSampler(s);
}

ModeSampler tm_mode_sampler(const ModeSpec& spec) {
  ModeSpec s = spec;
  s.kind = ModeKind::TM;
  return ModeSampler(s);
}

}  // namespace prahm
