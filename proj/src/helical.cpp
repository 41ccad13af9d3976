#include "prahm/helical.hpp"

#include <cmath>

#include "prahm/reduce.hpp"

namespace prahm {

ModMeta meta_of(const HelicalModulation& hm) {
  return {hm.helicity * hm.Omega, -hm.helicity * hm.Omega / hm.v_h};
}

FieldSample apply_helical(const FieldSample& f, double angle) {
  const SigmaRotation r{angle};
  return {rotate(r, f.Et), rotate(r, f.cBt), f.Ez, f.cBz};
}

HelicalSampler::HelicalSampler(const ModeSpec& spec, const HelicalModulation& hm)
    : base_(spec), hm_(hm) {
  if (!(hm.Omega >= 0.0)) throw Error(Errc::bad_config, "modulation rate must be >= 0");
  if (hm.v_h == 0.0) throw Error(Errc::bad_config, "modulation speed must be nonzero");
  if (hm.helicity != 1 && hm.helicity != -1)
    throw Error(Errc::bad_config, "helicity must be +1 or -1");
}

FieldSample HelicalSampler::operator()(double x, double y, double z, double t) const {
  return apply_helical(base_(x, y, z, t), hm_.angle(t, z));
}

GridSpec sweep_grid_for(const ModeSpec& spec, double Omega) {
  const double eps = 5e-5;
  const double step = std::sqrt(6.0 * eps);
  const double vg = spec.v_group();
  const double wz = spec.k + Omega / (0.8 * vg);
  const double wt = spec.omega + Omega;
  const double wxy = spec.profile.kind == ProfileKind::separable_cosine
                         ? std::max(spec.profile.kx, spec.profile.ky)
                         : spec.kappa();
  GridSpec g;
  g.nx = 16;
  g.ny = 16;
  g.nz = 3;
  g.nt = 5;
  g.hx = step / wxy;
  g.hy = step / wxy;
  g.hz = step / wz;
  g.ht = step / wt;
  g.x0 = 0.131;
  g.y0 = 0.177;
  g.z0 = 0.0123 - 0.5 * g.hz * (g.nz - 1);
  g.t0 = 0.0371 - 0.5 * g.ht * (g.nt - 1);
  return g;
}

std::vector<SweepPoint> vh_sweep(const ModeSpec& spec, double Omega,
                                 const std::vector<double>& ratios, int helicity) {
  if (ratios.empty()) throw Error(Errc::bad_config, "sweep needs at least one ratio");
  const double vg = spec.v_group();
  const GridSpec g = sweep_grid_for(spec, Omega);
  std::vector<SweepPoint> out;
  out.reserve(ratios.size());
  for (double r : ratios) {
    if (!(r > 0.0)) throw Error(Errc::bad_config, "sweep ratios must be positive");
    const HelicalModulation hm{Omega, r * vg, helicity};
    const HelicalSampler sampler(spec, hm);
    const FieldGrid grid = materialize(g, sampler, spec, meta_of(hm));
    const ResidualReport rep = residual_for(spec.kind, grid);
    const double res = std::max(rep.entries[1].l2, rep.entries[2].l2);
    out.push_back({r, r * vg, res});
  }
  return out;
}

double classical_energy_density(const FieldGrid& f) {
  if (!(f.omega > 0.0))
    throw Error(Errc::bad_config, "energy density needs a carrier frequency");
  const double periods = f.g.nt * f.g.ht * f.omega / (2.0 * M_PI);
  if (std::abs(periods - 1.0) > 1e-9)
    throw Error(Errc::incomplete_period,
                "time window must cover exactly one carrier period");
  const std::size_t count = f.g.count();
  std::vector<double> dens(count);
  const double n2 = f.n * f.n;
  for (std::size_t q = 0; q < count; ++q) {
    const double e2 = f.Etx[q].real() * f.Etx[q].real() +
                      f.Ety[q].real() * f.Ety[q].real() +
                      f.Ez[q].real() * f.Ez[q].real();
    const double b2 = f.cBtx[q].real() * f.cBtx[q].real() +
                      f.cBty[q].real() * f.cBty[q].real() +
                      f.cBz[q].real() * f.cBz[q].real();
    dens[q] = 0.5 * (n2 * e2 + b2);
  }
  return pairwise_sum(dens) / static_cast<double>(count);
}

}  // namespace prahm
