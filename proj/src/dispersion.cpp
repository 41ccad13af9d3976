#include "prahm/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

#include "prahm/error.hpp"

namespace prahm {
namespace {

// k(w) for the packet's transverse eigenvalue; negative argument means the
// component cannot propagate.
bool propagating(const RefractiveModel& refr, double kappa, double w, double* k_out) {
  const double n = refr.n(w);
  const double arg = n * n * w * w - kappa * kappa;
  if (arg <= 0.0) return false;
  if (k_out) *k_out = std::sqrt(arg);
  return true;
}

}  // namespace

VelocityMeasure envelope_velocity_measure(const PacketSpec& spec,
                                          const std::vector<double>& z_probes) {
  std::set<double> distinct(z_probes.begin(), z_probes.end());
  if (distinct.size() < 2)
    throw Error(Errc::need_two_probes,
                "velocity fit needs at least two distinct probe distances");

  const double omega = spec.mode.omega;
  const double kappa = spec.mode.kappa();
  const RefractiveModel& refr = spec.mode.refr;
  const double Omega = spec.params.Omega;

  // In each circular-polarization channel the packet carries exactly two
  // sidebands, omega + Omega and omega - Omega.  Each propagates with the
  // wavenumber of its own frequency; a negative lower sideband folds onto
  // |omega - Omega| with a conjugated amplitude.
  const double w_up = omega + Omega;
  const double w_dn = omega - Omega;
  double k_up = 0.0, k_dn = 0.0;
  if (!propagating(refr, kappa, std::abs(w_dn), &k_dn))
    throw Error(Errc::below_cutoff, "lower sideband |omega - Omega| cannot propagate");
  if (!propagating(refr, kappa, w_up, &k_up))
    throw Error(Errc::below_cutoff, "upper sideband omega + Omega cannot propagate");

  const double w1 = w_up, k1 = k_up;
  const double w2 = std::abs(w_dn), k2 = k_dn;

  // Project the circular channels of the windowed transverse field onto the
  // positive-frequency line pair {w1, w2}.  Every pairwise beat of the four
  // field frequencies {+-w1, +-w2} completes a whole number of cycles over the
  // window, so the lines are orthogonal there and the midpoint projection is
  // exact to rounding.
  const double tau1 = spec.params.tau1, tau2 = spec.params.tau2;
  const double window = tau1 + tau2;
  const PacketSampler sampler(spec);
  const double x_ref = 0.31, y_ref = 0.23;
  const std::size_t nq = 4096;
  const double dq = window / static_cast<double>(nq);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  cplx bp1{}, bp2{}, bm1{}, bm2{};
  for (std::size_t q = 0; q < nq; ++q) {
    const double t = -tau1 + (static_cast<double>(q) + 0.5) * dq;
    const TransverseVec Et = sampler(x_ref, y_ref, 0.0, t).Et;
    const double sx = Et.x.real(), sy = Et.y.real();
    const cplx up = inv_sqrt2 * cplx{sx, -sy};
    const cplx um = inv_sqrt2 * cplx{sx, sy};
    const cplx e1 = std::polar(1.0, -w1 * t);
    const cplx e2 = std::polar(1.0, -w2 * t);
    bp1 += up * e1;
    bp2 += up * e2;
    bm1 += um * e1;
    bm2 += um * e2;
  }
  const double proj = dq / window;
  bp1 *= proj;
  bp2 *= proj;
  bm1 *= proj;
  bm2 *= proj;

  // The channel intensities beat at w1 - w2; the beat pattern, and with it the
  // node pair forming the packet boundary, translates rigidly with slowness
  // (k1 - k2)/(w1 - w2).
  const double beat_slowness = (k1 - k2) / (w1 - w2);

  const auto intensity = [&](double t, double z) {
    const cplx ph1 = std::polar(1.0, w1 * t - k1 * z);
    const cplx ph2 = std::polar(1.0, w2 * t - k2 * z);
    return std::norm(bp1 * ph1 + bp2 * ph2) + std::norm(bm1 * ph1 + bm2 * ph2);
  };

  // Shared time lattice covering the windowed packet at every probe.
  double shift_min = 0.0, shift_max = 0.0;
  for (double z : z_probes) {
    shift_min = std::min(shift_min, z * beat_slowness);
    shift_max = std::max(shift_max, z * beat_slowness);
  }
  const double t_lo = shift_min - tau1 - 0.5;
  const double t_hi = shift_max + tau2 + 0.5;
  const std::size_t ns = std::size_t{1} << 14;
  const double dt = (t_hi - t_lo) / static_cast<double>(ns);

  VelocityMeasure out;
  std::vector<double> shape_ref;
  const std::size_t nsh = 2048;
  for (double z : z_probes) {
    const double shift = z * beat_slowness;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < ns; ++i) {
      const double t = t_lo + (static_cast<double>(i) + 0.5) * dt;
      const double tau = t - shift;
      if (tau < -tau1 || tau > tau2) continue;
      const double I = intensity(t, z);
      num += t * I;
      den += I;
    }
    out.centroids.push_back(num / den);

    // window-relative, unit-norm envelope profile for the shape comparison
    std::vector<double> shape(nsh);
    double nrm = 0.0;
    for (std::size_t j = 0; j < nsh; ++j) {
      const double tau = -tau1 + (static_cast<double>(j) + 0.5) * window /
                                     static_cast<double>(nsh);
      shape[j] = std::sqrt(intensity(tau + shift, z));
      nrm += shape[j] * shape[j];
    }
    nrm = std::sqrt(nrm);
    for (auto& v : shape) v /= nrm;
    if (shape_ref.empty()) {
      shape_ref = shape;
    } else {
      double d2 = 0.0;
      for (std::size_t j = 0; j < nsh; ++j)
        d2 += (shape[j] - shape_ref[j]) * (shape[j] - shape_ref[j]);
      out.distortion = std::max(out.distortion, std::sqrt(d2));
    }
  }

  double cbar = 0.0, zbar = 0.0;
  for (std::size_t i = 0; i < z_probes.size(); ++i) {
    cbar += out.centroids[i];
    zbar += z_probes[i];
  }
  cbar /= static_cast<double>(z_probes.size());
  zbar /= static_cast<double>(z_probes.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < z_probes.size(); ++i) {
    sxy += (out.centroids[i] - cbar) * (z_probes[i] - zbar);
    sxx += (out.centroids[i] - cbar) * (out.centroids[i] - cbar);
  }
  out.velocity = sxy / sxx;
  return out;
}

}  // namespace prahm
