#include "prahm/profile.hpp"

#include <algorithm>
#include <cmath>

#include "prahm/bessel.hpp"
#include "prahm/error.hpp"

namespace prahm {

TransverseProfile TransverseProfile::cosine(double kappa) {
  return cosine_split(kappa, kappa / std::sqrt(2.0));
}

TransverseProfile TransverseProfile::cosine_split(double kappa, double kx) {
  if (!(kappa > 0.0)) throw Error(Errc::kappa_zero, "profile needs kappa > 0");
  if (!(kx > 0.0) || kx >= kappa)
    throw Error(Errc::bad_config, "cosine split needs 0 < kx < kappa");
  TransverseProfile p;
  p.kind = ProfileKind::separable_cosine;
  p.kappa = kappa;
  p.kx = kx;
  p.ky = std::sqrt(kappa * kappa - kx * kx);
  return p;
}

TransverseProfile TransverseProfile::circular(double kappa, int m) {
  if (!(kappa > 0.0)) throw Error(Errc::kappa_zero, "profile needs kappa > 0");
  if (m < 0) throw Error(Errc::bad_config, "circular profile needs m >= 0");
  TransverseProfile p;
  p.kind = ProfileKind::bessel_circular;
  p.kappa = kappa;
  p.m = m;
  return p;
}

double TransverseProfile::value(double x, double y) const {
  if (kind == ProfileKind::separable_cosine)
    return std::cos(kx * x) * std::cos(ky * y);
  const double r = std::hypot(x, y);
  const double phi = std::atan2(y, x);
  return bessel_jn(m, kappa * r) * std::cos(m * phi);
}

Grad2 TransverseProfile::grad(double x, double y) const {
  if (kind == ProfileKind::separable_cosine) {
    return {-kx * std::sin(kx * x) * std::cos(ky * y),
            -ky * std::cos(kx * x) * std::sin(ky * y)};
  }
  const double r = std::hypot(x, y);
  if (r < 1e-12) {
    // J_m(kr) cos(m phi) ~ (kr/2)^m / m! * cos(m phi): only m = 1 has a
    // nonzero gradient at the axis, where it equals (kappa/2, 0).
    if (m == 1) return {0.5 * kappa, 0.0};
    return {0.0, 0.0};
  }
  const double phi = std::atan2(y, x);
  const double c = std::cos(phi), s = std::sin(phi);
  const double dr = kappa * bessel_jn_deriv(m, kappa * r) * std::cos(m * phi);
  const double dphi_over_r = -m * bessel_jn(m, kappa * r) * std::sin(m * phi) / r;
  return {c * dr - s * dphi_over_r, s * dr + c * dphi_over_r};
}

double TransverseProfile::cell_x() const {
  return kind == ProfileKind::separable_cosine ? 2.0 * M_PI / kx : 0.0;
}

double TransverseProfile::cell_y() const {
  return kind == ProfileKind::separable_cosine ? 2.0 * M_PI / ky : 0.0;
}

double profile_helmholtz_residual(const TransverseProfile& p, double h) {
  // Interior box away from the circular profile's axis so every stencil sees
  // smooth values; 17 x 17 probe points are plenty for a max norm.
  const int np = 17;
  const double lo = 0.05, hi = 0.45;
  double worst = 0.0;
  double amax = 0.0;
  for (int j = 0; j < np; ++j) {
    for (int i = 0; i < np; ++i) {
      const double x = lo + (hi - lo) * i / (np - 1);
      const double y = lo + (hi - lo) * j / (np - 1);
      const double a = p.value(x, y);
      const double lap = (p.value(x + h, y) + p.value(x - h, y) +
                          p.value(x, y + h) + p.value(x, y - h) - 4.0 * a) /
                         (h * h);
      worst = std::max(worst, std::abs(lap + p.kappa * p.kappa * a));
      amax = std::max(amax, std::abs(a));
    }
  }
  return worst / (p.kappa * p.kappa * amax);
}

}  // namespace prahm
