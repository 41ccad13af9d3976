#pragma once
// Transverse amplitude profiles A(x,y) solving the membrane equation
// (d2/dx2 + d2/dy2) A + kappa^2 A = 0, plus a finite-difference residual
// probe used to confirm that property numerically.
#include "prahm/sigma.hpp"

namespace prahm {

enum class ProfileKind { separable_cosine, bessel_circular };

struct Grad2 {
  double x{0.0};
  double y{0.0};
};

struct TransverseProfile {
  ProfileKind kind{ProfileKind::separable_cosine};
  double kappa{0.0};
  double kx{0.0};  // cosine split, kx^2 + ky^2 = kappa^2
  double ky{0.0};
  int m{0};  // azimuthal index for the circular kind

  // Equal-split product of cosines, kx = ky = kappa / sqrt(2).
  static TransverseProfile cosine(double kappa);
  // Explicit split; ky is derived from the constraint.
  static TransverseProfile cosine_split(double kappa, double kx);
  static TransverseProfile circular(double kappa, int m = 0);

  double value(double x, double y) const;
  Grad2 grad(double x, double y) const;

  // Transverse periodic cell sizes (cosine kind only; zero otherwise).
  double cell_x() const;
  double cell_y() const;
};

// max |laplacian A + kappa^2 A| / (kappa^2 max |A|) over an interior sample
// box, with a 5-point stencil of step h. Second order in h.
double profile_helmholtz_residual(const TransverseProfile& p, double h);

}  // namespace prahm
