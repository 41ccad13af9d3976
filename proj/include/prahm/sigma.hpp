#pragma once
// 2x2 real rotation algebra generated by sigma = [0 -1; 1 0], complex
// transverse 2-vectors, and the phasor convention zeta = omega*t - k*z + phase0.
// The imaginary unit lives only in field phasors; rotations stay real.
#include <cmath>
#include <complex>

namespace prahm {

using cplx = std::complex<double>;

struct TransverseVec {
  cplx x{0.0, 0.0};
  cplx y{0.0, 0.0};

  TransverseVec& operator+=(const TransverseVec& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  TransverseVec& operator-=(const TransverseVec& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
};

inline TransverseVec operator+(TransverseVec a, const TransverseVec& b) { return a += b; }
inline TransverseVec operator-(TransverseVec a, const TransverseVec& b) { return a -= b; }
inline TransverseVec operator*(const cplx& s, const TransverseVec& v) { return {s * v.x, s * v.y}; }
inline TransverseVec operator*(double s, const TransverseVec& v) { return {s * v.x, s * v.y}; }
inline TransverseVec operator-(const TransverseVec& v) { return {-v.x, -v.y}; }

// sigma F = (-F.y, F.x): a quarter turn. sigma^2 = -1, sigma^tr = -sigma.
inline TransverseVec sigma_apply(const TransverseVec& f) { return {-f.y, f.x}; }

// Transpose product, no conjugation; callers conjugate explicitly when needed.
inline cplx inner(const TransverseVec& f, const TransverseVec& g) {
  return f.x * g.x + f.y * g.y;
}

inline double norm(const TransverseVec& f) {
  return std::sqrt(std::norm(f.x) + std::norm(f.y));
}

// Theta = cos(angle) + sigma*sin(angle), stored as the angle so composition
// stays exact under repeated use.
struct SigmaRotation {
  double angle{0.0};
};

inline SigmaRotation compose(SigmaRotation a, SigmaRotation b) { return {a.angle + b.angle}; }
inline SigmaRotation transpose(SigmaRotation r) { return {-r.angle}; }

inline TransverseVec rotate(SigmaRotation r, const TransverseVec& f) {
  const double c = std::cos(r.angle);
  const double s = std::sin(r.angle);
  return {c * f.x - s * f.y, s * f.x + c * f.y};
}

// Deviation of the rotation-invariance identity: rotated sigma-pairs keep the
// transpose product of the unrotated vectors.
inline double rotation_identity_check(double theta, const TransverseVec& f,
                                      const TransverseVec& g) {
  const SigmaRotation r{theta};
  const cplx lhs = inner(rotate(r, sigma_apply(f)), rotate(r, sigma_apply(g)));
  return std::abs(lhs - inner(f, g));
}

struct PhasorConvention {
  double omega{0.0};
  double k{0.0};
  double phase0{0.0};

  double phase(double t, double z) const { return omega * t - k * z + phase0; }
  cplx phasor(double t, double z) const {
    const double p = phase(t, z);
    return {std::cos(p), std::sin(p)};
  }
};

}  // namespace prahm
