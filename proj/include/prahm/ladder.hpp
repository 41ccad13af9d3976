#pragma once
// Discrete ladder over the packet family index M: a state is a rotation-clock
// field coeff * Theta((M + 1/2) omega tau) applied to a fixed transverse
// vector. Promotion and demotion rescale by sqrt counting factors; their
// commutator is the identity and the half-rate clock carries energy M + 1/2.
#include <algorithm>
#include <cmath>
#include <vector>

#include "prahm/sigma.hpp"

namespace prahm {

struct LadderState {
  int M{0};
  double coeff{1.0};
  TransverseVec base{cplx{1.0, 0.0}, cplx{0.0, 0.0}};
  double omega{2.0 * M_PI};

  bool zero() const { return coeff == 0.0; }
};

inline LadderState promote(const LadderState& s) {
  return {s.M + 1, s.coeff * std::sqrt(s.M + 1.0), s.base, s.omega};
}

inline LadderState demote(const LadderState& s) {
  if (s.M == 0) return {0, 0.0, s.base, s.omega};
  return {s.M - 1, s.coeff * std::sqrt(static_cast<double>(s.M)), s.base, s.omega};
}

inline TransverseVec ladder_field(const LadderState& s, double tau) {
  return s.coeff * rotate(SigmaRotation{(s.M + 0.5) * s.omega * tau}, s.base);
}

inline double energy_eigenvalue(const LadderState& s) { return s.M + 0.5; }

// |coeff(demote(promote(s))) - coeff(promote(demote(s)))| relative to coeff,
// which the counting factors force to one.
inline double commutator_check(const LadderState& s) {
  if (s.zero()) return 0.0;
  const double up_down = demote(promote(s)).coeff;
  const double down_up = promote(demote(s)).coeff;
  return std::abs((up_down - down_up) / s.coeff - 1.0);
}

// Applies the counting operation differentially: unwind the half-rate clock,
// differentiate in tau, rewind, scale by -sigma/omega. The result must be
// M times the state field; returns the worst relative deviation over taus.
inline double number_check(const LadderState& s, const std::vector<double>& taus,
                           double ht = 0.0) {
  if (s.zero()) return 0.0;
  if (ht <= 0.0) ht = 1e-4 * 2.0 * M_PI / ((s.M + 1) * s.omega);
  double worst = 0.0;
  double ref = 0.0;
  for (double tau : taus) {
    auto unwound = [&](double u) {
      return rotate(SigmaRotation{-0.5 * s.omega * u}, ladder_field(s, u));
    };
    const TransverseVec diff =
        (1.0 / (2.0 * ht)) * (unwound(tau + ht) - unwound(tau - ht));
    const TransverseVec counted =
        rotate(SigmaRotation{0.5 * s.omega * tau},
               (-1.0 / s.omega) * sigma_apply(diff));
    const TransverseVec expect = static_cast<double>(s.M) * ladder_field(s, tau);
    worst = std::max(worst, norm(counted - expect));
    ref = std::max(ref, norm(ladder_field(s, tau)));
  }
  return ref > 0.0 ? worst / ref : worst;
}

}  // namespace prahm
