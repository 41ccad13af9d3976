#pragma once
// Finite-difference residuals of the guided-wave field equations on
// materialized grids, including rotation-aware forms for helically modulated
// fields, a light-cone recombination of the same system, and the
// E-negation/time-reversal symmetry map.
//
// Each family checks its own three-equation subsystem:
//   TE: transverse flux divergence, axial induction, transverse circulation
//   TM: transverse displacement divergence (with charge), axial circulation
//       (with axial current), transverse induction
// Rotation-aware evaluation undoes the carried rotation before transverse
// divergence stencils and applies it to scalar-gradient results; axial and
// temporal stencils act on the rotated fields directly.
#include <string>
#include <vector>

#include "prahm/grid.hpp"

namespace prahm {

// Optional source terms; vectors are grid-sized or empty (treated as zero).
struct Sources {
  std::vector<cplx> Jtx, Jty, Jz, rho;
  bool empty() const {
    return Jtx.empty() && Jty.empty() && Jz.empty() && rho.empty();
  }
};

struct ResidualEntry {
  std::string name;
  double l2{0.0};    // rms over interior points, normalized by scale
  double linf{0.0};  // max over interior points, normalized by scale
};

struct ResidualReport {
  std::vector<ResidualEntry> entries;
  double scale{0.0};  // n * omega * max field magnitude of the source grid
  double hx{0.0}, hy{0.0}, hz{0.0}, ht{0.0};

  double l2_total() const;
  const ResidualEntry& entry(const std::string& name) const;
};

struct ResidualOptions {
  bool parallel{true};
};

// Per-point residual values (grid-sized, zero outside the interior), kept on
// request so callers can turn residuals back into effective sources.
struct ResidualData {
  std::vector<cplx> first;   // first scalar entry (divergence-type)
  std::vector<cplx> second;  // second scalar entry (axial circulation)
  std::vector<cplx> thirdx;  // transverse circulation pair
  std::vector<cplx> thirdy;
};

ResidualReport residual_te(const FieldGrid& f, const Sources& src = {},
                           const ResidualOptions& opts = {},
                           ResidualData* keep = nullptr);
ResidualReport residual_tm(const FieldGrid& f, const Sources& src = {},
                           const ResidualOptions& opts = {},
                           ResidualData* keep = nullptr);
ResidualReport residual_for(ModeKind kind, const FieldGrid& f,
                            const Sources& src = {},
                            const ResidualOptions& opts = {},
                            ResidualData* keep = nullptr);

// log2 ratio of totals for a spacing-halved pair of reports.
double convergence_order(const ResidualReport& coarse, const ResidualReport& fine);

// Light-cone recombination: F< and F> mix the transverse pair along z -/+ t,
// S carries the axial component. Defined for unmodulated grids.
struct LightConeGrid {
  GridSpec g{};
  double n{1.5};
  double omega{0.0};
  ModeKind kind{ModeKind::TE};
  double scale{0.0};  // normalization scale inherited from the source grid
  std::vector<cplx> Fpx, Fpy, Fmx, Fmy, S;
};

LightConeGrid lightcone_decompose(const FieldGrid& f, ModeKind kind);
FieldGrid lightcone_reconstruct(const LightConeGrid& lc);

// Three light-cone residual entries; algebraically equivalent to the standard
// family subsystem (sums/differences of the scalar pair, a rotated multiple
// of the vector equation), so norms agree within a factor of two.
ResidualReport residual_lightcone(const LightConeGrid& lc,
                                  const ResidualOptions& opts = {});

// E -> -E with the time axis reversed; an exact symmetry of the field
// equations. Requires a time window centered on t = 0.
FieldGrid sigma_time_reverse(const FieldGrid& f);

}  // namespace prahm
