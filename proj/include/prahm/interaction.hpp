#pragma once
// Retarded/advanced field pairings: the effective current that closes a
// rotating field back into an exact solution of the sourced equations, a
// sampled power-balance identity coupling a retarded field to an advanced
// companion, the window-averaged interaction energy of resonant packets, and
// the complex power bookkeeping of a single mode.
#include <vector>

#include "prahm/grid.hpp"
#include "prahm/helical.hpp"
#include "prahm/mode.hpp"
#include "prahm/packet.hpp"
#include "prahm/residual.hpp"

namespace prahm {

// Advanced companion maps. phi0 sends {E, cB} to {-E, cB}; phi90 sends them
// to {-sigma E, sigma cB}. Axial components follow the electric sign.
enum class AdvancedMap { phi0, phi90 };

FieldSample apply_advanced(const FieldSample& f, AdvancedMap map);

// Reverses the rotation sense of a helical modulation, so that pairing the
// original rotation over any tau increment with the reversed one gives the
// identity. Involutive.
HelicalModulation star_reverse(const HelicalModulation& hm);

// Per-point currents that cancel the circulation defects of a field grid:
// Jt closes the transverse circulation equation, Jz the axial one. Feeding
// them back through the residual operators zeroes those equations exactly.
struct EffectiveCurrent {
  std::vector<cplx> Jtx, Jty;  // transverse circulation defect, negated
  std::vector<cplx> Jz;        // axial circulation defect, negated
  double max_norm{0.0};        // largest per-point current magnitude
  double scale{0.0};           // normalization scale of the source grid

  Sources as_sources() const;
};

EffectiveCurrent effective_advanced_current(const FieldGrid& gridA);

// Quadrature and stencil controls for the sampled power-balance identity.
// The transverse cell and the temporal period must both be set; for_mode
// fills them from a mode's profile cell and carrier period.
struct BalanceOptions {
  int nq_xy{24};
  int nq_t{32};
  double h{1e-3};  // finite-difference step, decoupled from the quadrature
  double z_center{0.0123};
  double cell_x{0.0};
  double cell_y{0.0};
  double period{0.0};

  static BalanceOptions for_mode(const ModeSpec& spec);
};

struct InteractionReport {
  double boundary{0.0};   // axial flux derivative, cell/period averaged
  double volume{0.0};     // rotation-rate-weighted quadratic form
  double source{0.0};     // paired current/co-current functionals
  double imbalance{0.0};  // |boundary + volume - source|
  double scale{0.0};      // rotation rate times mean bilinear magnitude
  double rel{0.0};        // imbalance / scale
};

// Power-balance identity for a retarded/advanced pair of smooth fields
// rotating at rate Omega: the axial flux derivative plus the Omega-weighted
// volume form equals the paired source functionals, for arbitrary smooth
// fields, not only solutions. Evaluated on the real parts by midpoint
// quadrature over one transverse cell and one period at a fixed z, with
// central differences of step opts.h.
InteractionReport helical_power_balance(const FieldFn& retarded,
                                        const FieldFn& advanced, double Omega,
                                        double v, double n,
                                        const BalanceOptions& opts);

// Grid form of the same identity: both fields on one lattice, periodic in
// x, y, and t, quadrature over every node of the center z slab, wraparound
// stencils transversally and in time, slab stencils in z. v = 0 means take
// the rotation speed from the retarded grid's modulation metadata.
InteractionReport helical_power_balance(const FieldGrid& gridR,
                                        const FieldGrid& gridA, double Omega,
                                        double v = 0.0);

// Window-averaged interaction energy of a packet with its advanced
// companion under the given map; proportional to M + 1/2 for phi90 and
// identically zero for phi0.
struct InteractionEnergy {
  double value{0.0};
  int M{0};
  double per_M_constant{0.0};  // value / (M + 1/2)
};

InteractionEnergy interaction_energy(const PacketSpec& spec, AdvancedMap map);

// Complex power bookkeeping of a modal grid over its transverse cell: the
// axial derivative of the complex flux balances the stored-energy mismatch,
// and the electric and magnetic halves agree for a guided mode.
struct PoyntingReport {
  double imbalance{0.0};  // normalized by omega times the stored energy
  double electric{0.0};   // n^2 <|E|^2> over the center slab
  double magnetic{0.0};   // <|cB|^2> over the center slab
};

PoyntingReport complex_poynting_balance(const FieldGrid& grid);

}  // namespace prahm
