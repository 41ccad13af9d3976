#pragma once
// Run configuration: one JSON document, every key optional, defaults equal to
// the canonical mode (n = 1.5, omega = 2 pi, kappa ratio 0.6, phi = pi/2,
// Q = 1) so a bare invocation reproduces the reference runs.
#include <map>
#include <string>
#include <vector>

#include "prahm/grid.hpp"
#include "prahm/mode.hpp"

namespace prahm {

struct RunConfig {
  // mode
  ModeKind kind{ModeKind::TE};
  double n0{1.5};
  double n1{0.0};
  double omega_ref{2.0 * M_PI};
  double omega{2.0 * M_PI};
  double kappa_ratio{0.6};
  ProfileKind profile{ProfileKind::separable_cosine};
  double amplitude{1.0};
  double modal_phase{0.0};

  // evaluation grid
  int nx{32}, ny{32}, nz{3}, nt{64};
  double hx{0.015}, hy{0.015}, hz{0.005}, ht{0.005};

  // packet
  std::vector<int> M_list{0, 1, 2, 5};
  double phi{0.5 * M_PI};
  int Q{1};
  std::string map{"phi90"};

  // sweep
  double sweep_from{0.8};
  double sweep_to{1.2};
  int sweep_steps{41};
  double sweep_Omega_over_omega{0.5};

  // dispersion
  std::vector<double> z_probes{0.0, 5.0, 10.0, 15.0, 20.0};
  double n1_weak{2e-5};

  // txline
  double tx_Z0{377.0};
  double tx_omega{2.0 * M_PI};
  double tx_zeta{1.0};
  int tx_steps{512};

  std::map<std::string, double> tol_overrides;
  std::string out;

  RefractiveModel refractive() const { return {n0, n1, omega_ref}; }
  ModeSpec mode() const;

  // Canonical evaluation lattice: generic transverse offsets, z slab around
  // 0.0123, time window symmetric about zero.
  GridSpec grid() const;

  double tolerance(const std::string& check, double fallback) const;
};

RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

}  // namespace prahm
