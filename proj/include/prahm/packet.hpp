#pragma once
// Resonant wave packets: a retarded and an advanced rotation of the same mode
// added inside a hard window of the retarded time tau = t - z/v_group. Window
// bounds come from requiring the combined transverse field to vanish at both
// ends while the window spans a whole number of carrier periods.
#include <vector>

#include "prahm/mode.hpp"

namespace prahm {

struct PacketParams {
  double Omega{0.0};              // (2M+1) omega / (2Q)
  double tau1{0.0};               // window start is -tau1
  double tau2{0.0};               // window end; tau1 + tau2 = period exactly
  double period{0.0};             // 2 pi Q / omega
  double degenerate_period{0.0};  // companion family span, 2 M pi / Omega
};

// Throws PhiOutOfRange unless |phi| < (2M+1) pi.
PacketParams packet_params(int M, double phi, double omega, int Q = 1);

struct PacketSpec {
  ModeSpec mode{};
  int M{0};
  int Q{1};
  double phi{0.0};
  PacketParams params{};
  double v_g{0.0};

  static PacketSpec make(const ModeSpec& mode, int M, double phi, int Q = 1);
};

// Transverse packet factor at retarded time tau: the field equals
// 2 * value * Theta(angle) applied to the bare transverse field
// (value = cos(Omega tau - phi/2) inside the window, 0 outside).
struct Envelope {
  double angle{0.0};
  double value{0.0};
};

Envelope envelope(const PacketSpec& spec, double tau);

// Samples the two-term form directly: Theta(Omega tau) V + Theta(phi -
// Omega tau) V on transverse pairs, doubled axial components, hard window.
class PacketSampler {
 public:
  explicit PacketSampler(const PacketSpec& spec);
  FieldSample operator()(double x, double y, double z, double t) const;
  const PacketSpec& spec() const { return spec_; }

 private:
  PacketSpec spec_;
  ModeSampler base_;
};

struct SynthRow {
  double tau{0.0};
  double envelope{0.0};
  FieldSample f{};
};

// Packet time series at a fixed transverse reference point on the z = 0
// plane; rows run from tau = -tau1 to tau2 inclusive with exact endpoints.
std::vector<SynthRow> synth_packet(const PacketSpec& spec, int steps,
                                   double x_ref = 0.31, double y_ref = 0.23);

// Window-summed |transverse|^2 of the combined packet against the sum of its
// retarded and advanced parts; the cross term covers whole cycles, so the
// midpoint sum cancels it.
struct AdditivityReport {
  double lhs{0.0};
  double rhs{0.0};
  double deviation{0.0};  // |lhs - rhs| / rhs
};

AdditivityReport energy_additivity_check(const PacketSpec& spec);

// Magnitude of the half-rate counter-rotated pair (1 + Theta(phi)) V across
// tau: constant 2|cos(phi/2)| |V|, identically zero when phi = pi.
struct DemotionReport {
  double mean{0.0};
  double rel_std{0.0};
  int zero_count{0};
  bool degenerate_cancellation{false};
};

DemotionReport ground_demotion_dispersal(const PacketSpec& spec);

}  // namespace prahm
