#include "prahm/packet.hpp"

#include <cmath>

#include "prahm/error.hpp"

namespace prahm {

PacketParams packet_params(int M, double phi, double omega, int Q) {
  if (M < 0) throw Error(Errc::bad_config, "packet index M must be >= 0");
  if (Q < 1) throw Error(Errc::bad_config, "packet scale Q must be >= 1");
  if (!(omega > 0.0)) throw Error(Errc::bad_config, "omega must be positive");
  if (!(std::abs(phi) < (2 * M + 1) * M_PI))
    throw Error(Errc::phi_out_of_range, "|phi| must stay under (2M+1) pi");
  PacketParams p;
  p.Omega = (2 * M + 1) * omega / (2.0 * Q);
  p.period = 2.0 * M_PI * Q / omega;
  p.tau1 = ((M + 0.5) * M_PI - 0.5 * phi) / p.Omega;
  p.tau2 = p.period - p.tau1;
  p.degenerate_period = 2.0 * M * M_PI / p.Omega;
  return p;
}

PacketSpec PacketSpec::make(const ModeSpec& mode, int M, double phi, int Q) {
  PacketSpec s;
  s.mode = mode;
  s.M = M;
  s.Q = Q;
  s.phi = phi;
  s.params = packet_params(M, phi, mode.omega, Q);
  s.v_g = mode.v_group();
  return s;
}

Envelope envelope(const PacketSpec& spec, double tau) {
  if (tau < -spec.params.tau1 || tau > spec.params.tau2) return {0.5 * spec.phi, 0.0};
  return {0.5 * spec.phi, std::cos(spec.params.Omega * tau - 0.5 * spec.phi)};
}

PacketSampler::PacketSampler(const PacketSpec& spec) : spec_(spec), base_(spec.mode) {}

FieldSample PacketSampler::operator()(double x, double y, double z, double t) const {
  const double tau = t - z / spec_.v_g;
  if (tau < -spec_.params.tau1 || tau > spec_.params.tau2) return {};
  const FieldSample f = base_(x, y, z, t);
  const SigmaRotation ret{spec_.params.Omega * tau};
  const SigmaRotation adv{spec_.phi - spec_.params.Omega * tau};
  FieldSample out;
  out.Et = rotate(ret, f.Et) + rotate(adv, f.Et);
  out.cBt = rotate(ret, f.cBt) + rotate(adv, f.cBt);
  out.Ez = 2.0 * f.Ez;
  out.cBz = 2.0 * f.cBz;
  return out;
}

std::vector<SynthRow> synth_packet(const PacketSpec& spec, int steps, double x_ref,
                                   double y_ref) {
  if (steps < 2) throw Error(Errc::bad_config, "synthesis needs at least two rows");
  const PacketSampler sampler(spec);
  std::vector<SynthRow> rows;
  rows.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    double tau;
    if (i == 0)
      tau = -spec.params.tau1;
    else if (i == steps - 1)
      tau = spec.params.tau2;
    else
      tau = -spec.params.tau1 + spec.params.period * i / (steps - 1);
    SynthRow row;
    row.tau = tau;
    row.envelope = envelope(spec, tau).value;
    row.f = sampler(x_ref, y_ref, 0.0, tau);
    rows.push_back(row);
  }
  return rows;
}

AdditivityReport energy_additivity_check(const PacketSpec& spec) {
  const PacketSampler packet(spec);
  const ModeSampler base(spec.mode);
  const int nq = 256 * spec.Q;
  const double x = 0.31, y = 0.23;
  double lhs = 0.0, rhs = 0.0;
  for (int i = 0; i < nq; ++i) {
    const double tau = -spec.params.tau1 + (i + 0.5) * spec.params.period / nq;
    const FieldSample p = packet(x, y, 0.0, tau);
    const FieldSample b = base(x, y, 0.0, tau);
    lhs += std::norm(p.Et.x) + std::norm(p.Et.y) + std::norm(p.cBt.x) +
           std::norm(p.cBt.y);
    rhs += 2.0 * (std::norm(b.Et.x) + std::norm(b.Et.y) + std::norm(b.cBt.x) +
                  std::norm(b.cBt.y));
  }
  AdditivityReport rep;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.deviation = rhs > 0.0 ? std::abs(lhs - rhs) / rhs : std::abs(lhs - rhs);
  return rep;
}

DemotionReport ground_demotion_dispersal(const PacketSpec& spec) {
  const ModeSampler base(spec.mode);
  const double omega = spec.mode.omega;
  const SigmaRotation by_phi{spec.phi};
  const int nq = 256;
  const double x = 0.31, y = 0.23;
  std::vector<double> mags(nq);
  double vbar = 0.0;
  for (int i = 0; i < nq; ++i) {
    const double tau = (i + 0.5) * (2.0 * M_PI / omega) / nq;
    const TransverseVec v = base(x, y, 0.0, tau).Et;
    const TransverseVec pair = v + rotate(by_phi, v);
    mags[i] = norm(rotate(SigmaRotation{-0.5 * omega * tau}, pair));
    vbar += norm(v);
  }
  vbar /= nq;
  double mean = 0.0;
  for (double m : mags) mean += m;
  mean /= nq;
  double var = 0.0;
  for (double m : mags) var += (m - mean) * (m - mean);
  const double sd = std::sqrt(var / nq);

  DemotionReport rep;
  rep.mean = mean;
  rep.degenerate_cancellation = mean < 1e-12 * vbar;
  rep.rel_std = rep.degenerate_cancellation ? 0.0 : sd / mean;
  rep.zero_count = 0;
  for (double m : mags)
    if (m <= 1e-12 * vbar) ++rep.zero_count;
  return rep;
}

}  // namespace prahm
