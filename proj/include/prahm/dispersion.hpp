#pragma once
// Spectral propagation experiment: project the packet's transverse field at a
// launch-plane reference point onto its two sideband lines omega +/- Omega in
// the circular-polarization basis, advance each line by the axial wavenumber
// of its own frequency, resynthesize at a set of probe distances, and fit the
// envelope centroid drift to measure the packet velocity.
#include <vector>

#include "prahm/packet.hpp"

namespace prahm {

struct VelocityMeasure {
  double velocity{0.0};
  double distortion{0.0};  // worst L2 shape change of the recentered envelope
  std::vector<double> centroids;
};

// Needs at least two distinct probe distances. Throws below cutoff when a
// principal sideband omega +/- Omega cannot propagate.
VelocityMeasure envelope_velocity_measure(const PacketSpec& spec,
                                          const std::vector<double>& z_probes);

}  // namespace prahm
