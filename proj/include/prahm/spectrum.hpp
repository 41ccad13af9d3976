#pragma once
// Envelope spectrum widths. Width convention: delta = 2*sqrt(2)*sigma, the
// full width at 1/e of the intensity peak for a Gaussian reference, so the
// bandwidth-duration product of the tightest packet lands at pi.
#include <vector>

#include "prahm/packet.hpp"
#include "prahm/sigma.hpp"

namespace prahm {

// In-place radix-2 transform; length must be a power of two. Forward uses
// the e^{-2 pi i j k / n} kernel; inverse divides by n.
void fft(std::vector<cplx>& a, bool inverse = false);

struct SpectrumReport {
  double sigma_t{0.0};
  double sigma_omega{0.0};
  double delta_t{0.0};
  double delta_omega{0.0};
  double product{0.0};  // delta_t * delta_omega = 8 sigma_t sigma_omega
};

// Samples the packet envelope on 2^15 points spanning 64 window lengths,
// takes intensity moments in time and, through the transform, in frequency.
SpectrumReport spectrum_uncertainty(const PacketSpec& spec);

}  // namespace prahm
