#include "prahm/spectrum.hpp"

#include <cmath>
#include <utility>

#include "prahm/error.hpp"

namespace prahm {

void fft(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw Error(Errc::bad_config, "transform length must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
    const cplx wlen{std::cos(ang), std::sin(ang)};
    for (std::size_t i = 0; i < n; i += len) {
      cplx w{1.0, 0.0};
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cplx u = a[i + j];
        const cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= static_cast<double>(n);
}

SpectrumReport spectrum_uncertainty(const PacketSpec& spec) {
  const std::size_t ns = std::size_t{1} << 15;
  const double span = spec.params.period;
  const double L = 64.0 * span;
  const double dt = L / static_cast<double>(ns);
  const double amp = 2.0 * spec.mode.amplitude;

  std::vector<double> t(ns), e(ns);
  for (std::size_t i = 0; i < ns; ++i) {
    t[i] = (static_cast<double>(i) - static_cast<double>(ns / 2)) * dt;
    const Envelope env = envelope(spec, t[i]);
    e[i] = amp * env.value;
  }

  double s = 0.0, tbar = 0.0;
  for (std::size_t i = 0; i < ns; ++i) {
    const double w = e[i] * e[i];
    s += w;
    tbar += t[i] * w;
  }
  tbar /= s;
  double vt = 0.0;
  for (std::size_t i = 0; i < ns; ++i)
    vt += (t[i] - tbar) * (t[i] - tbar) * e[i] * e[i];
  const double sigma_t = std::sqrt(vt / s);

  std::vector<cplx> f(ns);
  for (std::size_t i = 0; i < ns; ++i) f[i] = {e[i], 0.0};
  fft(f);

  double sw = 0.0, wbar = 0.0;
  std::vector<double> freq(ns), power(ns);
  for (std::size_t i = 0; i < ns; ++i) {
    const double j = i < ns / 2 ? static_cast<double>(i)
                                : static_cast<double>(i) - static_cast<double>(ns);
    freq[i] = 2.0 * M_PI * j / L;
    power[i] = std::norm(f[i]);
    sw += power[i];
    wbar += freq[i] * power[i];
  }
  wbar /= sw;
  double vw = 0.0;
  for (std::size_t i = 0; i < ns; ++i)
    vw += (freq[i] - wbar) * (freq[i] - wbar) * power[i];
  const double sigma_omega = std::sqrt(vw / sw);

  SpectrumReport rep;
  rep.sigma_t = sigma_t;
  rep.sigma_omega = sigma_omega;
  rep.delta_t = 2.0 * std::sqrt(2.0) * sigma_t;
  rep.delta_omega = 2.0 * std::sqrt(2.0) * sigma_omega;
  rep.product = rep.delta_t * rep.delta_omega;
  return rep;
}

}  // namespace prahm
