#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "prahm/error.hpp"
#include "prahm/mode.hpp"
#include "prahm/packet.hpp"
#include "prahm/spectrum.hpp"

using namespace prahm;

namespace {

std::vector<cplx> random_signal(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> a(n);
  for (auto& x : a) x = {u(rng), u(rng)};
  return a;
}

std::vector<cplx> naive_dft(const std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  std::vector<cplx> out(n);
  const double sgn = inverse ? 1.0 : -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    cplx s{};
    for (std::size_t j = 0; j < n; ++j) {
      const double ang = sgn * 2.0 * M_PI * static_cast<double>(j * k) /
                         static_cast<double>(n);
      s += a[j] * cplx{std::cos(ang), std::sin(ang)};
    }
    out[k] = inverse ? s / static_cast<double>(n) : s;
  }
  return out;
}

}  // namespace

TEST_CASE("transform matches a direct summation") {
  for (std::size_t n : {std::size_t{8}, std::size_t{64}}) {
    auto a = random_signal(n, 101 + static_cast<unsigned>(n));
    const auto want = naive_dft(a, false);
    fft(a);
    for (std::size_t k = 0; k < n; ++k)
      CHECK(std::abs(a[k] - want[k]) <= 1e-10);
  }
}

TEST_CASE("inverse transform undoes the forward transform") {
  auto a = random_signal(128, 7);
  const auto original = a;
  fft(a);
  fft(a, true);
  for (std::size_t k = 0; k < a.size(); ++k)
    CHECK(std::abs(a[k] - original[k]) <= 1e-12);
}

TEST_CASE("transform length must be a power of two") {
  std::vector<cplx> empty;
  CHECK_THROWS_AS(fft(empty), Error);
  std::vector<cplx> odd(48, cplx{1.0, 0.0});
  try {
    fft(odd);
    FAIL("expected bad_config");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_config);
  }
}

TEST_CASE("impulse and constant inputs transform to known spectra") {
  std::vector<cplx> impulse(16, cplx{});
  impulse[0] = {1.0, 0.0};
  fft(impulse);
  for (const auto& x : impulse) CHECK(std::abs(x - cplx{1.0, 0.0}) <= 1e-14);

  std::vector<cplx> flat(16, cplx{1.0, 0.0});
  fft(flat);
  CHECK(std::abs(flat[0] - cplx{16.0, 0.0}) <= 1e-13);
  for (std::size_t k = 1; k < flat.size(); ++k) CHECK(std::abs(flat[k]) <= 1e-13);
}

TEST_CASE("tightest packet sits between pi and the loose classical bound") {
  const ModeSpec mode = canonical_mode(ModeKind::TE);
  const SpectrumReport s = spectrum_uncertainty(PacketSpec::make(mode, 0, 0.5 * M_PI, 1));

  CHECK(s.delta_t == doctest::Approx(2.0 * std::sqrt(2.0) * s.sigma_t).epsilon(1e-15));
  CHECK(s.delta_omega ==
        doctest::Approx(2.0 * std::sqrt(2.0) * s.sigma_omega).epsilon(1e-15));
  CHECK(s.product ==
        doctest::Approx(8.0 * s.sigma_t * s.sigma_omega).epsilon(1e-14));

  CHECK(s.product >= M_PI);
  CHECK(s.product <= 8.0 * M_PI);
  // pinned against the first verified run
  CHECK(s.product == doctest::Approx(4.545515033869621).epsilon(1e-12));
}

TEST_CASE("stretching the window narrows the spectrum by the same factor") {
  const ModeSpec mode = canonical_mode(ModeKind::TE);
  const SpectrumReport s1 = spectrum_uncertainty(PacketSpec::make(mode, 0, 0.5 * M_PI, 1));
  const SpectrumReport s4 = spectrum_uncertainty(PacketSpec::make(mode, 0, 0.5 * M_PI, 4));

  CHECK(s4.delta_t == doctest::Approx(4.0 * s1.delta_t).epsilon(1e-12));
  CHECK(s4.delta_omega == doctest::Approx(0.25 * s1.delta_omega).epsilon(1e-12));
  CHECK(s4.product == doctest::Approx(s1.product).epsilon(1e-12));
}

TEST_CASE("moments are independent of the field amplitude") {
  const ModeSpec unit = canonical_mode(ModeKind::TE);
  const ModeSpec loud = ModeSpec::make(ModeKind::TE, unit.omega, unit.refr, 0.6,
                                       ProfileKind::separable_cosine, 2.5);
  const SpectrumReport a = spectrum_uncertainty(PacketSpec::make(unit, 1, 0.5 * M_PI, 1));
  const SpectrumReport b = spectrum_uncertainty(PacketSpec::make(loud, 1, 0.5 * M_PI, 1));
  CHECK(a.product == doctest::Approx(b.product).epsilon(1e-13));
  CHECK(a.sigma_t == doctest::Approx(b.sigma_t).epsilon(1e-13));
}
