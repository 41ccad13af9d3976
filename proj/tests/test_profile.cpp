#include <cmath>
#include <random>

#include "doctest.h"
#include "prahm/error.hpp"
#include "prahm/profile.hpp"

using namespace prahm;

TEST_CASE("cosine profile splits kappa evenly") {
  const TransverseProfile p = TransverseProfile::cosine(2.0);
  CHECK(p.kx == doctest::Approx(2.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(p.ky == doctest::Approx(p.kx).epsilon(1e-15));
  CHECK(p.kx * p.kx + p.ky * p.ky == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(p.value(0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.cell_x() == doctest::Approx(2.0 * M_PI / p.kx).epsilon(1e-15));
  CHECK(p.cell_y() == doctest::Approx(2.0 * M_PI / p.ky).epsilon(1e-15));
}

TEST_CASE("explicit split derives the other wavenumber") {
  const TransverseProfile p = TransverseProfile::cosine_split(2.5, 1.0);
  CHECK(p.kx == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.ky == doctest::Approx(std::sqrt(2.5 * 2.5 - 1.0)).epsilon(1e-14));
}

TEST_CASE("membrane equation residual is small and second order") {
  for (const TransverseProfile& p :
       {TransverseProfile::cosine(5.654866776461628),
        TransverseProfile::circular(5.654866776461628, 0),
        TransverseProfile::circular(3.1, 2)}) {
    const double r1 = profile_helmholtz_residual(p, 0.01);
    const double r2 = profile_helmholtz_residual(p, 0.005);
    CHECK(r1 <= 1e-3);
    // halving the stencil step divides the residual by about four
    CHECK(std::abs(std::log2(r1 / r2) - 2.0) <= 0.1);
  }
}

TEST_CASE("gradients agree with central differences") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> xs(-1.0, 1.0);
  const double h = 1e-6;
  for (const TransverseProfile& p :
       {TransverseProfile::cosine(4.0), TransverseProfile::cosine_split(4.0, 3.0),
        TransverseProfile::circular(4.0, 0), TransverseProfile::circular(4.0, 1),
        TransverseProfile::circular(4.0, 3)}) {
    for (int i = 0; i < 12; ++i) {
      const double x = xs(rng), y = xs(rng);
      const Grad2 g = p.grad(x, y);
      const double gx_fd = (p.value(x + h, y) - p.value(x - h, y)) / (2.0 * h);
      const double gy_fd = (p.value(x, y + h) - p.value(x, y - h)) / (2.0 * h);
      CHECK(std::abs(g.x - gx_fd) <= 2e-8);
      CHECK(std::abs(g.y - gy_fd) <= 2e-8);
    }
  }
}

TEST_CASE("circular profile carries the azimuthal index") {
  const TransverseProfile p = TransverseProfile::circular(3.0, 2);
  // m-fold sign flip under rotation by pi/m around the axis
  const double r = 0.7;
  const double a = p.value(r, 0.0);
  const double b = p.value(r * std::cos(M_PI / 2), r * std::sin(M_PI / 2));
  CHECK(a == doctest::Approx(-b).epsilon(1e-12));
}

TEST_CASE("cell sizes are zero for the circular kind") {
  const TransverseProfile p = TransverseProfile::circular(3.0, 0);
  CHECK(p.cell_x() == 0.0);
  CHECK(p.cell_y() == 0.0);
}

TEST_CASE("invalid constructions are rejected") {
  CHECK_THROWS_WITH_AS(TransverseProfile::cosine(0.0),
                       doctest::Contains("kappa"), Error);
  CHECK_THROWS_AS(TransverseProfile::cosine_split(2.0, 2.0), Error);
  CHECK_THROWS_AS(TransverseProfile::cosine_split(2.0, -0.5), Error);
  CHECK_THROWS_AS(TransverseProfile::circular(1.0, -1), Error);
}
