#pragma once
// Structured space-time sample lattices and materialized field grids.
// Storage index is ((it*nz + iz)*ny + iy)*nx + ix; fills are embarrassingly
// parallel per point, so the OpenMP fill is bitwise identical to the serial
// reference fill kept alongside it.
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "prahm/error.hpp"
#include "prahm/mode.hpp"
#include "prahm/sigma.hpp"

namespace prahm {

struct GridSpec {
  int nx{1}, ny{1}, nz{1}, nt{1};
  double hx{0.0}, hy{0.0}, hz{0.0}, ht{0.0};
  double x0{0.0}, y0{0.0}, z0{0.0}, t0{0.0};
  bool periodic_xy{false};
  bool periodic_t{false};

  double x(int i) const { return x0 + hx * i; }
  double y(int j) const { return y0 + hy * j; }
  double z(int k) const { return z0 + hz * k; }
  double t(int l) const { return t0 + ht * l; }
  std::size_t count() const {
    return static_cast<std::size_t>(nx) * ny * nz * nt;
  }
  double t_center() const { return t0 + 0.5 * ht * (nt - 1); }

  static GridSpec centered(int nx, int ny, int nz, int nt, double hx, double hy,
                           double hz, double ht, double xc = 0.0, double yc = 0.0,
                           double zc = 0.0, double tc = 0.0) {
    GridSpec g;
    g.nx = nx; g.ny = ny; g.nz = nz; g.nt = nt;
    g.hx = hx; g.hy = hy; g.hz = hz; g.ht = ht;
    g.x0 = xc - 0.5 * hx * (nx - 1);
    g.y0 = yc - 0.5 * hy * (ny - 1);
    g.z0 = zc - 0.5 * hz * (nz - 1);
    g.t0 = tc - 0.5 * ht * (nt - 1);
    return g;
  }
};

// Linear-in-(t,z) rotation angle carried by a modulated grid. The residual
// operators use it to undo the rotation before transverse stencils.
struct ModMeta {
  double a_t{0.0};
  double a_z{0.0};

  bool active() const { return a_t != 0.0 || a_z != 0.0; }
  double angle(double t, double z) const { return a_t * t + a_z * z; }
};

struct FieldGrid {
  GridSpec g{};
  double n{1.5};       // refractive index at the carrier
  double omega{0.0};   // carrier angular frequency
  ModMeta mod{};
  std::vector<cplx> Etx, Ety, cBtx, cBty, Ez, cBz;

  std::size_t idx(int ix, int iy, int iz, int it) const {
    return ((static_cast<std::size_t>(it) * g.nz + iz) * g.ny + iy) * g.nx + ix;
  }

  FieldSample at(int ix, int iy, int iz, int it) const {
    const std::size_t q = idx(ix, iy, iz, it);
    return {{Etx[q], Ety[q]}, {cBtx[q], cBty[q]}, Ez[q], cBz[q]};
  }

  void set(std::size_t q, const FieldSample& f) {
    Etx[q] = f.Et.x;
    Ety[q] = f.Et.y;
    cBtx[q] = f.cBt.x;
    cBty[q] = f.cBt.y;
    Ez[q] = f.Ez;
    cBz[q] = f.cBz;
  }

  void allocate() {
    const std::size_t c = g.count();
    Etx.assign(c, {});
    Ety.assign(c, {});
    cBtx.assign(c, {});
    cBty.assign(c, {});
    Ez.assign(c, {});
    cBz.assign(c, {});
  }

  // Largest per-point field magnitude times n*omega; the normalization scale
  // for residual reports.
  double normalization_scale() const {
    double m = 0.0;
    for (std::size_t q = 0; q < Etx.size(); ++q) {
      const double e = std::sqrt(std::norm(Etx[q]) + std::norm(Ety[q]) + std::norm(Ez[q]));
      const double b = std::sqrt(std::norm(cBtx[q]) + std::norm(cBty[q]) + std::norm(cBz[q]));
      m = std::max(m, std::max(e, b));
    }
    return m * n * omega;
  }
};

inline bool same_lattice(const GridSpec& a, const GridSpec& b) {
  return a.nx == b.nx && a.ny == b.ny && a.nz == b.nz && a.nt == b.nt &&
         a.hx == b.hx && a.hy == b.hy && a.hz == b.hz && a.ht == b.ht &&
         a.x0 == b.x0 && a.y0 == b.y0 && a.z0 == b.z0 && a.t0 == b.t0;
}

inline FieldGrid operator+(const FieldGrid& a, const FieldGrid& b) {
  if (!same_lattice(a.g, b.g))
    throw Error(Errc::grid_mismatch, "cannot add fields on different lattices");
  if (a.mod.a_t != b.mod.a_t || a.mod.a_z != b.mod.a_z)
    throw Error(Errc::grid_mismatch, "cannot add fields with different rotation metadata");
  FieldGrid out = a;
  for (std::size_t q = 0; q < out.Etx.size(); ++q) {
    out.Etx[q] += b.Etx[q];
    out.Ety[q] += b.Ety[q];
    out.cBtx[q] += b.cBtx[q];
    out.cBty[q] += b.cBty[q];
    out.Ez[q] += b.Ez[q];
    out.cBz[q] += b.cBz[q];
  }
  return out;
}

namespace detail {
template <typename Sampler>
void fill_point(FieldGrid& out, const Sampler& s, std::size_t q) {
  const int nx = out.g.nx, ny = out.g.ny, nz = out.g.nz;
  const int ix = static_cast<int>(q % nx);
  const int iy = static_cast<int>((q / nx) % ny);
  const int iz = static_cast<int>((q / (static_cast<std::size_t>(nx) * ny)) % nz);
  const int it = static_cast<int>(q / (static_cast<std::size_t>(nx) * ny * nz));
  out.set(q, s(out.g.x(ix), out.g.y(iy), out.g.z(iz), out.g.t(it)));
}
}  // namespace detail

template <typename Sampler>
FieldGrid materialize_serial(const GridSpec& g, const Sampler& s, double n,
                             double omega, ModMeta mod = {}) {
  FieldGrid out;
  out.g = g;
  out.n = n;
  out.omega = omega;
  out.mod = mod;
  out.allocate();
  const std::size_t total = g.count();
  for (std::size_t q = 0; q < total; ++q) detail::fill_point(out, s, q);
  return out;
}

template <typename Sampler>
FieldGrid materialize(const GridSpec& g, const Sampler& s, double n,
                      double omega, ModMeta mod = {}) {
  FieldGrid out;
  out.g = g;
  out.n = n;
  out.omega = omega;
  out.mod = mod;
  out.allocate();
  const std::size_t total = g.count();
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long q = 0; q < static_cast<long long>(total); ++q)
    detail::fill_point(out, s, static_cast<std::size_t>(q));
  return out;
}

template <typename Sampler>
FieldGrid materialize(const GridSpec& g, const Sampler& s, const ModeSpec& spec,
                      ModMeta mod = {}) {
  return materialize(g, s, spec.n, spec.omega, mod);
}

}  // namespace prahm
