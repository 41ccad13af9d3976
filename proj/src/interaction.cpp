#include "prahm/interaction.hpp"

#include <algorithm>
#include <cmath>

#include "prahm/reduce.hpp"

namespace prahm {
namespace {

// Real parts of the six field slots; the balance identity and the packet
// energy quadratures act on physical (real) fields.
struct Real6 {
  double Ex{0.0}, Ey{0.0}, Bx{0.0}, By{0.0}, Ez{0.0}, Bz{0.0};
};

Real6 real6(const FieldSample& f) {
  return {f.Et.x.real(), f.Et.y.real(), f.cBt.x.real(),
          f.cBt.y.real(), f.Ez.real(),  f.cBz.real()};
}

Real6 diff_scaled(const Real6& p, const Real6& m, double inv2h) {
  return {(p.Ex - m.Ex) * inv2h, (p.Ey - m.Ey) * inv2h, (p.Bx - m.Bx) * inv2h,
          (p.By - m.By) * inv2h, (p.Ez - m.Ez) * inv2h, (p.Bz - m.Bz) * inv2h};
}

double mag_e(const Real6& f) {
  return std::sqrt(f.Ex * f.Ex + f.Ey * f.Ey + f.Ez * f.Ez);
}
double mag_b(const Real6& f) {
  return std::sqrt(f.Bx * f.Bx + f.By * f.By + f.Bz * f.Bz);
}

// One quadrature node of the balance identity: the retarded and advanced
// six-vectors at the node, their four central differences each, and the
// extra z-shifted pairs needed for the flux derivative.
struct BalancePoint {
  double boundary{0.0};
  double volume{0.0};
  double source{0.0};
  double mag{0.0};
};

BalancePoint balance_point(const Real6& r0, const Real6& a0, const Real6& dRx,
                           const Real6& dRy, const Real6& dRz, const Real6& dRt,
                           const Real6& dAx, const Real6& dAy, const Real6& dAz,
                           const Real6& dAt, const Real6& rzp, const Real6& rzm,
                           const Real6& azp, const Real6& azm, double Omega,
                           double v, double n2, double inv2h) {
  BalancePoint out;

  // Axial flux: E_R^tr sigma cB_A differentiated along z.
  const double sP = rzp.Ex * (-azp.By) + rzp.Ey * azp.Bx;
  const double sM = rzm.Ex * (-azm.By) + rzm.Ey * azm.Bx;
  out.boundary = -(sP - sM) * inv2h;

  out.volume = Omega * (n2 * (r0.Ex * (-a0.Ey) + r0.Ey * a0.Ex) -
                        (r0.Bx * (-a0.By) + r0.By * a0.Bx));

  // Paired currents of the advanced field and co-currents of the retarded
  // one; the 1/v pieces cancel between them, so v only has to be nonzero.
  const double JTx = -(-dAz.By + (Omega / v) * a0.Bx - n2 * dAt.Ex -
                       n2 * Omega * (-a0.Ey) - (-dAy.Bz));
  const double JTy = -(dAz.Bx + (Omega / v) * a0.By - n2 * dAt.Ey -
                       n2 * Omega * a0.Ex - dAx.Bz);
  const double Jz = -((dAx.By - dAy.Bx) - n2 * dAt.Ez);
  const double MTx = (-dRz.Ey + dRy.Ez + dRt.Bx) +
                     Omega * ((1.0 / v) * r0.Ex - r0.By);
  const double MTy = (dRz.Ex - dRx.Ez + dRt.By) +
                     Omega * ((1.0 / v) * r0.Ey + r0.Bx);
  const double Mz = (-dRx.Ey + dRy.Ex) - dRt.Bz;

  out.source = r0.Ex * JTx + r0.Ey * JTy + r0.Ez * Jz + MTx * a0.Bx +
               MTy * a0.By - Mz * a0.Bz;

  out.mag = n2 * mag_e(r0) * mag_e(a0) + mag_b(r0) * mag_b(a0);
  return out;
}

InteractionReport finish_balance(std::vector<double>& vb, std::vector<double>& vv,
                                 std::vector<double>& vs, std::vector<double>& vm,
                                 double Omega) {
  const double inv = 1.0 / static_cast<double>(vb.size());
  InteractionReport rep;
  rep.boundary = pairwise_sum(vb) * inv;
  rep.volume = pairwise_sum(vv) * inv;
  rep.source = pairwise_sum(vs) * inv;
  rep.imbalance = std::abs(rep.boundary + rep.volume - rep.source);
  const double rate = Omega != 0.0 ? std::abs(Omega) : 1.0;
  rep.scale = rate * pairwise_sum(vm) * inv;
  rep.rel = rep.scale > 0.0 ? rep.imbalance / rep.scale : 0.0;
  return rep;
}

}  // namespace

FieldSample apply_advanced(const FieldSample& f, AdvancedMap map) {
  FieldSample out;
  if (map == AdvancedMap::phi0) {
    out.Et = -f.Et;
    out.cBt = f.cBt;
  } else {
    out.Et = -1.0 * sigma_apply(f.Et);
    out.cBt = sigma_apply(f.cBt);
  }
  out.Ez = -f.Ez;
  out.cBz = f.cBz;
  return out;
}

HelicalModulation star_reverse(const HelicalModulation& hm) {
  HelicalModulation out = hm;
  out.helicity = -hm.helicity;
  return out;
}

Sources EffectiveCurrent::as_sources() const {
  Sources src;
  src.Jtx = Jtx;
  src.Jty = Jty;
  src.Jz = Jz;
  return src;
}

EffectiveCurrent effective_advanced_current(const FieldGrid& gridA) {
  ResidualData te_data, tm_data;
  const ResidualReport rep = residual_te(gridA, {}, {}, &te_data);
  residual_tm(gridA, {}, {}, &tm_data);

  const std::size_t count = gridA.g.count();
  EffectiveCurrent out;
  out.scale = rep.scale;
  out.Jtx.resize(count);
  out.Jty.resize(count);
  out.Jz.resize(count);
  double mx = 0.0;
  for (std::size_t q = 0; q < count; ++q) {
    out.Jtx[q] = -te_data.thirdx[q];
    out.Jty[q] = -te_data.thirdy[q];
    out.Jz[q] = -tm_data.second[q];
    const double m = std::sqrt(std::norm(out.Jtx[q]) + std::norm(out.Jty[q]) +
                               std::norm(out.Jz[q]));
    mx = std::max(mx, m);
  }
  out.max_norm = mx;
  return out;
}

BalanceOptions BalanceOptions::for_mode(const ModeSpec& spec) {
  BalanceOptions opts;
  opts.cell_x = spec.profile.cell_x();
  opts.cell_y = spec.profile.cell_y();
  opts.period = 2.0 * M_PI / spec.omega;
  return opts;
}

InteractionReport helical_power_balance(const FieldFn& retarded,
                                        const FieldFn& advanced, double Omega,
                                        double v, double n,
                                        const BalanceOptions& opts) {
  if (!(opts.cell_x > 0.0) || !(opts.cell_y > 0.0) || !(opts.period > 0.0))
    throw Error(Errc::bad_config,
                "balance quadrature needs positive cell and period extents");
  if (!(opts.h > 0.0))
    throw Error(Errc::bad_config, "stencil step must be positive");
  if (opts.nq_xy < 1 || opts.nq_t < 1)
    throw Error(Errc::bad_config, "quadrature needs at least one node per axis");
  if (v == 0.0)
    throw Error(Errc::bad_config, "rotation speed must be nonzero");
  if (!(n > 0.0))
    throw Error(Errc::bad_config, "refractive index must be positive");

  const int nq = opts.nq_xy, nqt = opts.nq_t;
  const double dx = opts.cell_x / nq, dy = opts.cell_y / nq;
  const double dt = opts.period / nqt;
  const double h = opts.h, inv2h = 0.5 / h;
  const double z = opts.z_center;
  const double n2 = n * n;
  const std::size_t total = static_cast<std::size_t>(nq) * nq * nqt;

  std::vector<double> vb(total), vv(total), vs(total), vm(total);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < static_cast<long long>(total); ++i) {
    const int ix = static_cast<int>(i % nq);
    const int iy = static_cast<int>((i / nq) % nq);
    const int it = static_cast<int>(i / (static_cast<std::size_t>(nq) * nq));
    const double x = (ix + 0.5) * dx;
    const double y = (iy + 0.5) * dy;
    const double t = (it + 0.5) * dt;

    const Real6 r0 = real6(retarded(x, y, z, t));
    const Real6 rxp = real6(retarded(x + h, y, z, t));
    const Real6 rxm = real6(retarded(x - h, y, z, t));
    const Real6 ryp = real6(retarded(x, y + h, z, t));
    const Real6 rym = real6(retarded(x, y - h, z, t));
    const Real6 rzp = real6(retarded(x, y, z + h, t));
    const Real6 rzm = real6(retarded(x, y, z - h, t));
    const Real6 rtp = real6(retarded(x, y, z, t + h));
    const Real6 rtm = real6(retarded(x, y, z, t - h));

    const Real6 a0 = real6(advanced(x, y, z, t));
    const Real6 axp = real6(advanced(x + h, y, z, t));
    const Real6 axm = real6(advanced(x - h, y, z, t));
    const Real6 ayp = real6(advanced(x, y + h, z, t));
    const Real6 aym = real6(advanced(x, y - h, z, t));
    const Real6 azp = real6(advanced(x, y, z + h, t));
    const Real6 azm = real6(advanced(x, y, z - h, t));
    const Real6 atp = real6(advanced(x, y, z, t + h));
    const Real6 atm = real6(advanced(x, y, z, t - h));

    const BalancePoint p = balance_point(
        r0, a0, diff_scaled(rxp, rxm, inv2h), diff_scaled(ryp, rym, inv2h),
        diff_scaled(rzp, rzm, inv2h), diff_scaled(rtp, rtm, inv2h),
        diff_scaled(axp, axm, inv2h), diff_scaled(ayp, aym, inv2h),
        diff_scaled(azp, azm, inv2h), diff_scaled(atp, atm, inv2h), rzp, rzm,
        azp, azm, Omega, v, n2, inv2h);
    vb[i] = p.boundary;
    vv[i] = p.volume;
    vs[i] = p.source;
    vm[i] = p.mag;
  }
  return finish_balance(vb, vv, vs, vm, Omega);
}

InteractionReport helical_power_balance(const FieldGrid& gridR,
                                        const FieldGrid& gridA, double Omega,
                                        double v) {
  if (!same_lattice(gridR.g, gridA.g))
    throw Error(Errc::grid_mismatch, "balance needs both fields on one lattice");
  const GridSpec& g = gridR.g;
  if (!g.periodic_xy || !g.periodic_t)
    throw Error(Errc::bad_config,
                "grid balance needs periodic transverse and temporal lattices");
  if (g.nz < 3)
    throw Error(Errc::grid_too_small, "grid balance needs >= 3 z slabs");
  if (v == 0.0)
    v = gridR.mod.a_z != 0.0 ? -gridR.mod.a_t / gridR.mod.a_z : 1.0;

  const double n2 = gridR.n * gridR.n;
  const int izc = g.nz / 2;
  const double i2x = 0.5 / g.hx, i2y = 0.5 / g.hy;
  const double i2z = 0.5 / g.hz, i2t = 0.5 / g.ht;
  const std::size_t total = static_cast<std::size_t>(g.nx) * g.ny * g.nt;

  std::vector<double> vb(total), vv(total), vs(total), vm(total);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < static_cast<long long>(total); ++i) {
    const int ix = static_cast<int>(i % g.nx);
    const int iy = static_cast<int>((i / g.nx) % g.ny);
    const int it = static_cast<int>(i / (static_cast<std::size_t>(g.nx) * g.ny));
    const int ixp = (ix + 1) % g.nx, ixm = (ix + g.nx - 1) % g.nx;
    const int iyp = (iy + 1) % g.ny, iym = (iy + g.ny - 1) % g.ny;
    const int itp = (it + 1) % g.nt, itm = (it + g.nt - 1) % g.nt;

    auto R = [&](int jx, int jy, int jz, int jt) {
      return real6(gridR.at(jx, jy, jz, jt));
    };
    auto A = [&](int jx, int jy, int jz, int jt) {
      return real6(gridA.at(jx, jy, jz, jt));
    };

    const Real6 r0 = R(ix, iy, izc, it), a0 = A(ix, iy, izc, it);
    const Real6 rzp = R(ix, iy, izc + 1, it), rzm = R(ix, iy, izc - 1, it);
    const Real6 azp = A(ix, iy, izc + 1, it), azm = A(ix, iy, izc - 1, it);

    const BalancePoint p = balance_point(
        r0, a0, diff_scaled(R(ixp, iy, izc, it), R(ixm, iy, izc, it), i2x),
        diff_scaled(R(ix, iyp, izc, it), R(ix, iym, izc, it), i2y),
        diff_scaled(rzp, rzm, i2z),
        diff_scaled(R(ix, iy, izc, itp), R(ix, iy, izc, itm), i2t),
        diff_scaled(A(ixp, iy, izc, it), A(ixm, iy, izc, it), i2x),
        diff_scaled(A(ix, iyp, izc, it), A(ix, iym, izc, it), i2y),
        diff_scaled(azp, azm, i2z),
        diff_scaled(A(ix, iy, izc, itp), A(ix, iy, izc, itm), i2t), rzp, rzm,
        azp, azm, Omega, v, n2, i2z);
    vb[i] = p.boundary;
    vv[i] = p.volume;
    vs[i] = p.source;
    vm[i] = p.mag;
  }
  return finish_balance(vb, vv, vs, vm, Omega);
}

InteractionEnergy interaction_energy(const PacketSpec& spec, AdvancedMap map) {
  const double cx = spec.mode.profile.cell_x();
  const double cy = spec.mode.profile.cell_y();
  if (!(cx > 0.0) || !(cy > 0.0))
    throw Error(Errc::bad_config,
                "interaction energy needs a periodic transverse cell");

  PacketSampler sampler(spec);
  const double n2 = spec.mode.n * spec.mode.n;
  const int nq = 24;
  const int ntau = 256 * spec.Q;
  const PacketParams& pp = spec.params;
  const double dxq = cx / nq, dyq = cy / nq, dtau = pp.period / ntau;

  std::vector<double> vals(static_cast<std::size_t>(nq) * nq * ntau);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < static_cast<long long>(vals.size()); ++i) {
    const int ix = static_cast<int>(i % nq);
    const int iy = static_cast<int>((i / nq) % nq);
    const int j = static_cast<int>(i / (static_cast<std::size_t>(nq) * nq));
    const double x = (ix + 0.5) * dxq;
    const double y = (iy + 0.5) * dyq;
    const double tau = -pp.tau1 + (j + 0.5) * dtau;

    const FieldSample f = sampler(x, y, 0.0, tau);
    const double ex = f.Et.x.real(), ey = f.Et.y.real();
    const double bx = f.cBt.x.real(), by = f.cBt.y.real();
    double mex, mey, mbx, mby;
    if (map == AdvancedMap::phi0) {
      mex = -ex;
      mey = -ey;
      mbx = bx;
      mby = by;
    } else {
      mex = ey;
      mey = -ex;
      mbx = -by;
      mby = bx;
    }
    vals[i] = n2 * (ex * (-mey) + ey * mex) - (bx * (-mby) + by * mbx);
  }

  const double mean = pairwise_sum(vals) / static_cast<double>(vals.size());
  InteractionEnergy out;
  out.M = spec.M;
  out.value = pp.Omega * mean * spec.v_g * pp.period;
  out.per_M_constant = out.value / (spec.M + 0.5);
  return out;
}

PoyntingReport complex_poynting_balance(const FieldGrid& grid) {
  const GridSpec& g = grid.g;
  if (g.nz < 3)
    throw Error(Errc::grid_too_small,
                "complex power balance needs >= 3 z slabs");
  if (!g.periodic_xy)
    throw Error(Errc::bad_config,
                "complex power balance needs a periodic transverse lattice");

  const int izc = g.nz / 2;
  const double i2z = 0.5 / g.hz;
  const double n2 = grid.n * grid.n;
  const std::size_t total = static_cast<std::size_t>(g.nx) * g.ny * g.nt;

  std::vector<double> ve(total), vmg(total), vfr(total), vfi(total);
  auto axial_flux = [&](int ix, int iy, int iz, int it) {
    const FieldSample f = grid.at(ix, iy, iz, it);
    return f.Et.x * std::conj(f.cBt.y) - f.Et.y * std::conj(f.cBt.x);
  };
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < static_cast<long long>(total); ++i) {
    const int ix = static_cast<int>(i % g.nx);
    const int iy = static_cast<int>((i / g.nx) % g.ny);
    const int it = static_cast<int>(i / (static_cast<std::size_t>(g.nx) * g.ny));
    const FieldSample f = grid.at(ix, iy, izc, it);
    ve[i] = n2 * (std::norm(f.Et.x) + std::norm(f.Et.y) + std::norm(f.Ez));
    vmg[i] = std::norm(f.cBt.x) + std::norm(f.cBt.y) + std::norm(f.cBz);
    const cplx dz =
        (axial_flux(ix, iy, izc + 1, it) - axial_flux(ix, iy, izc - 1, it)) * i2z;
    vfr[i] = dz.real();
    vfi[i] = dz.imag();
  }

  const double inv = 1.0 / static_cast<double>(total);
  PoyntingReport rep;
  rep.electric = pairwise_sum(ve) * inv;
  rep.magnetic = pairwise_sum(vmg) * inv;
  const cplx flux{pairwise_sum(vfr) * inv, pairwise_sum(vfi) * inv};
  const cplx bal = flux + cplx{0.0, 1.0} * grid.omega * (rep.magnetic - rep.electric);
  const double denom = grid.omega * std::max(rep.electric, rep.magnetic);
  rep.imbalance = denom > 0.0 ? std::abs(bal) / denom : std::abs(bal);
  return rep;
}

}  // namespace prahm
