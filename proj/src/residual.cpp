#include "prahm/residual.hpp"

#include <cmath>

#include "prahm/reduce.hpp"

namespace prahm {
namespace {

void check_grid(const GridSpec& g) {
  if (g.nx < 3 || g.ny < 3 || g.nz < 3 || g.nt < 3)
    throw Error(Errc::grid_too_small, "central stencils need >= 3 points per axis");
  if (!(g.hx > 0.0 && g.hy > 0.0 && g.hz > 0.0 && g.ht > 0.0))
    throw Error(Errc::bad_config, "grid spacings must be positive");
}

void check_sources(const Sources& src, std::size_t count) {
  auto sized = [&](const std::vector<cplx>& v) { return v.empty() || v.size() == count; };
  if (!sized(src.Jtx) || !sized(src.Jty) || !sized(src.Jz) || !sized(src.rho))
    throw Error(Errc::grid_mismatch, "source arrays must match the grid point count");
  if (src.Jtx.size() != src.Jty.size())
    throw Error(Errc::grid_mismatch, "transverse current needs both components");
}

inline cplx slot(const std::vector<cplx>& v, std::size_t q) {
  return v.empty() ? cplx{} : v[q];
}

struct EquationAccum {
  std::vector<double> sq1, sq2, sq3;  // squared magnitudes per point
};

ResidualReport finish_report(const FieldGrid& f, EquationAccum& acc,
                             const char* n1, const char* n2, const char* n3) {
  const GridSpec& g = f.g;
  const std::size_t interior = static_cast<std::size_t>(g.nx - 2) * (g.ny - 2) *
                               (g.nz - 2) * (g.nt - 2);
  ResidualReport rep;
  rep.scale = f.normalization_scale();
  rep.hx = g.hx;
  rep.hy = g.hy;
  rep.hz = g.hz;
  rep.ht = g.ht;
  const double denom = rep.scale > 0.0 ? rep.scale : 1.0;
  const char* names[3] = {n1, n2, n3};
  const std::vector<double>* sq[3] = {&acc.sq1, &acc.sq2, &acc.sq3};
  for (int e = 0; e < 3; ++e) {
    double mx = 0.0;
    for (double v : *sq[e]) mx = std::max(mx, v);
    ResidualEntry entry;
    entry.name = names[e];
    entry.l2 = std::sqrt(pairwise_sum(*sq[e]) / interior) / denom;
    entry.linf = std::sqrt(mx) / denom;
    rep.entries.push_back(entry);
  }
  return rep;
}

ResidualReport run_residual(ModeKind kind, const FieldGrid& f, const Sources& src,
                            const ResidualOptions& opts, ResidualData* keep) {
  check_grid(f.g);
  const GridSpec& g = f.g;
  const std::size_t count = g.count();
  check_sources(src, count);

  EquationAccum acc;
  acc.sq1.assign(count, 0.0);
  acc.sq2.assign(count, 0.0);
  acc.sq3.assign(count, 0.0);
  if (keep) {
    keep->first.assign(count, {});
    keep->second.assign(count, {});
    keep->thirdx.assign(count, {});
    keep->thirdy.assign(count, {});
  }

  const double i2x = 0.5 / g.hx, i2y = 0.5 / g.hy;
  const double i2z = 0.5 / g.hz, i2t = 0.5 / g.ht;
  const double n2 = f.n * f.n;
  const bool parallel = opts.parallel;
  (void)parallel;

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (long long qq = 0; qq < static_cast<long long>(count); ++qq) {
    const std::size_t q = static_cast<std::size_t>(qq);
    const int ix = static_cast<int>(q % g.nx);
    const int iy = static_cast<int>((q / g.nx) % g.ny);
    const int iz = static_cast<int>((q / (static_cast<std::size_t>(g.nx) * g.ny)) % g.nz);
    const int it = static_cast<int>(q / (static_cast<std::size_t>(g.nx) * g.ny * g.nz));
    if (ix == 0 || ix == g.nx - 1 || iy == 0 || iy == g.ny - 1 || iz == 0 ||
        iz == g.nz - 1 || it == 0 || it == g.nt - 1)
      continue;

    const FieldSample xp = f.at(ix + 1, iy, iz, it), xm = f.at(ix - 1, iy, iz, it);
    const FieldSample yp = f.at(ix, iy + 1, iz, it), ym = f.at(ix, iy - 1, iz, it);
    const FieldSample zp = f.at(ix, iy, iz + 1, it), zm = f.at(ix, iy, iz - 1, it);
    const FieldSample tp = f.at(ix, iy, iz, it + 1), tm = f.at(ix, iy, iz, it - 1);

    const double th = f.mod.angle(g.t(it), g.z(iz));
    const double c = std::cos(th), s = std::sin(th);
    auto derot = [&](const TransverseVec& v) {
      return TransverseVec{c * v.x + s * v.y, -s * v.x + c * v.y};
    };
    auto rot = [&](const TransverseVec& v) {
      return TransverseVec{c * v.x - s * v.y, s * v.x + c * v.y};
    };

    cplx e1, e2, e3x, e3y;
    if (kind == ModeKind::TE) {
      const TransverseVec dB_dx = i2x * (xp.cBt - xm.cBt);
      const TransverseVec dB_dy = i2y * (yp.cBt - ym.cBt);
      const TransverseVec dE_dx = i2x * (xp.Et - xm.Et);
      const TransverseVec dE_dy = i2y * (yp.Et - ym.Et);
      const TransverseVec dB_dz = i2z * (zp.cBt - zm.cBt);
      const TransverseVec dE_dt = i2t * (tp.Et - tm.Et);
      const cplx dBz_dz = i2z * (zp.cBz - zm.cBz);
      const cplx dBz_dt = i2t * (tp.cBz - tm.cBz);
      const cplx dBz_dx = i2x * (xp.cBz - xm.cBz);
      const cplx dBz_dy = i2y * (yp.cBz - ym.cBz);

      e1 = derot(dB_dx).x + derot(dB_dy).y + dBz_dz;
      e2 = derot(sigma_apply(dE_dx)).x + derot(sigma_apply(dE_dy)).y - dBz_dt;
      const TransverseVec curlz = rot(TransverseVec{-dBz_dy, dBz_dx});
      const TransverseVec amp = sigma_apply(dB_dz) - curlz - n2 * dE_dt +
                                TransverseVec{slot(src.Jtx, q), slot(src.Jty, q)};
      e3x = amp.x;
      e3y = amp.y;
    } else {
      const TransverseVec dE_dx = i2x * (xp.Et - xm.Et);
      const TransverseVec dE_dy = i2y * (yp.Et - ym.Et);
      const TransverseVec dB_dx = i2x * (xp.cBt - xm.cBt);
      const TransverseVec dB_dy = i2y * (yp.cBt - ym.cBt);
      const TransverseVec dE_dz = i2z * (zp.Et - zm.Et);
      const TransverseVec dB_dt = i2t * (tp.cBt - tm.cBt);
      const cplx dEz_dz = i2z * (zp.Ez - zm.Ez);
      const cplx dEz_dt = i2t * (tp.Ez - tm.Ez);
      const cplx dEz_dx = i2x * (xp.Ez - xm.Ez);
      const cplx dEz_dy = i2y * (yp.Ez - ym.Ez);

      e1 = n2 * (derot(dE_dx).x + derot(dE_dy).y) + n2 * dEz_dz - slot(src.rho, q);
      e2 = derot(sigma_apply(dB_dx)).x + derot(sigma_apply(dB_dy)).y + n2 * dEz_dt +
           slot(src.Jz, q);
      const TransverseVec curlz = rot(TransverseVec{-dEz_dy, dEz_dx});
      const TransverseVec far = sigma_apply(dE_dz) - curlz + dB_dt;
      e3x = far.x;
      e3y = far.y;
    }

    acc.sq1[q] = std::norm(e1);
    acc.sq2[q] = std::norm(e2);
    acc.sq3[q] = std::norm(e3x) + std::norm(e3y);
    if (keep) {
      keep->first[q] = e1;
      keep->second[q] = e2;
      keep->thirdx[q] = e3x;
      keep->thirdy[q] = e3y;
    }
  }

  if (kind == ModeKind::TE)
    return finish_report(f, acc, "div B", "induction z", "ampere transverse");
  return finish_report(f, acc, "div D", "ampere z", "induction transverse");
}

}  // namespace

double ResidualReport::l2_total() const {
  double s = 0.0;
  for (const auto& e : entries) s += e.l2 * e.l2;
  return std::sqrt(s);
}

const ResidualEntry& ResidualReport::entry(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw Error(Errc::bad_config, "no residual entry named " + name);
}

ResidualReport residual_te(const FieldGrid& f, const Sources& src,
                           const ResidualOptions& opts, ResidualData* keep) {
  return run_residual(ModeKind::TE, f, src, opts, keep);
}

ResidualReport residual_tm(const FieldGrid& f, const Sources& src,
                           const ResidualOptions& opts, ResidualData* keep) {
  return run_residual(ModeKind::TM, f, src, opts, keep);
}

ResidualReport residual_for(ModeKind kind, const FieldGrid& f, const Sources& src,
                            const ResidualOptions& opts, ResidualData* keep) {
  return run_residual(kind, f, src, opts, keep);
}

double convergence_order(const ResidualReport& coarse, const ResidualReport& fine) {
  auto halved = [](double hc, double hf) {
    return std::abs(hf - 0.5 * hc) <= 1e-9 * hc;
  };
  if (!halved(coarse.hx, fine.hx) || !halved(coarse.hy, fine.hy) ||
      !halved(coarse.hz, fine.hz) || !halved(coarse.ht, fine.ht))
    throw Error(Errc::spacing_mismatch, "fine grid must halve every spacing");
  const double rc = coarse.l2_total(), rf = fine.l2_total();
  if (!(rc > 0.0) || !(rf > 0.0))
    throw Error(Errc::degenerate_residual, "cannot estimate order from a zero residual");
  return std::log2(rc / rf);
}

LightConeGrid lightcone_decompose(const FieldGrid& f, ModeKind kind) {
  if (f.mod.active())
    throw Error(Errc::bad_config, "light-cone recombination requires unmodulated fields");
  LightConeGrid lc;
  lc.g = f.g;
  lc.n = f.n;
  lc.omega = f.omega;
  lc.kind = kind;
  lc.scale = f.normalization_scale();
  const std::size_t count = f.g.count();
  lc.Fpx.resize(count);
  lc.Fpy.resize(count);
  lc.Fmx.resize(count);
  lc.Fmy.resize(count);
  lc.S.resize(count);
  const double n2 = f.n * f.n;
  for (std::size_t q = 0; q < count; ++q) {
    const TransverseVec Et{f.Etx[q], f.Ety[q]};
    const TransverseVec cBt{f.cBtx[q], f.cBty[q]};
    TransverseVec fp, fm;
    if (kind == ModeKind::TE) {
      fp = cBt - sigma_apply(Et);
      fm = cBt + sigma_apply(Et);
      lc.S[q] = f.cBz[q];
    } else {
      fp = n2 * Et + sigma_apply(cBt);
      fm = n2 * Et - sigma_apply(cBt);
      lc.S[q] = n2 * f.Ez[q];
    }
    lc.Fpx[q] = fp.x;
    lc.Fpy[q] = fp.y;
    lc.Fmx[q] = fm.x;
    lc.Fmy[q] = fm.y;
  }
  return lc;
}

FieldGrid lightcone_reconstruct(const LightConeGrid& lc) {
  FieldGrid f;
  f.g = lc.g;
  f.n = lc.n;
  f.omega = lc.omega;
  f.allocate();
  const double n2 = lc.n * lc.n;
  for (std::size_t q = 0; q < lc.S.size(); ++q) {
    const TransverseVec fp{lc.Fpx[q], lc.Fpy[q]};
    const TransverseVec fm{lc.Fmx[q], lc.Fmy[q]};
    FieldSample smp;
    if (lc.kind == ModeKind::TE) {
      smp.cBt = 0.5 * (fp + fm);
      smp.Et = -1.0 * sigma_apply(0.5 * (fm - fp));
      smp.cBz = lc.S[q];
      smp.Ez = 0.0;
    } else {
      smp.Et = (0.5 / n2) * (fp + fm);
      smp.cBt = -1.0 * sigma_apply(0.5 * (fp - fm));
      smp.Ez = lc.S[q] / n2;
      smp.cBz = 0.0;
    }
    f.set(q, smp);
  }
  return f;
}

ResidualReport residual_lightcone(const LightConeGrid& lc, const ResidualOptions& opts) {
  check_grid(lc.g);
  const GridSpec& g = lc.g;
  const std::size_t count = g.count();

  EquationAccum acc;
  acc.sq1.assign(count, 0.0);
  acc.sq2.assign(count, 0.0);
  acc.sq3.assign(count, 0.0);

  const double i2x = 0.5 / g.hx, i2y = 0.5 / g.hy;
  const double i2z = 0.5 / g.hz, i2t = 0.5 / g.ht;
  const double n2 = lc.n * lc.n;
  const double a = 0.5 * (n2 + 1.0), b = 0.5 * (n2 - 1.0);
  const bool parallel = opts.parallel;
  (void)parallel;

  auto vec = [&](const std::vector<cplx>& vx, const std::vector<cplx>& vy,
                 std::size_t q) { return TransverseVec{vx[q], vy[q]}; };

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (long long qq = 0; qq < static_cast<long long>(count); ++qq) {
    const std::size_t q = static_cast<std::size_t>(qq);
    const int ix = static_cast<int>(q % g.nx);
    const int iy = static_cast<int>((q / g.nx) % g.ny);
    const int iz = static_cast<int>((q / (static_cast<std::size_t>(g.nx) * g.ny)) % g.nz);
    const int it = static_cast<int>(q / (static_cast<std::size_t>(g.nx) * g.ny * g.nz));
    if (ix == 0 || ix == g.nx - 1 || iy == 0 || iy == g.ny - 1 || iz == 0 ||
        iz == g.nz - 1 || it == 0 || it == g.nt - 1)
      continue;

    auto at = [&](int dx, int dy, int dz, int dt) {
      return ((static_cast<std::size_t>(it + dt) * g.nz + (iz + dz)) * g.ny +
              (iy + dy)) * g.nx + (ix + dx);
    };
    const std::size_t xp = at(1, 0, 0, 0), xm = at(-1, 0, 0, 0);
    const std::size_t yp = at(0, 1, 0, 0), ym = at(0, -1, 0, 0);
    const std::size_t zp = at(0, 0, 1, 0), zm = at(0, 0, -1, 0);
    const std::size_t tp = at(0, 0, 0, 1), tmq = at(0, 0, 0, -1);

    const TransverseVec dFp_dx = i2x * (vec(lc.Fpx, lc.Fpy, xp) - vec(lc.Fpx, lc.Fpy, xm));
    const TransverseVec dFp_dy = i2y * (vec(lc.Fpx, lc.Fpy, yp) - vec(lc.Fpx, lc.Fpy, ym));
    const TransverseVec dFm_dx = i2x * (vec(lc.Fmx, lc.Fmy, xp) - vec(lc.Fmx, lc.Fmy, xm));
    const TransverseVec dFm_dy = i2y * (vec(lc.Fmx, lc.Fmy, yp) - vec(lc.Fmx, lc.Fmy, ym));
    const TransverseVec dFp_dz = i2z * (vec(lc.Fpx, lc.Fpy, zp) - vec(lc.Fpx, lc.Fpy, zm));
    const TransverseVec dFp_dt = i2t * (vec(lc.Fpx, lc.Fpy, tp) - vec(lc.Fpx, lc.Fpy, tmq));
    const TransverseVec dFm_dz = i2z * (vec(lc.Fmx, lc.Fmy, zp) - vec(lc.Fmx, lc.Fmy, zm));
    const TransverseVec dFm_dt = i2t * (vec(lc.Fmx, lc.Fmy, tp) - vec(lc.Fmx, lc.Fmy, tmq));
    const cplx dS_dz = i2z * (lc.S[zp] - lc.S[zm]);
    const cplx dS_dt = i2t * (lc.S[tp] - lc.S[tmq]);
    const cplx dS_dx = i2x * (lc.S[xp] - lc.S[xm]);
    const cplx dS_dy = i2y * (lc.S[yp] - lc.S[ym]);

    const cplx e1 = dFp_dx.x + dFp_dy.y + dS_dz + dS_dt;
    const cplx e2 = dFm_dx.x + dFm_dy.y + dS_dz - dS_dt;
    const TransverseVec term1 = a * ((dFm_dz + dFm_dt) + (dFp_dz - dFp_dt));
    const TransverseVec term2 = b * ((dFp_dz + dFp_dt) + (dFm_dz - dFm_dt));
    const TransverseVec e3 = term1 - term2 - 2.0 * TransverseVec{dS_dx, dS_dy};

    acc.sq1[q] = std::norm(e1);
    acc.sq2[q] = std::norm(e2);
    acc.sq3[q] = std::norm(e3.x) + std::norm(e3.y);
  }

  const std::size_t interior = static_cast<std::size_t>(g.nx - 2) * (g.ny - 2) *
                               (g.nz - 2) * (g.nt - 2);
  ResidualReport rep;
  rep.scale = lc.scale;
  rep.hx = g.hx;
  rep.hy = g.hy;
  rep.hz = g.hz;
  rep.ht = g.ht;
  const double denom = rep.scale > 0.0 ? rep.scale : 1.0;
  const char* names[3] = {"cone plus", "cone minus", "cone mixed"};
  const std::vector<double>* sq[3] = {&acc.sq1, &acc.sq2, &acc.sq3};
  for (int e = 0; e < 3; ++e) {
    double mx = 0.0;
    for (double v : *sq[e]) mx = std::max(mx, v);
    rep.entries.push_back(
        {names[e], std::sqrt(pairwise_sum(*sq[e]) / interior) / denom,
         std::sqrt(mx) / denom});
  }
  return rep;
}

FieldGrid sigma_time_reverse(const FieldGrid& f) {
  const GridSpec& g = f.g;
  const double span = std::max(1.0, std::abs(g.t0) + g.ht * g.nt);
  if (std::abs(g.t_center()) > 1e-9 * span)
    throw Error(Errc::asymmetric_window,
                "time reversal needs a window centered on t = 0");
  FieldGrid out;
  out.g = g;
  out.n = f.n;
  out.omega = f.omega;
  out.mod = ModMeta{-f.mod.a_t, f.mod.a_z};
  out.allocate();
  const std::size_t slab = static_cast<std::size_t>(g.nx) * g.ny * g.nz;
  for (int it = 0; it < g.nt; ++it) {
    const std::size_t src_off = static_cast<std::size_t>(g.nt - 1 - it) * slab;
    const std::size_t dst_off = static_cast<std::size_t>(it) * slab;
    for (std::size_t q = 0; q < slab; ++q) {
      out.Etx[dst_off + q] = -f.Etx[src_off + q];
      out.Ety[dst_off + q] = -f.Ety[src_off + q];
      out.Ez[dst_off + q] = -f.Ez[src_off + q];
      out.cBtx[dst_off + q] = f.cBtx[src_off + q];
      out.cBty[dst_off + q] = f.cBty[src_off + q];
      out.cBz[dst_off + q] = f.cBz[src_off + q];
    }
  }
  return out;
}

}  // namespace prahm
