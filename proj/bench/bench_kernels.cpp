// Timing harness for the parallel kernels against their serial reference
// implementations: the grid fill and the residual evaluation. Also confirms
// that the parallel fill is bitwise identical to the serial one.
#include <chrono>
#include <cstdio>

#include "prahm/grid.hpp"
#include "prahm/mode.hpp"
#include "prahm/residual.hpp"

using namespace prahm;

namespace {

template <typename F>
double best_ms(F&& f, int reps = 3) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    best = std::min(
        best, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

bool bitwise_equal(const FieldGrid& a, const FieldGrid& b) {
  auto eq = [](const std::vector<cplx>& u, const std::vector<cplx>& v) {
    for (std::size_t q = 0; q < u.size(); ++q)
      if (u[q] != v[q]) return false;
    return true;
  };
  return eq(a.Etx, b.Etx) && eq(a.Ety, b.Ety) && eq(a.cBtx, b.cBtx) &&
         eq(a.cBty, b.cBty) && eq(a.Ez, b.Ez) && eq(a.cBz, b.cBz);
}

}  // namespace

int main() {
  const ModeSpec spec = canonical_mode(ModeKind::TE);
  const ModeSampler sampler(spec);
  const GridSpec g = GridSpec::centered(64, 64, 3, 128, 0.01, 0.01, 0.005,
                                        0.004, 0.131, 0.177, 0.0123, 0.0);
  std::printf("lattice %dx%dx%dx%d (%zu points)\n", g.nx, g.ny, g.nz, g.nt,
              g.count());

  FieldGrid serial_grid, parallel_grid;
  const double fill_serial = best_ms(
      [&] { serial_grid = materialize_serial(g, sampler, spec.n, spec.omega); });
  const double fill_parallel =
      best_ms([&] { parallel_grid = materialize(g, sampler, spec); });
  std::printf("%-22s %10.2f ms %10.2f ms   x%.2f   bitwise %s\n", "grid fill",
              fill_serial, fill_parallel, fill_serial / fill_parallel,
              bitwise_equal(serial_grid, parallel_grid) ? "equal" : "DIFFERS");

  ResidualReport serial_rep, parallel_rep;
  const double res_serial = best_ms(
      [&] { serial_rep = residual_te(serial_grid, {}, ResidualOptions{false}); });
  const double res_parallel = best_ms(
      [&] { parallel_rep = residual_te(serial_grid, {}, ResidualOptions{true}); });
  const bool same = serial_rep.l2_total() == parallel_rep.l2_total();
  std::printf("%-22s %10.2f ms %10.2f ms   x%.2f   totals %s\n", "residual",
              res_serial, res_parallel, res_serial / res_parallel,
              same ? "equal" : "DIFFERS");
  return 0;
}
