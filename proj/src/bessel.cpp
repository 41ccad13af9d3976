#include "prahm/bessel.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace prahm {
namespace {

// Miller's downward recurrence with the sum rule J_0 + 2*sum J_{2j} = 1.
// Stable for all m at moderate |x|; upward recurrence loses all digits once
// m exceeds |x|.
double jn_miller(int m, double x) {
  const double ax = std::abs(x);
  if (ax == 0.0) return m == 0 ? 1.0 : 0.0;

  int start = m + static_cast<int>(std::sqrt(40.0 * m)) + 20;
  if (start < static_cast<int>(ax) + 20) start = static_cast<int>(ax) + 20;
  if (start % 2 != 0) ++start;

  double jp = 0.0;   // J_{n+1}
  double jc = 1e-30; // J_n (arbitrary seed, normalized away)
  double target = 0.0;
  double sum = 0.0;
  for (int n = start; n > 0; --n) {
    const double jm = 2.0 * n / ax * jc - jp;
    jp = jc;
    jc = jm;
    // Rescale when the recurrence grows, keeping ratios intact.
    if (std::abs(jc) > 1e100) {
      jc *= 1e-100;
      jp *= 1e-100;
      sum *= 1e-100;
      target *= 1e-100;
    }
    if ((n - 1) % 2 == 0 && n - 1 > 0) sum += jc;
    if (n - 1 == m) target = jc;
  }
  if (m == 0) target = jc;
  const double norm = jc + 2.0 * sum;
  double val = target / norm;
  if (x < 0.0 && m % 2 != 0) val = -val;
  return val;
}

}  // namespace

double bessel_jn(int m, double x) {
  if (m < 0) {
    const double v = bessel_jn(-m, x);
    return (-m) % 2 != 0 ? -v : v;
  }
  return jn_miller(m, x);
}

double bessel_jn_deriv(int m, double x) {
  if (m == 0) return -bessel_jn(1, x);
  return 0.5 * (bessel_jn(m - 1, x) - bessel_jn(m + 1, x));
}

}  // namespace prahm
