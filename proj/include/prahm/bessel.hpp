#pragma once
// Regular cylinder functions J_m, needed for circular transverse profiles.

namespace prahm {

// J_m(x) for integer m >= 0, real x. Accurate to ~1e-14 for the argument
// ranges used by the profiles (|x| up to a few hundred).
double bessel_jn(int m, double x);

// d/dx J_m(x) via the standard recurrence.
double bessel_jn_deriv(int m, double x);

}  // namespace prahm
