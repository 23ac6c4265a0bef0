#pragma once

namespace loopnets {

/// Modified Bessel function I_nu for integer nu >= 0, by the power series
/// sum_m (x/2)^{2m+nu} / (m! (nu+m)!), truncated when the relative term
/// drops below 1e-16.
double bessel_i(int nu, double x);

/// log I_nu(x); keeps large-argument kernels representable.
double log_bessel_i(int nu, double x);

}  // namespace loopnets
