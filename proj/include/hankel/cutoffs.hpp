#pragma once

namespace hankel {

/// C-infinity step built from e^{-1/x}: exactly 0 for x <= 0, exactly 1 for
/// x >= 1, strictly increasing in between.
double smooth_step(double x);

/// chi_0: 1 on (0, 1/4], 0 on [1/2, inf), smooth transition on (1/4, 1/2).
double chi0(double t);

/// chi_inf: 0 on (0, 2], 1 on [4, inf), smooth transition on (2, 4).
double chi_inf(double t);

}  // namespace hankel
