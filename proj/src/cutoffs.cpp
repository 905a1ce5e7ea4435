#include "hankel/cutoffs.hpp"

#include <cmath>

namespace hankel {

namespace {
double bump(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }
}

double smooth_step(double x)
{
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double a = bump(x);
    const double b = bump(1.0 - x);
    return a / (a + b);
}

double chi0(double t) { return 1.0 - smooth_step((t - 0.25) / 0.25); }

double chi_inf(double t) { return smooth_step((t - 2.0) / 2.0); }

}  // namespace hankel
