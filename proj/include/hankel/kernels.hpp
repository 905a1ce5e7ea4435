#pragma once

#include <complex>
#include <functional>
#include <span>

namespace hankel::kernels {

using cxd = std::complex<double>;

// Inner loops of the toolkit. Each kernel has a serial reference
// implementation and an OpenMP variant; the parallel variants use fixed
// block decompositions with ordered combines, so results do not depend on
// the number of threads.

/// y_j = sum_k g[j+k] u_k, j,k < n. Requires g.size() >= 2n-1.
void hankel_matvec_naive_serial(std::span<const cxd> g, std::span<const cxd> u,
                                std::span<cxd> y);
void hankel_matvec_naive(std::span<const cxd> g, std::span<const cxd> u,
                         std::span<cxd> y);

/// out[j] = sum_i c_i mu_i^j for j = 0..out.size()-1, powers accumulated by
/// running products (exact forward-difference structure in j).
void moment_accumulate_serial(std::span<const double> mu, std::span<const double> c,
                              std::span<double> out);
void moment_accumulate(std::span<const double> mu, std::span<const double> c,
                       std::span<double> out);

/// a[i*n+j] = sqrt(w_i) k(t_i + t_j) sqrt(w_j), symmetric.
void nystrom_assemble_serial(std::span<const double> t, std::span<const double> w,
                             const std::function<double(double)>& k, std::span<double> a);
void nystrom_assemble(std::span<const double> t, std::span<const double> w,
                      const std::function<double(double)>& k, std::span<double> a);

}  // namespace hankel::kernels
