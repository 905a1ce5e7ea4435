// Timing table for the parallel kernels against their serial references and,
// for the Hankel product, the FFT fast path.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "hankel/hankel_matrix.hpp"
#include "hankel/kernels.hpp"

using hankel::cxd;

namespace {

using clock_t_ = std::chrono::steady_clock;

template <typename F>
double time_best(F&& f, int reps)
{
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock_t_::now();
        f();
        best = std::min(best, std::chrono::duration<double>(clock_t_::now() - t0).count());
    }
    return best;
}

}  // namespace

int main()
{
    std::printf("hankel matvec: serial naive vs OpenMP naive vs FFT\n");
    std::printf("%8s %14s %14s %14s %10s %10s\n", "N", "serial(s)", "omp(s)", "fft(s)",
                "omp-x", "fft-x");
    for (const std::size_t n : {4096u, 16384u, 65536u}) {
        std::vector<cxd> g(2 * n - 1), u(n), y(n);
        for (std::size_t j = 0; j < g.size(); ++j) g[j] = 1.0 / (1.0 + static_cast<double>(j));
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (auto& v : u) v = dist(rng);
        const hankel::HankelMatrix h(g, n);

        const int reps = n <= 16384 ? 3 : 1;
        const double ts = time_best([&] { hankel::kernels::hankel_matvec_naive_serial(g, u, y); }, reps);
        const double tp = time_best([&] { hankel::kernels::hankel_matvec_naive(g, u, y); }, reps);
        const double tf = time_best([&] { h.matvec(u, y); }, 5);
        std::printf("%8zu %14.6f %14.6f %14.6f %10.1f %10.1f\n", n, ts, tp, tf, ts / tp, ts / tf);
    }

    std::printf("\nmoment accumulation: serial vs OpenMP (deterministic blocked)\n");
    std::printf("%8s %8s %14s %14s %10s\n", "nodes", "jmax", "serial(s)", "omp(s)", "omp-x");
    for (const std::size_t nodes : {1024u, 2048u}) {
        const std::size_t jmax = 16384;
        std::vector<double> mu(nodes), cw(nodes), out(jmax);
        for (std::size_t i = 0; i < nodes; ++i) {
            mu[i] = -1.0 + 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(nodes);
            cw[i] = 1.0 / static_cast<double>(nodes);
        }
        const double ts = time_best([&] { hankel::kernels::moment_accumulate_serial(mu, cw, out); }, 3);
        const double tp = time_best([&] { hankel::kernels::moment_accumulate(mu, cw, out); }, 3);
        std::printf("%8zu %8zu %14.6f %14.6f %10.1f\n", nodes, jmax, ts, tp, ts / tp);
    }

    std::printf("\nnystrom assembly: serial vs OpenMP\n");
    std::printf("%8s %14s %14s %10s\n", "M", "serial(s)", "omp(s)", "omp-x");
    for (const std::size_t m : {1024u, 2048u}) {
        std::vector<double> t(m), w(m), a(m * m);
        for (std::size_t i = 0; i < m; ++i) {
            t[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(m);
            w[i] = 1.0 / static_cast<double>(m);
        }
        auto k = [](double s) { return s <= 1.0 ? 1.0 : 0.0; };
        const double ts = time_best([&] { hankel::kernels::nystrom_assemble_serial(t, w, k, a); }, 3);
        const double tp = time_best([&] { hankel::kernels::nystrom_assemble(t, w, k, a); }, 3);
        std::printf("%8zu %14.6f %14.6f %10.1f\n", m, ts, tp, ts / tp);
    }
    return 0;
}
