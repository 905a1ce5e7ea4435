#include "hankel/nystrom.hpp"

#include <cmath>
#include <stdexcept>
#include <variant>

#include "hankel/kernels.hpp"

namespace hankel {

namespace {
bool singular_at_zero(const KernelSpec& h)
{
    for (const auto& term : h.terms)
        if ((std::holds_alternative<LogPowerKernel>(term) &&
             std::get<LogPowerKernel>(term).at_zero) ||
            std::holds_alternative<CarlemanPolyKernel>(term))
            return true;
    return false;
}
}  // namespace

NystromHankel build_nystrom(const KernelSpec& h, double T, std::size_t target_nodes,
                            const QuadratureConfig& q)
{
    if (!(T > 0.0)) throw std::invalid_argument("build_nystrom: T must be > 0");

    const int per = q.nodes_per_panel;
    NodeSet nodes;
    if (singular_at_zero(h)) {
        const int graded_panels = q.grading_levels + 1;
        const int uniform = std::max(1, static_cast<int>(target_nodes) / per - graded_panels);
        nodes = graded_gl(0.0, T / uniform, q.grading_levels, per);
        nodes.append(composite_gl(T / uniform, T, uniform - 1 > 0 ? uniform - 1 : 1, per));
    } else {
        const int panels = std::max(1, static_cast<int>(target_nodes) / per);
        nodes = composite_gl(0.0, T, panels, per);
    }

    NystromHankel out;
    out.nodes = nodes.x;
    out.weights = nodes.w;
    const std::size_t n = nodes.size();
    out.matrix.resize(n * n);
    auto kfun = [&h](double t) { return eval_kernel_real(h, t); };
    kernels::nystrom_assemble(out.nodes, out.weights, kfun, out.matrix);
    return out;
}

}  // namespace hankel
