#include "nsexpander/detail/fixed_point.hpp"

#include <chrono>
#include <cmath>
#include <limits>

namespace nsexpander::detail {

Profile apply_psi(const Profile& current, const PhysicalParams& p, double damping, AuxFields* aux) {
    const auto P = density_from_velocity(current.grid, current.U, current.dU, current.boundary, p);
    auto mapped = evaluate_map(current.grid, P, current.U, current.dU, current.Theta, current.boundary, p);

    Profile next{current.grid, {}, std::move(mapped.U), std::move(mapped.Theta), std::move(mapped.dU),
                 std::move(mapped.dTheta), current.boundary};
    if (damping != 1.0) {
        auto blend = [damping](std::vector<double>& fresh, const std::vector<double>& old) {
            for (std::size_t i = 0; i < fresh.size(); ++i) fresh[i] = damping * fresh[i] + (1.0 - damping) * old[i];
        };
        blend(next.U, current.U);
        blend(next.dU, current.dU);
        blend(next.Theta, current.Theta);
        blend(next.dTheta, current.dTheta);
    }
    for (std::size_t i = 0; i < next.size(); ++i) {
        if (!std::isfinite(next.U[i]) || !std::isfinite(next.dU[i]) || !std::isfinite(next.Theta[i]) ||
            !std::isfinite(next.dTheta[i]))
            throw SolverError("non-finite iterate at node " + std::to_string(i));
    }
    next.P = density_from_velocity(next.grid, next.U, next.dU, next.boundary, p);
    if (aux) *aux = std::move(mapped.aux);
    return next;
}

Solution iterate(Profile seed, const Step& step, const SolveConfig& config) {
    Solution sol{std::move(seed), {}};
    auto& trace = sol.trace;
    for (std::size_t k = 0; k < config.max_iter; ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        Profile next = step(sol.profile);
        const double dist = weighted_distance(next, sol.profile);
        trace.wall_seconds.push_back(
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        if (!trace.distances.empty())
            trace.ratios.push_back(trace.distances.back() > 0 ? dist / trace.distances.back() : 0.0);
        trace.distances.push_back(dist);
        sol.profile = std::move(next);
        if (dist < config.picard_tol) return sol;
    }
    const double last_ratio = trace.ratios.empty() ? std::numeric_limits<double>::quiet_NaN() : trace.ratios.back();
    throw ConvergenceError(trace.iterations(), trace.distances.back(), last_ratio);
}

}  // namespace nsexpander::detail
