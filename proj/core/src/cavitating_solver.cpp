#include "nsexpander/cavitating_solver.hpp"

#include <cmath>

#include "nsexpander/detail/fixed_point.hpp"
#include "nsexpander/smooth_solver.hpp"

namespace nsexpander {

namespace {

constexpr double kAnchorTolerance = 1e-8;

}  // namespace

Profile seed_cavitating(const CavitatingBoundaryData& b, const GridPtr& grid, int d) {
    const auto r = grid->nodes();
    const std::size_t n = r.size();
    const double beta = b.density_exponent(d);
    Profile s{grid, std::vector<double>(n), std::vector<double>(n), std::vector<double>(n, b.Theta0),
              std::vector<double>(n, b.alpha), std::vector<double>(n, 0.0), b};
    for (std::size_t i = 0; i < n; ++i) {
        s.U[i] = b.alpha * r[i];
        s.P[i] = r[i] == 0.0 ? 0.0 : b.P_delta * std::pow(r[i] / b.delta, beta);
    }
    return s;
}

double density_at_anchor(const Profile& profile, const PhysicalParams& p) {
    const auto& b = std::get<CavitatingBoundaryData>(profile.boundary);
    const auto r = profile.r();
    const auto g = transport_integrand(r, profile.U, profile.dU, p.d);
    // log P is V(r) - V(delta) + log P_delta; rebuild it at delta from the
    // stored samples and the same piecewise-linear integrand.
    const std::size_t j = profile.grid->locate(b.delta);
    const std::size_t k = std::min(j, r.size() - 2);
    const double t = b.delta - r[k];
    const double g_delta = g[k] + (g[k + 1] - g[k]) * t / (r[k + 1] - r[k]);
    return profile.P[k] * std::exp(0.5 * t * (g[k] + g_delta));
}

Profile psi_step_cavitating(const Profile& current, const CavitatingBoundaryData& b, const PhysicalParams& p,
                            double damping, AuxFields* aux) {
    Profile in = current;
    in.boundary = b;
    Profile next = detail::apply_psi(in, p, damping, aux);
    const double anchor = density_at_anchor(next, p);
    if (!(std::abs(anchor - b.P_delta) <= kAnchorTolerance * b.P_delta))
        throw SolverError("density anchor mismatch: P(delta) = " + std::to_string(anchor));
    return next;
}

Solution solve_cavitating(const PhysicalParams& p, const CavitatingBoundaryData& b, const SolveConfig& config) {
    auto grid = std::make_shared<const RadialGrid>(
        RadialGrid::from_rmin(config.r_min, config.r_max, config.n_cells, config.grading));
    return detail::iterate(
        seed_cavitating(b, grid, p.d),
        [&](const Profile& cur) { return psi_step_cavitating(cur, b, p, config.damping); }, config);
}

Solution solve(const PhysicalParams& p, const BoundaryData& b, const SolveConfig& config) {
    if (const auto rep = validate_params(p, b); !rep.passed()) throw InputError("invalid parameters: " + rep.summary());
    if (const auto rep = validate_config(config, b); !rep.passed())
        throw InputError("invalid configuration: " + rep.summary());
    if (const auto* s = std::get_if<SmoothBoundaryData>(&b)) return solve_smooth(p, *s, config);
    return solve_cavitating(p, std::get<CavitatingBoundaryData>(b), config);
}

}  // namespace nsexpander
