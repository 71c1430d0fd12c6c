#include "nsexpander/smooth_solver.hpp"

#include "nsexpander/detail/fixed_point.hpp"

namespace nsexpander {

Profile seed_smooth(const GridPtr& grid, const SmoothBoundaryData& b) {
    if (grid->front() != 0.0) throw InputError("smooth profiles need a grid starting at r = 0");
    const std::size_t n = grid->size();
    return Profile{grid,
                   std::vector<double>(n, b.P0),
                   std::vector<double>(n, 0.0),
                   std::vector<double>(n, b.Theta0),
                   std::vector<double>(n, 0.0),
                   std::vector<double>(n, 0.0),
                   b};
}

Profile psi_step(const Profile& current, const SmoothBoundaryData& b, const PhysicalParams& p, double damping,
                 AuxFields* aux) {
    Profile in = current;
    in.boundary = b;
    return detail::apply_psi(in, p, damping, aux);
}

Solution solve_smooth(const PhysicalParams& p, const SmoothBoundaryData& b, const SolveConfig& config) {
    auto grid = std::make_shared<const RadialGrid>(RadialGrid::from_zero(config.r_max, config.n_cells, config.grading));
    return detail::iterate(
        seed_smooth(grid, b), [&](const Profile& cur) { return detail::apply_psi(cur, p, config.damping); }, config);
}

}  // namespace nsexpander
