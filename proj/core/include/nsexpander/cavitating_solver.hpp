#pragma once

#include "nsexpander/aux_fields.hpp"
#include "nsexpander/profile.hpp"

namespace nsexpander {

/// Near-origin asymptotics used as the starting iterate:
/// U = alpha r, U' = alpha, Theta = Theta0, Theta' = 0, P = P_delta (r/delta)^beta.
Profile seed_cavitating(const CavitatingBoundaryData& b, const GridPtr& grid, int d);

/// One sweep of the cavitating map. The density is anchored at delta and every
/// integral from the origin is seeded on [0, r_min] by the power laws.
/// Throws SolverError if the recomputed P(delta) drifts from P_delta.
Profile psi_step_cavitating(const Profile& current, const CavitatingBoundaryData& b, const PhysicalParams& p,
                            double damping = 1.0, AuxFields* aux = nullptr);

/// P(delta) of a profile, interpolated with the rule used to anchor it.
double density_at_anchor(const Profile& profile, const PhysicalParams& p);

Solution solve_cavitating(const PhysicalParams& p, const CavitatingBoundaryData& b, const SolveConfig& config);

/// Validates parameters and configuration (InputError on failure), then
/// dispatches to solve_smooth or solve_cavitating.
Solution solve(const PhysicalParams& p, const BoundaryData& b, const SolveConfig& config);

}  // namespace nsexpander
