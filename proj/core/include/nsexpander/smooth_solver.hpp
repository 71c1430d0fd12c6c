#pragma once

#include "nsexpander/aux_fields.hpp"
#include "nsexpander/profile.hpp"

namespace nsexpander {

/// The center of the contraction ball: U = 0, Theta = Theta0, P = P0.
Profile seed_smooth(const GridPtr& grid, const SmoothBoundaryData& b);

/// One application of the fixed-point map (U, Theta) -> RHS of the integral
/// equations, followed by damping with factor `damping` and recomputation of
/// the density. Throws DegeneracyError or SolverError on a broken iterate.
Profile psi_step(const Profile& current, const SmoothBoundaryData& b, const PhysicalParams& p,
                 double damping = 1.0, AuxFields* aux = nullptr);

/// Picard iteration on [0, r_max] from seed_smooth. Throws ConvergenceError
/// when config.max_iter sweeps do not reach config.picard_tol.
Solution solve_smooth(const PhysicalParams& p, const SmoothBoundaryData& b, const SolveConfig& config);

}  // namespace nsexpander
