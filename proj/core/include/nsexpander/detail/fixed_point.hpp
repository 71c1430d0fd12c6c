#pragma once

#include <functional>

#include "nsexpander/aux_fields.hpp"
#include "nsexpander/profile.hpp"

namespace nsexpander::detail {

/// One Picard sweep for either case: P from the current U, the integral
/// right-hand sides, damping, and the density of the blended iterate.
Profile apply_psi(const Profile& current, const PhysicalParams& p, double damping, AuxFields* aux = nullptr);

using Step = std::function<Profile(const Profile&)>;

/// Iterates step from the seed until the weighted distance falls below
/// config.picard_tol. Throws ConvergenceError after config.max_iter sweeps.
Solution iterate(Profile seed, const Step& step, const SolveConfig& config);

}  // namespace nsexpander::detail
