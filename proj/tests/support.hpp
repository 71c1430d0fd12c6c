#pragma once

// Reference problems shared by the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <utility>

#include "nsexpander/cavitating_solver.hpp"
#include "nsexpander/smooth_solver.hpp"

namespace testing {

inline nsexpander::PhysicalParams unit_params() { return {}; }  // R = mu = C_V = kappa = 1, lambda = 0, d = 3

inline nsexpander::SmoothBoundaryData smooth_ref(double theta0 = 1e-3) { return {1.0, theta0}; }

inline nsexpander::CavitatingBoundaryData cavitating_ref() { return {1e-2, 1e-1, 1e-2, 1e-3}; }

inline nsexpander::GridPtr share(nsexpander::RadialGrid g) {
    return std::make_shared<const nsexpander::RadialGrid>(std::move(g));
}

/// Converged reference solutions, computed once per test binary.
inline const nsexpander::Solution& smooth_solution(std::size_t cells = 4000, double theta0 = 1e-3) {
    static std::map<std::pair<std::size_t, double>, nsexpander::Solution> cache;
    auto key = std::make_pair(cells, theta0);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto cfg = nsexpander::SolveConfig::smooth_defaults();
        cfg.n_cells = cells;
        it = cache.emplace(key, nsexpander::solve_smooth(unit_params(), smooth_ref(theta0), cfg)).first;
    }
    return it->second;
}

inline const nsexpander::Solution& cavitating_solution(std::size_t cells = 4000) {
    static std::map<std::size_t, nsexpander::Solution> cache;
    auto it = cache.find(cells);
    if (it == cache.end()) {
        auto cfg = nsexpander::SolveConfig::cavitating_defaults(cavitating_ref());
        cfg.n_cells = cells;
        it = cache.emplace(cells, nsexpander::solve_cavitating(unit_params(), cavitating_ref(), cfg)).first;
    }
    return it->second;
}

}  // namespace testing
