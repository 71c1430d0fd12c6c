#pragma once

// One solve plus every a posteriori report the tool emits for it.

#include <map>
#include <optional>
#include <string>

#include "nsexpander/asymptotics.hpp"
#include "nsexpander/cavitating_solver.hpp"
#include "nsexpander/verification.hpp"

namespace nsexpander::cli {

struct Problem {
    PhysicalParams params;
    BoundaryData boundary;
    SolveConfig config;
};

struct RunReport {
    Problem problem;
    Solution solution;
    ResidualReport residual;
    BootstrapReport bootstrap;
    BoundReport bounds;
    std::optional<AsymptoticSummary> asymptotics;  // empty when the tail window is too short
    std::optional<ComparisonReport> comparison;
    std::string asymptotics_note;
};

/// Runs every report on a converged solution. Bootstrap constants are the
/// default choices (A = 10 smooth, Lambda = 10 cavitating).
RunReport analyze(const Problem& problem, Solution solution);

/// solve() followed by analyze().
RunReport run(const Problem& problem);

/// Flat option map -> problem. Keys mirror the long flags without dashes:
/// case, d, mu, lambda, cv, kappa, r-gas, p0, p-delta, delta, theta0, alpha,
/// rmax, rmin, cells, grading, tol, max-iter, damping. Solver settings not
/// given fall back to SolveConfig::defaults_for(boundary).
/// Throws InputError on unknown keys or malformed numbers.
Problem make_problem(const std::map<std::string, std::string>& options);

/// Keys accepted by make_problem.
const std::vector<std::string>& option_keys();

}  // namespace nsexpander::cli
