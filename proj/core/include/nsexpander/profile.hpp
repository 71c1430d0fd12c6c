#pragma once

#include <string>
#include <vector>

#include "nsexpander/core.hpp"
#include "nsexpander/grid.hpp"

namespace nsexpander {

/// Sampled self-similar profile (P, U, Theta) with the carried derivatives
/// U' and Theta'. P is always the density generated by U through the
/// transport exponent, so a Profile is consistent in (P, U) by construction.
struct Profile {
    GridPtr grid;
    std::vector<double> P, U, Theta, dU, dTheta;
    BoundaryData boundary;

    Case case_tag() const { return case_of(boundary); }
    std::size_t size() const { return grid->size(); }
    std::span<const double> r() const { return grid->nodes(); }

    /// Empty when P > 0 (r > 0), r/2 - U > 0 (r > 0) and every sample is finite.
    std::vector<std::string> invariant_violations() const;
};

/// Per-iteration record of a fixed-point solve.
struct IterationTrace {
    std::vector<double> distances;    // D_k between iterate k and k-1
    std::vector<double> ratios;       // D_{k+1} / D_k
    std::vector<double> wall_seconds; // per sweep; run metadata, never serialized with results
    std::size_t iterations() const { return distances.size(); }
};

struct Solution {
    Profile profile;
    IterationTrace trace;
};

/// Weighted sup distance used by the stopping rule.
///
/// smooth:     min(r,1)^-2 |dU| + min(r,1)^-1 |dU'| + |dTheta| + min(r,1)^-1 |dTheta'|
/// cavitating: min(r,1)^-1 |dU| + |dU'| + |dTheta| + min(r,1)^-1 |dTheta'|
/// The node r = 0 is skipped; boundary conditions pin all differences there.
double weighted_distance(const Profile& a, const Profile& b);

}  // namespace nsexpander
