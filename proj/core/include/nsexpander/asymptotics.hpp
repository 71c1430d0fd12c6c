#pragma once

// Far-field constants of converged profiles and their comparison with the
// leading-order formulas.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsexpander/core.hpp"
#include "nsexpander/profile.hpp"

namespace nsexpander {

/// Least-squares fit y = A + B / r^2.
struct TailFit {
    double limit = 0.0;       // A
    double correction = 0.0;  // B
    double rms_residual = 0.0;
    std::size_t nodes = 0;
};

/// Fits y(r) = A + B/r^2 on the nodes with r in [r_lo, r_hi]. Throws
/// InputError when fewer than 20 nodes fall in the window.
TailFit fit_inverse_square(std::span<const double> r, std::span<const double> y, double r_lo, double r_hi);

struct AsymptoticSummary {
    double P_inf = 0.0, U_inf = 0.0, Theta_inf = 0.0;
    TailFit P_fit, U_fit, Theta_fit;  // models P, r U and r^2 Theta
    double window_lo = 0.0, window_hi = 0.0;
    /// P(r_max) - P(r_0): the accumulated int P' over the grid.
    double P_increment = 0.0;
};

/// Tail fit of P, r U and r^2 Theta over [window_lo, window_hi]; the default
/// window is [r_max/2, r_max].
AsymptoticSummary fit_tail(const Profile& profile, std::optional<double> window_lo = {},
                           std::optional<double> window_hi = {});

struct LeadingOrder {
    double U_inf = 0.0;      // smooth: -2 R Theta0; cavitating: 2d(2mu+lambda) alpha / P_delta
    double Theta_inf = 0.0;  // 2(d-2) kappa Theta0 / (C_V P_ref), P_ref = P0 or P_delta
    double P_inf = 0.0;      // P0 or P_delta
};

LeadingOrder leading_order(const PhysicalParams& p, const BoundaryData& b);

struct ComparisonReport {
    LeadingOrder predicted;
    double U_deviation = 0.0;      // relative, |fit - predicted| / |predicted|
    double Theta_deviation = 0.0;
    double P_deviation = 0.0;
    double tolerance = 0.05;       // smooth: 5%; cavitating: max(5%, 3 alpha log(1/(P_delta delta^2)))
    bool signs_ok = true;          // smooth: U_inf < 0 < Theta_inf; cavitating: U_inf > 0
    std::optional<double> halving_ratio;  // U_inf(Theta0) / U_inf(Theta0/2), smooth only

    bool U_within() const { return U_deviation <= tolerance; }
    bool Theta_within() const { return Theta_deviation <= tolerance; }
};

/// Tolerance used when comparing the fitted constants with leading order.
double leading_order_tolerance(const BoundaryData& b);

/// Relative deviations from the leading-order formulas. When `half` is the
/// summary of the same smooth problem with Theta0 halved, the ratio of the two
/// U_inf values is reported as well.
ComparisonReport check_leading_order(const AsymptoticSummary& summary, const PhysicalParams& p,
                                     const BoundaryData& b, const AsymptoticSummary* half = nullptr);

}  // namespace nsexpander
