#pragma once

// A posteriori checks of converged profiles: residuals of the radial ODE
// system, the bootstrap norms, and the global decay bounds.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsexpander/core.hpp"
#include "nsexpander/profile.hpp"

namespace nsexpander {

struct ResidualNorms {
    double sup = 0.0;
    double l2 = 0.0;  // sqrt(int res^2 dr / (r_end - r_begin)) over the evaluated nodes
};

/// Pointwise residuals of the mass, momentum and energy equations.
///
/// Derivatives the profile does not carry (P', U'', Theta'') are taken with
/// three-point finite differences on the nonuniform grid; U' and Theta' are the
/// carried values. Mass is divided by a density scale (P0 or P_delta),
/// momentum by 2mu + lambda, energy by kappa. Entries outside
/// [first, last] are zero.
struct ResidualReport {
    std::vector<double> mass, momentum, energy;
    std::size_t first = 0, last = 0;  // evaluated node range (inclusive)
    ResidualNorms mass_norm, momentum_norm, energy_norm;
    double h = 0.0;                   // max grid spacing

    double sup() const;
};

/// Throws InputError when the grid has fewer than 5 interior nodes.
ResidualReport ode_residual(const Profile& profile, const PhysicalParams& p);

/// log2 of successive ratios e_k / e_{k+1} for a sequence of errors at halved
/// spacings. Non-positive entries yield NaN.
std::vector<double> convergence_orders(std::span<const double> errors);

/// Constants of the bootstrap norm.
struct BootstrapConstants {
    double M1 = 0.0;
    double M1_prime = 0.0;  // cavitating only
    double M2 = 0.0;

    /// d M1 / (1 - 2 M1), the bound on |V|.
    double M0(int d) const { return d * M1 / (1.0 - 2.0 * M1); }

    /// M2 = A Theta0, M1 = A^2 Theta0.
    static BootstrapConstants smooth(double Theta0, double A = 10.0);
    /// M1 = Lambda alpha, M1' = Lambda^2 alpha, M2 = alpha / P_delta.
    static BootstrapConstants cavitating(const CavitatingBoundaryData& b, double Lambda = 10.0);
};

struct BootstrapReport {
    Case tag = Case::smooth;
    BootstrapConstants constants;
    double M0 = 0.0;
    std::vector<double> z;          // pointwise weighted sum at each node (0 at r = 0)
    std::vector<double> running;    // Z(r_i) = sup over r <= r_i
    double max_Z = 0.0;
    std::size_t argmax = 0;
    // Largest individual contribution at argmax: "U", "divU", "Theta", "dTheta".
    std::string dominant;
};

/// Evaluates Z on every node.
///
/// smooth:     r^-2 (1+r)^3 |U| / M1 + r^-1 (1+r)^3 |U' + (d-1)U/r| / M1
///             + (1+r)^2 |Theta| / M2 + r^-1 (1+r)^2 |Theta'| / M2
/// cavitating: with s = 1 + sqrt(P_delta) r,
///             r^-1 s^2 |U| / M1 + s^2 |U' + (d-1)U/r| / M1'
///             + s^2 |Theta| / M2 + (P_delta r)^-1 s^2 |Theta'| / M2
/// Throws InputError for non-positive constants or, in the cavitating case,
/// M1 >= M1'.
BootstrapReport bootstrap_norm(const Profile& profile, const BootstrapConstants& constants, int d);

struct BoundCheck {
    std::string name;
    double constant = 0.0;  // smallest C with |f| <= C * bound nodewise
    bool within_ceiling = true;
};

struct BoundReport {
    std::vector<BoundCheck> bounds;
    double ceiling = 100.0;
    bool density_bracket_ok = true;
    std::string density_bracket_detail;
    double min_margin = 0.0;           // min over r > 0 of (r/2 - U) / r
    bool margin_ok = true;             // r/2 - U > 0 (cavitating: >= (1/2 - 2 alpha) r)

    bool passed() const;
    const BoundCheck* find(const std::string& name) const;
};

/// Fits the constants of the global decay bounds and checks the density
/// brackets and characteristic margin.
///
/// smooth: |U| <~ Theta0 r^2/(1+r)^3, |U'| <~ Theta0 r/(1+r)^3,
///         |Theta| <~ Theta0/(1+r)^2, |Theta'| <~ Theta0 r/(1+r)^2,
///         e^-M0 P0 <= P <= e^M0 P0 with M0 from the smooth bootstrap constants.
/// cavitating (s = 1 + sqrt(P_delta) r): |U| <~ alpha r/s^2, |U'| <~ alpha/s^2,
///         |Theta| <~ 1/s^2, |Theta'| <~ sqrt(P_delta) r/s^2,
///         (r/delta)^{4 d alpha} P_delta <= P <= (r/delta)^{d alpha} P_delta on [r_0, delta].
BoundReport bound_suite(const Profile& profile, const PhysicalParams& p, double ceiling = 100.0);

}  // namespace nsexpander
