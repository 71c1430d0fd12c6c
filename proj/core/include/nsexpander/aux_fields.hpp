#pragma once

// Right-hand-side algebra of the integral formulation: the transport exponent
// V, the weight exponents W and Z, the forcings F_U (or its cavitating
// variant) and F_Theta, and one application of the fixed-point map.

#include <span>
#include <utility>
#include <vector>

#include "nsexpander/core.hpp"
#include "nsexpander/grid.hpp"

namespace nsexpander {

/// Auxiliary fields of one iterate.
struct AuxFields {
    Case tag = Case::smooth;
    std::vector<double> V;       // smooth: V(0) = 0; cavitating: V(r) - V(delta)
    std::vector<double> P;
    std::vector<double> W, Z;    // non-decreasing
    std::vector<double> F_U;     // cavitating: the anchored variant with + d (2mu+lambda) alpha
    std::vector<double> F_Theta;
};

/// Integrand (U' + (d-1) U / r) / (r/2 - U) of the transport exponent.
/// At r = 0 (smooth grids) the value is extrapolated linearly from the next
/// two nodes. Throws DegeneracyError where r/2 - U <= 0.
std::vector<double> transport_integrand(std::span<const double> r, std::span<const double> U,
                                        std::span<const double> dU, int d);

/// Smooth case: V with V(0) = 0. Cavitating case: V(r) - V(delta), the
/// integral anchored at delta (delta need not be a node).
GridFunction compute_V(const GridFunction& U, const GridFunction& dU, int d, Case c, double delta = 0.0);

/// V(delta) - V(r_0) from the transport integrand, integrated with the same
/// piecewise-linear rule as compute_V.
double anchor_offset(std::span<const double> r, std::span<const double> g, double delta);

/// smooth: P = P0 e^V; cavitating: P = P_delta e^{V - V(delta)} (P(0) = 0 if the grid holds r = 0).
GridFunction compute_P(const GridFunction& V, const BoundaryData& b);

/// W = int r P / (2(2mu+lambda)), Z = C_V int r P / (2 kappa). seed is
/// int_0^{r_0} r P (zero on grids starting at the axis). Throws InputError on
/// negative density.
std::pair<GridFunction, GridFunction> compute_W_Z(const GridFunction& P, const PhysicalParams& p,
                                                  double seed = 0.0);

/// int_0^{r_0} of the inner (d-1)/r P U^2 integral, from U ~ r and P ~ r^beta.
double origin_seed_PU2(const PhysicalParams& p, double r0, double P0, double U0, double beta);

/// F_U = P U^2 + int_0^r (d-1)/r2 P U^2 + R P Theta + anchor, where anchor is
/// -R P0 Theta0 (smooth) or + d (2mu+lambda) alpha (cavitating).
GridFunction compute_F_U(const GridFunction& P, const GridFunction& U, const GridFunction& Theta,
                         const BoundaryData& b, const PhysicalParams& p, double inner_seed = 0.0);

struct FThetaSeeds {
    double energy_flux = 0.0;  // int_0^{r_0} U P (U^2/2 + C_V Theta) + U P R Theta
    double u2_over_r = 0.0;    // int_0^{r_0} U^2 / r
};

/// Full F_Theta, term by term; the 1/r terms take their axis limit 0 at r = 0.
GridFunction compute_F_Theta(const GridFunction& P, const GridFunction& U, const GridFunction& dU,
                             const GridFunction& Theta, const PhysicalParams& p, FThetaSeeds seeds = {});

/// One evaluation of the integral right-hand sides for a given density.
struct MapResult {
    AuxFields aux;
    std::vector<double> U, dU, Theta, dTheta;
};

/// Evaluates U and Theta from the integral formulas with the density P held
/// fixed, along with U' and Theta' from the differentiated identities.
/// U, dU, Theta are the current iterate. On grids not reaching r = 0 every
/// integral from 0 is seeded by the near-origin power laws.
MapResult evaluate_map(const GridPtr& grid, std::span<const double> P, std::span<const double> U,
                       std::span<const double> dU, std::span<const double> Theta, const BoundaryData& b,
                       const PhysicalParams& p);

/// Density generated by U: compute_P(compute_V(U)).
std::vector<double> density_from_velocity(const GridPtr& grid, std::span<const double> U,
                                          std::span<const double> dU, const BoundaryData& b,
                                          const PhysicalParams& p);

}  // namespace nsexpander
