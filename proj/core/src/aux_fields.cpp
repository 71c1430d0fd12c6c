#include "nsexpander/aux_fields.hpp"

#include <cmath>
#include <string>

namespace nsexpander {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw InputError(what);
}

std::vector<double> vec(std::span<const double> s) { return {s.begin(), s.end()}; }

// Exponent of the near-origin density power law; 0 for smooth data.
double origin_exponent(const BoundaryData& b, int d) {
    if (const auto* c = std::get_if<CavitatingBoundaryData>(&b)) return c->density_exponent(d);
    return 0.0;
}

}  // namespace

std::vector<double> transport_integrand(std::span<const double> r, std::span<const double> U,
                                        std::span<const double> dU, int d) {
    const std::size_t n = r.size();
    require(U.size() == n && dU.size() == n, "transport_integrand: size mismatch");
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (r[i] == 0.0) continue;
        const double margin = 0.5 * r[i] - U[i];
        if (!(margin > 0.0)) throw DegeneracyError(i, r[i], margin);
        g[i] = (dU[i] + (d - 1) * U[i] / r[i]) / margin;
    }
    if (r[0] == 0.0 && n >= 3) g[0] = g[1] - r[1] * (g[2] - g[1]) / (r[2] - r[1]);
    return g;
}

double anchor_offset(std::span<const double> r, std::span<const double> g, double delta) {
    require(delta >= r.front() && delta <= r.back(), "anchor radius outside the grid");
    const auto V = cumulative_trapezoid(r, g);
    std::size_t j = 0;
    while (j + 2 < r.size() && r[j + 1] <= delta) ++j;
    const double t = delta - r[j];
    const double g_delta = g[j] + (g[j + 1] - g[j]) * t / (r[j + 1] - r[j]);
    return V[j] + 0.5 * t * (g[j] + g_delta);
}

GridFunction compute_V(const GridFunction& U, const GridFunction& dU, int d, Case c, double delta) {
    const auto r = U.grid->nodes();
    const auto g = transport_integrand(r, U.values, dU.values, d);
    auto V = cumulative_trapezoid(r, g);
    if (c == Case::cavitating) {
        const double shift = anchor_offset(r, g, delta);
        for (auto& v : V) v -= shift;
    } else {
        require(r[0] == 0.0, "smooth transport exponent needs a grid starting at r = 0");
    }
    return GridFunction(U.grid, std::move(V));
}

GridFunction compute_P(const GridFunction& V, const BoundaryData& b) {
    const auto r = V.grid->nodes();
    std::vector<double> P(V.size());
    if (const auto* s = std::get_if<SmoothBoundaryData>(&b)) {
        for (std::size_t i = 0; i < P.size(); ++i) P[i] = s->P0 * std::exp(V[i]);
    } else {
        const auto& c = std::get<CavitatingBoundaryData>(b);
        for (std::size_t i = 0; i < P.size(); ++i) P[i] = r[i] == 0.0 ? 0.0 : c.P_delta * std::exp(V[i]);
    }
    for (std::size_t i = 0; i < P.size(); ++i)
        if (!std::isfinite(P[i])) throw InputError(("non-finite density at node " + std::to_string(i)).c_str());
    return GridFunction(V.grid, std::move(P));
}

std::pair<GridFunction, GridFunction> compute_W_Z(const GridFunction& P, const PhysicalParams& p, double seed) {
    const auto r = P.grid->nodes();
    std::vector<double> rP(P.size());
    for (std::size_t i = 0; i < rP.size(); ++i) {
        if (P[i] < 0.0) throw InputError(("negative density at node " + std::to_string(i)).c_str());
        rP[i] = r[i] * P[i];
    }
    const auto I = cumulative_trapezoid(r, rP, seed);
    std::vector<double> W(I.size()), Z(I.size());
    const double w = 1.0 / (2.0 * p.viscosity());
    const double z = p.C_V / (2.0 * p.kappa);
    for (std::size_t i = 0; i < I.size(); ++i) {
        W[i] = w * I[i];
        Z[i] = z * I[i];
    }
    return {GridFunction(P.grid, std::move(W)), GridFunction(P.grid, std::move(Z))};
}

double origin_seed_PU2(const PhysicalParams& p, double r0, double P0, double U0, double beta) {
    if (r0 == 0.0) return 0.0;
    return (p.d - 1) * P0 * U0 * U0 / (2.0 + beta);
}

GridFunction compute_F_U(const GridFunction& P, const GridFunction& U, const GridFunction& Theta,
                         const BoundaryData& b, const PhysicalParams& p, double inner_seed) {
    const auto r = P.grid->nodes();
    const std::size_t n = r.size();
    std::vector<double> inner(n);
    for (std::size_t i = 0; i < n; ++i) inner[i] = r[i] == 0.0 ? 0.0 : (p.d - 1) / r[i] * P[i] * U[i] * U[i];
    const auto J = cumulative_trapezoid(r, inner, inner_seed);
    double anchor = 0.0;
    if (const auto* s = std::get_if<SmoothBoundaryData>(&b))
        anchor = -p.R * s->P0 * s->Theta0;
    else
        anchor = p.d * p.viscosity() * std::get<CavitatingBoundaryData>(b).alpha;
    std::vector<double> F(n);
    for (std::size_t i = 0; i < n; ++i) F[i] = P[i] * U[i] * U[i] + J[i] + p.R * P[i] * Theta[i] + anchor;
    return GridFunction(P.grid, std::move(F));
}

GridFunction compute_F_Theta(const GridFunction& P, const GridFunction& U, const GridFunction& dU,
                             const GridFunction& Theta, const PhysicalParams& p, FThetaSeeds seeds) {
    const auto r = P.grid->nodes();
    const std::size_t n = r.size();
    const int d = p.d;
    std::vector<double> flux(n), u2r(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = U[i];
        flux[i] = u * P[i] * (0.5 * u * u + p.C_V * Theta[i]) + u * P[i] * p.R * Theta[i];
        u2r[i] = r[i] == 0.0 ? 0.0 : u * u / r[i];
    }
    const auto flux_int = cumulative_trapezoid(r, flux, seeds.energy_flux);
    const auto u2r_int = cumulative_trapezoid(r, u2r, seeds.u2_over_r);
    const double heat = p.kappa / p.C_V - p.viscosity();
    std::vector<double> F(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (r[i] == 0.0) {
            F[i] = 0.0;
            continue;
        }
        const double u = U[i];
        const double inv_r = 1.0 / r[i];
        F[i] = flux[i] + (d - 2) * inv_r * flux_int[i] +
               heat * (u * dU[i] + 0.5 * (d - 2) * inv_r * u * u) -
               p.lambda * (d - 1) * (u * u * inv_r + (d - 2) * inv_r * u2r_int[i]);
    }
    return GridFunction(P.grid, std::move(F));
}

MapResult evaluate_map(const GridPtr& grid, std::span<const double> P_in, std::span<const double> U_in,
                       std::span<const double> dU_in, std::span<const double> Theta_in, const BoundaryData& b,
                       const PhysicalParams& p) {
    const auto r = grid->nodes();
    const std::size_t n = r.size();
    require(P_in.size() == n && U_in.size() == n && dU_in.size() == n && Theta_in.size() == n,
            "evaluate_map: size mismatch");
    const int d = p.d;
    const double nu = p.viscosity();
    const double r0 = r[0];
    const bool from_axis = r0 == 0.0;
    require(from_axis || case_of(b) == Case::cavitating, "smooth profiles need a grid starting at r = 0");
    const double beta = origin_exponent(b, d);

    const GridFunction P(grid, vec(P_in)), U(grid, vec(U_in)), dU(grid, vec(dU_in)), Theta(grid, vec(Theta_in));

    // Near-origin contributions on [0, r_0]: U ~ r, P ~ r^beta, Theta ~ const.
    const double P0 = P[0], U0 = U[0], T0 = Theta[0];
    const double seed_rP = from_axis ? 0.0 : P0 * r0 * r0 / (2.0 + beta);
    const double seed_J = origin_seed_PU2(p, r0, P0, U0, beta);
    FThetaSeeds th_seeds;
    if (!from_axis) {
        th_seeds.energy_flux =
            P0 * U0 * r0 * ((p.C_V + p.R) * T0 / (2.0 + beta) + U0 * U0 / (2.0 * (4.0 + beta)));
        th_seeds.u2_over_r = 0.5 * U0 * U0;
    }

    auto [W, Z] = compute_W_Z(P, p, seed_rP);
    const auto F_U = compute_F_U(P, U, Theta, b, p, seed_J);
    const auto F_T = compute_F_Theta(P, U, dU, Theta, p, th_seeds);

    double seed_KU = 0.0, seed_L = 0.0, seed_G = 0.0;
    if (!from_axis) {
        const double A = d * nu * std::get<CavitatingBoundaryData>(b).alpha;
        const double B = p.R * P0 * T0;
        const double C = F_U[0] - A - B;
        const double rd = std::pow(r0, d);
        seed_KU = rd * (A / d + B / (d + beta) + C / (d + 2.0 + beta));
        seed_L = p.C_V * P0 * rd / (2.0 * p.kappa * (d + beta));
        seed_G = F_T[0] * std::pow(r0, d - 1) / d;
    }

    std::vector<double> dZ(n);
    for (std::size_t i = 0; i < n; ++i) dZ[i] = p.C_V * r[i] * P[i] / (2.0 * p.kappa);

    const auto KU = weighted_volterra(r, F_U.values, W.values, d - 1, seed_KU);
    const auto L = weighted_volterra(r, dZ, Z.values, d - 2, seed_L);
    const auto KG = weighted_volterra(r, F_T.values, Z.values, d - 2, seed_G);

    MapResult out;
    out.U.assign(n, 0.0);
    out.dU.assign(n, 0.0);
    out.Theta.assign(n, 0.0);
    out.dTheta.assign(n, 0.0);
    const auto& cb = std::get_if<CavitatingBoundaryData>(&b);
    for (std::size_t i = 0; i < n; ++i) {
        const double ri = r[i];
        if (ri == 0.0) {
            out.Theta[i] = theta0_of(b);
            continue;
        }
        const double u_new = std::pow(ri, 1 - d) * KU[i] / nu;
        const double dW = ri * P[i] / (2.0 * nu);
        out.U[i] = u_new;
        out.dU[i] = F_U[i] / nu - dW * u_new - (d - 1) * u_new / ri;

        // Homogeneous factor H = (d-2) r^{2-d} int r1^{d-3} e^{Z1 - Z}, taken
        // through 1 - H = r^{2-d} int r1^{d-2} Z' e^{Z1 - Z} on the whole grid.
        // Switching forms part way leaves an O(h^2) jump that differencing Theta'
        // turns into O(h).
        const double r2d = std::pow(ri, 2 - d);
        const double one_minus = r2d * L[i];
        const double H = 1.0 - one_minus;
        const double dH = (d - 2) * one_minus / ri - dZ[i] * H;
        const double G = r2d * KG[i];
        const double dG = (2 - d) * G / ri + F_T[i] - dZ[i] * G;
        const double theta0 = cb ? cb->Theta0 : std::get<SmoothBoundaryData>(b).Theta0;
        out.Theta[i] = theta0 * H - U[i] * U[i] / (2.0 * p.C_V) + G / p.kappa;
        out.dTheta[i] = theta0 * dH - U[i] * dU[i] / p.C_V + dG / p.kappa;
    }

    out.aux.tag = case_of(b);
    out.aux.P = P.values;
    out.aux.W = std::move(W.values);
    out.aux.Z = std::move(Z.values);
    out.aux.F_U = F_U.values;
    out.aux.F_Theta = F_T.values;
    return out;
}

std::vector<double> density_from_velocity(const GridPtr& grid, std::span<const double> U,
                                          std::span<const double> dU, const BoundaryData& b,
                                          const PhysicalParams& p) {
    const Case c = case_of(b);
    const double delta = c == Case::cavitating ? std::get<CavitatingBoundaryData>(b).delta : 0.0;
    const auto V = compute_V(GridFunction(grid, vec(U)), GridFunction(grid, vec(dU)), p.d, c, delta);
    return compute_P(V, b).values;
}

}  // namespace nsexpander
