#include "nsexpander/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace nsexpander {

namespace {

// Three-point derivative at interior node i of a nonuniform grid, written in
// differences so that constants differentiate to exactly zero.
double diff3(std::span<const double> r, std::span<const double> f, std::size_t i) {
    const double hm = r[i] - r[i - 1], hp = r[i + 1] - r[i];
    return (hm / hp * (f[i + 1] - f[i]) + hp / hm * (f[i] - f[i - 1])) / (hm + hp);
}

ResidualNorms norms(std::span<const double> r, const std::vector<double>& res, std::size_t a, std::size_t b) {
    ResidualNorms out;
    double acc = 0.0;
    for (std::size_t i = a; i <= b; ++i) {
        out.sup = std::max(out.sup, std::abs(res[i]));
        if (i > a) acc += 0.5 * (r[i] - r[i - 1]) * (res[i] * res[i] + res[i - 1] * res[i - 1]);
    }
    out.l2 = b > a ? std::sqrt(acc / (r[b] - r[a])) : out.sup;
    return out;
}

double density_scale(const BoundaryData& b) {
    if (const auto* s = std::get_if<SmoothBoundaryData>(&b)) return s->P0;
    return std::get<CavitatingBoundaryData>(b).P_delta;
}

}  // namespace

double ResidualReport::sup() const {
    return std::max({mass_norm.sup, momentum_norm.sup, energy_norm.sup});
}

ResidualReport ode_residual(const Profile& profile, const PhysicalParams& p) {
    const auto r = profile.r();
    const std::size_t n = r.size();
    if (n < 7) throw InputError("ode_residual needs at least 5 interior nodes");
    const auto& P = profile.P;
    const auto& U = profile.U;
    const auto& T = profile.Theta;
    const auto& dU = profile.dU;
    const auto& dT = profile.dTheta;
    const double nu = p.viscosity();
    const double dm1 = p.d - 1;
    const double pscale = density_scale(profile.boundary);

    ResidualReport rep;
    rep.mass.assign(n, 0.0);
    rep.momentum.assign(n, 0.0);
    rep.energy.assign(n, 0.0);
    // Skip the first interior nodes: 1/r^2 terms amplify stencil error there.
    rep.first = 3;
    rep.last = n - 2;
    rep.h = profile.grid->max_spacing();

    for (std::size_t i = rep.first; i <= rep.last; ++i) {
        const double ri = r[i];
        const double dP = diff3(r, P, i);
        const double d2U = diff3(r, dU, i);
        const double d2T = diff3(r, dT, i);
        const double Pi = P[i], Ui = U[i], Ti = T[i], Ui1 = dU[i], Ti1 = dT[i];

        const double divU = Ui1 + dm1 * Ui / ri;
        rep.mass[i] = (-0.5 * ri * dP + dP * Ui + Pi * divU) / pscale;

        const double lapU = d2U + dm1 / ri * Ui1 - dm1 / (ri * ri) * Ui;
        const double dPU = dP * Ui + Pi * Ui1;
        const double dPU2 = dP * Ui * Ui + 2.0 * Pi * Ui * Ui1;
        const double dPRT = p.R * (dP * Ti + Pi * Ti1);
        rep.momentum[i] =
            (-0.5 * Pi * Ui - 0.5 * ri * dPU + dPU2 + dm1 / ri * Pi * Ui * Ui + dPRT - nu * lapU) / nu;

        const double E = 0.5 * Ui * Ui + p.C_V * Ti;
        const double dE = Ui * Ui1 + p.C_V * Ti1;
        const double H = E + p.R * Ti;  // Q = U P H
        const double dH = dE + p.R * Ti1;
        const double Q = Ui * Pi * H;
        const double dQ = (Ui1 * Pi + Ui * dP) * H + Ui * Pi * dH;
        const double dPE = dP * E + Pi * dE;
        const double lhs = -Pi * E - 0.5 * ri * dPE + dQ + dm1 / ri * Q - p.kappa * (d2T + dm1 / ri * Ti1);
        const double rhs = 2.0 * p.mu * (Ui1 * Ui1 + dm1 * Ui * Ui / (ri * ri)) + p.lambda * divU * divU +
                           nu * lapU * Ui;
        rep.energy[i] = (lhs - rhs) / p.kappa;
    }
    rep.mass_norm = norms(r, rep.mass, rep.first, rep.last);
    rep.momentum_norm = norms(r, rep.momentum, rep.first, rep.last);
    rep.energy_norm = norms(r, rep.energy, rep.first, rep.last);
    return rep;
}

std::vector<double> convergence_orders(std::span<const double> errors) {
    std::vector<double> out;
    for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
        if (errors[k] > 0 && errors[k + 1] > 0)
            out.push_back(std::log2(errors[k] / errors[k + 1]));
        else
            out.push_back(std::numeric_limits<double>::quiet_NaN());
    }
    return out;
}

BootstrapConstants BootstrapConstants::smooth(double Theta0, double A) {
    return {A * A * Theta0, 0.0, A * Theta0};
}

BootstrapConstants BootstrapConstants::cavitating(const CavitatingBoundaryData& b, double Lambda) {
    return {Lambda * b.alpha, Lambda * Lambda * b.alpha, b.alpha / b.P_delta};
}

BootstrapReport bootstrap_norm(const Profile& profile, const BootstrapConstants& c, int d) {
    const Case tag = profile.case_tag();
    if (!(c.M1 > 0 && c.M2 > 0)) throw InputError("bootstrap constants must be positive");
    if (tag == Case::cavitating && !(c.M1_prime > c.M1)) throw InputError("bootstrap constants need M1 < M1'");

    const auto r = profile.r();
    BootstrapReport rep;
    rep.tag = tag;
    rep.constants = c;
    rep.M0 = c.M0(d);
    rep.z.assign(r.size(), 0.0);
    rep.running.assign(r.size(), 0.0);
    const double Pd = tag == Case::cavitating ? std::get<CavitatingBoundaryData>(profile.boundary).P_delta : 0.0;

    double best = -1.0;
    std::array<double, 4> parts_at_best{};
    double run = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double ri = r[i];
        if (ri > 0.0) {
            const double U = std::abs(profile.U[i]);
            const double div = std::abs(profile.dU[i] + (d - 1) * profile.U[i] / ri);
            const double T = std::abs(profile.Theta[i]);
            const double dT = std::abs(profile.dTheta[i]);
            std::array<double, 4> parts{};
            if (tag == Case::smooth) {
                const double s2 = (1 + ri) * (1 + ri), s3 = s2 * (1 + ri);
                parts = {s3 * U / (ri * ri * c.M1), s3 * div / (ri * c.M1), s2 * T / c.M2, s2 * dT / (ri * c.M2)};
            } else {
                const double s = 1 + std::sqrt(Pd) * ri, s2 = s * s;
                parts = {s2 * U / (ri * c.M1), s2 * div / c.M1_prime, s2 * T / c.M2, s2 * dT / (Pd * ri * c.M2)};
            }
            rep.z[i] = parts[0] + parts[1] + parts[2] + parts[3];
            if (rep.z[i] > best) {
                best = rep.z[i];
                rep.argmax = i;
                parts_at_best = parts;
            }
        }
        run = std::max(run, rep.z[i]);
        rep.running[i] = run;
    }
    rep.max_Z = run;
    static const char* names[] = {"U", "divU", "Theta", "dTheta"};
    rep.dominant = names[std::max_element(parts_at_best.begin(), parts_at_best.end()) - parts_at_best.begin()];
    return rep;
}

bool BoundReport::passed() const {
    if (!density_bracket_ok || !margin_ok) return false;
    return std::all_of(bounds.begin(), bounds.end(), [](const BoundCheck& b) { return b.within_ceiling; });
}

const BoundCheck* BoundReport::find(const std::string& name) const {
    for (const auto& b : bounds)
        if (b.name == name) return &b;
    return nullptr;
}

BoundReport bound_suite(const Profile& profile, const PhysicalParams& p, double ceiling) {
    const auto r = profile.r();
    const int d = p.d;
    BoundReport rep;
    rep.ceiling = ceiling;

    double cU = 0, cdU = 0, cT = 0, cdT = 0;
    auto fit = [](double& c, double value, double bound) {
        if (bound > 0) c = std::max(c, std::abs(value) / bound);
    };
    rep.min_margin = std::numeric_limits<double>::infinity();

    if (const auto* s = std::get_if<SmoothBoundaryData>(&profile.boundary)) {
        const double T0 = s->Theta0;
        const double M0 = BootstrapConstants::smooth(T0).M0(d);
        const double lo = std::exp(-M0) * s->P0, hi = std::exp(M0) * s->P0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            const double ri = r[i], q = 1 + ri;
            if (ri > 0) {
                fit(cU, profile.U[i], T0 * ri * ri / (q * q * q));
                fit(cdU, profile.dU[i], T0 * ri / (q * q * q));
                fit(cdT, profile.dTheta[i], T0 * ri / (q * q));
            }
            fit(cT, profile.Theta[i], T0 / (q * q));
            if (rep.density_bracket_ok && !(profile.P[i] >= lo && profile.P[i] <= hi)) {
                rep.density_bracket_ok = false;
                rep.density_bracket_detail = "P outside [e^-M0 P0, e^M0 P0] at r = " + std::to_string(ri);
            }
            if (ri > 0) {
                const double m = 0.5 - profile.U[i] / ri;
                rep.min_margin = std::min(rep.min_margin, m);
                if (!(m > 0)) rep.margin_ok = false;
            }
        }
    } else {
        const auto& c = std::get<CavitatingBoundaryData>(profile.boundary);
        const double sq = std::sqrt(c.P_delta);
        for (std::size_t i = 0; i < r.size(); ++i) {
            const double ri = r[i];
            if (ri <= 0) continue;
            const double s = 1 + sq * ri, s2 = s * s;
            fit(cU, profile.U[i], c.alpha * ri / s2);
            fit(cdU, profile.dU[i], c.alpha / s2);
            fit(cT, profile.Theta[i], 1.0 / s2);
            fit(cdT, profile.dTheta[i], sq * ri / s2);
            if (ri <= c.delta) {
                const double x = ri / c.delta;
                const double lo = std::pow(x, 4 * d * c.alpha) * c.P_delta;
                const double hi = std::pow(x, d * c.alpha) * c.P_delta;
                // Relative slack for the anchor node, where P = P_delta up to rounding.
                const double tol = 1e-12 * c.P_delta;
                if (rep.density_bracket_ok && !(profile.P[i] >= lo - tol && profile.P[i] <= hi + tol)) {
                    rep.density_bracket_ok = false;
                    rep.density_bracket_detail = "P outside the near-origin bracket at r = " + std::to_string(ri);
                }
            }
            const double m = 0.5 - profile.U[i] / ri;
            rep.min_margin = std::min(rep.min_margin, m);
            if (!(m >= 0.5 - 2 * c.alpha)) rep.margin_ok = false;
        }
    }
    rep.bounds = {{"U", cU}, {"dU", cdU}, {"Theta", cT}, {"dTheta", cdT}};
    for (auto& b : rep.bounds) b.within_ceiling = b.constant <= ceiling;
    return rep;
}

}  // namespace nsexpander
