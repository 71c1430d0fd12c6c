#include "nsexpander/asymptotics.hpp"

#include <algorithm>
#include <cmath>

namespace nsexpander {

TailFit fit_inverse_square(std::span<const double> r, std::span<const double> y, double r_lo, double r_hi) {
    if (r.size() != y.size()) throw InputError("tail fit: size mismatch");
    if (!(r_lo > 0 && r_hi > r_lo)) throw InputError("tail fit: invalid window");
    // Normal equations in x = (r_lo / r)^2, which keeps them well scaled.
    double s0 = 0, s1 = 0, s2 = 0, t0 = 0, t1 = 0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] < r_lo || r[i] > r_hi) continue;
        const double x = (r_lo / r[i]) * (r_lo / r[i]);
        s0 += 1;
        s1 += x;
        s2 += x * x;
        t0 += y[i];
        t1 += x * y[i];
        ++n;
    }
    if (n < 20) throw InputError("tail fit window holds " + std::to_string(n) + " nodes; at least 20 needed");
    const double det = s0 * s2 - s1 * s1;
    if (!(std::abs(det) > 1e-14 * s0 * s2)) throw InputError("tail fit is ill-conditioned");
    const double A = (t0 * s2 - s1 * t1) / det;
    const double Bx = (s0 * t1 - s1 * t0) / det;
    TailFit f;
    f.limit = A;
    f.correction = Bx * r_lo * r_lo;
    f.nodes = n;
    double acc = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] < r_lo || r[i] > r_hi) continue;
        const double e = y[i] - A - f.correction / (r[i] * r[i]);
        acc += e * e;
    }
    f.rms_residual = std::sqrt(acc / static_cast<double>(n));
    return f;
}

AsymptoticSummary fit_tail(const Profile& profile, std::optional<double> window_lo, std::optional<double> window_hi) {
    const auto r = profile.r();
    AsymptoticSummary s;
    s.window_hi = window_hi.value_or(r.back());
    s.window_lo = window_lo.value_or(0.5 * r.back());
    std::vector<double> rU(r.size()), r2T(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        rU[i] = r[i] * profile.U[i];
        r2T[i] = r[i] * r[i] * profile.Theta[i];
    }
    s.P_fit = fit_inverse_square(r, profile.P, s.window_lo, s.window_hi);
    s.U_fit = fit_inverse_square(r, rU, s.window_lo, s.window_hi);
    s.Theta_fit = fit_inverse_square(r, r2T, s.window_lo, s.window_hi);
    s.P_inf = s.P_fit.limit;
    s.U_inf = s.U_fit.limit;
    s.Theta_inf = s.Theta_fit.limit;
    s.P_increment = profile.P.back() - profile.P.front();
    return s;
}

LeadingOrder leading_order(const PhysicalParams& p, const BoundaryData& b) {
    LeadingOrder lo;
    const int d = p.d;
    if (const auto* s = std::get_if<SmoothBoundaryData>(&b)) {
        lo.U_inf = -2.0 * p.R * s->Theta0;
        lo.Theta_inf = 2.0 * (d - 2) * p.kappa * s->Theta0 / (p.C_V * s->P0);
        lo.P_inf = s->P0;
    } else {
        const auto& c = std::get<CavitatingBoundaryData>(b);
        lo.U_inf = 2.0 * d * p.viscosity() * c.alpha / c.P_delta;
        lo.Theta_inf = 2.0 * (d - 2) * p.kappa * c.Theta0 / (p.C_V * c.P_delta);
        lo.P_inf = c.P_delta;
    }
    return lo;
}

double leading_order_tolerance(const BoundaryData& b) {
    if (const auto* c = std::get_if<CavitatingBoundaryData>(&b))
        return std::max(0.05, 3.0 * c->alpha * std::log(1.0 / (c->P_delta * c->delta * c->delta)));
    return 0.05;
}

ComparisonReport check_leading_order(const AsymptoticSummary& s, const PhysicalParams& p, const BoundaryData& b,
                                     const AsymptoticSummary* half) {
    ComparisonReport rep;
    rep.predicted = leading_order(p, b);
    auto rel = [](double fit, double ref) { return std::abs(fit - ref) / std::abs(ref); };
    rep.U_deviation = rel(s.U_inf, rep.predicted.U_inf);
    rep.Theta_deviation = rel(s.Theta_inf, rep.predicted.Theta_inf);
    rep.P_deviation = rel(s.P_inf, rep.predicted.P_inf);
    rep.tolerance = leading_order_tolerance(b);
    if (case_of(b) == Case::smooth) {
        rep.signs_ok = s.U_inf < 0 && s.Theta_inf > 0 && s.P_inf > 0;
        if (half) rep.halving_ratio = s.U_inf / half->U_inf;
    } else {
        rep.signs_ok = s.U_inf > 0 && s.P_inf > 0;
    }
    return rep;
}

}  // namespace nsexpander
