#include "nsexpander/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nsexpander {

namespace {

std::string fmt_num(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

void add(ValidationReport& rep, std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, ok ? std::string{} : std::move(detail)});
}

}  // namespace

const char* to_string(Case c) { return c == Case::smooth ? "smooth" : "cavitating"; }

Case case_of(const BoundaryData& b) {
    return std::holds_alternative<SmoothBoundaryData>(b) ? Case::smooth : Case::cavitating;
}

double theta0_of(const BoundaryData& b) {
    return std::visit([](const auto& x) { return x.Theta0; }, b);
}

double smallness_functional(const CavitatingBoundaryData& b) {
    const double pt = b.P_delta * b.Theta0;
    return b.P_delta + b.delta + b.Theta0 + b.alpha + pt / b.alpha + b.alpha * b.alpha / pt +
           b.alpha * std::log(1.0 / (b.P_delta * b.delta * b.delta));
}

SolveConfig SolveConfig::smooth_defaults() { return SolveConfig{}; }

SolveConfig SolveConfig::cavitating_defaults(const CavitatingBoundaryData& b) {
    SolveConfig c;
    // The weights e^{-W} decay on the length 1/sqrt(P_delta); the tail fit
    // needs several of those lengths.
    c.r_max = std::max(30.0, 40.0 / std::sqrt(b.P_delta));
    c.r_min = 1e-3 * b.delta;
    c.grading = 0.35;
    return c;
}

SolveConfig SolveConfig::defaults_for(const BoundaryData& b) {
    if (const auto* cav = std::get_if<CavitatingBoundaryData>(&b)) return cavitating_defaults(*cav);
    return smooth_defaults();
}

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::vector<std::string> ValidationReport::failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.passed) out.push_back(c.constraint);
    return out;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& c : checks) {
        if (c.passed) continue;
        if (!first) os << "; ";
        os << c.constraint;
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        first = false;
    }
    return first ? "ok" : os.str();
}

ValidationReport validate_params(const PhysicalParams& p, const BoundaryData& b,
                                 const Thresholds& thresholds) {
    ValidationReport rep;
    auto finite = [](double x) { return std::isfinite(x); };
    add(rep, "mu > 0", finite(p.mu) && p.mu > 0, "mu = " + fmt_num(p.mu));
    add(rep, "2mu + d lambda >= 0", finite(p.lambda) && 2 * p.mu + p.d * p.lambda >= 0,
        "2mu + d lambda = " + fmt_num(2 * p.mu + p.d * p.lambda));
    add(rep, "R > 0", finite(p.R) && p.R > 0, "R = " + fmt_num(p.R));
    add(rep, "C_V > 0", finite(p.C_V) && p.C_V > 0, "C_V = " + fmt_num(p.C_V));
    add(rep, "kappa > 0", finite(p.kappa) && p.kappa > 0, "kappa = " + fmt_num(p.kappa));
    add(rep, "d >= 3", p.d >= 3, "d = " + std::to_string(p.d));

    if (const auto* s = std::get_if<SmoothBoundaryData>(&b)) {
        add(rep, "P0 > 0", finite(s->P0) && s->P0 > 0, "P0 = " + fmt_num(s->P0));
        // Theta0 = 0 is admissible: the fixed point is then the constant state.
        add(rep, "Theta0 >= 0", finite(s->Theta0) && s->Theta0 >= 0,
            "Theta0 = " + fmt_num(s->Theta0));
        add(rep, "Theta0 < eps_smooth", s->Theta0 < thresholds.eps_smooth,
            "Theta0 = " + fmt_num(s->Theta0) + ", eps_smooth = " + fmt_num(thresholds.eps_smooth));
        return rep;
    }

    const auto& c = std::get<CavitatingBoundaryData>(b);
    add(rep, "P_delta > 0", finite(c.P_delta) && c.P_delta > 0, "P_delta = " + fmt_num(c.P_delta));
    add(rep, "delta > 0", finite(c.delta) && c.delta > 0, "delta = " + fmt_num(c.delta));
    add(rep, "Theta0 > 0", finite(c.Theta0) && c.Theta0 > 0, "Theta0 = " + fmt_num(c.Theta0));
    add(rep, "0 < alpha < 1/2", finite(c.alpha) && c.alpha > 0 && c.alpha < 0.5,
        "alpha = " + fmt_num(c.alpha));
    if (rep.passed()) {
        const double s = smallness_functional(c);
        rep.smallness = s;
        add(rep, "smallness S finite", std::isfinite(s), "S = " + fmt_num(s));
        add(rep, "S < eps_cav", s < thresholds.eps_cav,
            "S = " + fmt_num(s) + ", eps_cav = " + fmt_num(thresholds.eps_cav));
    }
    return rep;
}

ValidationReport validate_config(const SolveConfig& c, const BoundaryData& b) {
    ValidationReport rep;
    const bool cav = case_of(b) == Case::cavitating;
    add(rep, "picard_tol > 0", c.picard_tol > 0, "picard_tol = " + fmt_num(c.picard_tol));
    add(rep, "0 < damping <= 1", c.damping > 0 && c.damping <= 1, "damping = " + fmt_num(c.damping));
    add(rep, "n_cells >= 8", c.n_cells >= 8, "n_cells = " + std::to_string(c.n_cells));
    add(rep, "max_iter >= 1", c.max_iter >= 1);
    add(rep, "0 < grading < 1", c.grading > 0 && c.grading < 1, "grading = " + fmt_num(c.grading));
    if (cav) {
        const auto& cb = std::get<CavitatingBoundaryData>(b);
        add(rep, "r_min > 0", c.r_min > 0, "r_min = " + fmt_num(c.r_min));
        add(rep, "r_min < delta", c.r_min < cb.delta, "r_min = " + fmt_num(c.r_min));
        add(rep, "r_max > delta", c.r_max > cb.delta, "r_max = " + fmt_num(c.r_max));
    } else {
        add(rep, "r_max > 0", c.r_max > 0, "r_max = " + fmt_num(c.r_max));
    }
    return rep;
}

DegeneracyError::DegeneracyError(std::size_t node, double r, double margin)
    : SolverError("characteristic degeneracy: r/2 - U = " + fmt_num(margin) + " at node " +
                  std::to_string(node) + " (r = " + fmt_num(r) + ")"),
      node_(node) {}

ConvergenceError::ConvergenceError(std::size_t iterations, double last_distance, double last_ratio)
    : SolverError("fixed-point iteration did not converge after " + std::to_string(iterations) +
                  " iterations (last distance " + fmt_num(last_distance) +
                  ", last contraction ratio " + fmt_num(last_ratio) + ")"),
      iterations_(iterations),
      last_ratio_(last_ratio) {}

}  // namespace nsexpander
