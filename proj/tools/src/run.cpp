#include "nsexpander/cli/run.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>

namespace nsexpander::cli {

namespace {

double to_double(const std::string& key, const std::string& text) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE)
        throw InputError("option '" + key + "': not a number: '" + text + "'");
    return v;
}

long to_integer(const std::string& key, const std::string& text) {
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(text.c_str(), &end, 10);
    if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE)
        throw InputError("option '" + key + "': not an integer: '" + text + "'");
    return v;
}

}  // namespace

const std::vector<std::string>& option_keys() {
    static const std::vector<std::string> keys = {
        "case", "d",     "mu",    "lambda", "cv",    "kappa",   "r-gas",   "p0",  "p-delta", "delta",
        "theta0", "alpha", "rmax", "rmin",  "cells", "grading", "tol", "max-iter", "damping"};
    return keys;
}

Problem make_problem(const std::map<std::string, std::string>& options) {
    for (const auto& [k, v] : options)
        if (std::find(option_keys().begin(), option_keys().end(), k) == option_keys().end())
            throw InputError("unknown option '" + k + "'");

    auto get = [&](const std::string& key) -> const std::string* {
        auto it = options.find(key);
        return it == options.end() ? nullptr : &it->second;
    };
    auto number = [&](const std::string& key, double& slot) {
        if (const auto* s = get(key)) slot = to_double(key, *s);
    };

    Problem pr;
    const std::string kind = get("case") ? *get("case") : "smooth";
    if (kind != "smooth" && kind != "cavitating") throw InputError("case must be 'smooth' or 'cavitating', got '" + kind + "'");

    auto& p = pr.params;
    if (const auto* s = get("d")) {
        const long d = to_integer("d", *s);
        if (d < 1 || d > 64) throw InputError("option 'd' out of range");
        p.d = static_cast<int>(d);
    }
    number("mu", p.mu);
    number("lambda", p.lambda);
    number("cv", p.C_V);
    number("kappa", p.kappa);
    number("r-gas", p.R);

    if (kind == "smooth") {
        if (get("p-delta") || get("delta") || get("alpha"))
            throw InputError("p-delta, delta and alpha apply to the cavitating case only");
        SmoothBoundaryData b;
        number("p0", b.P0);
        number("theta0", b.Theta0);
        pr.boundary = b;
    } else {
        if (get("p0")) throw InputError("p0 applies to the smooth case only (use p-delta)");
        CavitatingBoundaryData b;
        number("p-delta", b.P_delta);
        number("delta", b.delta);
        number("theta0", b.Theta0);
        number("alpha", b.alpha);
        pr.boundary = b;
    }

    auto& c = pr.config;
    c = SolveConfig::defaults_for(pr.boundary);
    number("rmax", c.r_max);
    number("rmin", c.r_min);
    number("grading", c.grading);
    number("tol", c.picard_tol);
    number("damping", c.damping);
    if (const auto* s = get("cells")) {
        const long n = to_integer("cells", *s);
        if (n < 1) throw InputError("option 'cells' must be positive");
        c.n_cells = static_cast<std::size_t>(n);
    }
    if (const auto* s = get("max-iter")) {
        const long n = to_integer("max-iter", *s);
        if (n < 1) throw InputError("option 'max-iter' must be positive");
        c.max_iter = static_cast<std::size_t>(n);
    }
    return pr;
}

RunReport analyze(const Problem& problem, Solution solution) {
    RunReport rep{problem, std::move(solution), {}, {}, {}, {}, {}, {}};
    const auto& prof = rep.solution.profile;
    const auto& p = problem.params;
    rep.residual = ode_residual(prof, p);
    const auto constants = [&] {
        if (const auto* c = std::get_if<CavitatingBoundaryData>(&problem.boundary))
            return BootstrapConstants::cavitating(*c);
        return BootstrapConstants::smooth(theta0_of(problem.boundary));
    }();
    // Theta0 = 0 leaves the smooth constants degenerate; the norm is then undefined.
    if (constants.M1 > 0 && constants.M2 > 0) rep.bootstrap = bootstrap_norm(prof, constants, p.d);
    rep.bounds = bound_suite(prof, p);
    try {
        rep.asymptotics = fit_tail(prof);
        if (theta0_of(problem.boundary) > 0) rep.comparison = check_leading_order(*rep.asymptotics, p, problem.boundary);
    } catch (const InputError& e) {
        rep.asymptotics_note = e.what();
    }
    return rep;
}

RunReport run(const Problem& problem) { return analyze(problem, solve(problem.params, problem.boundary, problem.config)); }

}  // namespace nsexpander::cli
