#include <cmath>

#include "doctest.h"
#include "nsexpander/cavitating_solver.hpp"
#include "support.hpp"

using namespace nsexpander;

TEST_SUITE("cavitating_solver") {

TEST_CASE("seed follows the near-origin power laws") {
    const auto b = testing::cavitating_ref();
    const int d = 3;
    const double beta = b.density_exponent(d);
    // Explicit nodes so that delta and delta/2 are sampled exactly.
    const auto g = testing::share(RadialGrid({0.0125, 0.025, 0.05, 0.1, 0.2, 0.4, 0.8}, GridKind::from_rmin));
    const auto s = seed_cavitating(b, g, d);
    CHECK(s.P[3] == b.P_delta);
    CHECK(s.P[2] == doctest::Approx(b.P_delta * std::pow(0.5, beta)).epsilon(1e-15));
    for (std::size_t i = 0; i < g->size(); ++i) {
        CHECK(s.U[i] / (*g)[i] == doctest::Approx(b.alpha).epsilon(1e-15));
        CHECK(s.dU[i] == b.alpha);
        CHECK(s.Theta[i] == b.Theta0);
        CHECK(s.dTheta[i] == 0.0);
    }
    CHECK(density_at_anchor(s, testing::unit_params()) == doctest::Approx(b.P_delta).epsilon(1e-15));
}

TEST_CASE("a sweep keeps the density anchored") {
    const auto b = testing::cavitating_ref();
    const auto cfg = SolveConfig::cavitating_defaults(b);
    const auto g = testing::share(RadialGrid::from_rmin(cfg.r_min, cfg.r_max, 2000, cfg.grading));
    const auto next = psi_step_cavitating(seed_cavitating(b, g, 3), b, testing::unit_params());
    CHECK(density_at_anchor(next, testing::unit_params()) == doctest::Approx(b.P_delta).epsilon(1e-10));
}

TEST_CASE("reference solve") {
    const auto b = testing::cavitating_ref();
    const auto& sol = testing::cavitating_solution();
    const auto& prof = sol.profile;
    const auto r = prof.r();
    for (double q : sol.trace.ratios) CHECK(q < 1.0);
    CHECK(sol.trace.distances.back() < 1e-12);
    CHECK(prof.invariant_violations().empty());
    CHECK(density_at_anchor(prof, testing::unit_params()) == doctest::Approx(b.P_delta).epsilon(1e-10));

    double cdu = 0, pmin = INFINITY, pmax = 0, cseed = 0;
    const double beta = b.density_exponent(3);
    for (std::size_t i = 0; i < r.size(); ++i) {
        REQUIRE(prof.Theta[i] > 0);
        const double s = 1 + std::sqrt(b.P_delta) * r[i];
        cdu = std::max(cdu, std::abs(prof.dU[i]) / (b.alpha / (s * s)));
        if (r[i] >= b.delta) {
            pmin = std::min(pmin, prof.P[i]);
            pmax = std::max(pmax, prof.P[i]);
        }
        if (r[i] <= b.delta / 2)
            cseed = std::max(cseed, std::abs(prof.U[i] - b.alpha * r[i]) / std::pow(r[i], 1 + beta));
    }
    CHECK(cdu < 100.0);
    CHECK(pmin >= 0.5 * b.P_delta);
    CHECK(pmax <= 2.0 * b.P_delta);
    // U - alpha r = O(r^{1+beta}) near the origin.
    CHECK(std::isfinite(cseed));
    CHECK(cseed < 1.0);

    // log P against log r on [2 r_min, delta/4].
    const auto i0 = prof.grid->locate(2 * r[0]) + 1, i1 = prof.grid->locate(b.delta / 4);
    const double slope = (std::log(prof.P[i1]) - std::log(prof.P[i0])) / (std::log(r[i1]) - std::log(r[i0]));
    CHECK(slope == doctest::Approx(beta).epsilon(0.02));
}

TEST_CASE("converged profile is a fixed point on its own grid and on a finer one") {
    for (std::size_t cells : {4000, 8000}) {
        const auto& sol = testing::cavitating_solution(cells);
        const auto again = psi_step_cavitating(sol.profile, testing::cavitating_ref(), testing::unit_params());
        CHECK(weighted_distance(again, sol.profile) < 10 * 1e-12);
    }
}

TEST_CASE("vanishing slope gives vanishing velocity") {
    CavitatingBoundaryData b{1e-2, 0.1, 0.0, 1e-8};
    auto cfg = SolveConfig::cavitating_defaults(b);
    cfg.n_cells = 2000;
    // Theta0 = 0 lies outside the validated range, so call the solver directly.
    const auto sol = solve_cavitating(testing::unit_params(), b, cfg);
    double worst = 0;
    for (std::size_t i = 0; i < sol.profile.size(); ++i)
        worst = std::max(worst, std::abs(sol.profile.U[i]) / sol.profile.r()[i]);
    CHECK(worst <= 2e-8);
}

TEST_CASE("dispatcher rejects invalid input") {
    auto b = testing::cavitating_ref();
    b.alpha = 0.6;
    CHECK_THROWS_AS(solve(testing::unit_params(), b, SolveConfig::cavitating_defaults(testing::cavitating_ref())),
                    InputError);
    auto cfg = SolveConfig::cavitating_defaults(testing::cavitating_ref());
    cfg.r_min = 1.0;
    CHECK_THROWS_AS(solve(testing::unit_params(), testing::cavitating_ref(), cfg), InputError);
}

}  // TEST_SUITE
