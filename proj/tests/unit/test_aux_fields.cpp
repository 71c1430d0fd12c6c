#include <cmath>

#include "doctest.h"
#include "nsexpander/aux_fields.hpp"
#include "nsexpander/cavitating_solver.hpp"
#include "support.hpp"

using namespace nsexpander;

namespace {

GridPtr uniform(double a, double b, std::size_t n) { return testing::share(RadialGrid::uniform(a, b, n)); }

template <class F>
GridFunction sample(const GridPtr& g, F f) {
    std::vector<double> v(g->size());
    for (std::size_t i = 0; i < g->size(); ++i) v[i] = f((*g)[i]);
    return {g, std::move(v)};
}

// Oracles computed with 30-digit quadrature (V) and exact rational arithmetic (F_Theta).
constexpr double kSmoothV1 = 0.0025005188774513846;              // U = 1e-3 r^2/(1+r)^3, d = 3, r = 1
constexpr double kPolynomialFTheta = -0.11354541170634920635;    // see the polynomial case below

}  // namespace

TEST_SUITE("aux_fields") {

TEST_CASE("zero velocity transports nothing") {
    const auto g = uniform(0.0, 5.0, 100);
    const GridFunction zero{g, std::vector<double>(g->size(), 0.0)};
    const auto V = compute_V(zero, zero, 3, Case::smooth);
    for (double v : V.values) CHECK(v == 0.0);
    const auto P = compute_P(V, SmoothBoundaryData{2.0, 1e-3});
    for (double x : P.values) CHECK(x == 2.0);
}

TEST_CASE("linear velocity gives the logarithmic exponent") {
    const double alpha = 1e-3, delta = 0.1;
    const int d = 3;
    const double beta = 2 * d * alpha / (1 - 2 * alpha);
    const auto g = testing::share(RadialGrid::from_rmin(delta / 10, 10 * delta, 4000));
    const auto U = sample(g, [&](double r) { return alpha * r; });
    const auto dU = sample(g, [&](double) { return alpha; });
    const auto V = compute_V(U, dU, d, Case::cavitating, delta);
    for (std::size_t i = 0; i < g->size(); i += 97) CHECK(std::abs(V[i] - beta * std::log((*g)[i] / delta)) < 1e-6);

    const auto P = compute_P(V, CavitatingBoundaryData{1e-2, delta, 1e-2, alpha});
    for (std::size_t i = 0; i < g->size(); i += 97)
        CHECK(P[i] == doctest::Approx(1e-2 * std::pow((*g)[i] / delta, beta)).epsilon(1e-6));

    // Slope of log P against log r on [r_min, delta/2].
    const std::size_t hi = g->locate(delta / 2);
    const double slope = (std::log(P[hi]) - std::log(P[0])) / (std::log((*g)[hi]) - std::log((*g)[0]));
    CHECK(slope == doctest::Approx(beta).epsilon(0.01));
}

TEST_CASE("smooth transport exponent matches the oracle") {
    const auto g = uniform(0.0, 2.0, 4000);
    const auto U = sample(g, [](double r) { return 1e-3 * r * r / std::pow(1 + r, 3); });
    const auto dU = sample(g, [](double r) { return 1e-3 * (2 * r * (1 + r) - 3 * r * r) / std::pow(1 + r, 4); });
    const auto V = compute_V(U, dU, 3, Case::smooth);
    CHECK(V[0] == 0.0);
    CHECK(std::abs(V[2000] - kSmoothV1) < 1e-9);
}

TEST_CASE("smooth density stays in the exponential bracket") {
    const double M1 = 1e-2;
    const int d = 3;
    const auto g = uniform(0.0, 30.0, 3000);
    const auto U = sample(g, [&](double r) { return M1 * r * r / std::pow(1 + r, 3); });
    const auto dU = sample(g, [&](double r) { return M1 * (2 * r * (1 + r) - 3 * r * r) / std::pow(1 + r, 4); });
    const auto V = compute_V(U, dU, d, Case::smooth);
    const double M0 = d * M1 / (1 - 2 * M1);
    const auto P = compute_P(V, SmoothBoundaryData{1.0, 1e-3});
    for (std::size_t i = 0; i < g->size(); ++i) {
        REQUIRE(std::abs(V[i]) <= M0);
        REQUIRE(P[i] >= std::exp(-M0));
        REQUIRE(P[i] <= std::exp(M0));
    }
}

TEST_CASE("degenerate transport is reported") {
    const auto g = uniform(0.0, 2.0, 20);
    const auto U = sample(g, [](double r) { return r; });  // r/2 - U < 0
    const auto dU = sample(g, [](double) { return 1.0; });
    CHECK_THROWS_AS(compute_V(U, dU, 3, Case::smooth), DegeneracyError);
}

TEST_CASE("weight exponents") {
    PhysicalParams p;
    p.mu = 0.7;
    p.lambda = 0.2;
    p.C_V = 1.5;
    p.kappa = 0.4;
    const double nu = p.viscosity();
    const auto g = uniform(0.0, 10.0, 1000);
    const auto P = sample(g, [](double) { return 2.0; });
    const auto [W, Z] = compute_W_Z(P, p);
    for (std::size_t i = 0; i < g->size(); i += 50) {
        const double r = (*g)[i];
        CHECK(W[i] == doctest::Approx(2.0 * r * r / (4 * nu)).epsilon(1e-12));
        CHECK(Z[i] == doctest::Approx(p.C_V * 2.0 * r * r / (4 * p.kappa)).epsilon(1e-12));
        CHECK(Z[i] == doctest::Approx(p.C_V * nu / p.kappa * W[i]).epsilon(1e-14));
    }

    const auto [W0, Z0] = compute_W_Z(sample(g, [](double) { return 0.0; }), p);
    for (double w : W0.values) CHECK(w == 0.0);

    // Power-law density from a positive inner radius, seeded exactly.
    const double beta = 0.05, Pd = 1e-2, delta = 0.1;
    const auto gm = testing::share(RadialGrid::from_rmin(1e-4, 1.0, 4000));
    const auto Ppow = sample(gm, [&](double r) { return Pd * std::pow(r / delta, beta); });
    const double r0 = gm->front();
    const double seed = Ppow[0] * r0 * r0 / (2 + beta);
    const auto [Wp, Zp] = compute_W_Z(Ppow, p, seed);
    for (std::size_t i = 0; i < gm->size(); i += 131) {
        const double r = (*gm)[i];
        const double exact = Pd * r * r * std::pow(r / delta, beta) / (2 * nu * (2 + beta));
        CHECK(Wp[i] == doctest::Approx(exact).epsilon(1e-5));
    }

    std::vector<double> neg(g->size(), 1.0);
    neg[7] = -1.0;
    CHECK_THROWS_AS(compute_W_Z(GridFunction{g, neg}, p), InputError);
}

TEST_CASE("velocity forcing") {
    const PhysicalParams p;
    const auto g = uniform(0.0, 5.0, 200);
    const GridFunction zero{g, std::vector<double>(g->size(), 0.0)};
    const auto P = sample(g, [](double) { return 1.0; });
    const auto T = sample(g, [](double) { return 1e-3; });
    const auto F = compute_F_U(P, zero, T, SmoothBoundaryData{1.0, 1e-3}, p);
    for (double f : F.values) CHECK(std::abs(f) < 1e-18);

    const CavitatingBoundaryData cb{1e-2, 0.1, 1e-2, 1e-3};
    const auto gm = testing::share(RadialGrid::from_rmin(1e-4, 5.0, 200));
    const GridFunction zm{gm, std::vector<double>(gm->size(), 0.0)};
    const auto Fc = compute_F_U(zm, zm, zm, cb, p);
    for (double f : Fc.values) CHECK(f == doctest::Approx(p.d * p.viscosity() * cb.alpha).epsilon(1e-15));
}

TEST_CASE("temperature forcing") {
    SUBCASE("vanishes without velocity") {
        const auto g = uniform(0.0, 5.0, 200);
        const GridFunction zero{g, std::vector<double>(g->size(), 0.0)};
        const auto F = compute_F_Theta(sample(g, [](double) { return 1.0; }), zero, zero,
                                       sample(g, [](double r) { return 1e-3 / (1 + r * r); }), PhysicalParams{});
        for (double f : F.values) CHECK(f == 0.0);
    }
    SUBCASE("polynomial case against exact arithmetic") {
        PhysicalParams p;
        p.mu = 1.3;
        p.lambda = 0.4;
        p.R = 0.7;
        p.C_V = 1.5;
        p.kappa = 0.9;
        const auto g = uniform(0.0, 2.0, 2000);
        const auto P = sample(g, [](double r) { return 1 + r * r / 2; });
        const auto U = sample(g, [](double r) { return r / 10 + r * r / 20; });
        const auto dU = sample(g, [](double r) { return 0.1 + r / 10; });
        const auto T = sample(g, [](double r) { return 0.02 - r * r / 100; });
        const auto F = compute_F_Theta(P, U, dU, T, p);
        CHECK((*g)[1000] == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::abs(F[1000] - kPolynomialFTheta) < 1e-6);
        CHECK(F[0] == 0.0);
    }
}

TEST_CASE("frozen zero density reproduces the linear velocity") {
    // With P = 0 the anchored velocity forcing is the constant d(2mu+lambda)alpha
    // and the velocity formula returns U = alpha r.
    const PhysicalParams p;
    const CavitatingBoundaryData b{1e-2, 0.1, 1e-2, 1e-3};
    const auto g = testing::share(RadialGrid::from_rmin(1e-4, 50.0, 2000));
    const std::vector<double> P(g->size(), 0.0);
    std::vector<double> U(g->size()), dU(g->size(), b.alpha), T(g->size(), 0.0);
    for (std::size_t i = 0; i < g->size(); ++i) U[i] = b.alpha * (*g)[i];
    const auto m = evaluate_map(g, P, U, dU, T, BoundaryData{b}, p);
    double worst = 0;
    for (std::size_t i = 0; i < g->size(); ++i) worst = std::max(worst, std::abs(m.U[i] - b.alpha * (*g)[i]));
    CHECK(worst < 1e-8);
}

TEST_CASE("density of the trivial iterate is the boundary value") {
    const auto g = testing::share(RadialGrid::from_zero(30.0, 400));
    const std::vector<double> zero(g->size(), 0.0);
    const auto P = density_from_velocity(g, zero, zero, SmoothBoundaryData{1.7, 0.0}, PhysicalParams{});
    for (double x : P) CHECK(x == 1.7);
}

}  // TEST_SUITE
