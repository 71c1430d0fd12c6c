#include <algorithm>
#include <random>

#include "doctest.h"
#include "nsexpander/core.hpp"

using namespace nsexpander;

namespace {

bool failed_on(const ValidationReport& rep, const std::string& name) {
    const auto f = rep.failures();
    return std::find(f.begin(), f.end(), name) != f.end();
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("unit constants with small smooth data pass") {
    const auto rep = validate_params(PhysicalParams{}, SmoothBoundaryData{1.0, 1e-3});
    CHECK(rep.passed());
    CHECK(rep.failures().empty());
    CHECK_FALSE(rep.smallness.has_value());
}

TEST_CASE("negative bulk viscosity combination is rejected") {
    PhysicalParams p;
    p.mu = 1.0;
    p.lambda = -1.0;  // 2 - 3 < 0
    const auto rep = validate_params(p, SmoothBoundaryData{});
    CHECK_FALSE(rep.passed());
    CHECK(failed_on(rep, "2mu + d lambda >= 0"));
    CHECK(rep.summary().find("2mu + d lambda >= 0") != std::string::npos);
}

TEST_CASE("smallness functional, hand-evaluated") {
    // 0.01 + 0.1 + 0.01 + 0.001 + 0.1 + 0.01 + 1e-3 ln(1e4)
    const CavitatingBoundaryData b{1e-2, 1e-1, 1e-2, 1e-3};
    CHECK(smallness_functional(b) == doctest::Approx(0.2402103403719762).epsilon(1e-13));
    const auto rep = validate_params(PhysicalParams{}, b);
    REQUIRE(rep.smallness.has_value());
    CHECK(*rep.smallness == doctest::Approx(0.2402103403719762).epsilon(1e-13));
    CHECK(rep.passed());

    Thresholds tight;
    tight.eps_cav = 0.2;
    const auto strict = validate_params(PhysicalParams{}, b, tight);
    CHECK(failed_on(strict, "S < eps_cav"));
}

TEST_CASE("validation reports every violated constraint") {
    PhysicalParams p;
    p.mu = -1;
    p.kappa = 0;
    p.d = 2;
    const auto rep = validate_params(p, CavitatingBoundaryData{1e-2, 1e-1, 1e-2, 0.6});
    CHECK(failed_on(rep, "mu > 0"));
    CHECK(failed_on(rep, "kappa > 0"));
    CHECK(failed_on(rep, "d >= 3"));
    CHECK(failed_on(rep, "0 < alpha < 1/2"));

    CHECK(failed_on(validate_params(PhysicalParams{}, SmoothBoundaryData{1.0, 0.5}), "Theta0 < eps_smooth"));
    CHECK(failed_on(validate_params(PhysicalParams{}, SmoothBoundaryData{0.0, 1e-3}), "P0 > 0"));
    // The constant state is an admissible limit.
    CHECK(validate_params(PhysicalParams{}, SmoothBoundaryData{1.0, 0.0}).passed());
}

TEST_CASE("validation is pure") {
    const PhysicalParams p;
    const CavitatingBoundaryData b{2e-2, 5e-2, 3e-2, 2e-3};
    const auto a = validate_params(p, b);
    const auto c = validate_params(p, b);
    CHECK(a == c);
    CHECK(b == CavitatingBoundaryData{2e-2, 5e-2, 3e-2, 2e-3});
}

TEST_CASE("smallness is increasing where each term is") {
    // dS/dx is increasing in x for x = P_delta, delta, Theta0, so a positive
    // derivative at the left end of a segment makes S increase along it.
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> logu(-4.0, -0.5);
    int checked = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        CavitatingBoundaryData b{std::pow(10, logu(rng)), std::pow(10, logu(rng)), std::pow(10, logu(rng)),
                                 std::pow(10, logu(rng)) * 0.4};
        const double a = b.alpha;
        const double step = 1.0 + std::uniform_real_distribution<double>(0.01, 1.0)(rng);

        auto hi = b;
        hi.P_delta *= step;
        if (1 + b.Theta0 / a - a * a / (b.P_delta * b.P_delta * b.Theta0) - a / b.P_delta > 0) {
            CHECK(smallness_functional(hi) > smallness_functional(b));
            ++checked;
        }
        hi = b;
        hi.delta *= step;
        if (1 - 2 * a / b.delta > 0) {
            CHECK(smallness_functional(hi) > smallness_functional(b));
            ++checked;
        }
        hi = b;
        hi.Theta0 *= step;
        if (1 + b.P_delta / a - a * a / (b.P_delta * b.Theta0 * b.Theta0) > 0) {
            CHECK(smallness_functional(hi) > smallness_functional(b));
            ++checked;
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("configuration checks") {
    const CavitatingBoundaryData b{1e-2, 1e-1, 1e-2, 1e-3};
    auto c = SolveConfig::cavitating_defaults(b);
    CHECK(validate_config(c, b).passed());
    CHECK(c.r_min == doctest::Approx(1e-4));
    CHECK(c.r_max > b.delta);

    auto bad = c;
    bad.r_min = 0.2;
    CHECK(failed_on(validate_config(bad, b), "r_min < delta"));
    bad = c;
    bad.damping = 0;
    CHECK(failed_on(validate_config(bad, b), "0 < damping <= 1"));
    bad = c;
    bad.picard_tol = 0;
    CHECK(failed_on(validate_config(bad, b), "picard_tol > 0"));

    const auto s = SolveConfig::smooth_defaults();
    CHECK(s.r_max == 30.0);
    CHECK(s.n_cells == 4000);
    CHECK(s.damping == 1.0);
    CHECK(validate_config(s, SmoothBoundaryData{}).passed());
}

TEST_CASE("case taxonomy") {
    CHECK(case_of(BoundaryData{SmoothBoundaryData{}}) == Case::smooth);
    CHECK(case_of(BoundaryData{CavitatingBoundaryData{}}) == Case::cavitating);
    CHECK(std::string(to_string(Case::cavitating)) == "cavitating");
    CHECK(theta0_of(BoundaryData{SmoothBoundaryData{1.0, 2e-3}}) == 2e-3);
    CHECK(CavitatingBoundaryData{}.density_exponent(3) == doctest::Approx(6e-3 / 0.998));
}

TEST_CASE("error types carry their context") {
    const DegeneracyError e(17, 0.5, -0.1);
    CHECK(e.node() == 17);
    CHECK(std::string(e.what()).find("17") != std::string::npos);
    const ConvergenceError c(200, 1e-3, 1.2);
    CHECK(c.iterations() == 200);
    CHECK(c.last_ratio() == 1.2);
}

}  // TEST_SUITE
