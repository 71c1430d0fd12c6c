#include <cmath>

#include "doctest.h"
#include "nsexpander/asymptotics.hpp"
#include "nsexpander/cavitating_solver.hpp"
#include "support.hpp"

using namespace nsexpander;

namespace {

Profile synthetic(double r_max, std::size_t n) {
    const auto g = testing::share(RadialGrid::from_zero(r_max, n));
    Profile p{g, {}, {}, {}, {}, {}, SmoothBoundaryData{1.0, 1e-3}};
    for (double r : g->nodes()) {
        const double s = std::max(r, 1e-3);
        p.P.push_back(1.0 + 0.5 / (s * s));
        p.U.push_back(-3.0 / s + 5.0 / (s * s * s));
        p.Theta.push_back(2.0 / (s * s));
        p.dU.push_back(0.0);
        p.dTheta.push_back(0.0);
    }
    return p;
}

}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("inverse-square fit recovers exact tails") {
    const auto s = fit_tail(synthetic(30.0, 2000));
    CHECK(s.U_inf == doctest::Approx(-3.0).epsilon(1e-10));
    CHECK(s.U_fit.correction == doctest::Approx(5.0).epsilon(1e-8));
    CHECK(s.Theta_inf == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(s.P_inf == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(s.window_lo == doctest::Approx(15.0));
    CHECK(s.window_hi == doctest::Approx(30.0));
}

TEST_CASE("too small a window is rejected") {
    const auto p = synthetic(30.0, 200);
    CHECK_THROWS_AS(fit_tail(p, 29.9, 30.0), InputError);
}

TEST_CASE("smooth constants are stable under window changes") {
    const auto& prof = testing::smooth_solution().profile;
    const auto a = fit_tail(prof);
    const auto b = fit_tail(prof, 10.0, 20.0);  // [r_max/3, 2 r_max/3]
    CHECK(b.U_inf == doctest::Approx(a.U_inf).epsilon(0.01));
    CHECK(b.Theta_inf == doctest::Approx(a.Theta_inf).epsilon(0.01));
    CHECK(a.P_increment == doctest::Approx(prof.P.back() - prof.P.front()).epsilon(1e-15));
}

TEST_CASE("smooth leading order") {
    const auto p = testing::unit_params();
    const auto pred = leading_order(p, testing::smooth_ref());
    CHECK(pred.U_inf == doctest::Approx(-2e-3));
    CHECK(pred.Theta_inf == doctest::Approx(2e-3));
    CHECK(pred.P_inf == 1.0);
    CHECK(leading_order_tolerance(testing::smooth_ref()) == 0.05);

    const auto a = fit_tail(testing::smooth_solution(4000, 1e-3).profile);
    const auto h = fit_tail(testing::smooth_solution(4000, 5e-4).profile);
    const auto rep = check_leading_order(a, p, testing::smooth_ref(), &h);
    CHECK(rep.signs_ok);
    CHECK(rep.U_within());
    CHECK(rep.Theta_within());
    REQUIRE(rep.halving_ratio.has_value());
    CHECK(*rep.halving_ratio == doctest::Approx(2.0).epsilon(0.025));
    // Density at infinity stays within O(Theta0) of P0.
    CHECK(std::abs(a.P_inf - 1.0) <= 10 * 1e-3);
}

TEST_CASE("halving ratio approaches two linearly in Theta0") {
    double prev = INFINITY;
    for (double t : {2e-3, 1e-3, 5e-4}) {
        const auto a = fit_tail(testing::smooth_solution(2000, t).profile);
        const auto h = fit_tail(testing::smooth_solution(2000, t / 2).profile);
        const double gap = std::abs(a.U_inf / h.U_inf - 2.0);
        CHECK(gap <= 10 * t);
        CHECK(gap < prev);
        prev = gap;
    }
}

TEST_CASE("cavitating leading order") {
    const auto p = testing::unit_params();
    const auto b = testing::cavitating_ref();
    const auto pred = leading_order(p, b);
    CHECK(pred.U_inf == doctest::Approx(2 * 3 * 2 * 1e-3 / 1e-2));
    CHECK(pred.Theta_inf == doctest::Approx(2 * 1e-2 / 1e-2));
    CHECK(leading_order_tolerance(b) == doctest::Approx(std::max(0.05, 3e-3 * std::log(1e4))));

    const auto s = fit_tail(testing::cavitating_solution().profile);
    const auto rep = check_leading_order(s, p, b);
    CHECK(rep.signs_ok);
    CHECK(rep.U_within());
    CHECK(std::abs(s.P_inf / b.P_delta - 1) <= 10 * b.alpha * std::log(1 / (b.P_delta * b.delta * b.delta)));
}

}  // TEST_SUITE
