#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "params.hpp"

using namespace b2p1;

TEST_CASE("small-parameter validation") {
    CHECK_NOTHROW(SmallParams(0.1, 0.1, 0.1, 0.0));
    CHECK_NOTHROW(SmallParams(0.1, 0.1, 0.1, 0.1, 0.01));
    CHECK_THROWS_AS(SmallParams(0.0, 0.1, 0.1, 0.0), Error);
    CHECK_THROWS_AS(SmallParams(1.0, 0.1, 0.1, 0.0), Error);
    CHECK_THROWS_AS(SmallParams(0.1, 0.1, 0.1, -0.1), Error);
    CHECK_THROWS_AS(SmallParams(0.1, 0.1, 0.1, 0.0, -1.0), Error);
}

TEST_CASE("nondimensionalize arithmetic") {
    // a=0.5, H=5, L=50, l=25, a_h=1, T=0, rho=1000, g=9.81
    SmallParams p = nondimensionalize(0.5, 5, 50, 25, 1, 0, 1000, 9.81);
    CHECK(p.alpha == doctest::Approx(0.1));
    CHECK(p.beta == doctest::Approx(0.01));
    CHECK(p.gamma == doctest::Approx(0.04));
    CHECK(p.delta == doctest::Approx(0.2));
    CHECK(p.tau == doctest::Approx(0.0));
    CHECK(p.ratio() == doctest::Approx(4.0));
}

TEST_CASE("regime case mapping") {
    CHECK(regime_from_case(1) == Regime::Case1);
    CHECK(regime_from_case(2) == Regime::Case2);
    CHECK(regime_from_case(3) == Regime::Case3);
    CHECK(regime_from_case(3, true) == Regime::Case3ST);
    CHECK(regime_from_case(4) == Regime::Case4);
    CHECK_THROWS_AS(regime_from_case(5), Error);
    CHECK_THROWS_AS(regime_from_case(0), Error);
}

TEST_CASE("regime ordering diagnostics") {
    // Matched ordering: no warnings.
    CHECK(validate_regime(SmallParams(0.1, 0.1, 0.1, 0.1), Regime::Case1).ok());
    // alpha/beta = 10 in case1: flagged.
    RegimeDiagnostics d = validate_regime(SmallParams(0.1, 0.01, 0.01, 0.0), Regime::Case1);
    CHECK(d.A == doctest::Approx(10.0));
    REQUIRE(!d.warnings.empty());
    CHECK(d.warnings[0].find("A") != std::string::npos);
    // case2 weighs delta by beta^2.
    RegimeDiagnostics d2 = validate_regime(SmallParams(0.1, 0.1, 0.1, 0.01), Regime::Case2);
    CHECK(d2.D == doctest::Approx(1.0));
    // case4 leads with alpha.
    RegimeDiagnostics d4 = validate_regime(SmallParams(0.3, 0.09, 0.09, 0.09), Regime::Case4);
    CHECK(d4.A == doctest::Approx(1.0));
    CHECK(d4.ok());
}

TEST_CASE("flat bathymetry") {
    Grid2D g(32, 32, 2 * M_PI, 2 * M_PI);
    Bathymetry b = Bathymetry::flat(g, 0.5);
    CHECK(b.is_flat());
    CHECK(b.h().at(3, 7) == doctest::Approx(0.5));
    CHECK(b.hx().max_abs() == 0.0);
    CHECK(b.h_deriv(2, 0).max_abs() < 1e-13);
}

TEST_CASE("trig bathymetry has exact analytic derivatives") {
    Grid2D g(32, 32, 2 * M_PI, 2 * M_PI);
    BathymetrySpec s;
    s.kind = BathymetryKind::TrigPolynomial;
    s.modes = {{1, 0, 0.5, 0.0}, {0, 2, 0.3, 0.4}};
    Bathymetry b = Bathymetry::make(s, g);
    CHECK(b.h().max_abs() <= 1.0 + 1e-12);
    Field2D hx_ref = Field2D::sample(g, [&](double x, double) { return -0.5 * std::sin(x); });
    CHECK((b.hx() - hx_ref).max_abs() < 1e-12);
    Field2D hyy_ref =
        Field2D::sample(g, [&](double, double y) { return -1.2 * std::cos(2 * y + 0.4); });
    CHECK((b.h_deriv(0, 2) - hyy_ref).max_abs() < 1e-11);
}

TEST_CASE("tent bathymetry slope is piecewise constant") {
    Grid2D g(64, 32, 2 * M_PI, 2 * M_PI);
    BathymetrySpec s;
    s.kind = BathymetryKind::PiecewiseLinearX;
    s.tent_peak_x = M_PI;
    Bathymetry b = Bathymetry::make(s, g);
    CHECK(b.h().max_abs() <= 1.0 + 1e-12);
    // away from the kinks the slope is +-1/peak
    const double up = 1.0 / M_PI;
    CHECK(b.hx().at(10, 5) == doctest::Approx(up));
    CHECK(b.hx().at(50, 5) == doctest::Approx(-up));
    CHECK(b.hy().max_abs() == 0.0);
}
