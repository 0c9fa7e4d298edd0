#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "scalar.hpp"

using namespace b2p1;

namespace {
const Grid2D g(64, 64, 2 * M_PI, 2 * M_PI);
}

TEST_CASE("constant potential solves every single-f equation") {
    SmallParams p(0.1, 0.1, 0.1, 0.1);
    BathymetrySpec bs;
    bs.kind = BathymetryKind::TrigPolynomial;
    bs.modes = {{1, 0, 0.5, 0.0}};
    Bathymetry bath = Bathymetry::make(bs, g);
    CallbackJet jet(g, [&](int a, int b, int c) {
        return (a == 0 && b == 0 && c == 0) ? Field2D(g, 0.7) : Field2D(g);
    });
    for (Regime r : {Regime::Case1, Regime::Case2, Regime::Case3, Regime::Case4})
        for (EquationForm form : {EquationForm::Consistent, EquationForm::Printed})
            CHECK(scalar_residual(jet, bath, p, r, form).max_abs() < 1e-14);
}

TEST_CASE("plane-wave jet derivatives are analytic") {
    const double ratio = 2.0;
    PlaneWaveComponent c{3, 2, 0.5, 0.3, +1};
    PlaneWaveJet jet(g, {c}, ratio, 0.37);
    const double kx = g.kx(3), ky = g.ky(2);
    const double om = std::sqrt(kx * kx + ratio * ky * ky);
    CHECK(jet.omega(0) == doctest::Approx(om));
    // dx dy^2 dt of amp*cos(theta): each derivative adds pi/2 to the phase
    // and multiplies by kx, ky, -omega respectively.
    Field2D ref = Field2D::sample(g, [&](double x, double y) {
        const double th = kx * x + ky * y - om * 0.37 + 0.3;
        return 0.5 * kx * ky * ky * (-om) * std::cos(th + 4 * M_PI / 2);
    });
    CHECK((jet.get(1, 2, 1) - ref).max_abs() < 1e-11);
}

TEST_CASE("zeroth-order plane wave residual vanishes with the parameters") {
    Bathymetry flat;  // empty: no bottom terms requested
    PlaneWaveComponent c{2, 1, 0.01, 0.0, +1};
    auto residual = [&](double eps, Regime r) {
        SmallParams p(eps, eps, eps, 0.0);
        PlaneWaveJet jet(g, {c}, p.ratio(), 0.0);
        return scalar_residual(jet, flat, p, r, EquationForm::Consistent).max_abs();
    };
    for (Regime r : {Regime::Case1, Regime::Case2, Regime::Case3, Regime::Case4}) {
        const double r1 = residual(1e-4, r), r2 = residual(5e-5, r);
        CHECK(r1 < 1e-3);
        CHECK(r1 / r2 == doctest::Approx(2.0).epsilon(0.05));
    }
}

TEST_CASE("surface recovery reduces to -f_t in the linear limit") {
    SmallParams p(1e-9, 1e-9, 1e-9, 0.0);
    Field2D f = Field2D::sample(g, [](double x, double) { return std::cos(x); });
    Field2D q = Field2D::sample(g, [](double x, double y) { return 0.2 * std::sin(x + y); });
    for (Regime r : {Regime::Case1, Regime::Case2, Regime::Case3, Regime::Case4}) {
        ScalarState s(f, q, 0.0);
        CHECK((eta_from_f(s, p, r) + q).max_abs() < 1e-7);
    }
}

TEST_CASE("guards on unsupported recoveries and regimes") {
    Field2D f(g), q(g);
    ScalarState s(f, q, 0.0);
    SmallParams big_tau(0.3, 0.09, 0.09, 0.0, 1.0);
    CHECK_THROWS_AS((void)eta_from_f(s, big_tau, Regime::Case4), TauNotNegligible);
    SmallParams p(0.1, 0.1, 0.1, 0.0, 0.01);
    CHECK_THROWS_AS((void)eta_from_f(s, p, Regime::Case3ST), UnsupportedRegime);
    CHECK_THROWS_AS((void)scalar_plan(Regime::Case3ST, EquationForm::Consistent),
                    UnsupportedRegime);
    Bathymetry flat;
    CHECK_THROWS_AS((void)scalar_step(s, {}, flat, p, Regime::Case2), UnsupportedRegime);
}

TEST_CASE("printed and consistent forms coincide for case1 and case3") {
    SmallParams p(0.1, 0.1, 0.2, 0.0);
    Bathymetry flat;
    PlaneWaveJet jet(g, {{1, 2, 0.3, 0.1, +1}}, p.ratio(), 0.4);
    for (Regime r : {Regime::Case1, Regime::Case3}) {
        Field2D d = scalar_residual(jet, flat, p, r, EquationForm::Consistent) -
                    scalar_residual(jet, flat, p, r, EquationForm::Printed);
        CHECK(d.max_abs() < 1e-14);
    }
}

TEST_CASE("numeric jet closes f_tt through the governing equation") {
    SmallParams p(0.1, 0.1, 0.1, 0.0);
    Bathymetry flat;
    Field2D f = Field2D::sample(g, [](double x, double y) { return 0.1 * std::cos(x + y); });
    Field2D q = Field2D::sample(g, [](double x, double) { return 0.05 * std::sin(x); });
    NumericJet jet(ScalarState(f, q, 0.0), flat, p, Regime::Case1);
    // By construction the equation residual on this jet is zero.
    CHECK(scalar_residual(jet, flat, p, Regime::Case1, EquationForm::Consistent).max_abs() <
          1e-12);
    CHECK((jet.get(0, 0, 0) - f).max_abs() == 0.0);
    CHECK((jet.get(1, 0, 1) - deriv(q, 1, 0)).max_abs() < 1e-13);
    CHECK_THROWS_AS((void)jet.get(0, 0, 3), MissingDerivative);
}

TEST_CASE("scalar RK4 refines at fourth order") {
    // Small beta keeps every retained mode inside the equation's dispersive
    // validity band (beta k^2 < 1 for k <= 10 on a 32^2 grid).
    Grid2D g32(32, 32, 2 * M_PI, 2 * M_PI);
    SmallParams p(0.1, 0.01, 0.01, 0.0);
    Bathymetry flat;
    Field2D f0 = Field2D::sample(
        g32, [](double x, double y) { return 0.2 * std::cos(x) + 0.1 * std::cos(y); });
    Field2D q0(g32);
    auto advance = [&](double dt, int n) {
        ScalarState s(f0, q0, 0.0);
        ScalarStepConfig cfg;
        cfg.dt = dt;
        for (int i = 0; i < n; ++i) s = scalar_step(s, cfg, flat, p, Regime::Case1);
        return s;
    };
    ScalarState a = advance(0.02, 20), b = advance(0.01, 40), c = advance(0.005, 80);
    const double e1 = (a.f - b.f).max_abs(), e2 = (b.f - c.f).max_abs();
    CHECK(std::log2(e1 / e2) == doctest::Approx(4.0).epsilon(0.2));
}
