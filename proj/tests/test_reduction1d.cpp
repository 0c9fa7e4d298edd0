#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "reduction1d.hpp"

using namespace b2p1;

TEST_CASE("1d spectral operators are exact on trig data") {
    Grid1D g(64, 2 * M_PI);
    Field1D f = Field1D::sample(g, [](double x) { return std::cos(3 * x + 0.4); });
    Field1D fx = Field1D::sample(g, [](double x) { return -3.0 * std::sin(3 * x + 0.4); });
    CHECK((deriv(f, 1) - fx).max_abs() < 1e-12);
    // (1 + dxx) u = f round trip with P = 1 - k^2.
    Field1D u = invert_symbol(f, 1.0, 1.0, 0.0);
    CHECK((u + deriv(u, 2) - f).max_abs() < 1e-12);
    Field1D high = Field1D::sample(g, [](double x) { return std::cos(30 * x); });
    CHECK(dealias(high).max_abs() < 1e-13);
    CHECK(integral(fx) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(Grid1D(15, 1.0), Error);
    CHECK_THROWS_AS(Grid1D(8, 1.0), Error);
    CHECK_THROWS_AS(Grid1D(64, -1.0), Error);
}

TEST_CASE("y-invariant 2d runs collapse onto the 1d restriction") {
    Grid2D g2(64, 32, 4 * M_PI, 2 * M_PI);
    SmallParams p(0.1, 0.1, 0.1, 0.1);
    BathymetrySpec bs;
    bs.kind = BathymetryKind::TrigPolynomial;
    bs.modes = {{1, 0, 0.5, 0.3}};
    Bathymetry bath = Bathymetry::make(bs, g2);
    Field2D eta0 =
        Field2D::sample(g2, [](double x, double) { return 0.05 * std::cos(x / 2) ; });
    StepperConfig cfg;
    cfg.dt = 0.02;
    for (Regime r : {Regime::Case1, Regime::Case2, Regime::Case4}) {
        WaveState s(eta0, Field2D(g2), 0.0);
        ReductionReport rep = reduction_check(s, bath, p, r, 200, cfg);
        CHECK(rep.reducible);
        CHECK(rep.max_diff < 1e-12);
        CHECK(rep.max_y_variance < 1e-13);
    }
}

TEST_CASE("y-dependent data or bottom is flagged as non-reducible") {
    Grid2D g2(32, 32, 2 * M_PI, 2 * M_PI);
    SmallParams p(0.1, 0.1, 0.1, 0.1);
    BathymetrySpec bs;
    bs.kind = BathymetryKind::TrigPolynomial;
    bs.modes = {{0, 1, 0.5, 0.0}};
    Bathymetry bath = Bathymetry::make(bs, g2);
    WaveState s(Field2D::sample(g2, [](double x, double) { return 0.01 * std::cos(x); }),
                Field2D(g2), 0.0);
    StepperConfig cfg;
    cfg.dt = 0.02;
    ReductionReport rep = reduction_check(s, bath, p, Regime::Case1, 5, cfg);
    CHECK(!rep.reducible);
}

TEST_CASE("zero Bond number capillary restriction matches case3") {
    Grid1D g(64, 2 * M_PI);
    SmallParams p(0.01, 0.1, 0.1, 0.0, 0.0);
    Bathymetry1D bath = Bathymetry1D::flat(g, 0.0);
    Field1D eta0 = Field1D::sample(g, [](double x) { return 0.02 * std::cos(x); });
    State1D a(eta0, Field1D(g), 0.0), b = a;
    StepperConfig cfg;
    cfg.dt = 0.02;
    for (int i = 0; i < 10; ++i) {
        a = step_rk4_1d(a, cfg, bath, p, Regime::Case3, SurfaceTensionMode::Exact);
        b = step_rk4_1d(b, cfg, bath, p, Regime::Case3ST, SurfaceTensionMode::Exact);
    }
    CHECK((a.eta - b.eta).max_abs() < 1e-14);
}

TEST_CASE("unidirectional pulse solves the single equation exactly") {
    Grid1D g(2048, 200.0);
    SmallParams p(0.1, 0.1, 0.1, 0.0);
    const double amp = 0.3;
    Field1D eta = soliton_eta(g, amp, p, 100.0);
    Bathymetry1D flat;  // empty: no bottom terms
    const double c = 1.0 + p.alpha * amp / 2.0;
    // Travelling profile: eta_t = -c eta_x, and kdv_rhs returns eta_t.
    Field1D res = kdv_rhs(eta, flat, p, kdv_c_disp(p, false)) + c * deriv(eta, 1);
    CHECK(res.max_abs() < 1e-10);
}

TEST_CASE("single-equation evolution conserves mass and tracks the speed") {
    Grid1D g(512, 200.0);
    SmallParams p(0.1, 0.1, 0.1, 0.0);
    const double amp = 0.3;
    Field1D eta = soliton_eta(g, amp, p, 50.0);
    Bathymetry1D flat;
    const double m0 = integral(eta);
    const double dt = 0.05;
    for (int i = 0; i < 200; ++i) eta = step_rk4_kdv(eta, dt, flat, p, kdv_c_disp(p, false));
    CHECK(integral(eta) == doctest::Approx(m0).epsilon(1e-12));
    // Crest should sit near x0 + c t = 50 + 1.015 * 10.
    int imax = 0;
    for (int i = 0; i < g.n; ++i)
        if (eta.at(i) > eta.at(imax)) imax = i;
    CHECK(g.x(imax) == doctest::Approx(50.0 + (1.0 + p.alpha * amp / 2.0) * 10.0).epsilon(0.01));
}

TEST_CASE("seam tails abort the launch") {
    Grid1D g(64, 10.0);
    SmallParams p(0.1, 0.1, 0.1, 0.0);
    CHECK_THROWS_AS((void)soliton_init(g, 0.3, p, 5.0), Error);
}

TEST_CASE("pair launch carries the compatibility velocity") {
    Grid1D g(1024, 200.0);
    SmallParams p(0.1, 0.1, 0.1, 0.0);
    State1D s = soliton_init(g, 0.3, p, 100.0);
    // w = eta - (alpha/4) eta^2 + (beta/3) eta_xx for a clean right-mover.
    Field1D ref = s.eta - pointwise(s.eta, s.eta) * (p.alpha / 4.0) +
                  deriv(s.eta, 2) * (p.beta / 3.0);
    CHECK((s.w - ref).max_abs() < 1e-12);
}
