#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dynamics.hpp"

using namespace b2p1;

namespace {
const Grid2D g(64, 64, 2 * M_PI, 2 * M_PI);

Bathymetry trig_bottom() {
    BathymetrySpec s;
    s.kind = BathymetryKind::TrigPolynomial;
    s.modes = {{1, 0, 0.5, 0.0}, {0, 1, 0.3, 0.4}};
    return Bathymetry::make(s, g);
}

const std::initializer_list<Regime> kAll = {Regime::Case1, Regime::Case2, Regime::Case3,
                                            Regime::Case3ST, Regime::Case4};
}  // namespace

TEST_CASE("still water is a fixed point") {
    SmallParams p(0.1, 0.1, 0.1, 0.1, 0.01);
    Bathymetry bath = trig_bottom();
    WaveState s(Field2D{g}, Field2D{g}, 0.0);
    for (Regime r : kAll) {
        RhsResult rr = rhs(s, bath, p, r);
        CHECK(rr.eta_t.max_abs() < 1e-14);
        CHECK(rr.f_t.max_abs() < 1e-14);
    }
}

TEST_CASE("small waves travel at near-unit speed") {
    // With alpha, beta, gamma, delta all tiny the pair reduces to the wave
    // equation; a right-moving cos(x - t) returns to its start after 2*pi.
    SmallParams p(1e-6, 1e-4, 1e-4, 0.0);
    Bathymetry bath;  // flat, untouched
    const double amp = 1e-3;
    Field2D eta0 = Field2D::sample(g, [&](double x, double) { return amp * std::cos(x); });
    Field2D f0 = Field2D::sample(g, [&](double x, double) { return amp * std::sin(x); });
    WaveState s(eta0, f0, 0.0);
    StepperConfig cfg;
    cfg.dt = 2.0 * M_PI / 400;
    for (int i = 0; i < 400; ++i) s = step_rk4(s, cfg, bath, p, Regime::Case1);
    CHECK((s.eta - eta0).max_abs() < 0.02 * amp);
}

TEST_CASE("mass is conserved over a smooth bottom") {
    SmallParams p(0.1, 0.1, 0.1, 0.1, 0.01);
    Bathymetry bath = trig_bottom();
    Field2D eta0 = Field2D::sample(
        g, [](double x, double y) { return 0.05 * std::cos(x) + 0.03 * std::cos(y); });
    for (Regime r : kAll) {
        WaveState s(eta0, Field2D(g), 0.0);
        const double m0 = diagnostics(s).mass;
        StepperConfig cfg;
        cfg.dt = 0.02;
        for (int i = 0; i < 50; ++i) s = step_rk4(s, cfg, bath, p, r);
        CHECK(std::abs(diagnostics(s).mass - m0) < 1e-12);
    }
}

TEST_CASE("high-k filter preserves the mean exactly") {
    SmallParams p(0.1, 0.1, 0.1, 0.0);
    Bathymetry bath;
    Field2D eta0 = Field2D::sample(g, [](double x, double y) {
        return 0.05 * std::cos(x) + 0.01 * std::cos(20 * x + 15 * y);
    });
    WaveState s(eta0, Field2D(g), 0.0);
    const double m0 = diagnostics(s).mass;
    StepperConfig cfg;
    cfg.dt = 0.02;
    cfg.filter = 1e30;  // sharp low-pass
    for (int i = 0; i < 20; ++i) s = step_rk4(s, cfg, bath, p, Regime::Case1);
    CHECK(std::abs(diagnostics(s).mass - m0) < 1e-13);
    // The filter must actually damp the high-k content.
    CHECK(diagnostics(s).spectrum_tail_fraction < 1e-20);
}

TEST_CASE("picard relaxation engages only where f_t enters with coefficients") {
    SmallParams p(0.1, 0.1, 0.1, 0.0);
    Bathymetry bath;
    Field2D eta0 = Field2D::sample(g, [](double x, double y) { return 0.05 * std::cos(x + y); });
    Field2D f0 = Field2D::sample(g, [](double x, double) { return 0.05 * std::sin(x); });
    WaveState s(eta0, f0, 0.0);
    CHECK(rhs(s, bath, p, Regime::Case1).picard_iters == 0);
    CHECK(rhs(s, bath, p, Regime::Case3).picard_iters == 0);
    const int it = rhs(s, bath, p, Regime::Case2).picard_iters;
    CHECK(it >= 1);
    CHECK(it <= 8);
}

TEST_CASE("zero Bond number makes the capillary regime match case3") {
    SmallParams p(0.01, 0.1, 0.1, 0.0, 0.0);
    Bathymetry bath;
    Field2D eta0 = Field2D::sample(g, [](double x, double y) { return 0.02 * std::cos(x) * std::cos(y); });
    WaveState a(eta0, Field2D(g), 0.0), b = a;
    StepperConfig cfg;
    cfg.dt = 0.02;
    for (int i = 0; i < 10; ++i) {
        a = step_rk4(a, cfg, bath, p, Regime::Case3, SurfaceTensionMode::Exact);
        b = step_rk4(b, cfg, bath, p, Regime::Case3ST, SurfaceTensionMode::Exact);
    }
    CHECK((a.eta - b.eta).max_abs() < 1e-14);
    CHECK((a.f - b.f).max_abs() < 1e-14);
}

TEST_CASE("surface tension modes differ at second order only") {
    SmallParams p(0.05, 0.1, 0.1, 0.0, 0.01);
    Bathymetry bath;
    Field2D eta0 = Field2D::sample(g, [](double x, double) { return 0.05 * std::cos(x); });
    WaveState s(eta0, Field2D(g), 0.0);
    Field2D da = rhs(s, bath, p, Regime::Case3ST, SurfaceTensionMode::Approx).f_t -
                 rhs(s, bath, p, Regime::Case3ST, SurfaceTensionMode::Exact).f_t;
    CHECK(da.max_abs() > 0.0);
    CHECK(da.max_abs() < 1e-5);  // O(alpha^2 * tau) correction
}

TEST_CASE("mismatched grids are rejected") {
    Grid2D g2(32, 32, 2 * M_PI, 2 * M_PI);
    CHECK_THROWS_AS(WaveState(Field2D(g), Field2D(g2), 0.0), Error);
    SmallParams p(0.1, 0.1, 0.1, 0.0);
    WaveState s(Field2D{g2}, Field2D{g2}, 0.0);
    CHECK_THROWS_AS((void)rhs(s, trig_bottom(), p, Regime::Case1), Error);
}
