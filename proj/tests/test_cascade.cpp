#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "cascade.hpp"

using namespace b2p1;

namespace {
const Grid2D g(64, 64, 2 * M_PI, 2 * M_PI);

Bathymetry trig_bottom() {
    BathymetrySpec s;
    s.kind = BathymetryKind::TrigPolynomial;
    s.modes = {{1, 0, 0.4, 0.0}};
    return Bathymetry::make(s, g);
}
}  // namespace

TEST_CASE("harmonic sum reproduces the analytic zeroth jet") {
    PlaneWaveSpec spec;
    spec.comps = {{2, 1, 0.3, 0.2, +1}, {1, -1, 0.1, 0.0, -1}};
    const double ratio = 1.5;
    HarmonicField h = zeroth_harmonics(spec, g, ratio);
    for (double t : {0.0, 0.37, 1.0}) {
        PlaneWaveJet jet = zeroth_solution(spec, g, ratio, t);
        double imag = 0.0;
        CHECK((h.evaluate(t, &imag) - jet.get(0, 0, 0)).max_abs() < 1e-12);
        CHECK(imag < 1e-12);
        CHECK((h.derivative(1, 1, 0).evaluate(t) - jet.get(1, 1, 0)).max_abs() < 1e-11);
    }
}

TEST_CASE("zeroth solution annihilates the wave operator") {
    PlaneWaveSpec spec;
    spec.comps = {{2, 1, 0.3, 0.2, +1}};
    HarmonicField h = zeroth_harmonics(spec, g, 1.5);
    HarmonicField w = h.wave_operator(1.5);
    for (double t : {0.0, 0.5}) CHECK(w.evaluate(t).max_abs() < 1e-12);
}

TEST_CASE("derivatives act exactly on polynomial amplitudes") {
    HarmonicField h(g);
    h.add(1, 0, 1.0, {0.5, 0.0}, 1);  // 0.5 t e^{i(x - t)} + c.c.
    // d/dt hits both the amplitude polynomial and the carrier.
    Field2D ref = Field2D::sample(g, [](double x, double) {
        // d/dt Re[0.5 t e^{i(x-t)}] = 0.5 cos(x-t) + 0.5 t sin(x-t)
        const double t = 0.7;
        return 0.5 * std::cos(x - t) + 0.5 * t * std::sin(x - t);
    });
    CHECK((h.dt().evaluate(0.7) - ref).max_abs() < 1e-12);
}

TEST_CASE("correction equations are solved exactly under the secular policy") {
    PlaneWaveSpec spec;
    spec.comps = {{2, 1, 0.05, 0.0, +1}, {1, 2, 0.03, 0.4, +1}};
    SmallParams p(0.1, 0.1, 0.15, 0.1);
    Bathymetry bath = trig_bottom();
    CorrectionSources src = correction_sources(spec, g, bath, p);
    const double ratio = p.ratio();
    std::vector<std::string> warnings;
    for (const HarmonicField* s : {&src.Sa, &src.Sb, &src.Sg, &src.Sd}) {
        if (s->empty()) continue;
        HarmonicField u = solve_correction(*s, p, -1.0, ResonancePolicy::Secular, &warnings);
        HarmonicField res = u.wave_operator(ratio) + s->scaled(-1.0);
        for (double t : {0.0, 0.37, 1.0}) CHECK(res.evaluate(t).max_abs() < 1e-11);
    }
}

TEST_CASE("self-interaction resonates deterministically") {
    // The quadratic source of a single carrier sits at (2K, 2Omega), which is
    // on the dispersion surface; the default policy must refuse it.
    PlaneWaveSpec spec;
    spec.comps = {{1, 0, 0.05, 0.0, +1}};
    SmallParams p(0.1, 0.1, 0.1, 0.0);
    Bathymetry flat;
    CorrectionSources src = correction_sources(spec, g, flat, p);
    CHECK_THROWS_AS((void)solve_correction(src.Sa, p), ResonantForcing);
    // The secular policy accepts it and flags the growth.
    std::vector<std::string> warnings;
    HarmonicField u = solve_correction(src.Sa, p, -1.0, ResonancePolicy::Secular, &warnings);
    CHECK(!warnings.empty());
    HarmonicField res = u.wave_operator(p.ratio()) + src.Sa.scaled(-1.0);
    for (double t : {0.0, 1.0}) CHECK(res.evaluate(t).max_abs() < 1e-11);
}

TEST_CASE("composite expansion stays conjugate-closed") {
    PlaneWaveSpec spec;
    spec.comps = {{2, 1, 0.05, 0.3, +1}};
    SmallParams p(0.05, 0.05, 0.05, 0.05);
    Bathymetry bath = trig_bottom();
    CorrectionSources src = correction_sources(spec, g, bath, p);
    Corrections corr;
    corr.a = solve_correction(src.Sa, p, -1.0, ResonancePolicy::Secular);
    corr.b = solve_correction(src.Sb, p, -1.0, ResonancePolicy::Secular);
    corr.g = solve_correction(src.Sg, p, -1.0, ResonancePolicy::Secular);
    corr.d = solve_correction(src.Sd, p, -1.0, ResonancePolicy::Secular);
    HarmonicField f = compose(spec, g, corr, p);
    double imag = 0.0;
    Field2D val = f.evaluate(0.6, &imag);
    CHECK(imag < 1e-12);
    // compose = f0 + alpha a + beta b + gamma g + delta d.
    Field2D ref = zeroth_harmonics(spec, g, p.ratio()).evaluate(0.6) +
                  corr.a.evaluate(0.6) * p.alpha + corr.b.evaluate(0.6) * p.beta +
                  corr.g.evaluate(0.6) * p.gamma + corr.d.evaluate(0.6) * p.delta;
    CHECK((val - ref).max_abs() < 1e-12);
}

TEST_CASE("non-harmonic bottoms are refused") {
    PlaneWaveSpec spec;
    spec.comps = {{1, 0, 0.05, 0.0, +1}};
    SmallParams p(0.1, 0.1, 0.1, 0.1);
    BathymetrySpec bs;
    bs.kind = BathymetryKind::PiecewiseLinearX;
    bs.tent_peak_x = M_PI;
    Bathymetry tent = Bathymetry::make(bs, g);
    CHECK_THROWS_AS((void)correction_sources(spec, g, tent, p), NonHarmonicBathymetry);
}

TEST_CASE("out-of-band carriers are rejected") {
    PlaneWaveSpec spec;
    spec.comps = {{30, 0, 0.05, 0.0, +1}};
    CHECK_THROWS_AS((void)zeroth_harmonics(spec, g, 1.0), Error);
}
