#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "potential.hpp"

using namespace b2p1;

namespace {
const Grid2D g(64, 64, 2 * M_PI, 2 * M_PI);

Bathymetry trig_bottom() {
    BathymetrySpec s;
    s.kind = BathymetryKind::TrigPolynomial;
    s.modes = {{1, 0, 0.4, 0.0}, {0, 1, 0.3, 0.7}};
    return Bathymetry::make(s, g);
}
}  // namespace

TEST_CASE("flat bottom with delta = 0 slaves nothing") {
    SmallParams p(0.1, 0.1, 0.1, 0.0);
    Field2D f = Field2D::sample(g, [](double x, double y) { return std::cos(x) + std::sin(y); });
    Bathymetry b = Bathymetry::flat(g, 0.8);
    for (Regime r : {Regime::Case1, Regime::Case2, Regime::Case3, Regime::Case4})
        CHECK(bottom_F(f, b, p, r).max_abs() < 1e-14);
}

TEST_CASE("case1 over a flat raised bottom") {
    SmallParams p(0.1, 0.1, 0.2, 0.5);
    Bathymetry b = Bathymetry::flat(g, 0.8);
    // h_x = h_y = 0, so F = beta*delta*h*(f_xx + (gamma/beta) f_yy).
    Field2D fx = Field2D::sample(g, [](double x, double) { return std::cos(x); });
    Field2D ref_x = fx * (-p.beta * p.delta * 0.8);
    CHECK((bottom_F(fx, b, p, Regime::Case1) - ref_x).max_abs() < 1e-13);

    Field2D fy = Field2D::sample(g, [](double, double y) { return std::cos(2 * y); });
    Field2D ref_y = fy * (-4.0 * p.gamma * p.delta * 0.8);
    CHECK((bottom_F(fy, b, p, Regime::Case1) - ref_y).max_abs() < 1e-13);
}

TEST_CASE("case1 expanded form equals case2 divergence form") {
    // (h f_x)_x + (g/b)(h f_y)_y == h_x f_x + h f_xx + (g/b)(h_y f_y + h f_yy)
    // pointwise; both encodings must agree to round-off on band-limited data.
    SmallParams p(0.1, 0.1, 0.15, 0.3);
    Bathymetry b = trig_bottom();
    Field2D f = Field2D::sample(
        g, [](double x, double y) { return std::cos(x + 0.3) + 0.5 * std::cos(2 * y); });
    Field2D d = bottom_F(f, b, p, Regime::Case1) - bottom_F(f, b, p, Regime::Case2);
    CHECK(d.max_abs() < 1e-12);
}

TEST_CASE("case3 keeps only the x channel") {
    SmallParams p(0.1, 0.1, 0.1, 0.3);
    Bathymetry b = trig_bottom();
    Field2D fy = Field2D::sample(g, [](double, double y) { return std::cos(y); });
    CHECK(bottom_F(fy, b, p, Regime::Case3).max_abs() < 1e-13);
    Field2D fx = Field2D::sample(g, [](double x, double) { return std::cos(x); });
    CHECK(bottom_F(fx, b, p, Regime::Case3).max_abs() > 1e-4);
}

TEST_CASE("case4 weighs the y channel by gamma") {
    SmallParams p(0.3, 0.09, 0.18, 0.09);
    Bathymetry b = trig_bottom();
    Field2D f = Field2D::sample(g, [](double x, double y) { return std::cos(x) + std::cos(y); });
    // F = beta*delta*(h f_x)_x + gamma*delta*(h f_y)_y; doubling gamma with
    // an x-only profile changes nothing.
    Field2D fx = Field2D::sample(g, [](double x, double) { return std::cos(x); });
    SmallParams p2(0.3, 0.09, 0.36, 0.09);
    CHECK((bottom_F(fx, b, p, Regime::Case4) - bottom_F(fx, b, p2, Regime::Case4)).max_abs() <
          1e-14);
    CHECK((bottom_F(f, b, p, Regime::Case4) - bottom_F(f, b, p2, Regime::Case4)).max_abs() >
          1e-6);
}

TEST_CASE("bottom term is linear in f") {
    SmallParams p(0.1, 0.1, 0.1, 0.3);
    Bathymetry b = trig_bottom();
    Field2D f1 = Field2D::sample(g, [](double x, double y) { return std::cos(x) * std::cos(y); });
    Field2D f2 = Field2D::sample(g, [](double x, double y) { return std::sin(x + 2 * y); });
    for (Regime r : {Regime::Case1, Regime::Case2, Regime::Case3, Regime::Case4}) {
        Field2D lhs = bottom_F(f1 + f2 * 2.0, b, p, r);
        Field2D rhs = bottom_F(f1, b, p, r) + bottom_F(f2, b, p, r) * 2.0;
        CHECK((lhs - rhs).max_abs() < 1e-12);
    }
}

TEST_CASE("series evaluates to f at the surface-generating level") {
    SmallParams p(0.1, 0.05, 0.05, 0.2);
    Field2D f = Field2D::sample(g, [](double x, double y) { return std::cos(x) + std::cos(y); });
    Bathymetry b = trig_bottom();
    Field2D F = bottom_F(f, b, p, Regime::Case1);
    PotentialSeries ps(f, F, 2, p);
    CHECK((phi_eval(ps, 0.0) - f).max_abs() < 1e-14);
    CHECK((phi_z(ps, 0.0) - F).max_abs() < 1e-14);
}

TEST_CASE("truncated series matches the hand-expanded two-term form") {
    SmallParams p(0.1, 0.05, 0.08, 0.2);
    Field2D f = Field2D::sample(g, [](double x, double y) { return std::cos(x) * std::cos(y); });
    Field2D F = Field2D::sample(g, [](double x, double) { return 0.3 * std::sin(x); });
    PotentialSeries ps(f, F, 1, p);
    const double z = 0.5;
    auto L = [&](const Field2D& u) {
        return deriv(u, 2, 0) * p.beta + deriv(u, 0, 2) * p.gamma;
    };
    Field2D ref = f - L(f) * (z * z / 2.0) + F * z - L(F) * (z * z * z / 6.0);
    CHECK((phi_eval(ps, z) - ref).max_abs() < 1e-13);
    // d/dz of the same four terms.
    Field2D refz = L(f) * (-z) + F - L(F) * (z * z / 2.0);
    CHECK((phi_z(ps, z) - refz).max_abs() < 1e-13);
}

TEST_CASE("interior residual drops with each added term") {
    SmallParams p(0.1, 0.01, 0.01, 0.1);
    Bathymetry b = trig_bottom();
    Field2D f = Field2D::sample(g, [](double x, double y) { return std::cos(x) + std::cos(y); });
    const std::vector<double> zs = {0.0, 0.25, 0.5, 0.75, 1.0};
    double prev = 0.0;
    for (int M = 1; M <= 3; ++M) {
        PotentialSeries ps(f, bottom_F(f, b, p, Regime::Case1), M, p);
        PotentialResiduals res = potential_residuals(ps, b, zs);
        CHECK(std::isfinite(res.laplace));
        if (M > 1) CHECK(res.laplace < prev / 5.0);
        prev = res.laplace;
    }
}
