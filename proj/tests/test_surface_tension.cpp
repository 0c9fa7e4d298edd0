#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "surface_tension.hpp"

using namespace b2p1;

namespace {
const Grid2D g(64, 64, 2 * M_PI, 2 * M_PI);
}

TEST_CASE("constant surface gives zero pressure") {
    SmallParams p(0.1, 0.1, 0.1, 0.0, 0.01);
    Field2D eta(g, 0.37);
    CHECK(st_exact(eta, p).max_abs() < 1e-14);
    CHECK(st_approx(eta, p).max_abs() < 1e-14);
}

TEST_CASE("tau = 0 gives zero for any surface") {
    SmallParams p(0.1, 0.1, 0.1, 0.0, 0.0);
    Field2D eta = Field2D::sample(g, [](double x, double y) { return std::cos(x) * std::sin(y); });
    CHECK(st_exact(eta, p).max_abs() == 0.0);
    CHECK(st_approx(eta, p).max_abs() == 0.0);
}

TEST_CASE("approx term on single modes") {
    SmallParams p(0.1, 0.2, 0.3, 0.0, 0.01);
    Field2D ex = Field2D::sample(g, [](double x, double) { return std::cos(x); });
    // -tau*beta*eta_xx = tau*beta*cos(x)
    CHECK((st_approx(ex, p) - ex * (p.tau * p.beta)).max_abs() < 1e-13);
    Field2D ey = Field2D::sample(g, [](double, double y) { return std::cos(2 * y); });
    CHECK((st_approx(ey, p) - ey * (p.tau * p.gamma * 4.0)).max_abs() < 1e-13);
}

TEST_CASE("exact term matches the pointwise closed form") {
    SmallParams p(0.1, 0.1, 0.1, 0.0, 0.01);
    Field2D eta = Field2D::sample(g, [](double x, double) { return std::cos(x); });
    // Single x mode: eta_y = 0, so
    //   ST = -tau * beta * eta_xx / (1 + a^2 b eta_x^2)^{3/2}.
    const double a2b = p.alpha * p.alpha * p.beta;
    Field2D ref = Field2D::sample(g, [&](double x, double) {
        const double ex = -std::sin(x), exx = -std::cos(x);
        return -p.tau * p.beta * exx / std::pow(1.0 + a2b * ex * ex, 1.5);
    });
    // The implementation dealiases its products; compare on the dealiased ref.
    CHECK((st_exact(eta, p) - dealias(ref)).max_abs() < 1e-12);
}

TEST_CASE("both operators are linear in tau") {
    Field2D eta = Field2D::sample(g, [](double x, double y) { return 0.3 * std::cos(x + y); });
    SmallParams p1(0.1, 0.1, 0.1, 0.0, 0.01), p2(0.1, 0.1, 0.1, 0.0, 0.02);
    CHECK((st_exact(eta, p2) - st_exact(eta, p1) * 2.0).max_abs() < 1e-14);
    CHECK((st_approx(eta, p2) - st_approx(eta, p1) * 2.0).max_abs() < 1e-14);
}

TEST_CASE("exact - approx shrinks like alpha^2") {
    Field2D eta = Field2D::sample(g, [](double x, double y) { return std::cos(x) + std::cos(y); });
    double prev = 0.0;
    std::vector<double> gaps;
    for (double a : {0.2, 0.1, 0.05, 0.025}) {
        SmallParams p(a, 0.1, 0.1, 0.0, 0.01);
        gaps.push_back((st_exact(eta, p) - st_approx(eta, p)).max_abs());
    }
    for (size_t i = 1; i < gaps.size(); ++i) {
        const double slope = std::log2(gaps[i - 1] / gaps[i]);
        CHECK(slope == doctest::Approx(2.0).epsilon(0.1));
    }
    (void)prev;
}

TEST_CASE("steep surfaces stay finite (denominator is a sum of squares)") {
    SmallParams p(0.9, 0.9, 0.9, 0.0, 0.01);
    Field2D eta = Field2D::sample(g, [](double x, double) { return 40.0 * std::cos(x); });
    Field2D out;
    CHECK_NOTHROW(out = st_exact(eta, p));
    CHECK(out.finite());
}
