#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "b2p1/b2p1.h"

namespace {
const char* kConfig =
    "[grid]\n"
    "nx = 32\n"
    "ny = 32\n"
    "Lx = 6.283185307179586\n"
    "Ly = 6.283185307179586\n"
    "[params]\n"
    "alpha = 0.1\n"
    "beta = 0.1\n"
    "gamma = 0.1\n"
    "[regime]\n"
    "case = 1\n"
    "[initial]\n"
    "kind = plane-wave\n"
    "amp = 0.01\n"
    "[time]\n"
    "t_end = 1.0\n"
    "dt = 0.05\n";
}  // namespace

TEST_CASE("version string is present") {
    const char* v = b2p1_version();
    REQUIRE(v != nullptr);
    CHECK(std::strlen(v) > 0);
}

TEST_CASE("create, step, inspect, destroy") {
    b2p1_sim* sim = nullptr;
    REQUIRE(b2p1_sim_create(kConfig, &sim) == B2P1_OK);
    REQUIRE(sim != nullptr);

    int nx = 0, ny = 0;
    double Lx = 0, Ly = 0;
    CHECK(b2p1_sim_grid(sim, &nx, &ny, &Lx, &Ly) == B2P1_OK);
    CHECK(nx == 32);
    CHECK(ny == 32);
    CHECK(Lx == doctest::Approx(2 * M_PI));

    CHECK(b2p1_sim_time(sim) == doctest::Approx(0.0));
    CHECK(b2p1_sim_step(sim, 10) == B2P1_OK);
    CHECK(b2p1_sim_time(sim) == doctest::Approx(0.5));

    b2p1_diagnostics d{};
    CHECK(b2p1_sim_diagnostics(sim, &d) == B2P1_OK);
    CHECK(d.linf_eta > 0.0);
    CHECK(d.linf_eta < 0.02);
    CHECK(std::abs(d.mass) < 1e-12);

    std::vector<double> eta(size_t(nx) * size_t(ny));
    CHECK(b2p1_sim_get_field(sim, B2P1_FIELD_ETA, eta.data(), eta.size()) == B2P1_OK);
    double mx = 0.0;
    for (double v : eta) mx = std::max(mx, std::abs(v));
    CHECK(mx == doctest::Approx(d.linf_eta));

    // Undersized buffer must be refused, not overrun.
    CHECK(b2p1_sim_get_field(sim, B2P1_FIELD_ETA, eta.data(), 5) == B2P1_CONFIG_ERROR);
    CHECK(std::strlen(b2p1_last_error()) > 0);

    b2p1_sim_destroy(sim);
}

TEST_CASE("bad configuration reports through the status code") {
    b2p1_sim* sim = reinterpret_cast<b2p1_sim*>(0x1);
    CHECK(b2p1_sim_create("[grid]\nnx = -4\n", &sim) == B2P1_CONFIG_ERROR);
    CHECK(std::strlen(b2p1_last_error()) > 0);
    CHECK(b2p1_sim_create(nullptr, &sim) == B2P1_CONFIG_ERROR);
    CHECK(b2p1_sim_create(kConfig, nullptr) == B2P1_CONFIG_ERROR);
    CHECK(b2p1_sim_step(nullptr, 1) == B2P1_CONFIG_ERROR);
    CHECK(b2p1_sim_create_from_file("/nonexistent/path.cfg", &sim) != B2P1_OK);
}

TEST_CASE("derivation report is exported") {
    char* text = nullptr;
    REQUIRE(b2p1_derive(2, 1, &text) == B2P1_OK);
    REQUIRE(text != nullptr);
    CHECK(std::strlen(text) > 0);
    b2p1_free_text(text);
    CHECK(b2p1_derive(9, 0, &text) != B2P1_OK);
}
