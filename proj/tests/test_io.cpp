#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include "config.hpp"
#include "io.hpp"
#include "run.hpp"

using namespace b2p1;
namespace fs = std::filesystem;

namespace {
const std::string kMinimal =
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
    "[time]\n"
    "t_end = 0.1\n";

fs::path temp_dir(const char* tag) {
    fs::path p = fs::temp_directory_path() / (std::string("b2p1_test_") + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}
}  // namespace

TEST_CASE("crc32 matches the reference vector") {
    const char* s = "123456789";
    CHECK(crc32(s, 9) == 0xCBF43926u);
    CHECK(crc32(s, 0) == 0u);
}

TEST_CASE("shortest-round-trip formatting") {
    for (double v : {0.1, 1.0 / 3.0, 6.283185307179586, -0.0, 1e-300, 12345.0}) {
        CHECK(std::stod(format_double(v)) == v);
    }
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
}

TEST_CASE("snapshots round-trip bit for bit") {
    Grid2D g(32, 16, 2 * M_PI, 4 * M_PI);
    WaveState s(Field2D::sample(g, [](double x, double y) { return std::cos(x) * std::sin(y); }),
                Field2D::sample(g, [](double x, double) { return 0.3 * std::sin(x); }), 1.25);
    std::string bytes = encode_snapshot(s);
    WaveState r = decode_snapshot(bytes);
    CHECK(r.t == s.t);
    CHECK(r.eta.grid() == g);
    CHECK((r.eta - s.eta).max_abs() == 0.0);
    CHECK((r.f - s.f).max_abs() == 0.0);
}

TEST_CASE("snapshot corruption is detected") {
    Grid2D g(16, 16, 1.0, 1.0);
    WaveState s(Field2D(g, 0.5), Field2D(g), 0.0);
    std::string bytes = encode_snapshot(s);

    std::string wrong_magic = bytes;
    wrong_magic[0] = 'X';
    CHECK_THROWS_AS((void)decode_snapshot(wrong_magic), BadMagic);

    std::string truncated = bytes.substr(0, bytes.size() - 7);
    CHECK_THROWS_AS((void)decode_snapshot(truncated), TruncatedPayload);

    std::string flipped = bytes;
    flipped[bytes.size() - 1] ^= 0x01;
    CHECK_THROWS_AS((void)decode_snapshot(flipped), ChecksumMismatch);
}

TEST_CASE("minimal config picks documented defaults") {
    RunConfig cfg = parse_config(kMinimal);
    CHECK(cfg.grid.nx == 32);
    CHECK(cfg.regime == Regime::Case1);
    CHECK(cfg.formulation == Formulation::Pair);
    CHECK(cfg.form == EquationForm::Consistent);
    CHECK(cfg.bathymetry.kind == BathymetryKind::Flat);
    CHECK(cfg.initial.kind == InitialKind::Gaussian);
    CHECK(cfg.time.dt == -1.0);
    CHECK(cfg.dt() == doctest::Approx(0.5 * cfg.grid.dx()));
    CHECK(cfg.output.dir == "out");
    CHECK(cfg.warnings.empty());
}

TEST_CASE("config errors carry line numbers") {
    // 'alfa' on line 7 is not a key in [params].
    std::string bad = kMinimal;
    const std::string needle = "alpha = 0.1\n";
    bad.replace(bad.find(needle), needle.size(), "alfa = 0.1\n");
    try {
        (void)parse_config(bad);
        FAIL("expected UnknownKey");
    } catch (const UnknownKey& e) {
        CHECK(e.line_number == 7);
        CHECK(std::string(e.what()).find("alfa") != std::string::npos);
    }

    std::string bad_num = kMinimal;
    bad_num.replace(bad_num.find("nx = 32"), 7, "nx = ab");
    try {
        (void)parse_config(bad_num);
        FAIL("expected TypeError");
    } catch (const TypeError& e) {
        CHECK(e.line_number == 2);
    }

    CHECK_THROWS_AS((void)parse_config(kMinimal + "[params]\nalpha = 0.2\n"), ConfigError);
    CHECK_THROWS_AS((void)parse_config("nx = 32\n"), ConfigError);
    CHECK_THROWS_AS((void)parse_config(kMinimal + "[bathymetry]\nkind = trig\n"), MissingKey);
    CHECK_THROWS_AS((void)parse_config(kMinimal + "[bathymetry]\nmodes = 1,0,0.5\n"),
                    ConfigError);
}

TEST_CASE("regime-ordering warnings surface in the config") {
    std::string skewed = kMinimal;
    skewed.replace(skewed.find("beta = 0.1"), 10, "beta = 0.01");
    RunConfig cfg = parse_config(skewed);
    CHECK(!cfg.warnings.empty());
}

TEST_CASE("cli derive succeeds and unknown flags fail cleanly") {
    const char* ok[] = {"b2p1", "derive", "--case", "1"};
    CHECK(run_cli(4, ok) == 0);
    const char* bad[] = {"b2p1", "derive", "--bogus"};
    CHECK(run_cli(3, bad) != 0);
}

TEST_CASE("simulate is byte-deterministic") {
    fs::path dir = temp_dir("det");
    fs::path cfg_path = dir / "run.cfg";
    write_text_file(cfg_path.string(), kMinimal);
    auto run_into = [&](const char* sub) {
        fs::path out = dir / sub;
        std::string out_s = out.string(), cfg_s = cfg_path.string();
        const char* argv[] = {"b2p1", "simulate", "--config", cfg_s.c_str(),
                              "--out", out_s.c_str()};
        REQUIRE(run_cli(6, argv) == 0);
        return read_text_file((out / "diagnostics.csv").string());
    };
    std::string a = run_into("a"), b = run_into("b");
    CHECK(!a.empty());
    CHECK(a == b);
    fs::remove_all(dir);
}
