#ifndef B2P1_CONFIG_HPP_
#define B2P1_CONFIG_HPP_

#include <string>
#include <vector>

#include "grid.hpp"
#include "params.hpp"
#include "scalar.hpp"
#include "surface_tension.hpp"

namespace b2p1 {

enum class Formulation { Pair, Scalar };

enum class InitialKind { Gaussian, PlaneWave, SolitonLine, File };

struct InitialSpec {
    InitialKind kind = InitialKind::Gaussian;
    double amp = 0.01;
    double x0 = -1.0, y0 = -1.0;  // < 0 => domain center
    double sigma = -1.0;          // < 0 => Lx/10
    int jx = 1, jy = 0;
    double phase = 0.0;
    int branch = +1;
    std::string file;
};

struct BathymetryConfig {
    BathymetryKind kind = BathymetryKind::Flat;
    double h0 = 0.0;
    double peak_x = -1.0;
    std::vector<TrigMode> modes;
};

struct TimeSpec {
    double dt = -1.0;  // < 0 => 0.5 * dx (advisory CFL default)
    double t_end = 0.0;
    int snapshot_every = 0;  // steps between snapshots; 0 disables
    double filter = 0.0;
    bool dealias = true;
};

struct OutputSpec {
    std::string dir = "out";
    bool csv = true;
    bool snapshots = true;
};

struct RunConfig {
    Grid2D grid;
    SmallParams params;
    Regime regime = Regime::Case1;
    Formulation formulation = Formulation::Pair;
    SurfaceTensionMode st_mode = SurfaceTensionMode::Approx;
    EquationForm form = EquationForm::Consistent;
    BathymetryConfig bathymetry;
    InitialSpec initial;
    TimeSpec time;
    OutputSpec output;
    std::vector<std::string> warnings;  // regime-ordering diagnostics

    double dt() const { return time.dt > 0.0 ? time.dt : 0.5 * grid.dx(); }
};

// Line-based `key = value` under `[section]` headers, `#` comments. Unknown
// sections/keys and malformed values are errors carrying line numbers.
RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

Bathymetry make_bathymetry(const BathymetryConfig& bc, const Grid2D& g);

}  // namespace b2p1

#endif  // B2P1_CONFIG_HPP_
