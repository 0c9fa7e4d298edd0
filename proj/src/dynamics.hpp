#ifndef B2P1_DYNAMICS_HPP_
#define B2P1_DYNAMICS_HPP_

#include "grid.hpp"
#include "params.hpp"
#include "series.hpp"
#include "surface_tension.hpp"

namespace b2p1 {

namespace detail {
// The dynamic equation used for stepping: identical to the oracle encoding
// except for the verbatim sign on the eta f_yyt coupling in the beta-leading
// second-order regime. Shared with the 1D restriction.
series::TermSum stepping_dynamic(Regime r);
}  // namespace detail

// Prognostic pair: surface elevation and the velocity-potential generator.
struct WaveState {
    Field2D eta;
    Field2D f;
    double t = 0.0;

    WaveState(Field2D eta_, Field2D f_, double t_ = 0.0);
};

struct StepperConfig {
    double dt = 1e-2;
    double picard_tol = 1e-12;
    int picard_max_iters = 50;
    // High-k damping strength s: modes scaled by exp(-s ((|jx|/jmax)^36 +
    // (|jy|/jmax)^36)) once per step. 0 disables; 36 is the usual choice.
    double filter = 0.0;
    bool dealias = true;
};

struct RhsResult {
    Field2D eta_t;
    Field2D f_t;
    int picard_iters = 0;  // 0 for the constant-coefficient regimes
};

// Tendencies of the coupled pair. eta_t comes from transposing the kinematic
// equation; f_t from inverting the constant-coefficient grouping of the
// dynamic equation, with the variable-coefficient time-derivative terms
// (second-order beta-leading regime only) relaxed by Picard iteration.
RhsResult rhs(const WaveState& s, const Bathymetry& bath, const SmallParams& p, Regime r,
              SurfaceTensionMode st_mode = SurfaceTensionMode::Approx,
              const StepperConfig& cfg = {});

WaveState step_rk4(const WaveState& s, const StepperConfig& cfg, const Bathymetry& bath,
                   const SmallParams& p, Regime r,
                   SurfaceTensionMode st_mode = SurfaceTensionMode::Approx);

struct Diagnostics {
    double mass = 0.0;
    double l2_eta = 0.0;
    double linf_eta = 0.0;
    double spectrum_tail_fraction = 0.0;
};

Diagnostics diagnostics(const WaveState& s);

}  // namespace b2p1

#endif  // B2P1_DYNAMICS_HPP_
