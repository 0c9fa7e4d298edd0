#ifndef B2P1_RUN_HPP_
#define B2P1_RUN_HPP_

#include <string>

#include "config.hpp"
#include "dynamics.hpp"
#include "scalar.hpp"

namespace b2p1 {

// Exit/status codes shared by the CLI and the C API.
enum StatusCode {
    kOk = 0,
    kError = 1,
    kConfigError = 2,
    kInstability = 3,
    kResonance = 4,
};

int status_for(const std::exception& e);

// Initial (eta, f) from the [initial] section.
WaveState make_initial(const RunConfig& cfg);

// Scalar-formulation launch matched to the pair: q = f_t from the pair's
// dynamic equation, so both formulations start from the same jet to the
// shared truncation order.
ScalarState scalar_launch(const WaveState& s, const Bathymetry& bath, const SmallParams& p,
                          Regime r);

// Human-readable derivation report for one case; optionally appends the
// term-by-term diff against the verbatim-typeset equation.
std::string derive_report(int case_no, bool diff_printed);

// Full command-line entry point: subcommands simulate, residual, perturb,
// reduce-check, soliton-demo, potential, derive, sweep. Returns a StatusCode;
// never throws.
int run_cli(int argc, const char* const* argv);

}  // namespace b2p1

#endif  // B2P1_RUN_HPP_
