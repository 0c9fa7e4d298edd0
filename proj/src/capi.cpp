#include "b2p1/b2p1.h"

#include <cstring>
#include <optional>
#include <string>

#include "config.hpp"
#include "dynamics.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "run.hpp"
#include "scalar.hpp"

using namespace b2p1;

struct b2p1_sim {
    RunConfig cfg;
    Bathymetry bath;
    StepperConfig scfg;
    std::optional<WaveState> pair;
    std::optional<ScalarState> scalar;

    WaveState surface() const {
        if (pair) return *pair;
        return WaveState(eta_from_f(*scalar, cfg.params, cfg.regime), scalar->f, scalar->t);
    }
};

namespace {

thread_local std::string g_last_error = "";

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return B2P1_OK;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return status_for(e);
    } catch (...) {
        g_last_error = "unknown error";
        return B2P1_ERROR;
    }
}

b2p1_sim* build_sim(RunConfig cfg) {
    auto* sim = new b2p1_sim;
    sim->cfg = std::move(cfg);
    sim->bath = make_bathymetry(sim->cfg.bathymetry, sim->cfg.grid);
    sim->scfg.dt = sim->cfg.dt();
    sim->scfg.filter = sim->cfg.time.filter;
    sim->scfg.dealias = sim->cfg.time.dealias;
    WaveState init = make_initial(sim->cfg);
    if (sim->cfg.formulation == Formulation::Pair)
        sim->pair.emplace(std::move(init));
    else
        sim->scalar.emplace(scalar_launch(init, sim->bath, sim->cfg.params, sim->cfg.regime));
    return sim;
}

}  // namespace

extern "C" {

const char* b2p1_version(void) { return "1.0.0"; }

const char* b2p1_last_error(void) { return g_last_error.c_str(); }

int b2p1_sim_create(const char* config_text, b2p1_sim** out) {
    if (!config_text || !out) {
        g_last_error = "null argument";
        return B2P1_CONFIG_ERROR;
    }
    *out = nullptr;
    return guarded([&] { *out = build_sim(parse_config(config_text)); });
}

int b2p1_sim_create_from_file(const char* path, b2p1_sim** out) {
    if (!path || !out) {
        g_last_error = "null argument";
        return B2P1_CONFIG_ERROR;
    }
    *out = nullptr;
    return guarded([&] { *out = build_sim(parse_config_file(path)); });
}

void b2p1_sim_destroy(b2p1_sim* sim) { delete sim; }

int b2p1_sim_step(b2p1_sim* sim, int steps) {
    if (!sim || steps < 0) {
        g_last_error = "bad step arguments";
        return B2P1_CONFIG_ERROR;
    }
    return guarded([&] {
        for (int i = 0; i < steps; ++i) {
            if (sim->pair) {
                *sim->pair = step_rk4(*sim->pair, sim->scfg, sim->bath, sim->cfg.params,
                                      sim->cfg.regime, sim->cfg.st_mode);
            } else {
                ScalarStepConfig sscfg{sim->scfg.dt, sim->scfg.dealias};
                *sim->scalar =
                    scalar_step(*sim->scalar, sscfg, sim->bath, sim->cfg.params, sim->cfg.regime);
            }
        }
    });
}

double b2p1_sim_time(const b2p1_sim* sim) {
    if (!sim) return 0.0;
    return sim->pair ? sim->pair->t : sim->scalar->t;
}

int b2p1_sim_grid(const b2p1_sim* sim, int* nx, int* ny, double* Lx, double* Ly) {
    if (!sim) {
        g_last_error = "null handle";
        return B2P1_CONFIG_ERROR;
    }
    if (nx) *nx = sim->cfg.grid.nx;
    if (ny) *ny = sim->cfg.grid.ny;
    if (Lx) *Lx = sim->cfg.grid.Lx;
    if (Ly) *Ly = sim->cfg.grid.Ly;
    return B2P1_OK;
}

int b2p1_sim_diagnostics(b2p1_sim* sim, b2p1_diagnostics* out) {
    if (!sim || !out) {
        g_last_error = "null argument";
        return B2P1_CONFIG_ERROR;
    }
    return guarded([&] {
        Diagnostics d = diagnostics(sim->surface());
        out->mass = d.mass;
        out->l2_eta = d.l2_eta;
        out->linf_eta = d.linf_eta;
        out->tail_fraction = d.spectrum_tail_fraction;
    });
}

int b2p1_sim_get_field(b2p1_sim* sim, int field, double* buf, size_t len) {
    if (!sim || !buf) {
        g_last_error = "null argument";
        return B2P1_CONFIG_ERROR;
    }
    return guarded([&] {
        WaveState s = sim->surface();
        const Field2D& src = field == B2P1_FIELD_ETA ? s.eta
                             : field == B2P1_FIELD_F ? s.f
                                                     : throw ConfigError("unknown field id");
        if (len < src.size()) throw ConfigError("field buffer too small");
        std::memcpy(buf, src.data(), src.size() * sizeof(double));
    });
}

int b2p1_derive(int case_no, int diff_printed, char** out_text) {
    if (!out_text) {
        g_last_error = "null argument";
        return B2P1_CONFIG_ERROR;
    }
    *out_text = nullptr;
    return guarded([&] {
        const std::string report = derive_report(case_no, diff_printed != 0);
        char* mem = new char[report.size() + 1];
        std::memcpy(mem, report.c_str(), report.size() + 1);
        *out_text = mem;
    });
}

void b2p1_free_text(char* text) { delete[] text; }

int b2p1_run_cli(int argc, const char* const* argv) { return run_cli(argc, argv); }

}  // extern "C"
