#ifndef B2P1_B2P1_H_
#define B2P1_B2P1_H_

/* C interface to the Boussinesq wave laboratory. All functions returning int
 * yield a status code; on failure b2p1_last_error() describes the problem for
 * the calling thread. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    B2P1_OK = 0,
    B2P1_ERROR = 1,        /* unclassified failure */
    B2P1_CONFIG_ERROR = 2, /* bad configuration or arguments */
    B2P1_INSTABILITY = 3,  /* non-finite state or diverging iteration */
    B2P1_RESONANCE = 4     /* forcing on the dispersion surface */
};

const char* b2p1_version(void);

/* Message for the most recent failing call on this thread; never NULL. */
const char* b2p1_last_error(void);

/* Opaque simulation handle. */
typedef struct b2p1_sim b2p1_sim;

int b2p1_sim_create(const char* config_text, b2p1_sim** out);
int b2p1_sim_create_from_file(const char* path, b2p1_sim** out);
void b2p1_sim_destroy(b2p1_sim* sim);

/* Advance by `steps` RK4 steps of the configured dt. */
int b2p1_sim_step(b2p1_sim* sim, int steps);

double b2p1_sim_time(const b2p1_sim* sim);
int b2p1_sim_grid(const b2p1_sim* sim, int* nx, int* ny, double* Lx, double* Ly);

typedef struct {
    double mass;
    double l2_eta;
    double linf_eta;
    double tail_fraction;
} b2p1_diagnostics;

int b2p1_sim_diagnostics(b2p1_sim* sim, b2p1_diagnostics* out);

enum { B2P1_FIELD_ETA = 0, B2P1_FIELD_F = 1 };

/* Copies nx*ny doubles, x index fastest. len is the buffer capacity. */
int b2p1_sim_get_field(b2p1_sim* sim, int field, double* buf, size_t len);

/* Derivation report for a regime case (1-4); *out_text is heap-allocated,
 * release with b2p1_free_text. */
int b2p1_derive(int case_no, int diff_printed, char** out_text);
void b2p1_free_text(char* text);

/* Full command-line interface; returns the process exit code. */
int b2p1_run_cli(int argc, const char* const* argv);

#ifdef __cplusplus
}
#endif

#endif /* B2P1_B2P1_H_ */
