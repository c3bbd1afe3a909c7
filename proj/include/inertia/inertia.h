/* C interface to the inertia delay-condition library.
 *
 * Conventions:
 *   - Every fallible call returns an inertia_status. On failure the message
 *     is available from inertia_last_error() on the same thread until the
 *     next failing call.
 *   - Objects behind opaque handles are owned by the caller once returned
 *     and released with the matching *_free function. *_free(NULL) is a no-op.
 *   - Strings returned through char** are heap allocated; release them with
 *     inertia_string_free().
 *   - Booleans are int, 0 or 1. Times and parameters are int64 tick counts.
 */
#ifndef INERTIA_H
#define INERTIA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(INERTIA_BUILDING)
#    define INERTIA_API __declspec(dllexport)
#  else
#    define INERTIA_API __declspec(dllimport)
#  endif
#else
#  define INERTIA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum inertia_status {
    INERTIA_OK = 0,
    INERTIA_ERR_INVALID = 1,     /* argument out of range, NULL handle, malformed value */
    INERTIA_ERR_PARSE = 2,       /* text input could not be parsed */
    INERTIA_ERR_CONSISTENCY = 3, /* parameters violate CC, no solution exists */
    INERTIA_ERR_PRECONDITION = 4,
    INERTIA_ERR_RESOURCE = 5,    /* oracle horizon or similar cap exceeded */
    INERTIA_ERR_INTERNAL = 6
} inertia_status;

typedef struct inertia_signal inertia_signal;
typedef struct inertia_waves inertia_waves;     /* name -> signal, sorted by name */
typedef struct inertia_cond inertia_cond;       /* conjunction of conditions */
typedef struct inertia_netlist inertia_netlist;

typedef struct inertia_bdc {
    int64_t mr, dr, mf, df;
} inertia_bdc;

typedef struct inertia_aic {
    int64_t delta_r, delta_f;
} inertia_aic;

typedef struct inertia_ric {
    int64_t mu_r, delta_r, mu_f, delta_f;
} inertia_ric;

typedef struct inertia_run_config {
    char time_unit[16];
    int64_t resolution;
    uint64_t seed;
} inertia_run_config;

/* Bits of the BRIDC regime mask. */
enum {
    INERTIA_REGIME_I = 1,
    INERTIA_REGIME_II = 2,
    INERTIA_REGIME_III = 4,
    INERTIA_REGIME_IV = 8
};

INERTIA_API const char* inertia_version(void);
INERTIA_API const char* inertia_last_error(void);
INERTIA_API const char* inertia_status_name(inertia_status s);
INERTIA_API void inertia_string_free(char* s);

/* --- signals ------------------------------------------------------------ */

INERTIA_API inertia_status inertia_signal_new(int initial, const int64_t* switches, size_t count,
                                              inertia_signal** out);
INERTIA_API inertia_status inertia_signal_clone(const inertia_signal* s, inertia_signal** out);
INERTIA_API void inertia_signal_free(inertia_signal* s);
INERTIA_API inertia_status inertia_signal_initial(const inertia_signal* s, int* out);
INERTIA_API inertia_status inertia_signal_switch_count(const inertia_signal* s, size_t* out);
/* Copies min(count, capacity) switch times into buf. */
INERTIA_API inertia_status inertia_signal_switches(const inertia_signal* s, int64_t* buf, size_t capacity,
                                                   size_t* count);
INERTIA_API inertia_status inertia_signal_value_at(const inertia_signal* s, int64_t t, int* out);
INERTIA_API inertia_status inertia_signal_equal(const inertia_signal* a, const inertia_signal* b, int* out);
/* "(0,[0,5])" */
INERTIA_API inertia_status inertia_signal_format(const inertia_signal* s, char** out);
INERTIA_API inertia_status inertia_translate(const inertia_signal* s, int64_t d, inertia_signal** out);
INERTIA_API inertia_status inertia_window_and(const inertia_signal* s, int64_t d, int64_t m, inertia_signal** out);
INERTIA_API inertia_status inertia_window_or(const inertia_signal* s, int64_t d, int64_t m, inertia_signal** out);

/* --- waveform sets ------------------------------------------------------ */

INERTIA_API inertia_status inertia_waves_new(inertia_waves** out);
INERTIA_API void inertia_waves_free(inertia_waves* w);
/* Waveform text (`name initial t1 ... tn` per line); decimal times are
 * multiplied by resolution and must land on a tick. */
INERTIA_API inertia_status inertia_waves_parse(const char* text, int64_t resolution, inertia_waves** out);
INERTIA_API inertia_status inertia_waves_set(inertia_waves* w, const char* name, const inertia_signal* s);
INERTIA_API inertia_status inertia_waves_get(const inertia_waves* w, const char* name, inertia_signal** out);
INERTIA_API inertia_status inertia_waves_count(const inertia_waves* w, size_t* out);
/* Borrowed name of the i-th entry in sorted order, valid while w is unchanged. */
INERTIA_API inertia_status inertia_waves_name(const inertia_waves* w, size_t i, const char** out);
INERTIA_API inertia_status inertia_waves_emit(const inertia_waves* w, char** out);
INERTIA_API inertia_status inertia_waves_emit_vcd(const inertia_waves* w, const char* time_unit, char** out);

/* --- configuration ------------------------------------------------------ */

/* Defaults: "1ns", resolution 1, seed 1, then INERTIA_SEED if set. */
INERTIA_API void inertia_config_default(inertia_run_config* cfg);
/* Applies `key = value` lines on top of cfg. */
INERTIA_API inertia_status inertia_config_parse(const char* text, inertia_run_config* cfg);

/* --- parameters --------------------------------------------------------- */

INERTIA_API inertia_status inertia_bdc_parse(const char* json, inertia_bdc* out);
INERTIA_API inertia_status inertia_aic_parse(const char* json, inertia_aic* out);
INERTIA_API inertia_status inertia_ric_parse(const char* json, inertia_ric* out);
INERTIA_API inertia_status inertia_fixed_parse(const char* json, int64_t* d);
INERTIA_API inertia_status inertia_bdc_format(const inertia_bdc* p, char** json);
INERTIA_API inertia_status inertia_aic_format(const inertia_aic* a, char** json);
INERTIA_API inertia_status inertia_ric_format(const inertia_ric* r, char** json);

/* --- predicates and solutions ------------------------------------------- */

INERTIA_API inertia_status inertia_cc_holds(const inertia_bdc* p, int* out);
INERTIA_API inertia_status inertia_bdc_member(const inertia_signal* u, const inertia_signal* x, const inertia_bdc* p,
                                              int* out);
INERTIA_API inertia_status inertia_fdc_member(const inertia_signal* u, const inertia_signal* x, int64_t d, int* out);
INERTIA_API inertia_status inertia_aic_member(const inertia_signal* x, const inertia_aic* a, int* out);
INERTIA_API inertia_status inertia_ric_member(const inertia_signal* u, const inertia_signal* x, const inertia_ric* r,
                                              int* out);
/* Fails with INERTIA_ERR_CONSISTENCY when CC does not hold. */
INERTIA_API inertia_status inertia_bdc_min_solution(const inertia_signal* u, const inertia_bdc* p,
                                                    inertia_signal** out);
INERTIA_API inertia_status inertia_bdc_max_solution(const inertia_signal* u, const inertia_bdc* p,
                                                    inertia_signal** out);
INERTIA_API inertia_status inertia_bridc_det_output(const inertia_signal* u, const inertia_bdc* p,
                                                    inertia_signal** out);

/* --- consistency and parameter algebra ---------------------------------- */

/* Requires CC; fails with INERTIA_ERR_PRECONDITION otherwise. */
INERTIA_API inertia_status inertia_baidc_consistent(const inertia_bdc* p, const inertia_aic* a, int* out);
/* regimes receives the INERTIA_REGIME_* mask of the clauses that hold. */
INERTIA_API inertia_status inertia_bridc_consistent(const inertia_bdc* p, const inertia_ric* r, int* out,
                                                    unsigned* regimes);
INERTIA_API inertia_status inertia_ric_to_aic(const inertia_ric* r, inertia_aic* out, int* exists);

/* The remaining calls require CC on every BDC argument. */
INERTIA_API inertia_status inertia_bdc_intersection(const inertia_bdc* p, const inertia_bdc* q, inertia_bdc* out,
                                                    int* exists);
INERTIA_API inertia_status inertia_bdc_intersection_consistent(const inertia_bdc* p, const inertia_bdc* q, int* out);
INERTIA_API inertia_status inertia_bdc_union_envelope(const inertia_bdc* p, const inertia_bdc* q, inertia_bdc* out);
INERTIA_API inertia_status inertia_bdc_compose(const inertia_bdc* p, const inertia_bdc* q, inertia_bdc* out);
INERTIA_API inertia_status inertia_bdc_includes(const inertia_bdc* p, const inertia_bdc* q, int* out);
/* translation may be NULL; receives the shift when the BDC is deterministic. */
INERTIA_API inertia_status inertia_bdc_is_deterministic(const inertia_bdc* p, int* out, int64_t* translation);
INERTIA_API inertia_status inertia_bdc_is_symmetrical(const inertia_bdc* p, int* out);

/* --- oracle ------------------------------------------------------------- */

INERTIA_API inertia_status inertia_cond_new(inertia_cond** out);
INERTIA_API void inertia_cond_free(inertia_cond* c);
INERTIA_API inertia_status inertia_cond_add_fixed(inertia_cond* c, int64_t d);
INERTIA_API inertia_status inertia_cond_add_bdc(inertia_cond* c, const inertia_bdc* p);
INERTIA_API inertia_status inertia_cond_add_aic(inertia_cond* c, const inertia_aic* a);
INERTIA_API inertia_status inertia_cond_add_ric(inertia_cond* c, const inertia_ric* r);
INERTIA_API inertia_status inertia_cond_member(const inertia_cond* c, const inertia_signal* u, const inertia_signal* x,
                                               int* out);

/* Every solution on the grid [lo, hi], in canonical order, named x0, x1, ...
 * (zero-padded so sorted names keep that order). */
INERTIA_API inertia_status inertia_oracle_enumerate(const inertia_cond* c, const inertia_signal* u, int64_t lo,
                                                    int64_t hi, size_t max_switches, inertia_waves** out);
/* Searches inputs with at most max_switches switches in [1, last], then
 * pulse trains of widths up to train_width (0 disables them). */
INERTIA_API inertia_status inertia_oracle_witness(const inertia_cond* c, int64_t last, size_t max_switches,
                                                  int64_t train_width, int* found, inertia_signal** witness);
INERTIA_API size_t inertia_theorem_count(void);
INERTIA_API const char* inertia_theorem_id(size_t i);
/* report_json receives the full report; passed is 1 when no check failed. */
INERTIA_API inertia_status inertia_theorem_verify(const char* id, size_t trials, uint64_t seed, int* passed,
                                                  char** report_json);

/* --- circuits ----------------------------------------------------------- */

INERTIA_API inertia_status inertia_netlist_parse(const char* json, inertia_netlist** out);
INERTIA_API void inertia_netlist_free(inertia_netlist* n);
INERTIA_API inertia_status inertia_netlist_gate_count(const inertia_netlist* n, size_t* out);
/* Borrowed gate name; inertial is 1 when the gate's delay has memory. */
INERTIA_API inertia_status inertia_netlist_gate(const inertia_netlist* n, size_t i, const char** name, int* inertial);
INERTIA_API inertia_status inertia_netlist_is_output(const inertia_netlist* n, const char* net, int* out);
INERTIA_API inertia_status inertia_netlist_is_input(const inertia_netlist* n, const char* net, int* out);
/* Every net of the circuit restricted to [lo, hi]. */
INERTIA_API inertia_status inertia_simulate(const inertia_netlist* n, const inertia_waves* stimuli, int64_t lo,
                                            int64_t hi, inertia_waves** out);
INERTIA_API inertia_status inertia_envelope(const inertia_netlist* n, const inertia_waves* stimuli,
                                            inertia_waves** low, inertia_waves** high);

#ifdef __cplusplus
}
#endif

#endif /* INERTIA_H */
