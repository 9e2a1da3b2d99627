/* entdyn.h — C API of the entdyn shared library.
 *
 * entdyn simulates the non-Markovian dynamics of two two-level atoms coupled
 * to independent Lorentzian reservoirs, treats each reservoir as an effective
 * qubit, and evaluates entanglement for all partitions of the resulting
 * four-qubit system together with quantitative revival / sudden-death
 * criteria.
 *
 * All functions returning entdyn_status set a thread-local error message
 * retrievable with entdyn_last_error() on failure. Handles are opaque and
 * must be released with entdyn_system_destroy().
 */
#ifndef ENTDYN_H
#define ENTDYN_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(ENTDYN_BUILD)
#    define ENTDYN_API __declspec(dllexport)
#  else
#    define ENTDYN_API __declspec(dllimport)
#  endif
#else
#  define ENTDYN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum entdyn_status {
  ENTDYN_OK = 0,
  ENTDYN_ERR_ARGUMENT = 1, /* null pointer, invalid value, buffer too small */
  ENTDYN_ERR_DOMAIN = 2,   /* e.g. weak coupling where strong is required */
} entdyn_status;

typedef enum entdyn_regime {
  ENTDYN_REGIME_STRONG = 0, /* lambda < 2W */
  ENTDYN_REGIME_WEAK = 1,   /* lambda > 2W */
  ENTDYN_REGIME_CRITICAL = 2,
} entdyn_regime;

typedef enum entdyn_ordering {
  ENTDYN_ORDERING_BEFORE = 0, /* revival ahead of reservoir death: 2 alpha > beta */
  ENTDYN_ORDERING_SIMULTANEOUS = 1,
  ENTDYN_ORDERING_AFTER = 2,
  ENTDYN_ORDERING_NOT_APPLICABLE = 3,
} entdyn_ordering;

typedef struct entdyn_complex {
  double re;
  double im;
} entdyn_complex;

/* Opaque validated parameter set. */
typedef struct entdyn_system entdyn_system;

ENTDYN_API const char* entdyn_version(void);
ENTDYN_API const char* entdyn_status_name(entdyn_status status);
/* Message of the last failing call on this thread; empty string if none. */
ENTDYN_API const char* entdyn_last_error(void);

/* Units W = 1, omega0 = 0. alpha in [0, 1], lambda_over_w > 0. */
ENTDYN_API entdyn_status entdyn_system_create(double lambda_over_w, double alpha,
                                              entdyn_system** out);
ENTDYN_API entdyn_status entdyn_system_create_dimensional(double omega0, double coupling_w,
                                                          double lambda, double alpha,
                                                          entdyn_system** out);
ENTDYN_API void entdyn_system_destroy(entdyn_system* sys);

ENTDYN_API entdyn_status entdyn_system_regime(const entdyn_system* sys, entdyn_regime* out);
ENTDYN_API entdyn_status entdyn_system_beta(const entdyn_system* sys, double* out);
/* d = sqrt(4 W^2 - lambda^2); ENTDYN_ERR_DOMAIN outside strong coupling. */
ENTDYN_API entdyn_status entdyn_system_mode_splitting(const entdyn_system* sys, double* out);

/* Single-body amplitudes: c1 multiplies |e>|0>_r, c2 multiplies |g>|1>_r,
 * b is the pseudomode amplitude. |c1|^2 + c2^2 = 1. */
typedef struct entdyn_amplitudes {
  double t;
  entdyn_complex c1;
  double c2;
  entdyn_complex b;
} entdyn_amplitudes;

ENTDYN_API entdyn_status entdyn_amplitudes_at(const entdyn_system* sys, double t,
                                              entdyn_amplitudes* out);

/* Quasimode populations: atom / discrete quasimode / continuum; sums to 1. */
typedef struct entdyn_populations {
  double t;
  double pa;
  double pm;
  double pr;
} entdyn_populations;

ENTDYN_API entdyn_status entdyn_populations_at(const entdyn_system* sys, double t,
                                               entdyn_populations* out);

/* Pair concurrences at time t: atoms = C_{a1a2}, reservoirs = C_{r1r2},
 * atom_reservoir = C_{a1r1} (closed forms), cross = C_{a1r2} (Wootters). */
typedef struct entdyn_concurrences {
  double t;
  double atoms;
  double reservoirs;
  double atom_reservoir;
  double cross;
} entdyn_concurrences;

ENTDYN_API entdyn_status entdyn_concurrences_at(const entdyn_system* sys, double t,
                                                entdyn_concurrences* out);

/* Bipartition entanglement (I-concurrence) plus the multipartite concurrence:
 *   pair_within          (a1 r1) | (a2 r2)   — constant 2 alpha beta
 *   atom_vs_rest         a1 | (r1 a2 r2)
 *   cross_pairs          (a1 r2) | (a2 r1)
 *   multipartite         C_N over all 14 reductions
 *   atoms_vs_reservoirs  (a1 a2) | (r1 r2)
 *   reservoir_vs_rest    r1 | (a1 a2 r2)
 */
typedef struct entdyn_partition_entanglement {
  double t;
  double pair_within;
  double atom_vs_rest;
  double cross_pairs;
  double multipartite;
  double atoms_vs_reservoirs;
  double reservoir_vs_rest;
} entdyn_partition_entanglement;

ENTDYN_API entdyn_status entdyn_partitions_at(const entdyn_system* sys, double t,
                                              entdyn_partition_entanglement* out);

/* Revival / sudden-death criteria. n_a_infinite is set (and n_a is -1) when
 * alpha >= 1/sqrt(2). warnings is a bitmask of ENTDYN_WARN_*. Strong coupling
 * and alpha > 0 required. */
#define ENTDYN_WARN_NA_NEAR_INTEGER 0x1u
#define ENTDYN_WARN_NR_NEAR_INTEGER 0x2u

typedef struct entdyn_criteria_report {
  double lambda_over_w;
  double alpha;
  double beta;
  double d_over_w;
  double revival_threshold_n1;
  double esd_threshold_n1;
  int revival_occurs;
  int esd_occurs;
  int n_a_infinite;
  long long n_a;
  long long n_r;
  double t_r_in_inv_w;
  entdyn_ordering ordering;
  unsigned warnings;
} entdyn_criteria_report;

ENTDYN_API entdyn_status entdyn_criteria_report_compute(const entdyn_system* sys,
                                                        entdyn_criteria_report* out);

/* Fixed-step RK4 of the pseudomode pair from (c0, b) = (1, 0). Writes
 * floor_samples = floor(t_end/step)+1-ish samples at t_k = k*step; fails with
 * ENTDYN_ERR_ARGUMENT if capacity is too small, reporting the required count
 * via *count. In strong coupling step must satisfy step <= (2 pi/d)/50. */
ENTDYN_API entdyn_status entdyn_integrate_pseudomode(const entdyn_system* sys, double t_end,
                                                     double step, entdyn_amplitudes* buffer,
                                                     size_t capacity, size_t* count);

/* Volterra memory-kernel integration; writes c0 samples on the same grid. */
ENTDYN_API entdyn_status entdyn_integrate_memory_kernel(const entdyn_system* sys, double t_end,
                                                        double step, entdyn_complex* buffer,
                                                        size_t capacity, size_t* count);

/* Wootters concurrence of an arbitrary two-qubit density matrix, given
 * row-major as 16 complex entries. Rejects non-Hermitian or trace != 1. */
ENTDYN_API entdyn_status entdyn_wootters_concurrence(const entdyn_complex rho[16], double* out);

/* Self-verification. status_code: 0 pass, 1 fail, 2 skipped. */
typedef void (*entdyn_verify_callback)(const char* suite, int status_code, const char* detail,
                                       void* user);

#define ENTDYN_VERIFY_FAULT_THRESHOLD_SIGN 0x1u

ENTDYN_API entdyn_status entdyn_verify_run(const double* lambda_over_w, size_t count,
                                           unsigned flags, entdyn_verify_callback callback,
                                           void* user, int* failures);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ENTDYN_H */
