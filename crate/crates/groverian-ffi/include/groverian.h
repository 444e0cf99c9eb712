/* C ABI for the groverian library. Generated by cbindgen; do not edit. */

#ifndef GROVERIAN_H
#define GROVERIAN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which route computes a measurement.
 */
typedef enum GvMethod {
  /**
   * Exact bipartite route from the top singular pair.
   */
  GV_METHOD_ORACLE = 0,
  /**
   * Alternating maximization over product vectors, any register shape.
   */
  GV_METHOD_VARIATIONAL = 1,
  /**
   * The published two-qutrit real-amplitude expression, evaluated
   * literally (it may exceed the true maximum; g clips the excess).
   */
  GV_METHOD_CLOSED_FORM = 2,
} GvMethod;

/**
 * Status codes returned by every entry point.
 */
typedef enum GvStatus {
  GV_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  GV_STATUS_NULL_ARGUMENT = 1,
  /**
   * Register shape, amplitude count, or iteration parameters are invalid.
   */
  GV_STATUS_INVALID_ARGUMENT = 2,
  /**
   * An input component is NaN or infinite.
   */
  GV_STATUS_NON_FINITE = 3,
  /**
   * The amplitude vector is numerically zero.
   */
  GV_STATUS_ZERO_NORM = 4,
  /**
   * Strict construction rejected an off-norm vector.
   */
  GV_STATUS_NOT_NORMALIZED = 5,
  /**
   * Operands have different register shapes.
   */
  GV_STATUS_SHAPE_MISMATCH = 6,
  /**
   * A basis index is out of range.
   */
  GV_STATUS_INDEX_OUT_OF_RANGE = 7,
  /**
   * The operation needs a two-party state.
   */
  GV_STATUS_NOT_BIPARTITE = 8,
  /**
   * The supplied matrix is not unitary.
   */
  GV_STATUS_NOT_UNITARY = 9,
  /**
   * The closed form was requested for a complex or non-qutrit state.
   */
  GV_STATUS_NOT_APPLICABLE = 10,
} GvStatus;

/**
 * Opaque handle to a normalized pure state.
 */
typedef struct GvState GvState;

/**
 * A P_max / G measurement.
 */
typedef struct GvMeasurement {
  double pmax;
  double g;
  /**
   * False when the variational route stopped on its iteration cap.
   */
  bool converged;
} GvMeasurement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Build a state from split real/imaginary amplitude arrays of length `len`.
 *
 * `len` must equal d^n. With `normalize` false the vector must already be
 * unit norm to 1e-9; with it true any non-zero vector is rescaled.
 *
 * # Safety
 * `re`, `im`, and `out` must be valid for reads/writes of the stated
 * lengths. On success `*out` owns the state and must be released with
 * [`gv_state_free`].
 */
enum GvStatus gv_state_new(size_t n,
                           size_t d,
                           const double *re,
                           const double *im,
                           size_t len,
                           bool normalize,
                           struct GvState **out);

/**
 * The uniform superposition over n qudits of dimension d.
 *
 * # Safety
 * `out` must be valid for a write; the result must be freed.
 */
enum GvStatus gv_state_uniform(size_t n, size_t d, struct GvState **out);

/**
 * Release a state handle. Null is a no-op.
 *
 * # Safety
 * `state` must be a pointer returned by this library and not yet freed.
 */
void gv_state_free(struct GvState *state);

/**
 * Party count of a state, 0 on null.
 *
 * # Safety
 * `state` must be a live handle or null.
 */
size_t gv_state_num_parties(const struct GvState *state);

/**
 * Local dimension of a state, 0 on null.
 *
 * # Safety
 * `state` must be a live handle or null.
 */
size_t gv_state_local_dim(const struct GvState *state);

/**
 * Total amplitude count d^n, 0 on null.
 *
 * # Safety
 * `state` must be a live handle or null.
 */
size_t gv_state_len(const struct GvState *state);

/**
 * Copy the amplitudes into split real/imaginary arrays of length `len`
 * (which must equal `gv_state_len`).
 *
 * # Safety
 * `re_out` and `im_out` must be valid for `len` writes.
 */
enum GvStatus gv_state_amplitudes(const struct GvState *state,
                                  double *re_out,
                                  double *im_out,
                                  size_t len);

/**
 * |⟨marked|state⟩|².
 *
 * # Safety
 * `state` must be a live handle; `out` valid for a write.
 */
enum GvStatus gv_success_probability(const struct GvState *state, size_t marked, double *out);

/**
 * Oracle reflection: a new state with the marked amplitude negated.
 *
 * # Safety
 * `state` must be a live handle; `out` valid for a write; the result must
 * be freed.
 */
enum GvStatus gv_oracle_reflect(const struct GvState *state, size_t marked, struct GvState **out);

/**
 * Diffusion reflection 2|ref⟩⟨ref| − 1 applied to `state`.
 *
 * # Safety
 * Both handles must be live; `out` valid for a write; the result must be
 * freed.
 */
enum GvStatus gv_diffusion_reflect(const struct GvState *state,
                                   const struct GvState *reference,
                                   struct GvState **out);

/**
 * One Grover iteration: diffusion about `reference` after the oracle.
 *
 * # Safety
 * Both handles must be live; `out` valid for a write; the result must be
 * freed.
 */
enum GvStatus gv_grover_iteration(const struct GvState *state,
                                  size_t marked,
                                  const struct GvState *reference,
                                  struct GvState **out);

/**
 * Iteration count maximizing success for `marked_count` marked states out
 * of `space`.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum GvStatus gv_optimal_iterations(uint64_t space, uint64_t marked_count, uint64_t *out);

/**
 * Compute P_max and G by the chosen route. The variational route runs with
 * its default restarts, sweep cap, and tolerance.
 *
 * # Safety
 * `state` must be a live handle; `out` valid for a write.
 */
enum GvStatus gv_measure(const struct GvState *state,
                         enum GvMethod method,
                         struct GvMeasurement *out);

/**
 * Von Neumann entropy of either reduction (base = local dimension).
 *
 * # Safety
 * `state` must be a live handle; `out` valid for a write.
 */
enum GvStatus gv_entropy_of_entanglement(const struct GvState *state, double *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* GROVERIAN_H */
