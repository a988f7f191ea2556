#ifndef EQUITOR_H
#define EQUITOR_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/* Strings returned through `char **` outputs must be released with eqt_string_free. */

// Result codes shared by every fallible entry point.
typedef enum EqtStatus {
  EQT_STATUS_OK = 0,
  EQT_STATUS_NULL_POINTER = 1,
  EQT_STATUS_INVALID_ARGUMENT = 2,
  EQT_STATUS_ZERO_IDEAL = 3,
  EQT_STATUS_UNIT_IDEAL = 4,
  EQT_STATUS_INVALID_CHARACTERISTIC = 5,
  EQT_STATUS_TOO_LARGE = 6,
  EQT_STATUS_INVALID_UTF8 = 7,
  EQT_STATUS_INVALID_JOB = 8,
  // The job ran but a `verify` task found a mismatch; the report is still returned.
  EQT_STATUS_VERIFY_FAILED = 9,
  EQT_STATUS_PANIC = 10,
} EqtStatus;

// An Sₙ-invariant monomial ideal.
typedef struct EqtIdeal EqtIdeal;

// Equivariant `Tor_•(I)` over a fixed field.
typedef struct EqtTor EqtTor;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds an ideal in `n` variables from `generator_count` exponent vectors
// stored row-major in `entries`. Each vector is sorted into a partition.
//
// # Safety
// `entries` must point to `n * generator_count` readable values and `out` must be writable.
enum EqtStatus eqt_ideal_new(size_t n,
                             const uint32_t *entries,
                             size_t generator_count,
                             struct EqtIdeal **out);

// # Safety
// `ideal` must come from `eqt_ideal_new` and not be used afterwards; null is ignored.
void eqt_ideal_free(struct EqtIdeal *ideal);

// Whether `x^a` lies in the ideal, for an exponent vector `a` of length `len`.
//
// # Safety
// Pointers must be valid for the given lengths.
enum EqtStatus eqt_ideal_contains(const struct EqtIdeal *ideal,
                                  const uint32_t *exponents,
                                  size_t len,
                                  bool *out);

// Number of minimal generators, up to the Sₙ action.
//
// # Safety
// `ideal` must be a live handle.
enum EqtStatus eqt_ideal_generator_count(const struct EqtIdeal *ideal, size_t *out);

// Computes `Tor_•(I)` over the field of the given characteristic (0 or prime).
//
// # Safety
// `ideal` must be a live handle and `out` writable.
enum EqtStatus eqt_tor_compute(const struct EqtIdeal *ideal,
                               uint32_t characteristic,
                               struct EqtTor **out);

// Switches a Tor handle to `Tor_•(R/I)` in place.
//
// # Safety
// `tor` must be a live handle.
enum EqtStatus eqt_tor_to_quotient(struct EqtTor *tor);

// # Safety
// `tor` must come from `eqt_tor_compute` and not be used afterwards; null is ignored.
void eqt_tor_free(struct EqtTor *tor);

// Graded Betti number `β_{i,j}`.
//
// # Safety
// `tor` must be a live handle and `out` writable.
enum EqtStatus eqt_tor_betti(const struct EqtTor *tor, size_t i, uint64_t j, uint64_t *out);

// `dim Tor_i⟨μ⟩`, the sum over all rearrangements of the partition `μ`.
//
// # Safety
// `mu` must point to `len` values; `out` must be writable.
enum EqtStatus eqt_tor_orbit_dim(const struct EqtTor *tor,
                                 size_t i,
                                 const uint32_t *mu,
                                 size_t len,
                                 uint64_t *out);

// `dim Tor_i` in the single multidegree `a`.
//
// # Safety
// `a` must point to `len` values; `out` must be writable.
enum EqtStatus eqt_tor_multigraded_betti(const struct EqtTor *tor,
                                         size_t i,
                                         const uint32_t *a,
                                         size_t len,
                                         uint64_t *out);

// Largest `i` with non-zero Tor; `false` in `has_any` when Tor vanishes.
//
// # Safety
// All pointers must be live and writable.
enum EqtStatus eqt_tor_max_index(const struct EqtTor *tor, bool *has_any, size_t *out);

// The Betti table in Macaulay2 layout. Free the result with `eqt_string_free`.
//
// # Safety
// `tor` must be a live handle and `out` writable.
enum EqtStatus eqt_tor_betti_table_text(const struct EqtTor *tor, char **out);

// One line per orbit component, e.g. `Tor_2<(5,5,1)>: 1 x Ind[(1,1),(1)]`.
//
// # Safety
// `tor` must be a live handle and `out` writable.
enum EqtStatus eqt_tor_components_text(const struct EqtTor *tor, char **out);

// `reg(R/I)`.
//
// # Safety
// `ideal` must be a live handle and `out` writable.
enum EqtStatus eqt_regularity(const struct EqtIdeal *ideal, uint64_t *out);

// `pd(R/I)`.
//
// # Safety
// `ideal` must be a live handle and `out` writable.
enum EqtStatus eqt_projective_dimension(const struct EqtIdeal *ideal, size_t *out);

// Runs a JSON job document and returns the JSON report in `out`.
// A failed `verify` yields `VERIFY_FAILED` with the report still written.
//
// # Safety
// `job` must be a NUL-terminated string and `out` writable.
enum EqtStatus eqt_run_job_json(const char *job, char **out);

// Releases a string returned by this library; null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void eqt_string_free(char *s);

// The message of the last failed call on this thread, or an empty string.
// Valid until the next call into the library from the same thread.
const char *eqt_last_error_message(void);

// Library version, a static NUL-terminated string.
const char *eqt_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EQUITOR_H */
