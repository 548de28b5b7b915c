#ifndef KAPPAR_H
#define KAPPAR_H

/* Generated by cbindgen from crates/ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of a call. Everything except `Ok` leaves a message in
 * `kappar_last_error`.
 */
typedef enum KapparStatus {
  KAPPAR_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  KAPPAR_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  KAPPAR_STATUS_INVALID_UTF8 = 2,
  /**
   * The input could not be parsed or replayed into a surface.
   */
  KAPPAR_STATUS_PARSE_ERROR = 3,
  /**
   * The surface violates its structural invariants.
   */
  KAPPAR_STATUS_VALIDATION_ERROR = 4,
  /**
   * The computation failed internally.
   */
  KAPPAR_STATUS_COMPUTE_ERROR = 5,
} KapparStatus;

/**
 * A surface pair behind an opaque pointer.
 */
typedef struct KapparSurface KapparSurface;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Returns the message of the most recent failure on this thread. The
 * pointer stays valid until the next failing call on the same thread;
 * never free it.
 */
const char *kappar_last_error(void);

/**
 * Builds a surface from a surface document in JSON form.
 *
 * # Safety
 * `json` must point to a NUL-terminated string and `out` to writable
 * storage for one pointer; both stay owned by the caller.
 */
enum KapparStatus kappar_surface_from_json(const char *json, struct KapparSurface **out);

/**
 * Builds a surface by replaying a blow-up script in JSON form.
 *
 * # Safety
 * Same contract as `kappar_surface_from_json`.
 */
enum KapparStatus kappar_surface_from_script_json(const char *json, struct KapparSurface **out);

/**
 * Builds one of the bundled gallery surfaces. `params` may be null when
 * `params_len` is zero; the documented defaults apply then.
 *
 * # Safety
 * `name` must be NUL-terminated, `params` must point to `params_len`
 * integers when non-null, `out` must be writable.
 */
enum KapparStatus kappar_surface_from_gallery(const char *name,
                                              const int64_t *params,
                                              size_t params_len,
                                              struct KapparSurface **out);

/**
 * Releases a surface handle. A null pointer is ignored.
 *
 * # Safety
 * `surface` must come from one of the constructors and not be used again.
 */
void kappar_surface_free(struct KapparSurface *surface);

/**
 * Number of curve components of the surface; zero for null input.
 *
 * # Safety
 * `surface` must be a live handle or null.
 */
size_t kappar_surface_component_count(const struct KapparSurface *surface);

/**
 * Number of boundary components of the surface; zero for null input.
 *
 * # Safety
 * `surface` must be a live handle or null.
 */
size_t kappar_surface_boundary_count(const struct KapparSurface *surface);

/**
 * Checks the structural invariants. Returns `Ok` when clean, otherwise
 * `ValidationError` with the first violation as the error message.
 *
 * # Safety
 * `surface` must be a live handle.
 */
enum KapparStatus kappar_surface_validate(const struct KapparSurface *surface);

/**
 * Runs the full analysis and returns the JSON report. With `include_raw`
 * the real Kodaira section also carries the value before imaginary loop
 * elimination.
 *
 * # Safety
 * `surface` must be a live handle and `out` writable; the returned
 * string must be freed with `kappar_string_free`.
 */
enum KapparStatus kappar_surface_analyze_json(const struct KapparSurface *surface,
                                              bool include_raw,
                                              char **out);

/**
 * Serializes the surface as a surface document in JSON form.
 *
 * # Safety
 * Same contract as `kappar_surface_analyze_json`.
 */
enum KapparStatus kappar_surface_to_json(const struct KapparSurface *surface, char **out);

/**
 * Renders the weighted dual graph in DOT format.
 *
 * # Safety
 * Same contract as `kappar_surface_analyze_json`.
 */
enum KapparStatus kappar_surface_to_dot(const struct KapparSurface *surface, char **out);

/**
 * Releases a string returned by this library. A null pointer is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used again.
 */
void kappar_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KAPPAR_H */
