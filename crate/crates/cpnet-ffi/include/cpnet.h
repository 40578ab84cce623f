#ifndef CPNET_H
#define CPNET_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible FFI call.
 */
typedef enum CpnStatus {
  /**
   * The call succeeded.
   */
  CPN_OK = 0,
  /**
   * A required pointer argument was null.
   */
  CPN_ERR_INVALID_ARGUMENT = 1,
  /**
   * The source text failed to parse or validate; details are in the
   * error string.
   */
  CPN_ERR_PARSE = 2,
  /**
   * Exploration hit a limit before finishing; the report is still
   * produced but carries no verdicts.
   */
  CPN_ERR_TRUNCATED = 3,
} CpnStatus;

/**
 * Opaque handle to a compiled net.
 */
typedef struct CpnNet CpnNet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses model source text into a net handle.
 *
 * On success writes the handle to `out_net` and returns `CpnOk`. On failure
 * returns `CpnErrParse` and, if `out_error` is non-null, writes a
 * newline-separated diagnostic string the caller must release with
 * `cpn_string_free`.
 *
 * # Safety
 * `source` must be a valid NUL-terminated string; `out_net` must be a valid
 * pointer; `out_error` may be null.
 */
enum CpnStatus cpn_net_parse(const char *source, struct CpnNet **out_net, char **out_error);

/**
 * Releases a net handle. Null is ignored.
 *
 * # Safety
 * `net` must be null or a handle returned by `cpn_net_parse` that has not
 * been freed yet.
 */
void cpn_net_free(struct CpnNet *net);

/**
 * Number of places in the net.
 *
 * # Safety
 * `net` must be a live handle from `cpn_net_parse`.
 */
uint64_t cpn_net_place_count(const struct CpnNet *net);

/**
 * Number of transitions in the net.
 *
 * # Safety
 * `net` must be a live handle from `cpn_net_parse`.
 */
uint64_t cpn_net_transition_count(const struct CpnNet *net);

/**
 * Runs the seeded random-firing simulator and writes the JSON report to
 * `out_json` (caller frees with `cpn_string_free`).
 *
 * # Safety
 * `net` must be a live handle; `out_json` must be a valid pointer.
 */
enum CpnStatus cpn_simulate_json(const struct CpnNet *net,
                                 uint64_t max_steps,
                                 uint64_t seed,
                                 char **out_json);

/**
 * Explores the state space under the given limits (0 selects the default
 * for that limit), runs the analyses, and writes the JSON report to
 * `out_json` (caller frees with `cpn_string_free`).
 *
 * Returns `CpnErrTruncated` if a limit was hit; the report is still
 * written, with `"complete": false` and no verdicts.
 *
 * # Safety
 * `net` must be a live handle; `out_json` must be a valid pointer.
 */
enum CpnStatus cpn_explore_json(const struct CpnNet *net,
                                uint64_t max_states,
                                uint64_t max_arcs,
                                uint64_t max_seconds,
                                char **out_json);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by this library that has not been
 * freed yet.
 */
void cpn_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CPNET_H */
