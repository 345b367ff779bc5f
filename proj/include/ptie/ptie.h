/*
 * ptie — broadcast planning, pairwise XOR coding, and exchange simulation
 * for partial third-party information exchange.
 *
 * A network of `clients` peers shares a lossless broadcast channel. Each
 * pair of clients holds one common link value; the first `privileged`
 * clients must end up knowing every link value in the network, and all
 * clients may transmit. This library computes the provably minimal number
 * of broadcasts, the per-client transmission plan that attains it, the
 * deterministic pairwise-XOR coding schedule, and simulates/verifies the
 * full exchange.
 *
 * All functions returning ptie_status report PTIE_OK on success and never
 * throw. Client indices are 1-based everywhere. Objects returned through
 * out-pointers as opaque handles must be released with the matching
 * *_destroy call.
 */
#ifndef PTIE_H
#define PTIE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(PTIE_BUILD)
#define PTIE_API __declspec(dllexport)
#else
#define PTIE_API __declspec(dllimport)
#endif
#else
#define PTIE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ptie_status {
  PTIE_OK = 0,
  PTIE_ERROR_INVALID_ARGUMENT = 1, /* bad instance, index, or pointer */
  PTIE_ERROR_UNSUPPORTED = 2,      /* documented rejection, e.g. size caps */
  PTIE_ERROR_BUFFER_TOO_SMALL = 3,
  PTIE_ERROR_INTERNAL = 4
} ptie_status;

PTIE_API const char *ptie_status_name(ptie_status status);
PTIE_API const char *ptie_version(void);

/* ---------------------------------------------------------------- counts */

/* Minimum number of broadcasts with coding: (n-1)(n-2)/2 + floor((k-1)/2). */
PTIE_API ptie_status ptie_optimal_count(uint32_t clients, uint32_t privileged,
                                        uint64_t *out_count);

/* Broadcasts needed with no coding: n(n-1)/2 for privileged >= 3, one fewer
 * for privileged == 2. Undefined for a single privileged client
 * (PTIE_ERROR_UNSUPPORTED). */
PTIE_API ptie_status ptie_uncoded_count(uint32_t clients, uint32_t privileged,
                                        uint64_t *out_count);

/* ----------------------------------------------------------------- plans */

/* Writes the optimal per-client packet counts into counts[0..clients-1].
 * capacity must be at least `clients`. */
PTIE_API ptie_status ptie_plan_counts(uint32_t clients, uint32_t privileged,
                                      uint64_t *counts, size_t capacity);

/* Tests an arbitrary plan (count_len == clients) against the feasibility
 * condition: any l other clients must jointly send at least l(l-1)/2. */
PTIE_API ptie_status ptie_plan_feasible(uint32_t clients, uint32_t privileged,
                                        const uint64_t *counts, size_t count_len,
                                        int *out_feasible);

/* ------------------------------------------------------------- schedules */

typedef struct ptie_schedule ptie_schedule;

typedef struct ptie_schedule_entry {
  uint32_t sender;     /* 1-based client index */
  uint32_t index;      /* j, 1-based position within the sender's packets */
  uint32_t term_count; /* 1 (plain) or 2 (XOR of two pairs) */
  uint32_t term_lo[2]; /* term t is the pair {term_lo[t], term_hi[t]} */
  uint32_t term_hi[2];
} ptie_schedule_entry;

PTIE_API ptie_status ptie_schedule_create(uint32_t clients, uint32_t privileged,
                                          ptie_schedule **out_schedule);
PTIE_API void ptie_schedule_destroy(ptie_schedule *schedule);
PTIE_API size_t ptie_schedule_entry_count(const ptie_schedule *schedule);
PTIE_API ptie_status ptie_schedule_entry_at(const ptie_schedule *schedule, size_t position,
                                            ptie_schedule_entry *out_entry);

/* Renders entry `position` as "x[a,b]" or "x[a,b]+x[c,d]" into buffer
 * (NUL-terminated). PTIE_ERROR_BUFFER_TOO_SMALL if capacity is short. */
PTIE_API ptie_status ptie_schedule_render_entry(const ptie_schedule *schedule, size_t position,
                                                char *buffer, size_t capacity);

/* ------------------------------------------------------------ simulation */

typedef struct ptie_report ptie_report;

/* Runs one full exchange: builds the schedule, encodes payload_bits-wide
 * pseudo-random payloads (splitmix64 stream over `seed`, reproducible),
 * broadcasts, decodes at every client, and checks recovered payloads
 * against ground truth. */
PTIE_API ptie_status ptie_simulate(uint32_t clients, uint32_t privileged, uint64_t seed,
                                   uint32_t payload_bits, ptie_report **out_report);
PTIE_API void ptie_report_destroy(ptie_report *report);

PTIE_API int ptie_report_success(const ptie_report *report);
PTIE_API uint64_t ptie_report_total_transmissions(const ptie_report *report);

/* Pairs solved by `client` (any client; non-privileged ones are recorded
 * diagnostically). */
PTIE_API ptie_status ptie_report_solved_count(const ptie_report *report, uint32_t client,
                                              uint64_t *out_count);

/* Rank-neutral packets seen by a privileged client. */
PTIE_API ptie_status ptie_report_redundant_count(const ptie_report *report, uint32_t client,
                                                 uint64_t *out_count);

/* Unsolved pairs of a privileged client; zero everywhere iff the exchange
 * succeeded. */
PTIE_API ptie_status ptie_report_missing_count(const ptie_report *report, uint32_t client,
                                               size_t *out_count);
PTIE_API ptie_status ptie_report_missing_pair(const ptie_report *report, uint32_t client,
                                              size_t position, uint32_t *out_lo,
                                              uint32_t *out_hi);

/* ---------------------------------------------------------- verification */

typedef enum ptie_check {
  /* Plan-space search equals the closed form; clients <= 6. */
  PTIE_CHECK_OPTIMALITY = 1u << 0,
  /* Fast feasibility test agrees with the exhaustive subset quantifier on
   * the optimal plan plus deterministic random plans; clients <= 10. */
  PTIE_CHECK_FEASIBILITY = 1u << 1,
  /* Every privileged client's receive matrix has full rank. */
  PTIE_CHECK_DECODABILITY = 1u << 2
} ptie_check;

/* Runs the requested checks on one instance. out_failed_checks receives the
 * bitmask of checks that failed (0 == all requested checks passed).
 * Requesting a check beyond its size cap yields PTIE_ERROR_UNSUPPORTED. */
PTIE_API ptie_status ptie_verify_instance(uint32_t clients, uint32_t privileged, uint32_t checks,
                                          uint32_t *out_failed_checks);

#ifdef __cplusplus
}
#endif

#endif /* PTIE_H */
