/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to liblrpk.
 *
 * Every call works on an opaque session.  Inputs and outputs are JSON
 * documents (see lrpk/json_io.hpp for the schemas).  On LRPK_OK or
 * LRPK_VIOLATION the result document is available from lrpk_output(); on
 * any other status lrpk_last_error() holds a diagnostic.  Both strings are
 * owned by the session and stay valid until the next call on it.
 *
 * A session must not be used from two threads at once; distinct sessions
 * are independent.
 */

#ifndef LRPK_LRPK_H
#define LRPK_LRPK_H

#include <stdint.h>

#if defined(_WIN32)
#  define LRPK_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define LRPK_API __attribute__((visibility("default")))
#else
#  define LRPK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lrpk_status {
  LRPK_OK = 0,
  LRPK_VIOLATION = 1,      /* a checked identity failed */
  LRPK_INVALID_INPUT = 2,  /* malformed JSON or out-of-contract value */
  LRPK_BOUND_EXCEEDED = 3, /* enumeration larger than the configured bound */
  LRPK_INTERNAL = 4,       /* a stage left its proven target set */
  LRPK_BAD_HANDLE = 5
} lrpk_status;

typedef struct lrpk_session lrpk_session;

LRPK_API const char* lrpk_version(void);
LRPK_API const char* lrpk_status_name(lrpk_status status);

/* New session with default bounds, honoring LRPK_MAX_CELLS.  NULL on OOM. */
LRPK_API lrpk_session* lrpk_session_new(void);
LRPK_API void lrpk_session_free(lrpk_session* s);

/* Cell bounds for tableau and picture enumeration, and the BFS word length. */
LRPK_API lrpk_status lrpk_set_limits(lrpk_session* s, int ssyt_cells, int picture_cells, int bfs_length);

LRPK_API const char* lrpk_output(const lrpk_session* s);
LRPK_API const char* lrpk_last_error(const lrpk_session* s);

/* {"count":N} or, unless count_only, {"count":N,"pictures":[...]}. */
LRPK_API lrpk_status lrpk_pictures(lrpk_session* s, const char* kappa1_json, const char* kappa2_json, int count_only);

/* Picture -> {"context":{"kappa1","kappa2"},"pair":{"first","second"}}. */
LRPK_API lrpk_status lrpk_to_pair(lrpk_session* s, const char* picture_json);

/* Inverse of lrpk_to_pair: takes its output document, returns the picture. */
LRPK_API lrpk_status lrpk_to_picture(lrpk_session* s, const char* context_pair_json);

/* {"coefficient":c} plus, with cross_check, {"pictures","skew_tableaux",
 * "routes_agree"}.  LRPK_VIOLATION when the routes disagree. */
LRPK_API lrpk_status lrpk_lr_coefficient(lrpk_session* s, const char* lambda_json, const char* mu_json,
                                         const char* nu_json, int cross_check);

/* Two-rowed array -> {"P","Q"} and back. */
LRPK_API lrpk_status lrpk_rsk(lrpk_session* s, const char* array_json);
LRPK_API lrpk_status lrpk_unrsk(lrpk_session* s, const char* pq_json);

/* Membership witness of a straight tableau in B(mu)^nu_lambda; rank <= 0 picks the default. */
LRPK_API lrpk_status lrpk_lr_membership(lrpk_session* s, const char* tableau_json, const char* lambda_json,
                                        const char* nu_json, int rank);

/* Runs a verification suite.  The report is
 * {"suite":..,"status":"ok"|"violation","payload":{..}[,"elapsed_ms":t]}.
 * size_bound > 0 overrides the suite's family size, instances > 0 the
 * number of random instances.  elapsed_ms is reported only when with_timing
 * is non-zero so that output is otherwise reproducible. */
LRPK_API lrpk_status lrpk_verify(lrpk_session* s, const char* suite, uint64_t seed, int size_bound, int instances,
                                 int with_timing);

#ifdef __cplusplus
}
#endif

#endif /* LRPK_LRPK_H */
