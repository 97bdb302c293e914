// Copyright 2026 The CDS Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to the container delivery scheduling library. Objects are
 * opaque handles released with the matching _free call. Every function that
 * can fail returns a cds_status; on failure cds_last_error() describes the
 * problem (thread-local, valid until the next call on the same thread).
 * Strings returned through char** are owned by the caller and released with
 * cds_string_free. Costs and bounds cross the boundary as decimal strings. */

#ifndef CDS_CDS_H_
#define CDS_CDS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CDS_API __declspec(dllexport)
#else
#define CDS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cds_instance cds_instance;
typedef struct cds_schedule cds_schedule;

typedef enum cds_status {
  CDS_OK = 0,
  CDS_INFEASIBLE = 1,     /* a schedule violates the partition or the bound */
  CDS_INVALID = 2,        /* bad argument, malformed file, unknown id */
  CDS_CAPACITY = 3,       /* an exact solver or generator guard was hit */
  CDS_HASH_MISMATCH = 4,  /* solution file belongs to another instance */
  CDS_IO = 5,
  CDS_INTERNAL = 6
} cds_status;

CDS_API const char* cds_last_error(void);
CDS_API const char* cds_status_name(cds_status status);
CDS_API void cds_string_free(char* s);

/* Instances. */
CDS_API cds_status cds_instance_load(const char* path, cds_instance** out);
CDS_API cds_status cds_instance_from_json(const char* text, cds_instance** out);
CDS_API cds_status cds_instance_save(const cds_instance* instance,
                                     const char* path);
CDS_API cds_status cds_instance_to_json(const cds_instance* instance,
                                        char** out);
CDS_API cds_status cds_instance_hash(const cds_instance* instance, char** out);
CDS_API size_t cds_instance_size(const cds_instance* instance);
CDS_API void cds_instance_free(cds_instance* instance);

/* Generators. `certificate` may be NULL; otherwise it receives the family's
 * certificate schedule, or NULL when the family has none. */
CDS_API cds_status cds_generate_theorem3(int ell, const char* bound_or_null,
                                         cds_instance** out,
                                         cds_schedule** certificate);
CDS_API cds_status cds_generate_median_lb(int64_t lambda, cds_instance** out,
                                          cds_schedule** certificate);
/* `triples` holds 3*m indices into `a` (the known partition) or is NULL. */
CDS_API cds_status cds_generate_three_partition(const int64_t* a, size_t count,
                                                int64_t beta,
                                                const size_t* triples,
                                                cds_instance** out,
                                                cds_schedule** certificate);
CDS_API cds_status cds_generate_random(size_t n, int64_t max_due,
                                       const char* bound, uint64_t seed,
                                       cds_instance** out);

/* Solving. Algorithms: early, early-late, median, decoupling, refined,
 * exact. */
CDS_API cds_status cds_solve(const cds_instance* instance,
                             const char* algorithm, cds_schedule** out);

/* Schedules (solution files). */
CDS_API cds_status cds_schedule_load(const cds_instance* instance,
                                     const char* path, cds_schedule** out);
CDS_API cds_status cds_schedule_save(const cds_schedule* schedule,
                                     const char* path);
CDS_API cds_status cds_schedule_to_json(const cds_schedule* schedule,
                                        char** out);
CDS_API size_t cds_schedule_bin_count(const cds_schedule* schedule);
CDS_API cds_status cds_schedule_total_cost(const cds_schedule* schedule,
                                           char** out);
CDS_API void cds_schedule_free(cds_schedule* schedule);

/* Checks the schedule against the instance, including any recorded costs it
 * was loaded with. Returns CDS_OK if feasible, CDS_INFEASIBLE otherwise;
 * `report` (may be NULL) receives a human-readable listing either way. */
CDS_API cds_status cds_validate(const cds_instance* instance,
                                const cds_schedule* schedule, char** report);

/* "sequential", "nested" or "other" (static string). */
CDS_API cds_status cds_classify(const cds_instance* instance,
                                const cds_schedule* schedule,
                                const char** structure);

/* Runs the benchmark described by a JSON spec; `diagnostics` may be NULL. */
CDS_API cds_status cds_bench(const char* spec_json, char** csv,
                             char** diagnostics);

#ifdef __cplusplus
}
#endif

#endif /* CDS_CDS_H_ */
