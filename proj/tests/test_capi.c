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


/* Exercises the shared library through its C header only. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "cds/cds.h"

static int failures = 0;

#define EXPECT(cond)                                                \
  do {                                                              \
    if (!(cond)) {                                                  \
      fprintf(stderr, "%s:%d: expected %s (last error: %s)\n",      \
              __FILE__, __LINE__, #cond, cds_last_error());         \
      ++failures;                                                   \
    }                                                               \
  } while (0)

static const char* kInstance =
    "{\"schema_version\":1,\"bound\":\"4\",\"items\":["
    "{\"id\":0,\"due\":0},{\"id\":1,\"due\":1},{\"id\":2,\"due\":2},"
    "{\"id\":3,\"due\":10},{\"id\":4,\"due\":11}]}";

static void test_solve_and_validate(const char* dir) {
  cds_instance* inst = NULL;
  EXPECT(cds_instance_from_json(kInstance, &inst) == CDS_OK);
  EXPECT(cds_instance_size(inst) == 5);

  const char* algorithms[] = {"early", "early-late", "median", "decoupling", "refined", "exact"};
  for (size_t a = 0; a < sizeof algorithms / sizeof *algorithms; ++a) {
    cds_schedule* s = NULL;
    EXPECT(cds_solve(inst, algorithms[a], &s) == CDS_OK);
    EXPECT(cds_schedule_bin_count(s) == 2);
    char* report = NULL;
    EXPECT(cds_validate(inst, s, &report) == CDS_OK);
    EXPECT(report != NULL && strstr(report, "feasible") != NULL);
    cds_string_free(report);
    const char* structure = NULL;
    EXPECT(cds_classify(inst, s, &structure) == CDS_OK);
    if (a < 3) EXPECT(structure != NULL && strcmp(structure, "sequential") == 0);
    cds_schedule_free(s);
  }

  cds_schedule* s = NULL;
  EXPECT(cds_solve(inst, "fastest", &s) == CDS_INVALID);
  EXPECT(strstr(cds_last_error(), "fastest") != NULL);
  EXPECT(cds_solve(inst, "median", &s) == CDS_OK);

  char inst_path[512];
  char sol_path[512];
  snprintf(inst_path, sizeof inst_path, "%s/capi_instance.json", dir);
  snprintf(sol_path, sizeof sol_path, "%s/capi_solution.json", dir);
  EXPECT(cds_instance_save(inst, inst_path) == CDS_OK);
  EXPECT(cds_schedule_save(s, sol_path) == CDS_OK);

  cds_instance* again = NULL;
  EXPECT(cds_instance_load(inst_path, &again) == CDS_OK);
  char* h1 = NULL;
  char* h2 = NULL;
  EXPECT(cds_instance_hash(inst, &h1) == CDS_OK);
  EXPECT(cds_instance_hash(again, &h2) == CDS_OK);
  EXPECT(h1 != NULL && h2 != NULL && strcmp(h1, h2) == 0);
  cds_string_free(h1);
  cds_string_free(h2);

  cds_schedule* loaded = NULL;
  EXPECT(cds_schedule_load(again, sol_path, &loaded) == CDS_OK);
  EXPECT(cds_validate(again, loaded, NULL) == CDS_OK);
  char* total = NULL;
  EXPECT(cds_schedule_total_cost(loaded, &total) == CDS_OK);
  EXPECT(total != NULL && strcmp(total, "3") == 0);
  cds_string_free(total);
  cds_schedule_free(loaded);

  cds_instance* other = NULL;
  EXPECT(cds_generate_random(5, 50, "4", 3, &other) == CDS_OK);
  EXPECT(cds_schedule_load(other, sol_path, &loaded) == CDS_HASH_MISMATCH);
  cds_instance* missing = NULL;
  EXPECT(cds_instance_load("/nonexistent/x.json", &missing) == CDS_IO);
  EXPECT(missing == NULL);

  cds_instance_free(other);
  cds_schedule_free(s);
  cds_instance_free(again);
  cds_instance_free(inst);
}

static void test_generators(void) {
  cds_instance* inst = NULL;
  cds_schedule* cert = NULL;
  EXPECT(cds_generate_theorem3(3, NULL, &inst, &cert) == CDS_OK);
  EXPECT(cds_instance_size(inst) == 51);
  EXPECT(cds_schedule_bin_count(cert) == 1);
  EXPECT(cds_validate(inst, cert, NULL) == CDS_OK);
  cds_schedule_free(cert);
  cds_instance_free(inst);

  EXPECT(cds_generate_theorem3(2, "17", &inst, NULL) == CDS_INVALID);
  EXPECT(cds_generate_theorem3(6, NULL, &inst, NULL) == CDS_CAPACITY);
  EXPECT(cds_generate_median_lb(3, &inst, NULL) == CDS_INVALID);

  EXPECT(cds_generate_median_lb(5, &inst, &cert) == CDS_OK);
  EXPECT(cds_validate(inst, cert, NULL) == CDS_INFEASIBLE);
  cds_schedule* s = NULL;
  EXPECT(cds_solve(inst, "median", &s) == CDS_OK);
  EXPECT(cds_schedule_bin_count(s) == 4);
  EXPECT(cds_solve(inst, "exact", &s) == CDS_CAPACITY);
  cds_schedule_free(s);
  cds_schedule_free(cert);
  cds_instance_free(inst);

  const int64_t a[] = {2, 2, 4, 2, 3, 3};
  const size_t triples[] = {0, 1, 2, 3, 4, 5};
  EXPECT(cds_generate_three_partition(a, 6, 8, triples, &inst, &cert) == CDS_OK);
  EXPECT(cds_instance_size(inst) == 32774);
  EXPECT(cds_validate(inst, cert, NULL) == CDS_OK);
  cds_schedule_free(cert);
  cds_instance_free(inst);

  EXPECT(cds_generate_random(0, 50, "4", 3, &inst) == CDS_INVALID);
  EXPECT(cds_generate_random(3, 50, "x", 3, &inst) == CDS_INVALID);
  EXPECT(cds_instance_from_json("{\"schema_version\":1}", &inst) == CDS_INVALID);
  EXPECT(cds_solve(NULL, "median", &s) == CDS_INVALID);
}

static void test_bench(void) {
  char* csv = NULL;
  char* diag = NULL;
  EXPECT(cds_bench("{}", &csv, &diag) == CDS_OK);
  EXPECT(csv != NULL &&
         strcmp(csv, "instance,algorithm,bins,total_cost,optimum,ratio,wall_ms\n") == 0);
  cds_string_free(csv);
  cds_string_free(diag);
  EXPECT(cds_bench("{\"bogus\":1}", &csv, NULL) == CDS_INVALID);
}

int main(int argc, char** argv) {
  const char* dir = argc > 1 ? argv[1] : ".";
  test_solve_and_validate(dir);
  test_generators();
  test_bench();
  EXPECT(strcmp(cds_status_name(CDS_HASH_MISMATCH), "hash-mismatch") == 0);
  if (failures != 0) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
