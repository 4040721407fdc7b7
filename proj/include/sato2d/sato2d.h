// Copyright 2026 The sato2d Authors
//
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

#ifndef SATO2D_SATO2D_H
#define SATO2D_SATO2D_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SATO2D_API __declspec(dllexport)
#else
#define SATO2D_API __attribute__((visibility("default")))
#endif

typedef enum sato2d_status {
  SATO2D_OK = 0,
  SATO2D_E_USAGE = 1,
  SATO2D_E_PARSE = 2,
  SATO2D_E_CONFIG = 3,
  SATO2D_E_DOMAIN = 4,
  SATO2D_E_DIVISION_BY_ZERO = 5,
  SATO2D_E_PRECISION = 6,
  SATO2D_E_NON_UNIT = 7,
  SATO2D_E_INDETERMINATE = 8,
  SATO2D_E_CONSTRUCTION = 9,
  SATO2D_E_INTERNAL = 10,
  SATO2D_E_NULL_ARGUMENT = 11,
  SATO2D_E_UNKNOWN = 12
} sato2d_status;

typedef struct sato2d_session sato2d_session;
typedef struct sato2d_op sato2d_op;
typedef struct sato2d_report sato2d_report;

/* Message of the last failed call on this thread; never NULL. */
SATO2D_API const char *sato2d_last_error(void);
SATO2D_API const char *sato2d_status_name(sato2d_status s);
/* 0 ok, 1 domain error, 2 usage error. */
SATO2D_API int sato2d_exit_code(sato2d_status s);

/* field is "Q" or "Q(sqrt,d)"; NULL means "Q". */
SATO2D_API sato2d_status sato2d_session_new(const char *field, int nx, int n1, int s_min,
                                            int s_max, sato2d_session **out);
SATO2D_API sato2d_status sato2d_session_set_bound(sato2d_session *s, int bound);
SATO2D_API sato2d_status sato2d_session_set_seed(sato2d_session *s, uint64_t seed);
SATO2D_API void sato2d_session_free(sato2d_session *s);

SATO2D_API sato2d_status sato2d_op_parse(const sato2d_session *s, const char *text,
                                         sato2d_op **out);
SATO2D_API sato2d_status sato2d_op_compose(const sato2d_op *a, const sato2d_op *b,
                                           sato2d_op **out);
SATO2D_API sato2d_status sato2d_op_commutator(const sato2d_op *a, const sato2d_op *b,
                                              sato2d_op **out);
SATO2D_API sato2d_status sato2d_op_ord(const sato2d_op *a, int *k, int *l);
/* Canonical text; release with sato2d_string_free. */
SATO2D_API sato2d_status sato2d_op_format(const sato2d_op *a, char **out);
SATO2D_API void sato2d_op_free(sato2d_op *a);
SATO2D_API void sato2d_string_free(char *s);

/* Runs a subcommand. argv holds positional arguments and "--name value"
   option pairs; the subcommand name is passed separately. */
SATO2D_API sato2d_status sato2d_run(const sato2d_session *s, const char *command, int argc,
                                    const char *const *argv, sato2d_report **out);
/* Strings owned by the report. */
SATO2D_API const char *sato2d_report_text(const sato2d_report *r);
SATO2D_API const char *sato2d_report_json(const sato2d_report *r);
SATO2D_API void sato2d_report_free(sato2d_report *r);

#ifdef __cplusplus
}
#endif

#endif
