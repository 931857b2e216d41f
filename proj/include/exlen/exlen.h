#ifndef EXLEN_H
#define EXLEN_H

#include <stddef.h>
#include <stdint.h>

#if defined(EXLEN_BUILDING)
#define EXLEN_API __attribute__((visibility("default")))
#else
#define EXLEN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct exlen_category exlen_category;

typedef enum exlen_status {
  EXLEN_OK = 0,
  EXLEN_ERR_IO = 1,
  EXLEN_ERR_PARSE = 2,
  EXLEN_ERR_SCHEMA = 3,
  EXLEN_ERR_ARGUMENT = 4,
  EXLEN_ERR_BOUND = 5,
  EXLEN_ERR_CONTRACT = 6,
  EXLEN_ERR_VALIDATION = 7,
  EXLEN_ERR_INTERNAL = 8
} exlen_status;

typedef enum exlen_command {
  EXLEN_CMD_VALIDATE = 0,
  EXLEN_CMD_STRATA,
  EXLEN_CMD_SIMPLES,
  EXLEN_CMD_SEMIBRICKS,
  EXLEN_CMD_TORS,
  EXLEN_CMD_HASSE,
  EXLEN_CMD_CHECK,
  EXLEN_CMD_INTERVALS,
  EXLEN_CMD_TAUTILT,
  EXLEN_CMD_REPORT
} exlen_command;

typedef struct exlen_options {
  size_t max_indecs;
  unsigned jobs;
  unsigned mult_cap;
  unsigned sd_bound;
  int stable_only;
  int json;
  int count;
  int pairs;
  int table;
  /* Comma-separated ids for EXLEN_CMD_SIMPLES; NULL means all indecs. */
  const char* sub;
} exlen_options;

/* Defaults: 22 indecs, 1 job, multiplicity cap 3, subset bound 4. */
EXLEN_API void exlen_options_init(exlen_options* opts);

/* Message of the last failed call on this thread, "" if none. */
EXLEN_API const char* exlen_last_error(void);

EXLEN_API exlen_status exlen_load_file(const char* path, exlen_category** out);
EXLEN_API exlen_status exlen_load_string(const char* json, exlen_category** out);
EXLEN_API void exlen_free(exlen_category* cat);

EXLEN_API size_t exlen_indec_count(const exlen_category* cat);
EXLEN_API const char* exlen_indec_id(const exlen_category* cat, size_t i);
EXLEN_API uint32_t exlen_indec_theta(const exlen_category* cat, size_t i);
EXLEN_API exlen_status exlen_indec_index(const exlen_category* cat, const char* id, size_t* out);

/* Render a command. *out receives a string owned by the caller (release
   with exlen_string_free) whenever the status is OK, VALIDATION or
   CONTRACT; the latter two report a failing presentation. */
EXLEN_API exlen_status exlen_render(const exlen_category* cat, exlen_command cmd, const exlen_options* opts,
                          char** out);
EXLEN_API void exlen_string_free(char* s);

EXLEN_API exlen_status exlen_tors_count(const exlen_category* cat, const exlen_options* opts, size_t* out);
/* Torsion classes as bitmasks over declaration order, canonical order.
   Writes at most cap masks and sets *count to the total. */
EXLEN_API exlen_status exlen_tors_list(const exlen_category* cat, const exlen_options* opts, uint64_t* masks,
                             size_t cap, size_t* count);
EXLEN_API exlen_status exlen_t_closure(const exlen_category* cat, uint64_t mask, uint64_t* out);

#ifdef __cplusplus
}
#endif

#endif
