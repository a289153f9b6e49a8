#ifndef UNREP_UNREP_H
#define UNREP_UNREP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define UNREP_API __declspec(dllexport)
#else
#define UNREP_API __attribute__((visibility("default")))
#endif

/* Status codes double as CLI exit codes. */
typedef enum unrep_status {
  UNREP_OK = 0,
  UNREP_E_INPUT = 1,
  UNREP_E_CAPACITY = 2,
  UNREP_E_THEOREM = 3,
  UNREP_E_INTERNAL = 4
} unrep_status;

typedef enum unrep_strategy {
  UNREP_STRATEGY_AUTO = 0,
  UNREP_STRATEGY_BACKTRACK = 1,
  UNREP_STRATEGY_MONOID = 2,
  UNREP_STRATEGY_IDEMPOTENT = 3,
  UNREP_STRATEGY_BRUTEFORCE = 4
} unrep_strategy;

typedef struct unrep_semigroup unrep_semigroup;
typedef struct unrep_list unrep_list;

typedef struct unrep_classification {
  size_t size;
  size_t degree;
  int is_monoid;
  int64_t identity; /* -1 when absent */
  int is_group;
  int is_regular;
  int is_inverse;
  int is_clifford;
  int is_left_zero;
  size_t idempotent_count;
} unrep_classification;

typedef struct unrep_options {
  int oracle;
  unsigned jobs;     /* 0 is treated as 1 */
  int64_t identity;  /* -1 selects the default */
  size_t cap;        /* 0 selects the default */
  uint64_t seed;
  int pretty;
} unrep_options;

UNREP_API void unrep_options_init(unrep_options* opts);

/* Message of the last failed call on this thread; never NULL. */
UNREP_API const char* unrep_last_error(void);
UNREP_API const char* unrep_status_string(unrep_status s);

/* gens is count*degree images, row-major. */
UNREP_API unrep_status unrep_semigroup_from_generators(
    const uint32_t* gens, size_t count, size_t degree, size_t cap,
    unrep_semigroup** out);
/* table is order*order entries, row-major; the Cayley representation. */
UNREP_API unrep_status unrep_semigroup_from_table(const uint32_t* table,
                                                  size_t order,
                                                  unrep_semigroup** out);
UNREP_API unrep_status unrep_semigroup_from_json(const char* json, size_t cap,
                                                 unrep_semigroup** out);
UNREP_API void unrep_semigroup_free(unrep_semigroup* s);

UNREP_API size_t unrep_semigroup_size(const unrep_semigroup* s);
UNREP_API size_t unrep_semigroup_degree(const unrep_semigroup* s);
/* Copies degree images of element i into out. */
UNREP_API unrep_status unrep_semigroup_element(const unrep_semigroup* s,
                                               size_t i, uint32_t* out);

UNREP_API unrep_status unrep_classify(const unrep_semigroup* s,
                                      unrep_classification* out);

UNREP_API unrep_status unrep_enumerate(const unrep_semigroup* s,
                                       unrep_strategy strategy, unsigned jobs,
                                       unrep_list** out);
UNREP_API size_t unrep_list_count(const unrep_list* l);
/* Copies phi of unrep k (degree entries, element indices) into out. */
UNREP_API unrep_status unrep_list_phi(const unrep_list* l, size_t k,
                                      uint32_t* out);
UNREP_API void unrep_list_free(unrep_list* l);

/* Runs a CLI command. *out receives a report or error document, even on
   failure, and must be released with unrep_string_free. */
UNREP_API unrep_status unrep_run(const char* command, const char* input_json,
                                 const unrep_options* opts, char** out);
UNREP_API void unrep_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
