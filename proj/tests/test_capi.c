#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "unrep/unrep.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

static void generators(void) {
  const uint32_t gens[] = {1, 0, 3, 2, 2, 3, 2, 3};
  unrep_semigroup* s = NULL;
  EXPECT(unrep_semigroup_from_generators(gens, 2, 4, 0, &s) == UNREP_OK);
  EXPECT(unrep_semigroup_size(s) == 4);
  EXPECT(unrep_semigroup_degree(s) == 4);

  uint32_t e[4];
  EXPECT(unrep_semigroup_element(s, 2, e) == UNREP_OK);
  EXPECT(e[0] == 2 && e[1] == 3 && e[2] == 2 && e[3] == 3);
  EXPECT(unrep_semigroup_element(s, 4, e) == UNREP_E_INPUT);

  unrep_classification c;
  EXPECT(unrep_classify(s, &c) == UNREP_OK);
  EXPECT(c.is_clifford && c.is_monoid && !c.is_group);
  EXPECT(c.identity == 0);
  EXPECT(c.idempotent_count == 2);

  unrep_list* l = NULL;
  EXPECT(unrep_enumerate(s, UNREP_STRATEGY_AUTO, 1, &l) == UNREP_OK);
  EXPECT(unrep_list_count(l) == 2);
  uint32_t phi[4];
  EXPECT(unrep_list_phi(l, 1, phi) == UNREP_OK);
  EXPECT(phi[0] == 1 && phi[1] == 0 && phi[2] == 3 && phi[3] == 2);
  EXPECT(unrep_list_phi(l, 2, phi) == UNREP_E_INPUT);
  unrep_list_free(l);

  EXPECT(unrep_enumerate(s, UNREP_STRATEGY_BRUTEFORCE, 1, &l) == UNREP_OK);
  EXPECT(unrep_list_count(l) == 2);
  unrep_list_free(l);
  unrep_semigroup_free(s);
}

static void errors(void) {
  const uint32_t bad[] = {0, 5};
  unrep_semigroup* s = NULL;
  EXPECT(unrep_semigroup_from_generators(bad, 1, 2, 0, &s) == UNREP_E_INPUT);
  EXPECT(strlen(unrep_last_error()) > 0);

  const uint32_t full[] = {1, 2, 3, 0, 1, 0, 2, 3, 0, 0, 2, 3};
  EXPECT(unrep_semigroup_from_generators(full, 3, 4, 10, &s) == UNREP_E_CAPACITY);

  const uint32_t nonassoc[] = {0, 1, 0, 0};
  EXPECT(unrep_semigroup_from_table(nonassoc, 2, &s) == UNREP_E_INPUT);
  EXPECT(strstr(unrep_last_error(), "(1,0,1)") != NULL);

  EXPECT(unrep_semigroup_from_json("{", 0, &s) == UNREP_E_INPUT);
  EXPECT(strcmp(unrep_status_string(UNREP_E_THEOREM), "theorem_violation") == 0);
}

static void tables(void) {
  const uint32_t c3[] = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  unrep_semigroup* s = NULL;
  EXPECT(unrep_semigroup_from_table(c3, 3, &s) == UNREP_OK);
  unrep_list* l = NULL;
  EXPECT(unrep_enumerate(s, UNREP_STRATEGY_BACKTRACK, 2, &l) == UNREP_OK);
  EXPECT(unrep_list_count(l) == 3);
  unrep_list_free(l);
  unrep_semigroup_free(s);

  EXPECT(unrep_semigroup_from_json("{\"degree\":3,\"generators\":[[0,0,0],[1,1,1],[2,2,2]]}",
                                   0, &s) == UNREP_OK);
  EXPECT(unrep_semigroup_size(s) == 3);
  unrep_semigroup_free(s);
}

static void run(void) {
  unrep_options o;
  unrep_options_init(&o);
  char* out = NULL;
  EXPECT(unrep_run("unreps", "{\"degree\":4,\"generators\":[[1,2,3,0]]}", &o, &out) ==
         UNREP_OK);
  EXPECT(out != NULL && strstr(out, "\"count\": 4") != NULL);
  unrep_string_free(out);

  EXPECT(unrep_run("heap", "{\"degree\":4,\"generators\":[[0,0,2,2],[1,1,2,2],[0,0,3,3],"
                           "[1,1,3,3]]}",
                   &o, &out) == UNREP_E_INPUT);
  EXPECT(out != NULL && strstr(out, "\"error\"") != NULL);
  EXPECT(strstr(out, "heap-torsor") != NULL);
  unrep_string_free(out);

  o.pretty = 1;
  EXPECT(unrep_run("analyze", "{\"table\":[[0,1],[1,0]]}", &o, &out) == UNREP_OK);
  EXPECT(out != NULL && strstr(out, "group: yes") != NULL);
  unrep_string_free(out);

  EXPECT(unrep_run("nope", "{\"table\":[[0]]}", NULL, &out) == UNREP_E_INPUT);
  unrep_string_free(out);
}

int main(void) {
  generators();
  errors();
  tables();
  run();
  if (failures) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
