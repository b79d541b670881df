/* Compiled as C: the public header must not need C++. */
#include <stdio.h>
#include <string.h>

#include "g2count/g2count.h"

static int expect(int ok, const char* what) {
  if (!ok) fprintf(stderr, "capi_smoke: %s\n", what);
  return ok ? 0 : 1;
}

int main(void) {
  int bad = 0;
  g2c_curve* c = NULL;
  g2c_result* r = NULL;
  g2c_options* o = g2c_options_new();

  bad += expect(g2c_curve_parse("p=11;P=[1,0,0,0,0,1]", &c, NULL) == G2C_OK, "parse");
  bad += expect(g2c_count(c, G2C_COUNT_NAIVE, o, &r) == G2C_OK, "naive count");
  bad += expect(strstr(g2c_result_json(r), "\"s2\":-16") != NULL, "naive chi");
  bad += expect(g2c_result_error(r)[0] == '\0', "empty error on success");
  g2c_result_free(r);

  /* Only l = 2 is available: the Siegel run cannot conclude. */
  {
    const int64_t primes[] = {2};
    g2c_options_set_primes(o, primes, 1);
    bad += expect(g2c_count(c, G2C_COUNT_SIEGEL, o, &r) == G2C_EXHAUSTED, "exhaustion");
    bad += expect(g2c_status_exit_code(g2c_result_status(r)) == 3, "exit code 3");
    bad += expect(strstr(g2c_result_json(r), "\"Exhausted\"") != NULL, "error class in JSON");
    g2c_result_free(r);
  }

  {
    g2c_curve* none = NULL;
    g2c_result* err = NULL;
    bad += expect(g2c_curve_parse("p=11;P=[1,0,", &none, &err) == G2C_PARSE, "parse error");
    bad += expect(none == NULL, "no curve on failure");
    bad += expect(g2c_status_exit_code(g2c_result_status(err)) == 2, "exit code 2");
    g2c_result_free(err);
  }

  bad += expect(g2c_count(NULL, G2C_COUNT_NAIVE, o, &r) == G2C_USAGE, "null curve");
  g2c_result_free(r);
  bad += expect(strcmp(g2c_status_name(G2C_INTERNAL), "InternalInconsistency") == 0, "status name");

  g2c_options_free(o);
  g2c_curve_free(c);
  return bad ? 1 : 0;
}
