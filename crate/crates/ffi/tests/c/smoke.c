#include <math.h>
#include <stdio.h>

#include "sortkern.h"

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      char msg[256];                                                  \
      sk_last_error_message(msg, sizeof msg);                         \
      fprintf(stderr, "line %d: %s (last error: %s)\n", __LINE__, #cond, msg); \
      return 1;                                                       \
    }                                                                 \
  } while (0)

int main(void) {
  SkKernel k = {1.0 / (2.0 * M_PI), 1.0, 2};
  double design[] = {0.1, 0.7, 0.4, 0.3, 0.9, 0.2};
  double y[] = {1.0, -0.5, 2.0};
  SkInterpolant *f = NULL;
  CHECK(sk_interpolant_fit(&k, SK_MODE_SORTED, design, 3, 2, y, &f) == SK_STATUS_OK);
  CHECK(sk_interpolant_len(f) == 3);

  double x[] = {0.7, 0.1}, v = 0.0;
  CHECK(sk_interpolant_evaluate(f, x, 2, &v) == SK_STATUS_OK);
  CHECK(fabs(v - 1.0) < 1e-8);

  double coeffs[3];
  CHECK(sk_interpolant_coefficients(f, coeffs, 3) == SK_STATUS_OK);
  sk_interpolant_free(f);

  double dup[] = {0.1, 0.2, 0.2, 0.1};
  f = NULL;
  CHECK(sk_interpolant_fit(&k, SK_MODE_SORTED, dup, 2, 2, y, &f) == SK_STATUS_DUPLICATE_ORBIT);
  CHECK(f == NULL);

  SkBound b;
  CHECK(sk_h_tail_bound(0.2, 100, 1, 1.0, SK_DOMAIN_CUBE, &b) == SK_STATUS_OK);
  CHECK(fabs(b.value - 3.99e-4) < 1e-6 && b.valid == 1);

  printf("ok %s\n", sk_version());
  return 0;
}
