#include <stdio.h>
#include <string.h>

#include "skewdet.h"

#define CHECK(cond)                                                        \
  do {                                                                     \
    if (!(cond)) {                                                         \
      fprintf(stderr, "line %d: %s (%s)\n", __LINE__, #cond,               \
              skewdet_last_error_message());                               \
      return 1;                                                            \
    }                                                                      \
  } while (0)

int main(void) {
  const uint32_t lambda[] = {6, 6, 6, 4};
  const uint32_t mu[] = {3, 1};
  SkewdetShape *shape = NULL;
  CHECK(skewdet_shape_new(lambda, 4, mu, 2, &shape) == SKEWDET_STATUS_OK);

  char *direct = NULL;
  CHECK(skewdet_count_syt(shape, &direct) == SKEWDET_STATUS_OK);

  SkewdetDecomposition *d = NULL;
  CHECK(skewdet_decompose(shape, SKEWDET_STRATEGY_THICK_RIM, &d) == SKEWDET_STATUS_OK);
  bool valid = false, nested = false;
  CHECK(skewdet_decomposition_validate(d, &valid, &nested) == SKEWDET_STATUS_OK);
  CHECK(valid && nested);

  char *via_strips = NULL;
  CHECK(skewdet_decomposition_count(d, &via_strips) == SKEWDET_STATUS_OK);
  CHECK(strcmp(direct, via_strips) == 0);
  printf("%s\n", direct);

  const uint32_t bad[] = {1, 2};
  SkewdetShape *none = NULL;
  CHECK(skewdet_shape_new(bad, 2, NULL, 0, &none) == SKEWDET_STATUS_SHAPE);
  CHECK(none == NULL && strlen(skewdet_last_error_message()) > 0);

  skewdet_string_free(direct);
  skewdet_string_free(via_strips);
  skewdet_decomposition_free(d);
  skewdet_shape_free(shape);
  return 0;
}
