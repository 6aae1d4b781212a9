/* The public header must compile as C. */
#include <stdio.h>

#include "trigrove/trigrove.h"

int main(void) {
  tg_grove* g = NULL;
  char* text = NULL;
  if (tg_grove_target(3, &g) != TG_OK) return 1;
  if (tg_grove_to_json(g, &text) != TG_OK) return 1;
  puts(text);
  tg_string_free(text);
  tg_grove_free(g);
  return tg_grove_target(0, &g) == TG_BAD_INPUT ? 0 : 1;
}
