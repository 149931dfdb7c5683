/* The header must compile as C and the library must link from C. */
#include "ncpart/ncpart.h"

#include <stdio.h>
#include <string.h>

int main(void) {
  ncpart_context* ctx = NULL;
  char* out = NULL;
  int ranks[2] = {1, 1};
  if (ncpart_context_new(&ctx) != NCPART_OK) return 1;
  if (ncpart_decomp(ctx, "B", 2, "B1,A1", "comb", &out) != NCPART_OK) return 1;
  if (!strstr(out, "\"value\":\"2\"")) return 1;
  ncpart_string_free(out);
  if (ncpart_chains(ctx, "A", 3, 2, ranks, 2, &out) != NCPART_OK) return 1;
  ncpart_string_free(out);
  if (ncpart_decomp(ctx, "Z", 2, "A1", "group", &out) != NCPART_INVALID_ARGUMENT || out != NULL) return 1;
  if (strlen(ncpart_last_error(ctx)) == 0) return 1;
  printf("%s %s\n", ncpart_version(), ncpart_status_name(NCPART_TOO_LARGE));
  ncpart_context_free(ctx);
  return 0;
}
