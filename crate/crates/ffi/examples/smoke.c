#include <stdio.h>
#include <stdlib.h>

#include "radpoly.h"

int main(void) {
    RadpolyCatalog *cat = NULL;
    if (radpoly_catalog_by_edges(18, &cat) != RADPOLY_STATUS_OK) {
        fprintf(stderr, "%s\n", radpoly_last_error_message());
        return 1;
    }
    size_t n = 0;
    radpoly_catalog_len(cat, &n);
    printf("records: %zu\n", n);
    for (size_t i = 0; i < 3 && i < n; i++) {
        size_t len = 0;
        radpoly_catalog_record_graph6(cat, i, NULL, 0, &len);
        char *buf = malloc(len + 1);
        radpoly_catalog_record_graph6(cat, i, buf, len + 1, &len);
        printf("%s\n", buf);
        free(buf);
    }
    radpoly_catalog_free(cat);
    return 0;
}
