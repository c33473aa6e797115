#include <stdio.h>
#include <string.h>

#include "hallgpd.h"

static int fail(const char *what) {
    const char *err = hg_last_error();
    fprintf(stderr, "%s: %s\n", what, err ? err : "(no message)");
    return 1;
}

int main(void) {
    HgAlgebra *alg = NULL;
    if (hg_algebra_new("{\"vertices\":2,\"arrows\":[[0,1]]}", 2, 1u << 22, &alg) != HG_STATUS_OK) {
        return fail("hg_algebra_new");
    }
    char *product = NULL;
    if (hg_algebra_product_json(alg, "(1,0)#0", "(0,1)#0", &product) != HG_STATUS_OK) {
        return fail("hg_algebra_product_json");
    }
    printf("%s\n", product);
    hg_string_free(product);

    char *report = NULL;
    bool passed = false;
    if (hg_algebra_verify_json(alg, "green", 3, &report, &passed) != HG_STATUS_OK || !passed) {
        return fail("hg_algebra_verify_json");
    }
    hg_string_free(report);

    if (hg_algebra_new("{\"vertices\":2}", 4, 1, &alg) != HG_STATUS_INVALID_INPUT) {
        return fail("expected invalid input");
    }
    hg_algebra_free(alg);

    HgGroupoid *sets = NULL;
    char *card = NULL;
    if (hg_groupoid_finite_sets(5, &sets) != HG_STATUS_OK || hg_groupoid_cardinality(sets, &card) != HG_STATUS_OK) {
        return fail("finite sets");
    }
    printf("%s\n", card);
    int ok = strcmp(card, "163/60") == 0;
    hg_string_free(card);
    hg_groupoid_free(sets);
    return ok ? 0 : 1;
}
