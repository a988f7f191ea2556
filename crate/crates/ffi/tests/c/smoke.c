#include <stdio.h>
#include <string.h>

#include "equitor.h"

#define CHECK(cond)                                        \
    do {                                                   \
        if (!(cond)) {                                     \
            fprintf(stderr, "failed: %s\n", #cond);        \
            return 1;                                      \
        }                                                  \
    } while (0)

int main(void) {
    const uint32_t gens[] = {4, 1, 1, 5, 2, 0};
    EqtIdeal *ideal = NULL;
    CHECK(eqt_ideal_new(3, gens, 2, &ideal) == EQT_STATUS_OK);

    EqtTor *tor = NULL;
    CHECK(eqt_tor_compute(ideal, 0, &tor) == EQT_STATUS_OK);
    uint64_t b = 0;
    CHECK(eqt_tor_betti(tor, 1, 8, &b) == EQT_STATUS_OK && b == 6);

    char *table = NULL;
    CHECK(eqt_tor_betti_table_text(tor, &table) == EQT_STATUS_OK);
    CHECK(strstr(table, "total: 9 12 4") != NULL);
    eqt_string_free(table);

    uint64_t reg = 0;
    CHECK(eqt_regularity(ideal, &reg) == EQT_STATUS_OK && reg == 9);

    CHECK(eqt_tor_compute(ideal, 4, &tor) == EQT_STATUS_INVALID_CHARACTERISTIC);
    CHECK(strlen(eqt_last_error_message()) > 0);

    eqt_tor_free(tor);
    eqt_ideal_free(ideal);
    puts("ok");
    return 0;
}
