/* Exercises the public header from plain C. */
#include <stdio.h>
#include <string.h>

#include "folres/folres.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                               \
        }                                                             \
    } while (0)

int main(void) {
    folres_session* s = folres_session_create();
    folres_report* r = NULL;
    EXPECT(s != NULL);
    EXPECT(folres_command_count() == 15);
    EXPECT(strcmp(folres_command_name(0), "resolve") == 0);
    EXPECT(folres_command_name(99) == NULL);

    EXPECT(folres_run_field(s, "kupka", "P=x,Q=2*y", &r) == FOLRES_OK);
    EXPECT(strstr(folres_report_json(r), "\"trace\": \"3\"") != NULL);
    EXPECT(strcmp(folres_report_error_code(r), "") == 0);
    EXPECT(strcmp(folres_report_dot(r), "") == 0);
    folres_report_destroy(r);

    EXPECT(folres_run_field(s, "resolve", "P=y,Q=x", &r) == FOLRES_OK);
    EXPECT(strstr(folres_report_dot(r), "E0_0") != NULL);
    folres_report_destroy(r);

    EXPECT(folres_run(s, "bb", "{\"field\": \"P=x y,Q=x\"}", &r) == FOLRES_INPUT_ERROR);
    EXPECT(folres_report_status(r) == FOLRES_INPUT_ERROR);
    EXPECT(strcmp(folres_report_error_code(r), "SyntaxError") == 0);
    folres_report_destroy(r);

    EXPECT(folres_run(s, "resolve", "{not json", &r) == FOLRES_INPUT_ERROR);
    EXPECT(r != NULL);
    folres_report_destroy(r);

    EXPECT(folres_run(s, "resolve", NULL, NULL) == FOLRES_INPUT_ERROR);
    EXPECT(folres_run(NULL, "resolve", NULL, &r) == FOLRES_INPUT_ERROR);
    folres_report_destroy(r);

    EXPECT(folres_session_set_max_depth(s, 1) == FOLRES_OK);
    EXPECT(folres_session_set_max_depth(s, -4) == FOLRES_INPUT_ERROR);
    EXPECT(folres_run_field(s, "resolve", "P=y+x^2,Q=x^3", &r) == FOLRES_BUDGET_EXCEEDED);
    folres_report_destroy(r);

    /* same seed, same bytes */
    {
        folres_report* a = NULL;
        folres_report* b = NULL;
        folres_session_set_seed(s, 5);
        folres_run(s, "theta-demo", NULL, &a);
        folres_run(s, "theta-demo", NULL, &b);
        EXPECT(strcmp(folres_report_json(a), folres_report_json(b)) == 0);
        folres_report_destroy(a);
        folres_report_destroy(b);
    }

    EXPECT(strcmp(folres_status_name(FOLRES_BUDGET_EXCEEDED), "budget-exceeded") == 0);
    folres_report_destroy(NULL);
    folres_session_destroy(NULL);
    folres_session_destroy(s);

    if (failures) fprintf(stderr, "%d failure(s)\n", failures);
    else printf("capi: all checks passed\n");
    return failures ? 1 : 0;
}
