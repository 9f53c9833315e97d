/* cc compose.c -I../include ../../../target/release/librelcat_ffi.a -lpthread -ldl -lm */
#include <stdio.h>
#include "relcat.h"

int main(void) {
    RelcatRelation *r = NULL, *s = NULL, *c = NULL;
    char *text = NULL;
    if (relcat_relation_from_json("{\"graph\": {\"vertices\": 3, \"edges\": [[0,1],[1,2]]}}", &r) != RELCAT_STATUS_OK ||
        relcat_relation_from_json("{\"graph\": {\"vertices\": 3, \"edges\": [[1,2],[2,0]]}}", &s) != RELCAT_STATUS_OK ||
        relcat_odot(r, s, &c) != RELCAT_STATUS_OK) {
        fprintf(stderr, "relcat: %s\n", relcat_last_error());
        return 1;
    }
    relcat_relation_to_json(c, &text);
    printf("%s\n", text);
    relcat_string_free(text);
    relcat_relation_free(r);
    relcat_relation_free(s);
    relcat_relation_free(c);
    return 0;
}
