/* Colors C5 through the C API and checks the result. */
#include <stdio.h>
#include "strongedge.h"

int main(void) {
    const uint32_t us[] = {0, 1, 2, 3, 4};
    const uint32_t vs[] = {1, 2, 3, 4, 0};
    SeGraph *g = NULL;
    SeColoring *c = NULL;
    size_t k = 0, chi = 0;
    bool timed_out = true, pass = false;

    if (se_graph_from_edges(5, us, vs, 5, &g) != SE_STATUS_OK) return 1;
    if (se_degeneracy(g, &k) != SE_STATUS_OK || k != 2) return 2;
    if (se_color(g, -1, &c) != SE_STATUS_OK) return 3;
    if (!se_coloring_valid(c) || se_coloring_colors_used(c) != 5) return 4;
    if (se_exact(g, 1000000, &chi, &timed_out) != SE_STATUS_OK || chi != 5 || timed_out) return 5;
    if (se_audit(g, -1, &pass) != SE_STATUS_OK || !pass) return 6;
    if (se_color(NULL, -1, &c) != SE_STATUS_NULL_POINTER) return 7;

    printf("strongedge %s: C5 uses %zu colors\n", se_version(), se_coloring_colors_used(c));
    se_coloring_free(c);
    se_graph_free(g);
    return 0;
}
