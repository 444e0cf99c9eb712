/* Two-qutrit Grover search with entanglement tracking through the C ABI.
 *
 * Build (from the workspace root, after `cargo build --release`):
 *   cc crates/groverian-ffi/examples/demo.c \
 *      -Icrates/groverian-ffi/include \
 *      target/release/libgroverian_ffi.a -lm -o demo
 */
#include <stdio.h>
#include <stdlib.h>

#include "groverian.h"

static void check(GvStatus status, const char *what) {
    if (status != GV_STATUS_OK) {
        fprintf(stderr, "%s failed with status %d\n", what, (int)status);
        exit(1);
    }
}

int main(void) {
    GvState *uniform = NULL;
    check(gv_state_uniform(2, 3, &uniform), "gv_state_uniform");

    uint64_t iterations = 0;
    check(gv_optimal_iterations(9, 1, &iterations), "gv_optimal_iterations");
    printf("optimal iterations for N=9, r=1: %llu\n", (unsigned long long)iterations);

    GvState *state = NULL;
    check(gv_state_uniform(2, 3, &state), "gv_state_uniform");
    for (uint64_t k = 1; k <= iterations; k++) {
        GvState *next = NULL;
        check(gv_grover_iteration(state, 0, uniform, &next), "gv_grover_iteration");
        gv_state_free(state);
        state = next;

        double success = 0.0;
        check(gv_success_probability(state, 0, &success), "gv_success_probability");
        GvMeasurement m;
        check(gv_measure(state, GV_METHOD_ORACLE, &m), "gv_measure");
        double entropy = 0.0;
        check(gv_entropy_of_entanglement(state, &entropy), "gv_entropy_of_entanglement");
        printf("after iteration %llu: success = %.9f, G = %.9f, S = %.9f\n",
               (unsigned long long)k, success, m.g, entropy);
    }

    gv_state_free(state);
    gv_state_free(uniform);
    return 0;
}
