/* Minimal C consumer of the benford-bounds ABI.
 *
 * Build (from the workspace root, after `cargo build -p benford-bounds-capi --release`):
 *
 *   cc crates/capi/examples/demo.c \
 *      -Icrates/capi/include \
 *      target/release/libbenford_bounds_capi.a -lm -o demo
 */
#include <stdio.h>

#include "benford_bounds.h"

static int check(bb_status status, const char *what) {
    if (status != BB_STATUS_OK) {
        fprintf(stderr, "%s failed: %s\n", what, bb_status_message(status));
        return 1;
    }
    return 0;
}

int main(void) {
    bb_model *model = NULL;
    if (check(bb_model_weibull(0.3, 1.0, 10, &model), "model"))
        return 1;

    bb_digit_report_t report;
    if (check(bb_digit_report(model, "1@10", 10, -1, &report), "digit report"))
        return 1;
    printf("P(leading digit 1) = %.6e (benford %.6e), |rel err| <= %.4e\n",
           report.exact_p, report.benford_p, report.certified_bound);

    bb_gaussian_bounds_t gb;
    if (check(bb_gaussian_bounds(1.0, &gb), "gaussian bounds"))
        return 1;
    printf("wrapped normal, sigma=1: KD <= %.4e, MRAE <= %.4e (m = %llu)\n",
           gb.kuiper, gb.mrae, (unsigned long long)gb.m);

    bb_wrapped *wrapped = NULL;
    if (check(bb_wrapped_new(model, &wrapped), "wrap"))
        return 1;
    bb_discrepancies meas;
    if (check(bb_wrapped_measure(wrapped, 2048, &meas), "measure"))
        return 1;
    printf("measured: range %.4e, kuiper %.4e, mrae %.4e, ks %.4e\n",
           meas.range_g, meas.kuiper, meas.mrae, meas.ks);

    int ok = meas.mrae <= report.certified_bound;
    printf("certificate %s\n", ok ? "holds" : "VIOLATED");

    bb_wrapped_free(wrapped);
    bb_model_free(model);
    return ok ? 0 : 1;
}
