/* dgcycle: degree-conditioned digraph cycle toolkit.
 *
 * C API over the core library: digraph (de)serialization, family
 * generation and recognition, cycle queries, and theorem sweeps. All
 * digraph handles are opaque and immutable; free them with dgc_free.
 */
#ifndef DGCYCLE_H
#define DGCYCLE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dgc_digraph dgc_digraph;

/* Message for the most recent failure on this thread. */
const char* dgc_last_error(void);

/* 0 on success, nonzero on failure. */
int dgc_decode(const char* text, dgc_digraph** out);

/* Family spec strings, e.g. "hnn:n=3,cross=full", "bnn:n=4,k=2", "q:k=5",
 * "kbs:p=3,q=4", "join1:n=3", "h2n:n=4,prime", "h6p", "h6pp", "h6ppp",
 * "hn11:n=3,orient=in,inner=sample", "kn:n=5". Free parameters left
 * unspecified are drawn deterministically from the seed. */
int dgc_generate(const char* family_spec, uint64_t seed, dgc_digraph** out);

void dgc_free(dgc_digraph* d);
int dgc_order(const dgc_digraph* d);

/* Returned strings are malloc'd; release with dgc_string_free. NULL on
 * failure. */
char* dgc_encode(const dgc_digraph* d);
char* dgc_dot(const dgc_digraph* d);
/* One recognized family per line ("bnn(n=3, k=0)"); empty string if none. */
char* dgc_classify(const dgc_digraph* d);
void dgc_string_free(char* s);

/* Predicates: 1 = yes, 0 = no, -1 = error. */
int dgc_has_cycle(const dgc_digraph* d, int k);
int dgc_hamiltonian(const dgc_digraph* d);
int dgc_pre_hamiltonian(const dgc_digraph* d);
int dgc_pancyclic(const dgc_digraph* d);
int dgc_strong(const dgc_digraph* d);
int dgc_meets_hypotheses(const dgc_digraph* d);

typedef struct {
  int p;
  int exhaustive;       /* 1 = full scan (p in {5,6}), 0 = random (p in [5,8]) */
  uint64_t seed;        /* random mode */
  uint64_t trials;      /* random mode */
  double arc_prob;      /* random mode; <= 0 selects the default 0.75 */
  int workers;          /* 0 = available parallelism */
  const char* theorems; /* NULL or "all", "43i", "43ii", "51", "l34" */
} dgc_verify_options;

/* Runs a theorem sweep. On success returns 0, stores the rendered report in
 * *report (dgc_string_free) and the violation count in *violations. */
int dgc_verify(const dgc_verify_options* options, char** report,
               uint64_t* violations);

#ifdef __cplusplus
}
#endif

#endif /* DGCYCLE_H */
