#ifndef DIAGALG_H
#define DIAGALG_H

/* C interface to the diagram-algebra engine: the Brauer algebra B_r(3), the
 * BMW algebra BMW_r(q) and its quotient P_r(q), with exact arithmetic over
 * Q(q) and modular rank certification.
 *
 * Every function that produces text allocates the buffer; release it with
 * da_free_string.  On failure the output pointer is set to NULL, a nonzero
 * status is returned and da_last_error() carries a message (thread local).
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  DA_OK = 0,
  DA_ERR_ARGUMENT = 1,   /* invalid argument or unknown mode/format */
  DA_ERR_COMPUTE = 2     /* internal computation failure */
} da_status;

typedef struct da_options {
  uint64_t seed;   /* drives all prime/point selection */
  int exact;       /* nonzero: exact elimination over Q / Q(q) */
  int trials;      /* modular certification trials; 0 means the default 2 */
  int threads;     /* reserved; 0 means the library default */
} da_options;

const char* da_version(void);
const char* da_last_error(void);
void da_free_string(char* s);

/* dim End(V(n)^{tensor r}); arbitrary precision, decimal string. */
da_status da_dim_end(int n, int r, char** out);

/* Multiplicity table of V(k) in V(n)^{tensor r'}, r' <= rmax.
 * format: "tsv" or "json". */
da_status da_mult_table(int n, int rmax, const char* fmt, char** out);

/* mode is "classical" (B_r(3)) or "quantum" (BMW_r(q)) throughout. */

/* Cell Gram ranks for all cells; human-readable table. */
da_status da_simple_dims(int r, const char* mode, const da_options* opt,
                         char** out);

/* dim of the radical from the cell Gram ranks. */
da_status da_radical_dim(int r, const char* mode, const da_options* opt,
                         long* out);

/* Gram matrix of the cell module of lambda ("2,1" or "0"); exact entries.
 * format: "tsv" or "json". */
da_status da_gram(int r, const char* lambda, const char* mode,
                  const char* fmt, char** out);

/* dim of the two-sided ideal generated by Phi (classical) or Phi_q
 * (quantum); r >= 4. */
da_status da_ideal_dim(int r, const char* mode, const da_options* opt,
                       long* out);

/* dim P_r = (2r-1)!! - ideal dim. */
da_status da_p_r_dim(int r, const char* mode, const da_options* opt,
                     long* out);

/* Kernel-generation verification report.  mode here also accepts
 * "structure" (r is ignored) and "all" (classical + quantum + structure).
 * method: "ideal-closure", "cell-criterion" or "both" (classical claims
 * only).  format: "json" or "pretty".  all_pass may be NULL. */
da_status da_verify(int r, const char* mode, const char* method,
                    const char* fmt, const da_options* opt, char** out,
                    int* all_pass);

/* The exact BMW_4(q) identity suite; one line per identity. */
da_status da_identities(char** out, int* all_pass);

/* Structure constants at q = 1 against Brauer diagram composition,
 * exhaustive over basis pairs; r <= 5. */
da_status da_specialize_check(int r, char** out, int* ok);

/* Evaluate a generator word ("g1 g2^-1 e3" quantum, "s1 e2" classical;
 * "1" is the unit) and print the element, one "coefficient<TAB>diagram"
 * line per basis term. */
da_status da_eval(int r, const char* word, const char* mode, char** out);

#ifdef __cplusplus
}
#endif

#endif /* DIAGALG_H */
