/* qcif — C API for the quantum-control interface-algebra toolkit.
 *
 * All functions return qcif_status; QCIF_OK means success. On failure the
 * context stores a human-readable message (qcif_context_error). Objects are
 * opaque handles owned by the caller and released with the matching _free.
 * Strings returned through char** are heap-allocated; release them with
 * qcif_string_free.
 */
#ifndef QCIF_H
#define QCIF_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qcif_status {
  QCIF_OK = 0,
  QCIF_ERR_INVALID_ARGUMENT = 1,
  QCIF_ERR_DIMENSION = 2,
  QCIF_ERR_NOT_HERMITIAN = 3,
  QCIF_ERR_NOT_UNITARY = 4,
  QCIF_ERR_PRECONDITION = 5,
  QCIF_ERR_PARSE = 6,
  QCIF_ERR_CAP_EXCEEDED = 7,
  QCIF_ERR_CONFIG = 8,
  QCIF_ERR_INTERNAL = 9
} qcif_status;

typedef struct qcif_context qcif_context;
typedef struct qcif_matrix qcif_matrix;
typedef struct qcif_subspace qcif_subspace;

const char* qcif_version(void);

/* ---- context: configuration + last-error storage ---- */
qcif_context* qcif_context_new(void);
void qcif_context_free(qcif_context* ctx);
const char* qcif_context_error(const qcif_context* ctx);
qcif_status qcif_context_set_member_tol(qcif_context* ctx, double tol);
qcif_status qcif_context_set_rank_tol(qcif_context* ctx, double tol);
qcif_status qcif_context_set_cap(qcif_context* ctx, int cap);
qcif_status qcif_context_set_seed(qcif_context* ctx, uint64_t seed);

void qcif_string_free(char* s);

/* ---- dense Hermitian/complex matrices ---- */
/* re/im are row-major dim*dim arrays; im may be NULL. hermitian != 0 validates
 * conjugate symmetry at tolerance 1e-12. */
qcif_status qcif_matrix_new(qcif_context* ctx, int dim, const double* re, const double* im,
                            int hermitian, qcif_matrix** out);
qcif_status qcif_matrix_from_json(qcif_context* ctx, const char* json, int hermitian,
                                  qcif_matrix** out);
qcif_status qcif_matrix_to_json(qcif_context* ctx, const qcif_matrix* m, char** out_json);
int qcif_matrix_dim(const qcif_matrix* m);
qcif_status qcif_matrix_get(const qcif_matrix* m, double* re, double* im);
void qcif_matrix_free(qcif_matrix* m);

qcif_status qcif_matrix_expm(qcif_context* ctx, const qcif_matrix* h, double t,
                             qcif_matrix** out);
qcif_status qcif_matrix_tensor(qcif_context* ctx, const qcif_matrix* x, const qcif_matrix* y,
                               qcif_matrix** out);
qcif_status qcif_matrix_traceless_part(qcif_context* ctx, const qcif_matrix* x,
                                       qcif_matrix** out);
qcif_status qcif_hs_inner(qcif_context* ctx, const qcif_matrix* x, const qcif_matrix* y,
                          double* re, double* im);

/* ---- operator subspaces and closures ---- */
qcif_status qcif_lie_closure(qcif_context* ctx, const qcif_matrix* const* generators, int count,
                             qcif_subspace** out);
qcif_status qcif_star_closure(qcif_context* ctx, const qcif_matrix* const* generators, int count,
                              qcif_subspace** out);
int qcif_subspace_dim(const qcif_subspace* s);
int qcif_subspace_matrix_dim(const qcif_subspace* s);
qcif_status qcif_subspace_basis(qcif_context* ctx, const qcif_subspace* s, int index,
                                qcif_matrix** out);
qcif_status qcif_subspace_member(qcif_context* ctx, const qcif_subspace* s, const qcif_matrix* x,
                                 int* member, double* residual);
void qcif_subspace_free(qcif_subspace* s);

/* ---- tool-level operations: JSON in, JSON out ----
 * verdict out-params: 1 = true, 0 = false. */
qcif_status qcif_run_decompose(qcif_context* ctx, const char* h_json, int strip,
                               char** out_json);
qcif_status qcif_run_closure(qcif_context* ctx, const char* kind, const char* generators_json,
                             char** out_json);
qcif_status qcif_run_interface(qcif_context* ctx, const char* h_json, int brute_force,
                               char** out_json);
qcif_status qcif_run_check_control(qcif_context* ctx, const char* h_json, char** out_json,
                                   int* verdict);
qcif_status qcif_run_check_measure(qcif_context* ctx, const char* h_json,
                                   const char* observable_json, char** out_json, int* verdict);
qcif_status qcif_run_synthesize(qcif_context* ctx, const char* kind, const char* in_json,
                                char** out_json);
qcif_status qcif_run_simulate_measurement(qcif_context* ctx, const char* scheme_json,
                                          const char* state_json, char** out_json);
qcif_status qcif_run_compose(qcif_context* ctx, const char* op, const char* a_json,
                             const char* b_json, int m, char** out_json);
qcif_status qcif_run_chain_check(qcif_context* ctx, const char* chain_json, int cut, int slow,
                                 char** out_json, int* verdict);
qcif_status qcif_run_selftest(qcif_context* ctx, int slow, char** out_json, int* all_pass);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QCIF_H */
