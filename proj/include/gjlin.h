/* C interface to the gjlin exact linear algebra kernel.
 *
 * Matrices are opaque handles created by the parse/generate functions and
 * released with gjl_matrix_free. Every function returns a status code;
 * GJL_ABSENT is the "no such value" outcome (singular matrix, inconsistent
 * system), not a failure. On any error a thread-local message is available
 * from gjl_last_error(). Strings returned through out-parameters are heap
 * allocated and must be released with gjl_string_free.
 */
#ifndef GJLIN_H
#define GJLIN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gjl_field {
  GJL_FIELD_GF2 = 0,
  GJL_FIELD_RAT = 1,
  GJL_FIELD_REAL = 2
} gjl_field;

typedef enum gjl_status {
  GJL_OK = 0,
  GJL_ABSENT = 1,     /* singular / inconsistent: data, not failure */
  GJL_ERR_PARSE = 2,
  GJL_ERR_SHAPE = 3,
  GJL_ERR_BOUNDS = 4,
  GJL_ERR_DOMAIN = 5,
  GJL_ERR_INTERNAL = 6
} gjl_status;

typedef struct gjl_matrix gjl_matrix;

const char* gjl_last_error(void);
void gjl_string_free(char* s);
void gjl_matrix_free(gjl_matrix* m);

/* Parsing / formatting. eps configures zero detection for GJL_FIELD_REAL and
 * is ignored by the exact fields. */
gjl_status gjl_matrix_parse(const char* text, gjl_field field, double eps, gjl_matrix** out);
gjl_status gjl_vector_parse(const char* text, gjl_field field, double eps, gjl_matrix** out);
gjl_status gjl_matrix_format(const gjl_matrix* m, char** out);

size_t gjl_matrix_rows(const gjl_matrix* m);
size_t gjl_matrix_cols(const gjl_matrix* m);

/* Deterministic seeded random matrix (see README for the recipe). */
gjl_status gjl_matrix_random(gjl_field field, double eps, size_t rows, size_t cols,
                             uint64_t seed, int big_int, gjl_matrix** out);

/* Gauss-Jordan elimination. transform_out (nullable) receives P with
 * P * A = rref; op_count_out (nullable) receives the elementary-operation
 * count of the run. */
gjl_status gjl_rref(const gjl_matrix* m, gjl_matrix** rref_out, gjl_matrix** transform_out,
                    uint64_t* rank_out, uint64_t* op_count_out);

gjl_status gjl_rank(const gjl_matrix* m, uint64_t* out);
gjl_status gjl_nullity(const gjl_matrix* m, uint64_t* out);

/* Determinant as formatted field-element text. */
gjl_status gjl_det(const gjl_matrix* m, char** out, uint64_t* op_count_out);

/* GJL_ABSENT and *out = NULL when the matrix is singular. */
gjl_status gjl_inverse(const gjl_matrix* m, gjl_matrix** out, uint64_t* op_count_out);

/* Four fundamental-subspace bases as one formatted report:
 * ROWSPACE / COLSPACE / NULLSPACE / LEFTNULLSPACE sections, each a BASIS
 * block. */
gjl_status gjl_bases(const gjl_matrix* m, char** out);

/* General solution of A*x = b; b is an n x 1 matrix handle. Returns GJL_ABSENT
 * for inconsistent systems, with the formatted INCONSISTENT marker in *out. */
gjl_status gjl_solve(const gjl_matrix* a, const gjl_matrix* b, char** out,
                     uint64_t* op_count_out);

/* Solve then independently re-verify by substitution; *ok_out is 1 when every
 * check passes, and *report_out lists any failures. */
gjl_status gjl_verify(const gjl_matrix* a, const gjl_matrix* b, char** report_out, int* ok_out);

/* Benchmark harness: runs `op` on seeded random n x n matrices for each size,
 * and returns the CSV table (operation,field,n,median_seconds,op_count). */
gjl_status gjl_bench(const char* op, gjl_field field, double eps, const uint64_t* sizes,
                     size_t num_sizes, uint64_t reps, uint64_t seed, int big_int,
                     double timeout_seconds, char** csv_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GJLIN_H */
