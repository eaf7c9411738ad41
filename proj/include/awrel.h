/*
 * awrel — exact construction, verification, normalization and classification
 * of Askey-Wilson relations for Leonard pairs.
 *
 * All functions return AWREL_OK (0) on success or a nonzero status code; a
 * human-readable message for the most recent failure on the calling thread is
 * available via awrel_last_error_message(). Objects are reached through
 * opaque handles and released with the matching *_free function. Strings
 * returned through char** out-parameters are owned by the caller and released
 * with awrel_string_free().
 *
 * Values cross the boundary as JSON text. Scalars are exact: "p/q" strings
 * for rationals, {"re": "p/q", "im": "p/q"} objects for Gaussian rationals.
 * The field argument (AWREL_FIELD_*) selects which of the two is admissible
 * on input.
 */

#ifndef AWREL_H
#define AWREL_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum awrel_status {
    AWREL_OK = 0,
    AWREL_E_DIVISION_BY_ZERO = 1,
    AWREL_E_PARSE = 2,
    AWREL_E_DIMENSION_MISMATCH = 3,
    AWREL_E_INDEX_OUT_OF_RANGE = 4,
    AWREL_E_DIAMETER_TOO_SMALL = 5,
    AWREL_E_INCONSISTENT_FORMULAS = 6,
    AWREL_E_ZERO_SCALE = 7,
    AWREL_E_UNDERDETERMINED = 8,
    AWREL_E_INCONSISTENT = 9,
    AWREL_E_DEGENERATE_PARAMETERS = 10,
    AWREL_E_NOT_COVERED = 11,
    AWREL_E_FIELD_TOO_SMALL = 12,
    AWREL_E_INVALID_SQUARE_ROOT = 13,
    AWREL_E_SINGULAR_MATRIX = 14,
    AWREL_E_INVALID_ARGUMENT = 15,
} awrel_status;

#define AWREL_FIELD_RATIONAL 0
#define AWREL_FIELD_GAUSSIAN 1

/* Relation operators */
#define AWREL_OP_DOWN 0
#define AWREL_OP_DDOWN 1
#define AWREL_OP_DOWN_DDOWN 2

typedef struct awrel_array awrel_array;   /* parameter array */
typedef struct awrel_matrix awrel_matrix; /* square matrix */
typedef struct awrel_coeffs awrel_coeffs; /* AW coefficient 8-tuple */
typedef struct awrel_map awrel_map;       /* affine map */
typedef struct awrel_spec awrel_spec;     /* family spec */

/* Message for the most recent failed call on this thread ("" if none). */
const char* awrel_last_error_message(void);
/* Short machine name ("parse_error", ...) of a status code. */
const char* awrel_status_name(awrel_status status);

void awrel_string_free(char* s);
void awrel_array_free(awrel_array* a);
void awrel_matrix_free(awrel_matrix* m);
void awrel_coeffs_free(awrel_coeffs* k);
void awrel_map_free(awrel_map* m);
void awrel_spec_free(awrel_spec* s);

/* --- JSON input/output ------------------------------------------------- */

awrel_status awrel_array_from_json(const char* text, int field, awrel_array** out);
awrel_status awrel_array_to_json(const awrel_array* a, int pretty, char** out);
awrel_status awrel_matrix_from_json(const char* text, int field, awrel_matrix** out);
awrel_status awrel_matrix_to_json(const awrel_matrix* m, int pretty, char** out);
awrel_status awrel_coeffs_from_json(const char* text, int field, awrel_coeffs** out);
awrel_status awrel_coeffs_to_json(const awrel_coeffs* k, int pretty, char** out);
awrel_status awrel_map_from_json(const char* text, int field, awrel_map** out);
awrel_status awrel_map_to_json(const awrel_map* m, int pretty, char** out);
awrel_status awrel_spec_from_json(const char* text, int field, awrel_spec** out);
awrel_status awrel_spec_to_json(const awrel_spec* s, int pretty, char** out);

/* --- Families ----------------------------------------------------------- */

awrel_status awrel_spec_generate(const awrel_spec* s, awrel_array** out);
awrel_status awrel_spec_expected_aw(const awrel_spec* s, awrel_coeffs** out);

/* --- Parameter arrays ---------------------------------------------------- */

awrel_status awrel_array_diameter(const awrel_array* a, int* out);
/* report: {"valid": bool, "violations": [...]}; valid: 1 iff no violations */
awrel_status awrel_array_validate(const awrel_array* a, int pretty, char** report,
                                  int* valid);
awrel_status awrel_array_aw(const awrel_array* a, awrel_coeffs** out);
awrel_status awrel_array_relation(const awrel_array* a, int op, awrel_array** out);
awrel_status awrel_array_affine_apply(const awrel_array* a, const awrel_map* m,
                                      awrel_array** out);
/* which: 1 or 2 */
awrel_status awrel_array_split(const awrel_array* a, int which, awrel_matrix** first,
                               awrel_matrix** second);
awrel_status awrel_array_equal(const awrel_array* a, const awrel_array* b, int* out);

/* --- Matrices ------------------------------------------------------------ */

/* pinned_beta: scalar text "p/q" to pin beta (needed when d = 2), or NULL */
awrel_status awrel_solve_aw(const awrel_matrix* a, const awrel_matrix* astar,
                            const char* pinned_beta, awrel_coeffs** out);
awrel_status awrel_aw_residuals(const awrel_matrix* a, const awrel_matrix* astar,
                                const awrel_coeffs* k, awrel_matrix** r1,
                                awrel_matrix** r2);
awrel_status awrel_matrix_is_zero(const awrel_matrix* m, int* out);
/* row = col = -1 when the matrix is zero */
awrel_status awrel_matrix_first_nonzero(const awrel_matrix* m, int* row, int* col);
awrel_status awrel_matrix_is_irreducible_tridiagonal(const awrel_matrix* m, int* out);

/* --- AW relations ---------------------------------------------------------- */

awrel_status awrel_coeffs_transform(const awrel_coeffs* k, const awrel_map* m,
                                    awrel_coeffs** out);
awrel_status awrel_coeffs_normalize(const awrel_coeffs* k, awrel_coeffs** normalized,
                                    awrel_map** translation, int* case_id,
                                    int* unique);
/* type_tag: classification label such as "krawtchouk" */
awrel_status awrel_coeffs_classify(const awrel_coeffs* k, char** type_tag,
                                   int* leonard_consistent,
                                   awrel_coeffs** normalized, awrel_map** translation,
                                   int* case_id, int* unique);
awrel_status awrel_coeffs_equal(const awrel_coeffs* a, const awrel_coeffs* b,
                                int* out);
awrel_status awrel_map_inverse(const awrel_map* m, awrel_map** out);

#ifdef __cplusplus
}
#endif

#endif /* AWREL_H */
