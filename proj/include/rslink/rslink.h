/*
 * rslink C API.
 *
 * Every object is an opaque handle created by an rsl_*_new / producer call and
 * released with the matching rsl_*_free. Fallible calls return an rsl_status;
 * on failure, rsl_last_error() gives a message for the calling thread until
 * its next failing call. Pointers returned by accessors stay valid for the
 * lifetime of the handle they came from.
 *
 * All residues are canonical integers in [0, q). Polynomials are passed as
 * ascending coefficient arrays; error positions are 0-based.
 */
#ifndef RSLINK_RSLINK_H_
#define RSLINK_RSLINK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RSLINK_BUILDING)
#    define RSL_API __declspec(dllexport)
#  else
#    define RSL_API __declspec(dllimport)
#  endif
#else
#  define RSL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rsl_status {
  RSL_OK = 0,
  RSL_ERR_INVALID_ARGUMENT = 1,
  RSL_ERR_DIVISION_BY_ZERO = 2,
  RSL_ERR_FIELD_MISMATCH = 3,
  RSL_ERR_PARSE = 4,
  RSL_ERR_NO_SOLUTION = 5,
  RSL_ERR_INTERNAL = 6
} rsl_status;

typedef enum rsl_method {
  RSL_METHOD_WB = 0,
  RSL_METHOD_VIRS = 1,
  RSL_METHOD_MGS = 2
} rsl_method;

#define RSL_METHOD_BIT(m) (1u << (unsigned)(m))

typedef enum rsl_matrix_kind {
  RSL_MATRIX_WB = 0,   /* n x (2(n-tau0)-k+1) Welch-Berlekamp system */
  RSL_MATRIX_A = 1,    /* sn x N interleaved Welch-Berlekamp system */
  RSL_MATRIX_BBAR = 2, /* sn x N modified GS interpolation system */
  RSL_MATRIX_B = 3     /* Bbar with columns scaled into the A unknowns */
} rsl_matrix_kind;

typedef struct rsl_field rsl_field;
typedef struct rsl_code rsl_code;
typedef struct rsl_word rsl_word;
typedef struct rsl_outcome rsl_outcome;
typedef struct rsl_bipoly rsl_bipoly;
typedef struct rsl_matrix rsl_matrix;
typedef struct rsl_text rsl_text;

RSL_API const char* rsl_version(void);
RSL_API const char* rsl_last_error(void);
RSL_API const char* rsl_status_string(rsl_status status);
RSL_API void rsl_string_free(char* s);

/* Fields. alpha == 0 selects the smallest primitive element. */
RSL_API rsl_status rsl_field_new(uint32_t q, uint32_t alpha, rsl_field** out);
RSL_API void rsl_field_free(rsl_field* f);
RSL_API uint32_t rsl_field_q(const rsl_field* f);
RSL_API uint32_t rsl_field_primitive(const rsl_field* f);
RSL_API rsl_status rsl_field_inverse(const rsl_field* f, uint32_t a, uint32_t* out);

/* RS codes. locators == NULL selects alpha^0 .. alpha^(n-1). */
RSL_API rsl_status rsl_code_new(const rsl_field* f, size_t n, size_t k, const uint32_t* locators,
                                rsl_code** out);
RSL_API void rsl_code_free(rsl_code* c);
RSL_API size_t rsl_code_n(const rsl_code* c);
RSL_API size_t rsl_code_k(const rsl_code* c);
RSL_API const uint32_t* rsl_code_locators(const rsl_code* c);

/* Words. */
RSL_API rsl_status rsl_word_new(const rsl_field* f, const uint32_t* symbols, size_t len,
                                rsl_word** out);
RSL_API void rsl_word_free(rsl_word* w);
RSL_API size_t rsl_word_length(const rsl_word* w);
RSL_API const uint32_t* rsl_word_data(const rsl_word* w);

RSL_API rsl_status rsl_encode(const rsl_code* c, const uint32_t* f, size_t f_len, rsl_word** out);
RSL_API rsl_status rsl_corrupt(const rsl_word* c, const rsl_word* e, rsl_word** out);
RSL_API rsl_status rsl_power_word(const rsl_word* w, unsigned i, rsl_word** out);
RSL_API rsl_status rsl_random_error(const rsl_field* f, size_t n, size_t weight, uint64_t seed,
                                    rsl_word** out);
RSL_API rsl_status rsl_hamming_distance(const rsl_word* a, const rsl_word* b, size_t* out);

/* Text format: optional '#' comment lines, then q, then the residues. */
RSL_API rsl_status rsl_text_parse(const char* text, rsl_text** out);
RSL_API void rsl_text_free(rsl_text* t);
RSL_API uint32_t rsl_text_q(const rsl_text* t);
RSL_API size_t rsl_text_length(const rsl_text* t);
RSL_API const uint32_t* rsl_text_values(const rsl_text* t);
/* Value of a `# rslink key=value` entry, or NULL. */
RSL_API const char* rsl_text_meta(const rsl_text* t, const char* key);
/* meta is a space-separated "key=value" list or NULL; *out is freed with rsl_string_free. */
RSL_API rsl_status rsl_text_format(uint32_t q, const uint32_t* values, size_t len, const char* meta,
                                   char** out);

/* Decoding radii. */
RSL_API rsl_status rsl_wb_radius(size_t n, size_t k, size_t* out);
RSL_API rsl_status rsl_virs_radius(size_t n, size_t k, size_t s, size_t* out);

/* Decoders. A decoding failure is not an error: the call returns RSL_OK and
 * rsl_outcome_success() reports 0. s is ignored by RSL_METHOD_WB. */
RSL_API rsl_status rsl_decode(const rsl_code* c, const rsl_word* r, rsl_method method, size_t s,
                              rsl_outcome** out);
/* Guruswami-Sudan list-1 decode (ell must be 1): interpolates with
 * multiplicity s at radius tau and recovers f from Q^(0) and Q^(1). */
RSL_API rsl_status rsl_decode_gs(const rsl_code* c, const rsl_word* r, size_t s, size_t tau,
                                 rsl_outcome** out);
RSL_API void rsl_outcome_free(rsl_outcome* o);
RSL_API int rsl_outcome_success(const rsl_outcome* o);
RSL_API const char* rsl_outcome_failure(const rsl_outcome* o);
RSL_API size_t rsl_outcome_radius(const rsl_outcome* o);
RSL_API size_t rsl_outcome_nullspace_dim(const rsl_outcome* o);
RSL_API const uint32_t* rsl_outcome_info(const rsl_outcome* o, size_t* len);
RSL_API const uint32_t* rsl_outcome_locator(const rsl_outcome* o, size_t* len);
RSL_API const uint32_t* rsl_outcome_corrected(const rsl_outcome* o, size_t* len);
RSL_API const size_t* rsl_outcome_error_positions(const rsl_outcome* o, size_t* len);

/* Bivariate interpolants. */
RSL_API rsl_status rsl_gs_count(size_t n, size_t k, size_t ell, size_t s, size_t tau, int* valid,
                                size_t* unknowns, size_t* constraints);
RSL_API rsl_status rsl_gs_interpolate(const rsl_code* c, const rsl_word* r, size_t ell, size_t s,
                                      size_t tau, rsl_bipoly** out);
RSL_API rsl_status rsl_key_equation_check(const rsl_bipoly* q, const rsl_code* c, const rsl_word* r,
                                          size_t ell, size_t s, size_t tau, int* holds);
/* RSL_ERR_NO_SOLUTION when the system has no solution with nonzero Qbar^(s). */
RSL_API rsl_status rsl_mgs_interpolate(const rsl_code* c, const rsl_word* r, size_t s,
                                       rsl_bipoly** out);
RSL_API void rsl_bipoly_free(rsl_bipoly* q);
/* -1 for the zero polynomial. */
RSL_API int rsl_bipoly_ydeg(const rsl_bipoly* q);
RSL_API const uint32_t* rsl_bipoly_component(const rsl_bipoly* q, size_t t, size_t* len);
RSL_API rsl_status rsl_multiplicity_at(const rsl_bipoly* q, uint32_t x0, uint32_t y0,
                                       unsigned* out);

/* Linear systems. tau is ignored for RSL_MATRIX_WB. */
RSL_API rsl_status rsl_build_matrix(const rsl_code* c, const rsl_word* r, rsl_matrix_kind kind,
                                    size_t s, size_t tau, rsl_matrix** out);
RSL_API void rsl_matrix_free(rsl_matrix* m);
RSL_API size_t rsl_matrix_rows(const rsl_matrix* m);
RSL_API size_t rsl_matrix_cols(const rsl_matrix* m);
/* Row-major entries. */
RSL_API const uint32_t* rsl_matrix_data(const rsl_matrix* m);
RSL_API size_t rsl_matrix_rank(const rsl_matrix* m);

typedef struct rsl_equiv_result {
  int equivalent;
  int row_spaces_equal;
  size_t dim_a;
  size_t dim_bbar;
  size_t rank_a;
  size_t rank_bbar;
} rsl_equiv_result;

/* Compares the solution spaces of A and Bbar at radius tau. */
RSL_API rsl_status rsl_equivalence(const rsl_code* c, const rsl_word* r, size_t s, size_t tau,
                                   rsl_equiv_result* out);

typedef struct rsl_mc_config {
  uint32_t q;
  uint32_t alpha; /* 0: smallest primitive element */
  size_t n;
  size_t k;
  size_t s;
  const size_t* weights;
  size_t num_weights;
  size_t trials;
  uint64_t seed;
  unsigned methods; /* OR of RSL_METHOD_BIT(...) */
  unsigned threads;
} rsl_mc_config;

/* CSV summary, freed with rsl_string_free. */
RSL_API rsl_status rsl_montecarlo(const rsl_mc_config* cfg, char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* RSLINK_RSLINK_H_ */
