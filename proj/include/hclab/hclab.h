/* C interface to the Hecke-Clifford toolkit.
 *
 * Every function returns an hclab_status. On failure, hclab_last_error() returns a message
 * owned by the library (valid until the next call on the same thread). Strings returned
 * through char** outputs are JSON documents owned by the caller; release them with
 * hclab_string_free().
 */
#ifndef HCLAB_H
#define HCLAB_H

#include <stddef.h>

#if defined(_WIN32)
#define HCLAB_API __declspec(dllexport)
#else
#define HCLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hclab_status {
  HCLAB_OK = 0,
  HCLAB_ERR_INVALID_ARGUMENT = 1,
  HCLAB_ERR_DOMAIN = 2,
  HCLAB_ERR_GUARD = 3,
  HCLAB_ERR_INTERNAL = 4
} hclab_status;

typedef enum hclab_mode { HCLAB_MODE_EXACT = 0, HCLAB_MODE_FLOAT = 1 } hclab_mode;

typedef struct hclab_context hclab_context;
typedef struct hclab_module hclab_module;

HCLAB_API const char* hclab_last_error(void);
HCLAB_API void hclab_string_free(char* s);

/* prime_hint = 0 picks the default prime; HCLAB_SEED_PRIME in the environment overrides both. */
HCLAB_API hclab_status hclab_context_create(int k, hclab_mode mode, unsigned prime_hint, hclab_context** out);
HCLAB_API void hclab_context_destroy(hclab_context* ctx);
HCLAB_API int hclab_context_h(const hclab_context* ctx);
HCLAB_API hclab_status hclab_field_info(const hclab_context* ctx, char** json);

/* Modules. seq and parts are plain integer arrays. */
HCLAB_API hclab_status hclab_module_from_weight(const hclab_context* ctx, const int* seq, size_t n, hclab_module** out);
HCLAB_API hclab_status hclab_module_from_partition(const hclab_context* ctx, const int* parts, size_t len,
                                                   hclab_module** out);
HCLAB_API hclab_status hclab_module_rank2(const hclab_context* ctx, int i, int j, hclab_module** out);
HCLAB_API hclab_status hclab_module_load(const hclab_context* ctx, const char* json, hclab_module** out);
HCLAB_API void hclab_module_destroy(hclab_module* m);
HCLAB_API size_t hclab_module_dim(const hclab_module* m);
HCLAB_API hclab_status hclab_module_json(const hclab_module* m, char** json);
HCLAB_API hclab_status hclab_module_weight_spaces(const hclab_module* m, char** json);
/* Relations, irreducibility certificate and, where they apply, intertwiner and Jucys-Murphy identities.
 * *passed is 1 when every check holds. */
HCLAB_API hclab_status hclab_module_verify(const hclab_module* m, int* passed, char** json);

/* Reports. */
HCLAB_API hclab_status hclab_classify(const hclab_context* ctx, int n, int force, char** json);
HCLAB_API hclab_status hclab_weights(const hclab_context* ctx, int n, int force, char** json);
HCLAB_API hclab_status hclab_verify_all(const hclab_context* ctx, int n, int force, int* passed, char** json);
HCLAB_API hclab_status hclab_crystal(const hclab_context* ctx, const int* parts, size_t len, int i, char** json);
HCLAB_API hclab_status hclab_semisimple(const hclab_context* ctx, int n, int witness, char** json);
/* construct != 0 builds every D(xi) and uses the matrix dimensions; otherwise formula dimensions. */
HCLAB_API hclab_status hclab_sum_check(const hclab_context* ctx, int n, int construct, char** json);

#ifdef __cplusplus
}
#endif

#endif
