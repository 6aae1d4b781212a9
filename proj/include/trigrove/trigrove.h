/* C interface to the trigrove library. Strings returned through char** are
 * owned by the caller and released with tg_string_free. On failure the
 * functions return a nonzero status and tg_last_error() describes it. */
#ifndef TRIGROVE_H
#define TRIGROVE_H

#include <stddef.h>

#if defined(TG_BUILDING_LIBRARY)
#define TG_API __attribute__((visibility("default")))
#else
#define TG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  TG_OK = 0,
  TG_INVALID = 1,   /* well-formed input that fails validation or verification */
  TG_BAD_INPUT = 2, /* malformed input or arguments */
  TG_BUDGET = 3,    /* size beyond a search or enumeration budget */
  TG_INTERNAL = 4
} tg_status;

typedef struct tg_grove tg_grove;

typedef struct {
  size_t closing_spins;
  size_t slide_steps;
  size_t slide_spins;
  size_t search_phases;
  size_t search_spins;
  size_t exhaustive_fallbacks;
} tg_reduce_stats;

typedef void (*tg_line_fn)(const char* line, void* user);

/* Message and reason code (e.g. "invalid-grove") of the last failure on
 * this thread; empty strings after a success. */
TG_API const char* tg_last_error(void);
TG_API const char* tg_last_error_code(void);
TG_API void tg_string_free(char* s);

TG_API tg_status tg_grove_target(int n, tg_grove** out);
TG_API tg_status tg_grove_from_json(const char* text, tg_grove** out);
TG_API void tg_grove_free(tg_grove* g);
TG_API int tg_grove_size(const tg_grove* g);
TG_API tg_status tg_grove_to_json(const tg_grove* g, char** out);

/* Writes {"valid":..,"violations":[..]}; TG_INVALID when violations exist. */
TG_API tg_status tg_validate_json(const char* grove_json, char** report);

TG_API tg_status tg_grove_ast_json(const tg_grove* g, char** out);
TG_API tg_status tg_grove_diff_json(const tg_grove* g, char** out);
TG_API tg_status tg_grove_apply_spin(const tg_grove* g, int pivot_i, int pivot_j, const char* from, const char* to,
                                     tg_grove** out);
/* stats may be NULL. */
TG_API tg_status tg_grove_reduce(const tg_grove* g, int clockwise_only, char** spins_json, tg_reduce_stats* stats);
TG_API tg_status tg_grove_replay(const tg_grove* g, const char* spins_json, tg_grove** out);
TG_API tg_status tg_grove_render_svg(const tg_grove* g, int diff, char** out);
TG_API tg_status tg_diff_render_svg(const char* diff_json, char** out);

/* Calls line (if not NULL) once per grove, or per AST when asts != 0, with a
 * one-line JSON document. */
TG_API tg_status tg_enumerate(int n, int asts, tg_line_fn line, void* user, size_t* count);
TG_API tg_status tg_verify_moves(int n, size_t* nodes, size_t* edges, int* connected);
TG_API tg_status tg_verify_spins(int n, size_t* groves, int* max_distance, int* connected);
TG_API tg_status tg_move_path_json(const char* from_ast_json, const char* to_ast_json, int clockwise_only,
                                   char** out);
TG_API tg_status tg_cube_level_json(int level, int with_terms, char** out);
TG_API tg_status tg_cube_term_count(int level, size_t* count);

#ifdef __cplusplus
}
#endif

#endif
