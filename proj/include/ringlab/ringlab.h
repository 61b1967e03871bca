#ifndef RINGLAB_H
#define RINGLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(RINGLAB_BUILDING)
#define RL_API __attribute__((visibility("default")))
#else
#define RL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rl_ring rl_ring;
typedef struct rl_corpus rl_corpus;

typedef enum rl_status {
  RL_OK = 0,
  RL_ERR_INVALID_ARGUMENT,
  RL_ERR_SHAPE,
  RL_ERR_AXIOM,
  RL_ERR_PARSE,
  RL_ERR_IO,
  RL_ERR_INDEX_OUT_OF_RANGE,
  RL_ERR_NOT_TWO_SIDED,
  RL_ERR_NOT_IDEMPOTENT,
  RL_ERR_ORDER_CAP,
  RL_ERR_UNSUPPORTED_ORDER,
  RL_ERR_UNKNOWN_GROUP,
  RL_ERR_NOT_ENDOMORPHISM,
  RL_ERR_BAD_PARAMS,
  RL_ERR_SYNTAX,
  RL_ERR_ARITY,
  RL_ERR_UNKNOWN_NAME,
  RL_ERR_UNKNOWN_PREDICATE,
  RL_ERR_UNKNOWN_CLAIM,
  RL_ERR_UNKNOWN_SET,
  RL_ERR_NONZERO_RADICAL,
  RL_ERR_EMBEDDING_MISMATCH,
  RL_ERR_CROSS_RING,
  RL_ERR_INTERNAL
} rl_status;

typedef enum rl_render {
  RL_RENDER_INDICES = 0, /* {0, 3, 6} */
  RL_RENDER_LABELS = 1,  /* {0, 3, 6} using element labels */
  RL_RENDER_JSON = 2     /* {"set": ..., "members": [...], "labels": [...]} */
} rl_render;

/* Message for the last failed call on this thread; empty after success. */
RL_API const char* rl_last_error(void);
RL_API const char* rl_status_name(rl_status status);
/* Frees any char* returned through an out parameter. */
RL_API void rl_string_free(char* s);

RL_API void rl_set_order_cap(size_t cap);
RL_API size_t rl_get_order_cap(void);

RL_API rl_status rl_parse_normalize(const char* spec, char** out);

RL_API rl_status rl_ring_from_spec(const char* spec, rl_ring** out);
RL_API rl_status rl_ring_from_cayley_file(const char* path, rl_ring** out);
RL_API void rl_ring_free(rl_ring* ring);

RL_API size_t rl_ring_order(const rl_ring* ring);
RL_API size_t rl_ring_characteristic(const rl_ring* ring);
RL_API uint32_t rl_ring_zero(const rl_ring* ring);
RL_API uint32_t rl_ring_one(const rl_ring* ring);
RL_API rl_status rl_ring_name(const rl_ring* ring, char** out);
RL_API rl_status rl_ring_label(const rl_ring* ring, uint32_t a, char** out);

RL_API rl_status rl_ring_add(const rl_ring* ring, uint32_t a, uint32_t b, uint32_t* out);
RL_API rl_status rl_ring_mul(const rl_ring* ring, uint32_t a, uint32_t b, uint32_t* out);
RL_API rl_status rl_ring_neg(const rl_ring* ring, uint32_t a, uint32_t* out);
RL_API rl_status rl_ring_pow(const rl_ring* ring, uint32_t a, uint64_t e, uint32_t* out);
/* *is_unit is 0 for nonunits, and *out is then left unchanged. */
RL_API rl_status rl_ring_inverse(const rl_ring* ring, uint32_t a, int* is_unit, uint32_t* out);

/* set is one of units, idempotents, nilpotents, center, jacobson, delta.
 * Writes at most `capacity` sorted members to `buf` (which may be NULL when
 * capacity is 0) and the full size to *count. */
RL_API rl_status rl_ring_set_members(const rl_ring* ring, const char* set, uint32_t* buf, size_t capacity,
                                     size_t* count);
RL_API rl_status rl_ring_set_render(const rl_ring* ring, const char* set, rl_render mode, char** out);

RL_API rl_status rl_ring_classify(const rl_ring* ring, int json, char** out);
RL_API rl_status rl_ring_predicate(const rl_ring* ring, const char* name, int* holds);
RL_API rl_status rl_ring_export_cayley(const rl_ring* ring, const char* path);

RL_API rl_status rl_corpus_default(rl_corpus** out);
RL_API rl_status rl_corpus_from_file(const char* path, rl_corpus** out);
RL_API rl_status rl_corpus_add_fuzz(rl_corpus* corpus, size_t count, uint64_t seed);
RL_API void rl_corpus_free(rl_corpus* corpus);
RL_API size_t rl_corpus_size(const rl_corpus* corpus);
RL_API rl_status rl_corpus_spec(const rl_corpus* corpus, size_t i, char** out);
RL_API rl_status rl_corpus_origin(const rl_corpus* corpus, size_t i, char** out);
RL_API rl_status rl_corpus_ring(const rl_corpus* corpus, size_t i, rl_ring** out);

/* id is a claim id (C1..C23) or "all"; format is text, json, csv or markdown.
 * *any_failed is set to 1 when some claim fails. */
RL_API rl_status rl_verify(const rl_corpus* corpus, const char* id, unsigned jobs, const char* format, int color,
                           char** report, int* any_failed);

#ifdef __cplusplus
}
#endif

#endif
