/*
 * stratifold: simple-connectivity decisions and homology for 2-stratifolds
 * given as labeled bicolored graphs.
 *
 * Every object crosses the boundary as an opaque handle owned by the caller
 * and released with the matching *_free function. Functions returning
 * sfd_status leave a thread-local message in sfd_last_error() on failure.
 * Strings returned through char** out-parameters are NUL-terminated and must
 * be released with sfd_string_free().
 */
#ifndef STRATIFOLD_STRATIFOLD_H
#define STRATIFOLD_STRATIFOLD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(STRATIFOLD_BUILDING)
#    define SFD_API __declspec(dllexport)
#  else
#    define SFD_API __declspec(dllimport)
#  endif
#else
#  define SFD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sfd_status {
  SFD_OK = 0,
  SFD_ERR_ARGUMENT = 1,      /* null pointer or out-of-range parameter */
  SFD_ERR_PARSE = 2,         /* malformed graph document */
  SFD_ERR_INVALID_GRAPH = 3, /* graph fails validation */
  SFD_ERR_PRECONDITION = 4,  /* operation undefined for this graph */
  SFD_ERR_INTERNAL = 5       /* library invariant violated */
} sfd_status;

typedef enum sfd_verdict_status {
  SFD_SIMPLY_CONNECTED = 0,
  SFD_NOT_SIMPLY_CONNECTED = 1,
  SFD_UNKNOWN = 2
} sfd_verdict_status;

typedef enum sfd_format { SFD_FORMAT_TEXT = 0, SFD_FORMAT_JSON = 1 } sfd_format;

typedef enum sfd_gen_kind { SFD_GEN_LINEAR = 0, SFD_GEN_TRIVALENT = 1, SFD_GEN_TREE = 2 } sfd_gen_kind;

typedef struct sfd_graph sfd_graph;
typedef struct sfd_verdict sfd_verdict;
typedef struct sfd_group sfd_group;
typedef struct sfd_enumeration sfd_enumeration;

typedef struct sfd_shape {
  int is_tree;
  int is_single_white;
  int is_linear;
  int is_trivalent;
} sfd_shape;

typedef struct sfd_gen_params {
  uint64_t seed;
  uint32_t max_black;   /* >= 1 */
  int64_t label_bound;  /* >= 3 */
  int64_t genus_min;
  int64_t genus_max;
  int inject_terminal_blacks;
} sfd_gen_params;

SFD_API const char* sfd_version(void);
SFD_API const char* sfd_last_error(void);
SFD_API void sfd_string_free(char* s);

/* Graphs */
SFD_API sfd_status sfd_graph_parse(const char* text, size_t length, sfd_graph** out);
SFD_API void sfd_graph_free(sfd_graph* g);
SFD_API size_t sfd_graph_white_count(const sfd_graph* g);
SFD_API size_t sfd_graph_black_count(const sfd_graph* g);
SFD_API size_t sfd_graph_edge_count(const sfd_graph* g);
SFD_API sfd_status sfd_graph_serialize(const sfd_graph* g, char** out);
SFD_API sfd_status sfd_graph_export_dot(const sfd_graph* g, char** out);
/* *ok is set to 1 when the graph is valid; the report lists violations. */
SFD_API sfd_status sfd_graph_validate(const sfd_graph* g, sfd_format format, int* ok, char** report);
SFD_API sfd_status sfd_graph_shape(const sfd_graph* g, sfd_shape* out);

/* Homology. sfd_h1 yields H1(X;Z); sfd_h1_mod yields H1(X;Z/n) as a group of
 * free rank 0 whose torsion entries are the cyclic orders. */
SFD_API sfd_status sfd_h1(const sfd_graph* g, sfd_group** out);
SFD_API sfd_status sfd_h1_mod(const sfd_graph* g, int64_t n, sfd_group** out);
SFD_API void sfd_group_free(sfd_group* group);
SFD_API int sfd_group_is_trivial(const sfd_group* group);
SFD_API uint64_t sfd_group_free_rank(const sfd_group* group);
SFD_API size_t sfd_group_torsion_count(const sfd_group* group);
/* Decimal string of the i-th invariant factor. */
SFD_API sfd_status sfd_group_torsion_at(const sfd_group* group, size_t i, char** out);
SFD_API sfd_status sfd_group_render(const sfd_group* group, sfd_format format, char** out);

SFD_API sfd_status sfd_graph_betti1(const sfd_graph* g, int64_t* out);
SFD_API sfd_status sfd_euler_char_m(const sfd_graph* g, int64_t* out);
/* Fails with SFD_ERR_PRECONDITION unless the graph is simply connected. */
SFD_API sfd_status sfd_sphere_count(const sfd_graph* g, int64_t* out);

/* Decisions */
SFD_API sfd_status sfd_decide(const sfd_graph* g, sfd_verdict** out);
SFD_API sfd_status sfd_decide_linear(const sfd_graph* g, sfd_verdict** out);
SFD_API sfd_status sfd_decide_trivalent(const sfd_graph* g, sfd_verdict** out);
SFD_API sfd_status sfd_z6_verdict(const sfd_graph* g, sfd_verdict** out);
SFD_API void sfd_verdict_free(sfd_verdict* v);
SFD_API sfd_verdict_status sfd_verdict_get_status(const sfd_verdict* v);
SFD_API int sfd_verdict_has_trace(const sfd_verdict* v);
SFD_API sfd_status sfd_verdict_render(const sfd_verdict* v, sfd_format format, int include_trace, char** out);

/* Generation */
SFD_API void sfd_gen_params_default(sfd_gen_params* p);
SFD_API sfd_status sfd_generate(sfd_gen_kind kind, const sfd_gen_params* p, sfd_graph** out);
/* max_black <= 8 */
SFD_API sfd_status sfd_enumerate_trivalent(uint32_t max_black, sfd_enumeration** out);
SFD_API size_t sfd_enumeration_size(const sfd_enumeration* e);
/* Borrowed pointer, valid until sfd_enumeration_free. */
SFD_API const sfd_graph* sfd_enumeration_at(const sfd_enumeration* e, size_t i);
SFD_API void sfd_enumeration_free(sfd_enumeration* e);

#ifdef __cplusplus
}
#endif

#endif /* STRATIFOLD_STRATIFOLD_H */
