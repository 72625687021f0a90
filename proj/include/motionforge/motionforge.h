/*
 * motionforge C API.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an mf_status; on failure the message is
 * available from mf_last_error() on the calling thread until the next call.
 *
 * Point arrays passed in or out (mf_u32_array, subsets, colourings) are
 * 0-based. JSON and text reports are meant for people and use 1-based
 * points. Strings returned through char** are freed with mf_string_free.
 */
#ifndef MOTIONFORGE_H
#define MOTIONFORGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(MF_BUILDING_LIBRARY)
#define MF_API __attribute__((visibility("default")))
#else
#define MF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mf_status {
  MF_OK = 0,
  MF_E_DOMAIN = 1,     /* precondition failed or object does not exist */
  MF_E_PARSE = 2,      /* malformed input text */
  MF_E_CAP = 3,        /* a search cap was exhausted; the answer is unknown */
  MF_E_INVARIANT = 4,  /* an internal postcondition failed */
  MF_E_ARGUMENT = 5,   /* null pointer or out-of-range argument */
  MF_E_INTERNAL = 6
} mf_status;

typedef struct mf_group mf_group;
typedef struct mf_sequence mf_sequence;
typedef struct mf_graph mf_graph;
typedef struct mf_cc mf_cc;

typedef struct mf_config {
  uint64_t cap_elements;
  uint64_t cap_subsets;
  uint64_t cap_colorings;
  uint64_t trials;
  uint64_t seed;
  uint32_t threads;
} mf_config;

typedef struct mf_u32_array {
  uint32_t* data;
  size_t len;
} mf_u32_array;

/* Returned by mf_group_minimal_degree for the trivial group. */
#define MF_INFINITE UINT64_MAX

MF_API const char* mf_version(void);
MF_API const char* mf_last_error(void);
MF_API const char* mf_status_name(mf_status s);
MF_API void mf_config_default(mf_config* cfg);
MF_API void mf_string_free(char* s);
MF_API void mf_array_free(mf_u32_array* a);

/* ---- groups ---- */
MF_API mf_status mf_group_read(const char* path, mf_group** out); /* honours MOTIONFORGE_DATA */
MF_API mf_status mf_group_parse(const char* text, mf_group** out);
MF_API mf_status mf_group_named(const char* name, mf_group** out); /* e.g. "S5", "AGL(3,2)", "S4 wr C2" */
MF_API mf_status mf_group_affine(uint32_t d, uint32_t p, mf_group** out);
MF_API mf_status mf_group_projective(uint32_t d, uint32_t q, mf_group** out);
MF_API void mf_group_free(mf_group* g);
MF_API size_t mf_group_degree(const mf_group* g);
MF_API mf_status mf_group_order(const mf_group* g, char** out);            /* decimal */
MF_API mf_status mf_group_format(const mf_group* g, char** out);           /* generator file text */
MF_API mf_status mf_group_orbits(const mf_group* g, char** out);           /* one orbit per line */
MF_API mf_status mf_group_minimal_degree(const mf_group* g, const mf_config* cfg, uint64_t* out);
MF_API mf_status mf_group_derived_series(const mf_group* g, char** json);  /* orders, solvable, length */

/* ---- colourings ---- */
MF_API mf_status mf_setwise_stabilizer(const mf_group* g, const uint32_t* subset, size_t len, mf_group** out);
MF_API mf_status mf_coloring_stabilizer(const mf_group* g, const uint32_t* colors, size_t n, mf_group** out);
MF_API mf_status mf_coloring_report(const mf_group* g, const uint32_t* colors, size_t n, char** json);
MF_API mf_status mf_is_asymmetric(const mf_group* g, const uint32_t* colors, size_t n, int* out);
/* found = 0 means none exists (exhaustive); MF_E_CAP means the search gave up. */
MF_API mf_status mf_find_asymmetric_subset(const mf_group* g, const mf_config* cfg, int* found, mf_u32_array* out);
MF_API mf_status mf_find_solvable_subset(const mf_group* g, const mf_config* cfg, int* found, mf_u32_array* out);
MF_API mf_status mf_asy_number(const mf_group* g, const mf_config* cfg, size_t* k, mf_u32_array* witness);
MF_API mf_status mf_solv_number(const mf_group* g, const mf_config* cfg, size_t* k, mf_u32_array* witness);
MF_API mf_status mf_motion_bound(const mf_group* g, uint32_t colors, const mf_config* cfg, char** json);

/* ---- constructions ---- */
MF_API mf_status mf_affine_subset(uint32_t d, uint32_t p, mf_u32_array* out);
MF_API mf_status mf_projective_subset(uint32_t d, uint32_t q, mf_u32_array* out);
MF_API mf_status mf_mathieu_subset(const char* name, mf_u32_array* out);
/* Abelian groups: one point per orbit. Otherwise one point per nontrivial
   orbit of the last nontrivial derived subgroup. */
MF_API mf_status mf_transversal_subset(const mf_group* g, mf_u32_array* out);
MF_API mf_status mf_five_coloring(const mf_group* g, const mf_config* cfg, mf_u32_array* out);
MF_API mf_status mf_bounded_orbit_subset(const mf_group* g, const mf_config* cfg, char** json);
/* Solvability report for a subset of g: stabilizer order, derived length. */
MF_API mf_status mf_subset_report(const mf_group* g, const uint32_t* subset, size_t len, char** json);

/* ---- simple image reduction (target: a nonabelian simple quotient of g) ---- */
MF_API mf_status mf_reduce_simple(const mf_group* g, const mf_config* cfg, int structured_first, char** json);
MF_API mf_status mf_reduce_nonsolvable(const mf_group* g, const mf_config* cfg, char** json);
/* Reduction along an explicit map. images_text holds one cycle line per
 * generator of source, in the 1-based points of target. nonsolvable selects
 * the nonsolvable-image contract; otherwise the image must be simple. */
MF_API mf_status mf_reduce_map(const mf_group* source, const mf_group* target, const char* images_text,
                               const mf_config* cfg, int nonsolvable, int structured_first, char** json);

/* ---- inverse sequences ---- */
MF_API mf_status mf_sequence_read(const char* path, mf_sequence** out);
MF_API mf_status mf_sequence_diagonal(const mf_group* g, size_t k, mf_sequence** out);
MF_API void mf_sequence_free(mf_sequence* s);
MF_API size_t mf_sequence_levels(const mf_sequence* s);
MF_API mf_status mf_sequence_write(const mf_sequence* s, const char* path);
MF_API mf_status mf_sequence_validate(const mf_sequence* s, char** json);
MF_API mf_status mf_sequence_epimorphic(const mf_sequence* s, mf_sequence** out);
/* JSON-lines trace; the last line is the summary with the subset. */
MF_API mf_status mf_pipeline_run(const mf_sequence* s, const mf_config* cfg, char** jsonl);
/* Runs the pipeline on the k-fold diagonal sequence of g and decodes the colouring. */
MF_API mf_status mf_pipeline_diagonal(const mf_group* g, size_t k, const mf_config* cfg, char** json);

/* ---- rooted graphs ---- */
MF_API mf_status mf_graph_read(const char* path, mf_graph** out);
MF_API mf_status mf_graph_parse(const char* text, mf_graph** out);
MF_API void mf_graph_free(mf_graph* g);
MF_API size_t mf_graph_size(const mf_graph* g);
MF_API mf_status mf_graph_spheres(const mf_graph* g, char** json);
MF_API mf_status mf_graph_sphere_sequence(const mf_graph* g, size_t radius, mf_sequence** out);
MF_API mf_status mf_graph_special_subset(const mf_graph* g, size_t radius, const mf_config* cfg, char** json);

/* ---- coherent configurations ---- */
MF_API mf_status mf_cc_read(const char* path, mf_cc** out);
MF_API mf_status mf_cc_parse(const char* text, mf_cc** out);
MF_API mf_status mf_cc_from_group(const mf_group* g, mf_cc** out); /* orbital configuration */
MF_API mf_status mf_cc_triangular(size_t r, mf_cc** out);
MF_API mf_status mf_cc_lattice(size_t r, mf_cc** out);
MF_API void mf_cc_free(mf_cc* c);
MF_API size_t mf_cc_size(const mf_cc* c);
MF_API size_t mf_cc_rank(const mf_cc* c);
MF_API mf_status mf_cc_format(const mf_cc* c, char** out);
MF_API mf_status mf_cc_validate(const mf_cc* c, char** json);
MF_API mf_status mf_cc_motion(const mf_cc* c, const mf_config* cfg, char** json);

#ifdef __cplusplus
}
#endif

#endif /* MOTIONFORGE_H */
