/* matchedkit: elementary ideals of knots from bipartite signed chord diagrams.
 *
 * C interface to the shared library. All functions return MK_OK (0) on
 * success or an MK_ERR_* code; on failure mk_last_error() describes the
 * problem (thread-local). Strings returned through char** parameters are
 * heap-allocated and must be released with mk_string_free(). Handles are
 * opaque and freed with their mk_*_free() function.
 */
#ifndef MATCHEDKIT_H
#define MATCHEDKIT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mk_chord_diagram mk_chord_diagram; /* signed chord diagram */
typedef struct mk_knot_diagram mk_knot_diagram;   /* crossing-list knot diagram */
typedef struct mk_tangle mk_tangle;               /* knot diagram with cut arcs */
typedef struct mk_ideal mk_ideal;                 /* f.g. ideal of Z[t,t^-1] */

enum {
    MK_OK = 0,
    MK_ERR_PARSE = 1,      /* malformed input text */
    MK_ERR_DOMAIN = 2,     /* precondition violated by caller data */
    MK_ERR_WORK_LIMIT = 3, /* computation exceeded the work limit */
    MK_ERR_INTERNAL = 4    /* library invariant broken (a bug) */
};

const char* mk_last_error(void);
void mk_string_free(char* s);

/* Reduction-step budget for ideal computations (default 1000000). The
 * environment variable MATCHEDKIT_WORK_LIMIT, if set, overrides the default
 * when the library is first used. */
int mk_set_work_limit(long long steps);

/* ---- chord diagrams ---- */
int mk_cd_parse(const char* text, mk_chord_diagram** out);
void mk_cd_free(mk_chord_diagram* d);
int mk_cd_serialize(const mk_chord_diagram* d, char** out);
int mk_cd_chord_count(const mk_chord_diagram* d, int* out);
int mk_cd_is_trivial_diagram(const mk_chord_diagram* d, int* out);
int mk_cd_graph_dot(const mk_chord_diagram* d, char** out);
int mk_cd_render_svg(const mk_chord_diagram* d, char** out);
int mk_cd_to_knot(const mk_chord_diagram* d, mk_knot_diagram** out);
/* ideal of minors of order (2n - k) of the stencil presentation matrix */
int mk_cd_elementary_ideal(const mk_chord_diagram* d, int k, mk_ideal** out);
int mk_cd_alexander(const mk_chord_diagram* d, char** poly_text);
/* space-separated chord ids (empty string if none) */
int mk_cd_support_chords(const mk_chord_diagram* d, char** ids);
int mk_cd_theorem1(const mk_chord_diagram* d, int k, int* trivial, int* contains_t_plus_1);
/* agree = 1 iff stencil and Wirtinger elementary ideals coincide for k = 1,2,3 */
int mk_cd_oracle_check(const mk_chord_diagram* d, int* agree);

/* ---- knot diagrams and tangles ---- */
int mk_kd_parse(const char* text, mk_knot_diagram** out);
void mk_kd_free(mk_knot_diagram* k);
int mk_kd_serialize(const mk_knot_diagram* k, char** out);
int mk_kd_crossing_count(const mk_knot_diagram* k, int* out);
int mk_kd_mirror(const mk_knot_diagram* k, mk_knot_diagram** out);
int mk_kd_elementary_ideal(const mk_knot_diagram* k, int m, mk_ideal** out);
int mk_kd_alexander(const mk_knot_diagram* k, char** poly_text);
/* arcs_csv: comma-separated arc labels b_0,...,b_k */
int mk_kd_cut(const mk_knot_diagram* k, const char* arcs_csv, mk_tangle** out);
int mk_tangle_parse(const char* text, mk_tangle** out);
void mk_tangle_free(mk_tangle* t);
int mk_tangle_serialize(const mk_tangle* t, char** out);
/* params_csv: comma-separated integers n_1,...,n_k */
int mk_tangle_duplicate(const mk_tangle* t, const char* params_csv, mk_knot_diagram** out);

/* ---- ideals ---- */
void mk_ideal_free(mk_ideal* i);
int mk_ideal_is_trivial(const mk_ideal* i, int* out);
int mk_ideal_is_zero(const mk_ideal* i, int* out);
/* poly_text in the polynomial grammar, e.g. "t^-1 - 3 + t" */
int mk_ideal_contains(const mk_ideal* i, const char* poly_text, int* out);
int mk_ideal_equal(const mk_ideal* i, const mk_ideal* j, int* out);
/* newline-separated canonical generator list */
int mk_ideal_generators(const mk_ideal* i, char** out);
int mk_ideal_basis(const mk_ideal* i, char** out);

/* ---- rational knots ---- */
/* terms as a bracketed list, e.g. "[2, -2]" */
int mk_even_cf(long long p, long long q, char** terms);
int mk_rational_diagram(long long p, long long q, mk_chord_diagram** out, char** support_id);

/* ---- catalog ---- */
/* kind is "chord", "knot" or "tangle"; payload in the matching file format */
int mk_catalog_get(const char* name, char** kind, char** payload, char** provenance);
int mk_catalog_names(char** out);

#ifdef __cplusplus
}
#endif

#endif /* MATCHEDKIT_H */
