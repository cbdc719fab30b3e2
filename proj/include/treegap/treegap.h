/*
 * treegap — spectral gaps and isoperimetric constants of edge-indexed
 * quotient diagrams of trees.
 *
 * C interface to the shared library. All objects are opaque handles or plain
 * structs of C strings; exact rational quantities cross the boundary as
 * canonical "p/q" strings (or plain integers), doubles are convenience
 * approximations. Every function returns a tg_status; on failure
 * tg_last_error() describes the problem. Strings and structs returned by the
 * library are owned by the caller and released with the matching free
 * function. Handles are not thread-safe for concurrent mutation, but
 * diagrams are immutable once built and may be shared across readers.
 */

#ifndef TREEGAP_TREEGAP_H
#define TREEGAP_TREEGAP_H

#include <stddef.h>

#if defined(_WIN32)
#define TG_API __declspec(dllexport)
#else
#define TG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tg_diagram tg_diagram;

typedef enum tg_status {
  TG_OK = 0,
  TG_E_PARSE,
  TG_E_DANGLING_PARTNER,
  TG_E_FIXED_POINT_INVOLUTION,
  TG_E_NON_POSITIVE_INDEX,
  TG_E_DISCONNECTED,
  TG_E_CYCLE_INCONSISTENT,
  TG_E_ZERO_INDEG,
  TG_E_CONVERGENCE_FAILURE,
  TG_E_DEGENERATE_FUNCTION,
  TG_E_NOT_BIPARTITE,
  TG_E_NOT_REGULAR,
  TG_E_EMPTY_OR_FULL_SET,
  TG_E_TOO_LARGE,
  TG_E_CORE_TOO_SMALL,
  TG_E_CORE_NOT_CONNECTED,
  TG_E_RAY_STRUCTURE,
  TG_E_DECAY_VIOLATED,
  TG_E_NON_INTEGER_INDEX,
  TG_E_BUDGET_EXCEEDED,
  TG_E_INVALID_ARGUMENT,
  TG_E_IO,
  TG_E_INTERNAL
} tg_status;

TG_API const char* tg_version(void);
TG_API const char* tg_status_name(tg_status status);
/* Message for the most recent failure on this thread. */
TG_API const char* tg_last_error(void);
TG_API void tg_string_free(char* s);

/* ---- diagrams and the DIAG v1 format ---------------------------------- */

TG_API tg_status tg_diagram_parse_file(const char* path, tg_diagram** out);
TG_API tg_status tg_diagram_parse_text(const char* text, tg_diagram** out);
TG_API tg_status tg_diagram_to_text(const tg_diagram* d, char** out);
TG_API tg_status tg_diagram_write_file(const tg_diagram* d, const char* path);
TG_API void tg_diagram_free(tg_diagram* d);

TG_API size_t tg_diagram_vertex_count(const tg_diagram* d);
TG_API size_t tg_diagram_edge_pair_count(const tg_diagram* d);
TG_API tg_status tg_diagram_total_volume(const tg_diagram* d, char** rational, double* approx);

typedef struct tg_regularity {
  int is_k_regular;      /* over non-boundary vertices */
  char* k;               /* rational; NULL when not regular */
  size_t exempted;       /* boundary-flagged vertices */
  char* max_indeg;       /* rational */
  char* max_index_ratio; /* rational, max over e of i(partner(e))/i(e) */
} tg_regularity;

TG_API tg_status tg_diagram_regularity(const tg_diagram* d, tg_regularity* out);
TG_API void tg_regularity_free(tg_regularity* r);

/* ---- generators -------------------------------------------------------- */

TG_API tg_status tg_generate_ray_blocks(long q, long blocks, tg_diagram** out);
TG_API tg_status tg_generate_tree_ball(long k0, long k1, long radius, tg_diagram** out);
TG_API tg_status tg_generate_random(unsigned long long seed, int vertices,
                                    int integer_indices, tg_diagram** out);

typedef struct tg_cusp {
  tg_diagram* diagram; /* release with tg_diagram_free */
  char* core;          /* space-joined core vertex ids */
  char* c;             /* certified first-edge strength, rational */
  char* d;             /* certified decay, rational */
} tg_cusp;

TG_API tg_status tg_generate_cusp(long q, long rays, long ray_length, tg_cusp* out);
/* Frees the strings only; the diagram handle stays with the caller. */
TG_API void tg_cusp_free(tg_cusp* cusp);

/* ---- spectra ------------------------------------------------------------ */

typedef struct tg_spectral {
  double lambda; /* bottom of the nonzero Laplacian spectrum */
  int iterative; /* 0 dense, 1 Lanczos with deflation */
  double residual;
  int dim;
  double deflation; /* overlap of the eigenvector with the constants */
  int converged;
} tg_spectral;

/* seed steers the iterative start vector; 0 selects the built-in default. */
TG_API tg_status tg_lambda(const tg_diagram* d, double tol, int force_iterative,
                           unsigned long long seed, tg_spectral* out);

typedef struct tg_square_split {
  char* k0;
  char* k1;
  int even_size, odd_size;
  int interior_even, interior_odd;
  int parity_split_ok;
  char* max_identity_dev; /* exact deviation in walk^2 = aI + (1-a)W, rational */
  double max_eigen_dev;   /* affine spectrum comparison on the even class */
  int pass;
} tg_square_split;

TG_API tg_status tg_square_split_check(const tg_diagram* d, double tol, tg_square_split* out);
TG_API void tg_square_split_free(tg_square_split* r);

/* ---- cuts, certificates, verdicts -------------------------------------- */

typedef struct tg_cut {
  char* members; /* space-joined vertex ids, sorted */
  char* mu_s;
  char* mu_boundary;
  char* ratio;
  double ratio_approx;
  int feasible;
} tg_cut;

/* members: vertex ids separated by spaces or commas */
TG_API tg_status tg_boundary_measure(const tg_diagram* d, const char* members, tg_cut* out);
TG_API tg_status tg_cheeger_exact(const tg_diagram* d, tg_cut* out);
TG_API tg_status tg_cheeger_sweep(const tg_diagram* d, tg_cut* out);
TG_API void tg_cut_free(tg_cut* cut);

typedef struct tg_certificate {
  char* tail_bound; /* c (1 - 1/d) */
  char* core_bound; /* least core-edge measure over mu(D); NULL if no core edge */
  char* certified;  /* the certified lower bound */
  double certified_approx;
} tg_certificate;

TG_API tg_status tg_gap_certificate(const tg_diagram* d, const char* core_members,
                                    const char* c, const char* decay, tg_certificate* out);
TG_API void tg_certificate_free(tg_certificate* cert);

typedef struct tg_family_point {
  long n;
  int dim;
  char* h_upper;
  double h_upper_approx;
  char* h_exact; /* NULL when the truncation is too large to enumerate */
  double lambda;
  char* certified; /* NULL when the family carries no certificate */
  char* witness;   /* description of the achieving cut */
  char* max_indeg;
  char* max_index_ratio;
} tg_family_point;

typedef struct tg_verdict {
  tg_family_point* points;
  size_t n_points;
  int verdict; /* 0 no-expansion-witness, 1 expansion-consistent, 2 inconclusive */
  const char* verdict_name; /* static storage */
  int hypothesis_flag;      /* boundedness quantities grew along the ladder */
  char* eps;
} tg_verdict;

/*
 * family: "ray-blocks" or "cusp". rays is ignored for ray-blocks. eps may be
 * NULL for the cusp family, in which case the weakest certificate along the
 * ladder is used. The verdict speaks about the truncation ladder only.
 */
TG_API tg_status tg_expander_verdict(const char* family, long q, long rays,
                                     const long* ladder, size_t ladder_len, const char* eps,
                                     tg_verdict* out);
TG_API void tg_verdict_free(tg_verdict* v);

/* ---- radial (Hecke) identities ----------------------------------------- */

typedef struct tg_hecke_line {
  char identity[16]; /* "delta4" or "delta2n+2" */
  long n;
  long max_radius;
  int ok;
} tg_hecke_line;

typedef struct tg_hecke_report {
  tg_hecke_line* lines;
  size_t n_lines;
  int all_ok;
} tg_hecke_report;

TG_API tg_status tg_hecke_verify(long k0, long k1, long n_max, tg_hecke_report* out);
TG_API void tg_hecke_report_free(tg_hecke_report* r);

/* ---- groupings and universal covers ------------------------------------ */

typedef struct tg_grouping {
  char* scale;    /* the minimal integralizing scale, rational */
  char* covolume; /* sum of 1/n_x, rational */
  char* rows;     /* CSV lines "vertex,order\n", header included */
} tg_grouping;

TG_API tg_status tg_finite_grouping(const tg_diagram* d, tg_grouping* out);
TG_API void tg_grouping_free(tg_grouping* g);

TG_API tg_status tg_cover_unfold(const tg_diagram* d, const char* base_id, long radius,
                                 tg_diagram** ball);
/*
 * File-based unfolding skips the measure axioms, so edge-indexed graphs with
 * no consistent measure (whose DIAG files fail validation) still unfold.
 */
TG_API tg_status tg_cover_unfold_file(const char* path, const char* base_id, long radius,
                                      tg_diagram** ball);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TREEGAP_TREEGAP_H */
