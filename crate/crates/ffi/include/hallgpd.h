#ifndef HALLGPD_H
#define HALLGPD_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Outcome of a call.
typedef enum HgStatus {
  HG_STATUS_OK = 0,
  // A required pointer argument was null.
  HG_STATUS_NULL_ARGUMENT = 1,
  // Malformed text, an unknown name or an invalid configuration.
  HG_STATUS_INVALID_INPUT = 2,
  // An exhaustive enumeration would exceed the algebra's budget.
  HG_STATUS_BUDGET_EXCEEDED = 3,
  // A requested grade lies beyond the bound.
  HG_STATUS_BOUND_EXCEEDED = 4,
  // An internal invariant failed; the handle arguments are still valid.
  HG_STATUS_PANIC = 5,
} HgStatus;

// A Hall algebra over a prime field for one quiver.
typedef struct HgAlgebra HgAlgebra;

// A finite groupoid.
typedef struct HgGroupoid HgGroupoid;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message for the most recent failure on this thread, or null. The
// pointer stays valid until the next failing call on the same thread.
const char *hg_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` is null or was returned through a `char **` out parameter of this
// library and has not been freed.
void hg_string_free(char *s);

// Builds the Hall algebra of the quiver described by `quiver_json`
// (`{"vertices": n, "arrows": [[s, t], ...]}`) over `F_q`.
//
// # Safety
// `quiver_json` is a NUL-terminated string; `out` is valid for one write.
enum HgStatus hg_algebra_new(const char *quiver_json,
                             uint64_t q,
                             uint64_t budget,
                             struct HgAlgebra **out);

// Releases an algebra. Null is ignored.
//
// # Safety
// `alg` is null or a live handle from [`hg_algebra_new`].
void hg_algebra_free(struct HgAlgebra *alg);

// Number of isomorphism classes with total dimension at most `max_dim`.
//
// # Safety
// `alg` is a live handle; `out` is valid for one write.
enum HgStatus hg_algebra_class_count(const struct HgAlgebra *alg, size_t max_dim, size_t *out);

// `[left]·[right]` as a JSON object from class labels such as `"(1,0)#0"`
// to `"num/den"` coefficients.
//
// # Safety
// `alg` is a live handle; the labels are NUL-terminated; `out` is valid for one write.
enum HgStatus hg_algebra_product_json(const struct HgAlgebra *alg,
                                      const char *left,
                                      const char *right,
                                      char **out);

// Product and coproduct tables for every class within `max_dim`, as JSON.
//
// # Safety
// `alg` is a live handle; `out` is valid for one write.
enum HgStatus hg_algebra_tables_json(const struct HgAlgebra *alg, size_t max_dim, char **out);

// Runs a verification suite by its command-line name (`"green"`, `"all"`, ...)
// with the default seed and instance counts. Writes the report as JSON and
// whether every check passed.
//
// # Safety
// `alg` is a live handle; `suite` is NUL-terminated; both out pointers are
// valid for one write.
enum HgStatus hg_algebra_verify_json(const struct HgAlgebra *alg,
                                     const char *suite,
                                     size_t max_dim,
                                     char **out_report,
                                     bool *out_passed);

// Parses a groupoid document (`{"objects", "morphisms", "compose"}`).
//
// # Safety
// `json` is NUL-terminated; `out` is valid for one write.
enum HgStatus hg_groupoid_from_json(const char *json, struct HgGroupoid **out);

// The groupoid of finite sets of size at most `max` and their bijections.
//
// # Safety
// `out` is valid for one write.
enum HgStatus hg_groupoid_finite_sets(size_t max, struct HgGroupoid **out);

// Releases a groupoid. Null is ignored.
//
// # Safety
// `g` is null or a live handle from this library.
void hg_groupoid_free(struct HgGroupoid *g);

// Number of objects.
//
// # Safety
// `g` is a live handle; `out` is valid for one write.
enum HgStatus hg_groupoid_object_count(const struct HgGroupoid *g, size_t *out);

// Cardinality `Σ 1/|Aut x|` over iso classes, as `"num/den"`.
//
// # Safety
// `g` is a live handle; `out` is valid for one write.
enum HgStatus hg_groupoid_cardinality(const struct HgGroupoid *g, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HALLGPD_H */
