#ifndef RELCAT_H
#define RELCAT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes. Checks that run to completion but find a violated law
// return `CheckFailed` and still produce their report.
typedef enum RelcatStatus {
  RELCAT_STATUS_OK = 0,
  RELCAT_STATUS_CHECK_FAILED = 1,
  RELCAT_STATUS_MALFORMED = 2,
  RELCAT_STATUS_NULL_POINTER = 3,
  RELCAT_STATUS_INVALID_UTF8 = 4,
  RELCAT_STATUS_INTERNAL = 5,
} RelcatStatus;

// A bicomodule together with the C-category it lives in.
typedef struct RelcatBicomodule RelcatBicomodule;

// A relation together with the C-category it lives in.
typedef struct RelcatRelation RelcatRelation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a relation document: `{"graph": {"vertices", "edges"}}` or
// `{"relation": {"base", "arrow"}}`, with an optional `"c_category"`.
//
// # Safety
// `json` must be null or a NUL-terminated string; `out` must be null or
// valid for a pointer write.
enum RelcatStatus relcat_relation_from_json(const char *json, struct RelcatRelation **out);

// Number of arrows of the relation, or 0 for a null handle.
//
// # Safety
// `rel` must be null or a live handle from this library.
size_t relcat_relation_arrows(const struct RelcatRelation *rel);

// Serializes a relation; FinSet relations include `edges` and `image`.
//
// # Safety
// `rel` must be a live handle; `out` must be valid for a pointer write.
enum RelcatStatus relcat_relation_to_json(const struct RelcatRelation *rel, char **out);

// # Safety
// `m` must be a live handle; `out` must be valid for a pointer write.
enum RelcatStatus relcat_bicomodule_to_json(const struct RelcatBicomodule *m, char **out);

// The bicomodule of a relation.
//
// # Safety
// `rel` must be a live handle; `out` must be valid for a pointer write.
enum RelcatStatus relcat_phi(const struct RelcatRelation *rel, struct RelcatBicomodule **out);

// The relation of a bicomodule.
//
// # Safety
// `m` must be a live handle; `out` must be valid for a pointer write.
enum RelcatStatus relcat_psi(const struct RelcatBicomodule *m, struct RelcatRelation **out);

// The composite relation: `lhs` first, then `rhs`.
//
// # Safety
// `lhs` and `rhs` must be live handles; `out` must be valid for a pointer
// write.
enum RelcatStatus relcat_odot(const struct RelcatRelation *lhs,
                              const struct RelcatRelation *rhs,
                              struct RelcatRelation **out);

// Checks the symmetric monoidal laws of `{"structure", "universe",
// "generators"?}`. The JSON report is written to `report` whenever the
// check ran, including when it returns `CheckFailed`.
//
// # Safety
// `json` must be a NUL-terminated string; `report` must be valid for a
// pointer write.
enum RelcatStatus relcat_check_structure(const char *json, uint64_t seed, char **report);

// Checks subgroup membership of `{"triple": {...}}`; see
// [`relcat_check_structure`] for the report convention.
//
// # Safety
// As for [`relcat_check_structure`].
enum RelcatStatus relcat_check_triple(const char *json, uint64_t seed, char **report);

// The message of the last failed call on this thread, or null. The
// pointer stays valid until the next call into the library.
const char *relcat_last_error(void);

// Library version as a static string.
const char *relcat_version(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void relcat_string_free(char *s);

// # Safety
// `rel` must be null or a handle returned by this library, not yet freed.
void relcat_relation_free(struct RelcatRelation *rel);

// # Safety
// `m` must be null or a handle returned by this library, not yet freed.
void relcat_bicomodule_free(struct RelcatBicomodule *m);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RELCAT_H */
