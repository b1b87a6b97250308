#ifndef IHC_IHC_H
#define IHC_IHC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define IHC_API __attribute__((visibility("default")))
#else
#define IHC_API
#endif

typedef enum ihc_status {
  IHC_OK = 0,
  IHC_ERR_INPUT = 1,
  IHC_ERR_PROPERTY = 2,
  IHC_ERR_PRECONDITION = 3,
  IHC_ERR_INTERNAL = 4
} ihc_status;

/* A weighted complex together with the perversity line of its document, if any. */
typedef struct ihc_space ihc_space;

IHC_API const char* ihc_version(void);
/* Message of the last failed call on this thread; empty when none. */
IHC_API const char* ihc_last_error(void);
/* Strings returned through `char** out` are owned by the caller. */
IHC_API void ihc_string_free(char* s);

IHC_API ihc_status ihc_space_load_text(const char* text, ihc_space** out);
IHC_API ihc_status ihc_space_load_file(const char* path, ihc_space** out);
IHC_API ihc_status ihc_space_fixture(const char* name, ihc_space** out);
/* map is "0->0,1->2,2->2"; the result carries no perversity line */
IHC_API ihc_status ihc_space_recode(const ihc_space* space, const char* map, ihc_space** out);
IHC_API void ihc_space_free(ihc_space* space);
IHC_API int ihc_space_dimension(const ihc_space* space);
IHC_API size_t ihc_space_vertex_count(const ihc_space* space);
IHC_API size_t ihc_space_stratum_count(const ihc_space* space);
/* "dim/vertex/simplex" text */
IHC_API ihc_status ihc_space_text(const ihc_space* space, char** out);

/* perversity NULL or "" picks the document's perversity line, else "zero".
   ring is "z", "q" or "zp:<p>". json selects the versioned JSON report. */
IHC_API ihc_status ihc_cohomology(const ihc_space* space, const char* perversity, const char* ring, int json,
                                  char** out);
/* tame intersection chains of the perversity */
IHC_API ihc_status ihc_tame_homology(const ihc_space* space, const char* perversity, const char* ring, int json,
                                     char** out);
/* mode: ordinary, relative, regular, dual-tame, refinement (needs recode). Each degree gets an
   iso verdict; IHC_OK is returned even when the map is not an isomorphism. */
IHC_API ihc_status ihc_compare(const ihc_space* space, const char* mode, const char* perversity, const char* ring,
                               const char* recode, int json, char** out);
/* 1 when every degree of the last successful compare on this thread was an isomorphism */
IHC_API int ihc_last_compare_iso(void);
IHC_API ihc_status ihc_strata(const ihc_space* space, int json, char** out);
IHC_API ihc_status ihc_export_complex(const ihc_space* space, char** out);
/* sparse triplet text of the degree-k blow-up differential */
IHC_API ihc_status ihc_export_differential(const ihc_space* space, int degree, char** out);

/* suite: signs, cup, cap, amalgam, closure, shift or all. Returns IHC_ERR_PROPERTY when a
   property fails; the report is still written to out. */
IHC_API ihc_status ihc_verify(const char* suite, size_t samples, unsigned long long seed, int json, char** out);

/* newline-separated fixture names */
IHC_API ihc_status ihc_fixture_names(char** out);

/* Mutation hook: drop the sign of odd permutations in the vertex normalizer. Testing only. */
IHC_API void ihc_debug_sign_flip(int on);

/* RunRequest round trip: serialize the flag set and read it back (canonical form). */
IHC_API ihc_status ihc_request_roundtrip(const char* request_json, char** out);

#ifdef __cplusplus
}
#endif

#endif
