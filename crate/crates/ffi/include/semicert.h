/* C interface for the semicert engine.
 *
 * Subjects are opaque handles built from structure-spec JSON. Results come
 * back as JSON strings owned by the library; release them with
 * semicert_string_free. Status codes mirror the CLI exit codes; on any
 * non-Ok status, semicert_last_error() holds a thread-local message.
 */

#ifndef SEMICERT_H
#define SEMICERT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum SemicertStatus {
  SEMICERT_OK = 0,
  /* property false / witness not found, search complete */
  SEMICERT_NOT_FOUND_COMPLETE = 1,
  /* not found, search incomplete */
  SEMICERT_NOT_FOUND_INCOMPLETE = 2,
  SEMICERT_INPUT_ERROR = 3,
  SEMICERT_INTERNAL_ERROR = 4,
} SemicertStatus;

/* Opaque subject handle. */
typedef struct SemicertSubject SemicertSubject;

/* Last error message for this thread. Owned by the library; do not free. */
const char *semicert_last_error(void);

/* Free a string returned by this library. */
void semicert_string_free(char *s);

/* Parse a structure-spec JSON and build the subject. cap bounds
 * materialized element counts; pass 0 for the default (65536). */
SemicertStatus semicert_subject_new(const char *spec_json,
                                    uint64_t cap,
                                    SemicertSubject **out);

void semicert_subject_free(SemicertSubject *handle);

/* One-line description of the subject. Free with semicert_string_free. */
char *semicert_subject_describe(const SemicertSubject *handle);

/* Classification report as JSON. */
SemicertStatus semicert_classify(const SemicertSubject *handle, char **out);

/* Certify a property; witness_json may be NULL for search-mode properties.
 * On success *out holds the certificate JSON with its replay transcript. */
SemicertStatus semicert_certify(const SemicertSubject *handle,
                                const char *property,
                                const char *witness_json,
                                char **out);

/* Verify an externally supplied certificate JSON against the subject. */
SemicertStatus semicert_verify(const SemicertSubject *handle,
                               const char *cert_json);

/* Hasse diagram of a lattice-derived subject as DOT text. */
SemicertStatus semicert_hasse_dot(const SemicertSubject *handle, char **out);

#ifdef __cplusplus
}
#endif

#endif /* SEMICERT_H */
