#ifndef MUSTAFIN_MUSTAFIN_H
#define MUSTAFIN_MUSTAFIN_H

/* C interface to the special-fiber classifier. Strings returned through
 * `char** out` are owned by the caller and released with mf_string_free.
 * Every function returning mf_status leaves a message for mf_last_error
 * on failure. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef MUSTAFIN_BUILDING
#    define MF_API __declspec(dllexport)
#  else
#    define MF_API __declspec(dllimport)
#  endif
#else
#  define MF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mf_status {
  MF_OK = 0,
  MF_ERR_USAGE = 1,
  MF_ERR_PARSE = 2,
  MF_ERR_DOMAIN = 3,
  MF_ERR_INVARIANT = 4,
  MF_ERR_DIMENSION = 5,
  MF_ERR_CONTRACT = 6,
  MF_ERR_INTERNAL = 7
} mf_status;

typedef enum mf_format {
  MF_FORMAT_JSON = 0,
  MF_FORMAT_TABLE = 1,
  MF_FORMAT_DOT = 2 /* graph report only */
} mf_format;

typedef struct mf_config mf_config;

MF_API const char* mf_version(void);
/* Message of the most recent failure on this thread, "" if none. */
MF_API const char* mf_last_error(void);
MF_API const char* mf_status_name(mf_status status);
MF_API void mf_string_free(char* s);

/* Configuration handles. Points are normalized on ingestion. */
MF_API mf_status mf_config_parse_json(const char* text, mf_config** out);
/* coords holds n rows of d entries, row-major. */
MF_API mf_status mf_config_create(size_t d, size_t n, const int64_t* coords,
                                  mf_config** out);
MF_API mf_status mf_config_local_model(size_t d, mf_config** out);
MF_API void mf_config_free(mf_config* cfg);
MF_API size_t mf_config_dim(const mf_config* cfg);
MF_API size_t mf_config_size(const mf_config* cfg);
/* Copies point i (d entries) into out. */
MF_API mf_status mf_config_point(const mf_config* cfg, size_t i, int64_t* out);

/* Queries. x has d entries. */
MF_API mf_status mf_contains(const mf_config* cfg, const int64_t* x, int* result);
MF_API mf_status mf_general_position(const mf_config* cfg, int* result);
MF_API mf_status mf_component_counts(const mf_config* cfg, size_t* total,
                                     size_t* primary, size_t* secondary);
/* Hilbert function of the image at a hull vertex, evaluated at u (n entries).
 * The value is written as a decimal string since it can exceed 64 bits. */
MF_API mf_status mf_hilbert(const mf_config* cfg, const int64_t* vertex,
                            const size_t* u, char** out);

/* Reports. */
MF_API mf_status mf_report_config(const mf_config* cfg, mf_format fmt, char** out);
MF_API mf_status mf_report_hull(const mf_config* cfg, mf_format fmt, char** out);
MF_API mf_status mf_report_classify(const mf_config* cfg, mf_format fmt, char** out);
MF_API mf_status mf_report_graph(const mf_config* cfg, mf_format fmt, char** out);
MF_API mf_status mf_report_gp(const mf_config* cfg, mf_format fmt, char** out);
/* all_passed may be NULL. A failing check is not an error status. */
MF_API mf_status mf_report_verify(const mf_config* cfg, uint64_t seed, mf_format fmt,
                                  char** out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* MUSTAFIN_MUSTAFIN_H */
