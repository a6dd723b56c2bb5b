#ifndef MSYM_H
#define MSYM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; nonzero values double as CLI exit codes. */
typedef enum msym_status {
  MSYM_OK = 0,
  MSYM_ERR_VALIDATION = 2,
  MSYM_ERR_PRECONDITION = 3,
  MSYM_ERR_RESOURCE = 4,
  MSYM_ERR_CONSISTENCY = 5
} msym_status;

typedef struct msym_context msym_context;
typedef struct msym_form msym_form;

const char* msym_version(void);

int msym_context_create(msym_context** out);
void msym_context_destroy(msym_context* ctx);
/* Worker threads for parallel kernels; 1 forces sequential evaluation. */
int msym_set_threads(msym_context* ctx, int threads);
/* Message of the last failed call on this context ("" after success). */
const char* msym_last_error(const msym_context* ctx);

/* Runs a subcommand on a JSON request. On success *out_json holds the report;
   on failure it holds {"error": {...}} and the status is returned. The string
   must be released with msym_string_free. */
int msym_command(msym_context* ctx, const char* name, const char* request_json, char** out_json);
void msym_string_free(char* s);

/* Multiform handles. */
int msym_form_parse(msym_context* ctx, const char* json, msym_form** out);
void msym_form_destroy(msym_form* form);
int msym_form_to_json(msym_context* ctx, const msym_form* form, char** out_json);
int msym_form_project(msym_context* ctx, const msym_form* form, msym_form** out);
/* slot is 1-based. */
int msym_form_d(msym_context* ctx, const msym_form* form, int slot, msym_form** out);
int msym_form_delta_n(msym_context* ctx, const msym_form* form, msym_form** out, int* top_degree);
/* slots are 1-based; metric is "euclidean" or "minkowski". */
int msym_form_hodge(msym_context* ctx, const msym_form* form, const int* slots, size_t nslots, const char* metric,
                    msym_form** out);
int msym_form_homotopy(msym_context* ctx, const msym_form* form, msym_form** potential);
int msym_form_add(msym_context* ctx, const msym_form* a, const msym_form* b, msym_form** out);
int msym_form_is_zero(msym_context* ctx, const msym_form* form, int* out);
int msym_form_equal(msym_context* ctx, const msym_form* a, const msym_form* b, int* out);

#ifdef __cplusplus
}
#endif

#endif /* MSYM_H */
