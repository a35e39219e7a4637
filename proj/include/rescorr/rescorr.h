#ifndef RESCORR_RESCORR_H
#define RESCORR_RESCORR_H

/* C interface to the residual correction library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an rc_status; on failure the message is
 * available from rc_last_error() on the same thread until the next call.
 * Strings returned through char** out-parameters are owned by the caller and
 * released with rc_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(RESCORR_BUILDING_LIBRARY)
#define RC_API __attribute__((visibility("default")))
#else
#define RC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rc_status {
    RC_OK = 0,
    RC_ERR_DIMENSION = 1,
    RC_ERR_CONTRACT = 2,
    RC_ERR_STATE = 3,
    RC_ERR_SCHEMA = 4,
    RC_ERR_PARSE = 5,
    RC_ERR_CONFIG = 6,
    RC_ERR_IO = 7,
    RC_ERR_DECOMPOSITION = 8,
    RC_ERR_NUMERIC = 9,
    RC_ERR_COMPATIBILITY = 10,
    RC_ERR_KIND = 11,
    RC_ERR_AUDIT = 12,
    RC_ERR_INTERRUPTED = 13,
    RC_ERR_INVALID_ARGUMENT = 50,
    RC_ERR_INTERNAL = 99
} rc_status;

typedef struct rc_config rc_config;
typedef struct rc_table rc_table;
typedef struct rc_model rc_model;

RC_API const char* rc_version(void);
RC_API const char* rc_status_name(rc_status status);
RC_API const char* rc_last_error(void);
RC_API void rc_string_free(char* s);

/* ---- configuration ---- */

RC_API rc_status rc_config_load(const char* path, rc_config** out);
/* base_dir (nullable) anchors relative paths. */
RC_API rc_status rc_config_parse(const char* json_text, const char* base_dir, rc_config** out);
RC_API void rc_config_free(rc_config* cfg);
/* Replaces the global seed and every seed derived from it. */
RC_API rc_status rc_config_set_seed(rc_config* cfg, uint64_t seed);
/* "global" or "twostep". */
RC_API rc_status rc_config_set_mode(rc_config* cfg, const char* mode);
RC_API rc_status rc_config_set_threads(rc_config* cfg, size_t threads);
/* Aborts training with RC_ERR_INTERRUPTED after n epochs (0 disables). */
RC_API rc_status rc_config_set_interrupt_after(rc_config* cfg, size_t epochs);
/* Resolved configuration including derived seeds, as JSON. */
RC_API rc_status rc_config_echo(const rc_config* cfg, char** out_json);
/* Resolved path for key "source", "target", "model", "transformed" or
 * "run_dir"; *out is NULL when the config does not set it. */
RC_API rc_status rc_config_path(const rc_config* cfg, const char* key, char** out);
RC_API rc_status rc_config_mode(const rc_config* cfg, char** out);

/* ---- event tables ---- */

/* format: "csv", "binary" or NULL to infer from the extension. With a
 * config the columns are checked against its schema. */
RC_API rc_status rc_table_read(const char* path, const char* format, const rc_config* cfg, rc_table** out);
RC_API rc_status rc_table_write(const rc_table* table, const char* path, const char* format);
/* Row-major n x d values under the config's schema. */
RC_API rc_status rc_table_create(const rc_config* cfg, const double* data, size_t n, size_t d, rc_table** out);
RC_API void rc_table_free(rc_table* table);
RC_API rc_status rc_table_shape(const rc_table* table, size_t* n, size_t* d);
/* Copies the row-major values into out, which holds at least n*d entries. */
RC_API rc_status rc_table_copy(const rc_table* table, double* out, size_t capacity);
/* "source", "target" or "transformed". */
RC_API rc_status rc_table_provenance(const rc_table* table, char** out);

RC_API rc_status rc_generate_toy(const rc_config* cfg, rc_table** source, rc_table** target);

/* ---- models ---- */

/* Trains in the config's mode. checkpoint_path may be NULL; with resume != 0
 * an existing checkpoint is continued. log_jsonl and summary_json may be
 * NULL. */
RC_API rc_status rc_train(const rc_config* cfg, const rc_table* source, const rc_table* target,
                          const char* checkpoint_path, int resume, rc_model** out, char** log_jsonl,
                          char** summary_json);
/* Untrained global model: standardization fitted on source, zero output
 * layer, so it maps every table to itself. */
RC_API rc_status rc_model_init(const rc_config* cfg, const rc_table* source, rc_model** out);
/* expected_kind: "global", "twostep" or NULL for either. */
RC_API rc_status rc_model_load(const char* path, const char* expected_kind, rc_model** out);
RC_API rc_status rc_model_save(const rc_model* model, const char* path);
RC_API void rc_model_free(rc_model* model);
RC_API rc_status rc_model_kind(const rc_model* model, char** out);
/* audit_json (nullable) receives the per-feature max |delta| / alpha. Returns
 * RC_ERR_AUDIT, without output, if any correction exceeds its bound. */
RC_API rc_status rc_model_transform(const rc_model* model, const rc_table* input, rc_table** out,
                                    char** audit_json);

/* ---- evaluation ---- */

/* source may be NULL. Classifier tests run when run_classifier != 0 and the
 * config defines a classifier. csv_dir (nullable) receives one CSV per panel. */
RC_API rc_status rc_evaluate(const rc_config* cfg, const rc_table* target, const rc_table* transformed,
                             const rc_table* source, int run_classifier, const char* csv_dir, char** report_json);

/* Per-feature quantile mapping of source onto target. features == NULL (or
 * n_features == 0) maps every feature. */
RC_API rc_status rc_quantile_baseline(const rc_table* source, const rc_table* target, const char* const* features,
                                      size_t n_features, int exclude_sentinels, rc_table** out);

#ifdef __cplusplus
}
#endif

#endif
