/*
 * msp.h - C interface for the matrix subspace projection toolkit.
 *
 * The library trains MLP autoencoders whose latent space is factorised by a
 * learned projection matrix into a labelled-attribute part and a residual
 * part, supports attribute manipulation and conditional generation, and
 * evaluates disentanglement on a procedural sprite dataset.
 *
 * All functions return msp_status; MSP_OK is 0. On failure a thread-local
 * message is available via msp_last_error(). Handles are opaque and must be
 * released with their matching close function.
 */
#ifndef MSP_H
#define MSP_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef MSP_API
#if defined(_WIN32)
#define MSP_API
#else
#define MSP_API __attribute__((visibility("default")))
#endif
#endif

typedef enum msp_status {
    MSP_OK = 0,
    MSP_ERR_IO = 1,                /* file missing/unreadable/unwritable */
    MSP_ERR_ARGUMENT = 2,          /* bad argument or spec string */
    MSP_ERR_UNSUPPORTED_MODE = 3,  /* operation needs a generative (VAE) model */
    MSP_ERR_SHAPE = 4,             /* tensor/matrix dimension mismatch */
    MSP_ERR_CONTRACT = 5,          /* precondition violated */
    MSP_ERR_DEGENERATE_MATRIX = 6, /* projection matrix numerically rank-deficient */
    MSP_ERR_INPUT = 7,             /* invalid configuration or dataset */
    MSP_ERR_DIVERGED = 8,          /* training produced a non-finite loss */
    MSP_ERR_UNEXTRACTABLE = 9,     /* image has no recognisable foreground */
    MSP_ERR_INTERNAL = 10
} msp_status;

/* Name of a status code, e.g. "MSP_ERR_SHAPE". Never NULL. */
MSP_API const char* msp_status_name(msp_status s);

/* Message of the most recent failure on this thread. Never NULL. */
MSP_API const char* msp_last_error(void);

/* Number of labelled attributes of the sprite domain (shape, size, red,
 * green, halfx, halfy). */
#define MSP_ATTR_COUNT 6

/* ------------------------------------------------------------------ */
/* Dataset generation                                                  */
/* ------------------------------------------------------------------ */

typedef struct msp_dataset_config {
    uint64_t count;             /* number of samples */
    uint64_t seed;
    double p_red_given_circle;  /* P(red=1 | shape=circle) */
    double p_red_given_square;  /* P(red=1 | shape=square) */
    int eval_uniform;           /* 0: train split, 1: cycle all 64 combos */
    /* Held-out attribute combinations excluded from the train split.
     * held_out points at held_out_count rows of MSP_ATTR_COUNT bytes (0/1).
     * Leave use_default_held_out nonzero to use the built-in set
     * (circle x large x green, all red/half variants). */
    int use_default_held_out;
    const uint8_t* held_out;
    uint64_t held_out_count;
} msp_dataset_config;

MSP_API void msp_dataset_config_init(msp_dataset_config* cfg);

/* Writes <out_dir>/sample_NNNNNN.ppm, labels.csv and manifest.txt.
 * Byte-identical output for identical configs. */
MSP_API msp_status msp_generate_dataset(const msp_dataset_config* cfg,
                                        const char* out_dir);

/* ------------------------------------------------------------------ */
/* Training                                                            */
/* ------------------------------------------------------------------ */

typedef struct msp_train_config {
    int kind;              /* 0: plain autoencoder, 1: variational */
    uint32_t latent_dim;   /* m, must exceed attr_count */
    uint32_t image_h, image_w, image_c;
    uint32_t attr_count;   /* k */
    double learning_rate;
    uint32_t batch_size;
    uint32_t epochs;
    int alpha_auto;        /* nonzero: alpha = h*w*c / (k + m) */
    double alpha;          /* used when alpha_auto is zero */
    double kl_weight;      /* VAE only */
    uint64_t seed;
} msp_train_config;

MSP_API void msp_train_config_init(msp_train_config* cfg);

typedef struct msp_model msp_model; /* opaque trained model */

/* Trains on a dataset directory produced by msp_generate_dataset and writes
 * the model file (and a per-epoch loss CSV when loss_csv_path is non-NULL).
 * Progress lines go through log_fn when provided. */
typedef void (*msp_log_fn)(const char* line, void* user);
MSP_API msp_status msp_train(const msp_train_config* cfg, const char* data_dir,
                             const char* model_path, const char* loss_csv_path,
                             msp_log_fn log_fn, void* log_user);

MSP_API msp_status msp_model_open(const char* path, msp_model** out);
MSP_API void msp_model_close(msp_model* model);
MSP_API msp_status msp_model_config(const msp_model* model, msp_train_config* out);

/* Root-mean-square deviation of M*M^T from the identity. */
MSP_API msp_status msp_model_orthogonality(const msp_model* model, double* score);

/* ------------------------------------------------------------------ */
/* Images and manipulation                                             */
/* ------------------------------------------------------------------ */

/* Analytic attribute extraction from a PPM file. bits_out receives
 * MSP_ATTR_COUNT values in {0,1}. Fails with MSP_ERR_UNEXTRACTABLE when the
 * image has no foreground. */
MSP_API msp_status msp_extract_file(const char* ppm_path,
                                    uint8_t bits_out[MSP_ATTR_COUNT]);

/* Projects the image's latent code onto the attribute subspace; y_out
 * receives attr_count raw (unthresholded) values. */
MSP_API msp_status msp_project_file(const msp_model* model, const char* ppm_path,
                                    double* y_out);

/* Re-encodes in_ppm, replaces its attribute projection with y_target
 * (attr_count entries) and decodes to out_ppm. */
MSP_API msp_status msp_manipulate_file(const msp_model* model, const char* in_ppm,
                                       const double* y_target, const char* out_ppm);

/* Conditional generation: decodes the target attributes combined with a
 * seeded random residual. Requires a variational model. */
MSP_API msp_status msp_generate_file(const msp_model* model, const double* y_target,
                                     uint64_t seed, const char* out_ppm);

/* ------------------------------------------------------------------ */
/* Evaluation                                                          */
/* ------------------------------------------------------------------ */

typedef struct msp_eval_config {
    uint64_t trials_per_attribute;
    uint64_t heldout_draws;
    uint64_t seed;
    /* Thresholds are echoed into the report; they do not gate evaluation. */
    double min_change_accuracy;
    double max_drift;
    double max_reconstruction_mse;
    double min_heldout_accuracy;
    /* Timestamp recorded in the report. NULL: current time, or the
     * SOURCE_DATE_EPOCH environment variable when set. */
    const char* timestamp;
} msp_eval_config;

MSP_API void msp_eval_config_init(msp_eval_config* cfg);

/* Runs the full metric suite against an eval dataset directory and writes
 * the metrics report CSV; gram-matrix CSVs and heatmaps are written next to
 * it. Held-out combos are taken from the dataset manifest. */
MSP_API msp_status msp_evaluate(const msp_model* model, const char* data_dir,
                                const msp_eval_config* cfg, const char* report_csv);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MSP_H */
