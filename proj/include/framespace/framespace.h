/* C interface to the framespace engine.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returns an fs_status; on failure fs_last_error() describes the
 * problem (thread-local, valid until the next call on the same thread).
 * Strings handed out through char** parameters are owned by the caller and
 * released with fs_free_string. Report functions return JSON text. */
#ifndef FRAMESPACE_H
#define FRAMESPACE_H

#include <stddef.h>

#if defined(_WIN32)
#define FS_API __declspec(dllexport)
#else
#define FS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fs_status {
  FS_OK = 0,
  FS_CHECK_FAILED = 1,   /* report produced; at least one check failed */
  FS_ERR_PARSE = 2,
  FS_ERR_INVALID = 3,    /* invalid input or validation failure */
  FS_ERR_NUMERICAL = 4,  /* report (if any) holds partial results */
  FS_ERR_ORACLE_BOUND = 5,
  FS_ERR_INTERNAL = 6,
  FS_ERR_NULL_ARGUMENT = 7
} fs_status;

typedef struct fs_options {
  unsigned long long seed;
  int allow_zero_weights;
  int timings; /* adds "timings_ms" to reports */
} fs_options;

typedef struct fs_tunnel_system fs_tunnel_system;
typedef struct fs_prolif_base fs_prolif_base;
typedef struct fs_tunnel_space fs_tunnel_space;
typedef struct fs_prolif_space fs_prolif_space;

FS_API const char* fs_version(void);
FS_API const char* fs_last_error(void);
FS_API const char* fs_status_name(fs_status status);
FS_API void fs_free_string(char* text);

/* Tunnel systems and proliferative bases. */
FS_API fs_status fs_tunnel_system_parse(const char* json, fs_tunnel_system** out);
FS_API fs_status fs_tunnel_system_to_json(const fs_tunnel_system* system, char** out);
FS_API fs_status fs_tunnel_system_size(const fs_tunnel_system* system, size_t* out);
FS_API void fs_tunnel_system_free(fs_tunnel_system* system);

FS_API fs_status fs_prolif_base_parse(const char* json, fs_prolif_base** out);
FS_API fs_status fs_prolif_base_to_json(const fs_prolif_base* base, char** out);
FS_API void fs_prolif_base_free(fs_prolif_base* base);

/* Frame-spaces. */
FS_API fs_status fs_tunnel_space_build(const fs_tunnel_system* system, fs_tunnel_space** out);
FS_API fs_status fs_tunnel_space_parse(const char* json, fs_tunnel_space** out);
FS_API fs_status fs_tunnel_space_to_json(const fs_tunnel_space* space, char** out);
FS_API fs_status fs_tunnel_space_point_count(const fs_tunnel_space* space, size_t* out);
/* Closed distance between points p and q as an exact value string. */
FS_API fs_status fs_tunnel_space_distance(const fs_tunnel_space* space, size_t p, size_t q, char** out);
FS_API void fs_tunnel_space_free(fs_tunnel_space* space);

FS_API fs_status fs_prolif_space_build(const fs_prolif_base* base, fs_prolif_space** out);
FS_API fs_status fs_prolif_space_parse(const char* json, fs_prolif_space** out);
FS_API fs_status fs_prolif_space_to_json(const fs_prolif_space* space, char** out);
FS_API fs_status fs_prolif_space_point_count(const fs_prolif_space* space, size_t* out);
FS_API void fs_prolif_space_free(fs_prolif_space* space);

/* Functors and the round-trip check. ok is set to 1 on structural
 * equality; diff (optional, may be NULL) receives a JSON array of
 * differences. */
FS_API fs_status fs_functor_f(const fs_tunnel_space* space, fs_prolif_space** out);
FS_API fs_status fs_functor_g(const fs_prolif_space* space, fs_tunnel_space** out);
FS_API fs_status fs_tunnel_round_trip(const fs_tunnel_space* space, int* ok, char** diff);
FS_API fs_status fs_prolif_round_trip(const fs_prolif_space* space, int* ok, char** diff);

/* Report functions. input is JSON text; options may be NULL. */
FS_API fs_status fs_build(const char* input, const fs_options* options, char** report);
FS_API fs_status fs_points(const char* input, const fs_options* options, char** report);
FS_API fs_status fs_metric(const char* input, const fs_options* options, char** report);
FS_API fs_status fs_laplacian(const char* input, const fs_options* options, char** report);
FS_API fs_status fs_spectrum(const char* input, const fs_options* options, char** report);
FS_API fs_status fs_check_equivalence(const char* input, const fs_options* options, char** report);
FS_API fs_status fs_check_equivalence_random(size_t count, const fs_options* options, char** report);
FS_API fs_status fs_check_morphism(const char* input, const fs_options* options, char** report);
FS_API fs_status fs_check_morphism_random(size_t count, const fs_options* options, char** report);

/* Generators; each writes a tunnel system as JSON. */
FS_API fs_status fs_generate_graph(const char* graph, const char* variant, const fs_options* options,
                                   char** system);
FS_API fs_status fs_generate_interval(unsigned n, const char* variant, char** system);
FS_API fs_status fs_generate_locale(const char* frame, const char* weights, char** system);

/* Oracle comparisons; FS_CHECK_FAILED on DISAGREE. */
FS_API fs_status fs_oracle_points(const char* input, const fs_options* options, char** report);
FS_API fs_status fs_oracle_shortest_path(const char* input, const fs_options* options, char** report);
FS_API fs_status fs_oracle_nilpotent(const char* input, const fs_options* options, char** report);

#ifdef __cplusplus
}
#endif

#endif /* FRAMESPACE_H */
