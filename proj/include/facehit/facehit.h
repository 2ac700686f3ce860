/* C interface of the facehit library. All functions are thread-safe on
 * distinct handles; error messages are kept per thread. */
#ifndef FACEHIT_FACEHIT_H
#define FACEHIT_FACEHIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FH_API __declspec(dllexport)
#else
#define FH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status values double as process exit codes for the command-line tool. */
typedef enum fh_status {
    FH_OK = 0,
    FH_VERIFY_FAILED = 1,
    FH_PARSE_ERROR = 2,
    FH_PRECONDITION = 3,
    FH_INTERNAL = 4
} fh_status;

typedef enum fh_engine { FH_ENGINE_CUBIC = 0, FH_ENGINE_BLOSSOM = 1 } fh_engine;
typedef enum fh_format { FH_FORMAT_DOT = 0, FH_FORMAT_SVG = 1 } fh_format;

typedef struct fh_graph fh_graph;
typedef struct fh_partition fh_partition;

typedef struct fh_options {
    int32_t reference_edge; /* negative: lowest non-loop edge */
    int strict;             /* non-zero: every face must be a 3+-face */
    fh_engine engine;
} fh_options;

FH_API const char* fh_version(void);

/* Message of the last failure on this thread, or an empty string. The
 * pointer stays valid until the next failing call on the same thread. */
FH_API const char* fh_last_error(void);

/* Frees strings returned through char** out-parameters. */
FH_API void fh_string_free(char* s);

FH_API void fh_options_default(fh_options* opts);

/* Graphs */
FH_API fh_status fh_graph_parse(const char* text, fh_graph** out);
FH_API fh_status fh_graph_read_file(const char* path, fh_graph** out);
/* Rotation of vertex v is darts[offsets[v] .. offsets[v+1]), clockwise;
 * dart 2e is the u end of edge e and dart 2e+1 its v end. */
FH_API fh_status fh_graph_from_rotation(size_t n, size_t m, const int32_t* offsets, const int32_t* darts,
                                        fh_graph** out);
/* Kinds: triangulation, sparse, sparse-permissive, biconnected, odd_cycle,
 * k4_bigons, loop_attachments, multi_block_chain, odd_faces. */
FH_API fh_status fh_graph_generate(const char* kind, size_t n, uint64_t seed, fh_graph** out);
FH_API void fh_graph_free(fh_graph* g);
FH_API size_t fh_graph_num_vertices(const fh_graph* g);
FH_API size_t fh_graph_num_edges(const fh_graph* g);
FH_API size_t fh_graph_num_faces(const fh_graph* g);
FH_API fh_status fh_graph_serialize(const fh_graph* g, char** out);

/* Triangulated supergraph in which every vertex but possibly the endpoint
 * u of reference_edge is happy. Edges carry the tags "original" or
 * "added". The input must be 2-connected and free of bigons. */
FH_API fh_status fh_graph_happy_supergraph(const fh_graph* g, int32_t reference_edge, fh_graph** out);

/* Partitions */
FH_API fh_status fh_partition_compute(const fh_graph* g, const fh_options* opts, fh_partition** out);
FH_API fh_status fh_partition_parse(const char* text, fh_partition** out);
FH_API fh_status fh_partition_read_file(const char* path, fh_partition** out);
FH_API fh_status fh_partition_serialize(const fh_partition* p, char** out);
FH_API void fh_partition_free(fh_partition* p);
/* which = 1 or 2; the array lives as long as the handle. */
FH_API const int32_t* fh_partition_class(const fh_partition* p, int which, size_t* len);
FH_API const int32_t* fh_partition_cover_edges(const fh_partition* p, size_t* len);
FH_API double fh_partition_pipeline_ms(const fh_partition* p);

/* FH_OK when the partition is valid for g, FH_VERIFY_FAILED otherwise. A
 * report with one line per check is returned in either case. */
FH_API fh_status fh_verify(const fh_graph* g, const fh_partition* p, char** report);

/* Drawing of g; p may be NULL. */
FH_API fh_status fh_export(const fh_graph* g, const fh_partition* p, fh_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
