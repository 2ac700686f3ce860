#include "facehit/facehit.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "facehit/cover.hpp"
#include "facehit/happy.hpp"
#include "facehit/io.hpp"
#include "facehit/oracle.hpp"

struct fh_graph {
    facehit::GraphDocument doc;
};

struct fh_partition {
    facehit::PartitionDocument doc;
};

namespace {

using namespace facehit;

thread_local std::string last_error;

fh_status fail(fh_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

template <class Fn>
fh_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        return fail(static_cast<fh_status>(exit_code_for(e.kind())), std::string(to_string(e.kind())) + ": " + e.what());
    } catch (const std::bad_alloc&) {
        return fail(FH_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(FH_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

fh_status null_argument(const char* what) { return fail(FH_PRECONDITION, std::string("null argument: ") + what); }

PlaneGraph generate(const std::string& kind, std::size_t n, std::uint64_t seed) {
    if (kind == "triangulation") return gen_triangulation(n, seed);
    if (kind == "sparse") return gen_sparse_plane(n, seed, true);
    if (kind == "sparse-permissive") return gen_sparse_plane(n, seed, false);
    if (kind == "biconnected") return gen_biconnected(n, seed);
    if (kind == "odd_cycle") return gen_cycle(n);
    if (kind == "k4_bigons") return gen_k4_bigons(n, seed);
    if (kind == "loop_attachments") return gen_loop_attachments(n, seed);
    if (kind == "multi_block_chain") return gen_multi_block_chain(n, seed);
    if (kind == "odd_faces") return gen_odd_faces(n, seed, false);
    throw Error(ErrorKind::InvalidArgument, "unknown generator kind '" + kind + "'");
}

} // namespace

extern "C" {

const char* fh_version(void) { return "1.0.0"; }

const char* fh_last_error(void) { return last_error.c_str(); }

void fh_string_free(char* s) { std::free(s); }

void fh_options_default(fh_options* opts) {
    if (!opts) return;
    opts->reference_edge = -1;
    opts->strict = 1;
    opts->engine = FH_ENGINE_CUBIC;
}

fh_status fh_graph_parse(const char* text, fh_graph** out) {
    if (!text || !out) return null_argument("text/out");
    return guarded([&] {
        *out = new fh_graph{parse_graph(text)};
        return FH_OK;
    });
}

fh_status fh_graph_read_file(const char* path, fh_graph** out) {
    if (!path || !out) return null_argument("path/out");
    return guarded([&] {
        *out = new fh_graph{parse_graph(read_file(path))};
        return FH_OK;
    });
}

fh_status fh_graph_from_rotation(size_t n, size_t m, const int32_t* offsets, const int32_t* darts, fh_graph** out) {
    if (!offsets || !out || (!darts && m > 0)) return null_argument("offsets/darts/out");
    return guarded([&] {
        std::vector<std::vector<DartId>> rot(n);
        for (size_t v = 0; v < n; ++v) {
            if (offsets[v] < 0 || offsets[v + 1] < offsets[v])
                throw Error(ErrorKind::MalformedRotation, "offsets must be non-decreasing");
            rot[v].assign(darts + offsets[v], darts + offsets[v + 1]);
        }
        *out = new fh_graph{GraphDocument{PlaneGraph::from_rotation(n, m, rot), {}}};
        return FH_OK;
    });
}

fh_status fh_graph_generate(const char* kind, size_t n, uint64_t seed, fh_graph** out) {
    if (!kind || !out) return null_argument("kind/out");
    return guarded([&] {
        *out = new fh_graph{GraphDocument{generate(kind, n, seed), {}}};
        return FH_OK;
    });
}

void fh_graph_free(fh_graph* g) { delete g; }

size_t fh_graph_num_vertices(const fh_graph* g) { return g ? g->doc.graph.num_vertices() : 0; }
size_t fh_graph_num_edges(const fh_graph* g) { return g ? g->doc.graph.num_edges() : 0; }
size_t fh_graph_num_faces(const fh_graph* g) { return g ? g->doc.graph.num_faces() : 0; }

fh_status fh_graph_serialize(const fh_graph* g, char** out) {
    if (!g || !out) return null_argument("graph/out");
    return guarded([&] {
        *out = dup_string(write_graph(g->doc));
        return FH_OK;
    });
}

fh_status fh_graph_happy_supergraph(const fh_graph* g, int32_t reference_edge, fh_graph** out) {
    if (!g || !out) return null_argument("graph/out");
    return guarded([&] {
        const PlaneGraph& pg = g->doc.graph;
        if (reference_edge < 0 || static_cast<size_t>(reference_edge) >= pg.num_edges())
            throw Error(ErrorKind::InvalidArgument, "reference edge out of range");
        const HappySupergraph hs = build_happy_supergraph(pg, reference_edge, pg.endpoint_u(reference_edge));
        GraphDocument doc{hs.gplus, {}};
        for (char o : hs.original) doc.edge_tags.push_back(o ? "original" : "added");
        *out = new fh_graph{std::move(doc)};
        return FH_OK;
    });
}

fh_status fh_partition_compute(const fh_graph* g, const fh_options* opts, fh_partition** out) {
    if (!g || !out) return null_argument("graph/out");
    fh_options o;
    fh_options_default(&o);
    if (opts) o = *opts;
    return guarded([&] {
        const PartitionMode mode = o.strict ? PartitionMode::Strict : PartitionMode::Permissive;
        const MatchingEngine engine = o.engine == FH_ENGINE_BLOSSOM ? MatchingEngine::Blossom : MatchingEngine::Cubic;
        std::optional<EdgeId> ref;
        if (o.reference_edge >= 0) ref = o.reference_edge;
        const auto start = std::chrono::steady_clock::now();
        const VertexPartition p = partition(g->doc.graph, ref, mode, engine);
        const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
        *out = new fh_partition{make_partition_document(g->doc.graph, p, mode, took.count())};
        return FH_OK;
    });
}

fh_status fh_partition_parse(const char* text, fh_partition** out) {
    if (!text || !out) return null_argument("text/out");
    return guarded([&] {
        *out = new fh_partition{parse_partition(text)};
        return FH_OK;
    });
}

fh_status fh_partition_read_file(const char* path, fh_partition** out) {
    if (!path || !out) return null_argument("path/out");
    return guarded([&] {
        *out = new fh_partition{parse_partition(read_file(path))};
        return FH_OK;
    });
}

fh_status fh_partition_serialize(const fh_partition* p, char** out) {
    if (!p || !out) return null_argument("partition/out");
    return guarded([&] {
        *out = dup_string(write_partition(p->doc));
        return FH_OK;
    });
}

void fh_partition_free(fh_partition* p) { delete p; }

const int32_t* fh_partition_class(const fh_partition* p, int which, size_t* len) {
    if (!p || (which != 1 && which != 2)) {
        if (len) *len = 0;
        return nullptr;
    }
    const auto& v = which == 1 ? p->doc.v1 : p->doc.v2;
    if (len) *len = v.size();
    return v.data();
}

const int32_t* fh_partition_cover_edges(const fh_partition* p, size_t* len) {
    if (!p) {
        if (len) *len = 0;
        return nullptr;
    }
    if (len) *len = p->doc.h_edges.size();
    return p->doc.h_edges.data();
}

double fh_partition_pipeline_ms(const fh_partition* p) { return p ? p->doc.pipeline_ms : 0.0; }

fh_status fh_verify(const fh_graph* g, const fh_partition* p, char** report) {
    if (!g || !p) return null_argument("graph/partition");
    return guarded([&] {
        const PlaneGraph& pg = g->doc.graph;
        const PartitionDocument& d = p->doc;
        VerificationReport rep;
        auto in_range = [&](const auto& ids, std::size_t bound, const char* what) {
            CheckResult r;
            for (auto x : ids)
                if (x < 0 || static_cast<std::size_t>(x) >= bound) {
                    r = {false, std::string(what) + " id " + std::to_string(x) + " out of range", {x}};
                    break;
                }
            return r;
        };
        rep.checks.push_back({"v1 ids", in_range(d.v1, pg.num_vertices(), "vertex")});
        rep.checks.push_back({"v2 ids", in_range(d.v2, pg.num_vertices(), "vertex")});
        rep.checks.push_back({"edge ids", in_range(d.h_edges, pg.num_edges(), "edge")});
        if (rep.ok()) {
            const FaceMode mode = d.mode == "strict" ? FaceMode::All : FaceMode::ThreePlus;
            const VerificationReport part = verify_partition(pg, d.v1, d.v2, mode);
            rep.checks.insert(rep.checks.end(), part.checks.begin(), part.checks.end());
            if (!d.h_edges.empty()) {
                const VerificationReport cov = verify_cover(pg, d.h_edges, d.reference_edge);
                for (const auto& c : cov.checks) rep.checks.push_back({"cover " + c.name, c.result});
            }
        }
        if (report) *report = dup_string(rep.summary());
        if (rep.ok()) return FH_OK;
        last_error = "verification failed";
        return FH_VERIFY_FAILED;
    });
}

fh_status fh_export(const fh_graph* g, const fh_partition* p, fh_format format, char** out) {
    if (!g || !out) return null_argument("graph/out");
    return guarded([&] {
        const PlaneGraph& pg = g->doc.graph;
        DrawStyle style;
        if (!g->doc.edge_tags.empty())
            for (const auto& t : g->doc.edge_tags) style.edge_dashed.push_back(t == "added");
        if (p) {
            style.vertex_class.assign(pg.num_vertices(), -1);
            for (VertexId v : p->doc.v1)
                if (v >= 0 && static_cast<std::size_t>(v) < pg.num_vertices()) style.vertex_class[v] = 0;
            for (VertexId v : p->doc.v2)
                if (v >= 0 && static_cast<std::size_t>(v) < pg.num_vertices()) style.vertex_class[v] = 1;
            style.edge_emphasis.assign(pg.num_edges(), 0);
            for (EdgeId e : p->doc.h_edges)
                if (e >= 0 && static_cast<std::size_t>(e) < pg.num_edges()) style.edge_emphasis[e] = 1;
        }
        *out = dup_string(format == FH_FORMAT_SVG ? to_svg(pg, style) : to_dot(pg, style));
        return FH_OK;
    });
}

} // extern "C"
