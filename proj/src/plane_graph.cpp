#include "facehit/plane_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace facehit {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::MalformedRotation: return "MalformedRotation";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotBiconnected: return "NotBiconnected";
    case ErrorKind::BigonPresent: return "BigonPresent";
    case ErrorKind::EdgeNotOnFace: return "EdgeNotOnFace";
    case ErrorKind::NotTriangulated: return "NotTriangulated";
    case ErrorKind::HasLoop: return "HasLoop";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::StrictModeViolation: return "StrictModeViolation";
    case ErrorKind::OddCycleUnfixable: return "OddCycleUnfixable";
    case ErrorKind::NotCubic: return "NotCubic";
    case ErrorKind::NotBridgeless: return "NotBridgeless";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

PlaneGraph PlaneGraph::from_rotation(std::size_t n, std::size_t m,
                                     const std::vector<std::vector<DartId>>& rotation) {
    if (n == 0)
        throw Error(ErrorKind::MalformedRotation, "graph must have at least one vertex");
    if (rotation.size() != n)
        throw Error(ErrorKind::MalformedRotation,
                    "expected " + std::to_string(n) + " rotation lists, got " + std::to_string(rotation.size()));

    PlaneGraph g;
    g.tail_.assign(2 * m, kNone);
    g.rot_pos_.assign(2 * m, -1);
    g.rot_offset_.assign(n + 1, 0);
    g.rot_darts_.reserve(2 * m);
    for (std::size_t v = 0; v < n; ++v) {
        g.rot_offset_[v] = g.rot_darts_.size();
        std::int32_t pos = 0;
        for (DartId d : rotation[v]) {
            if (d < 0 || static_cast<std::size_t>(d) >= 2 * m)
                throw Error(ErrorKind::MalformedRotation,
                            "dart " + std::to_string(d) + " at vertex " + std::to_string(v) + " out of range");
            if (g.tail_[d] != kNone)
                throw Error(ErrorKind::MalformedRotation,
                            "dart " + std::to_string(d) + " appears twice (vertex " + std::to_string(v) + ")");
            g.tail_[d] = static_cast<VertexId>(v);
            g.rot_pos_[d] = pos++;
            g.rot_darts_.push_back(d);
        }
    }
    g.rot_offset_[n] = g.rot_darts_.size();
    for (std::size_t d = 0; d < 2 * m; ++d)
        if (g.tail_[d] == kNone)
            throw Error(ErrorKind::MalformedRotation,
                        "dart " + std::to_string(d) + " of edge " + std::to_string(d / 2) + " is in no rotation");

    g.trace_faces();
    g.find_components();
    return g;
}

DartId PlaneGraph::rot_next(DartId d) const {
    const VertexId v = tail_[d];
    const std::size_t deg = degree(v);
    const std::size_t pos = static_cast<std::size_t>(rot_pos_[d]) + 1;
    return rot_darts_[rot_offset_[v] + (pos == deg ? 0 : pos)];
}

DartId PlaneGraph::rot_prev(DartId d) const {
    const VertexId v = tail_[d];
    const std::size_t pos = static_cast<std::size_t>(rot_pos_[d]);
    return rot_darts_[rot_offset_[v] + (pos == 0 ? degree(v) - 1 : pos - 1)];
}

void PlaneGraph::trace_faces() {
    const std::size_t nd = num_darts();
    face_of_.assign(nd, kNone);
    face_darts_.clear();
    face_darts_.reserve(nd);
    face_offset_.assign(1, 0);
    for (std::size_t start = 0; start < nd; ++start) {
        if (face_of_[start] != kNone)
            continue;
        const auto f = static_cast<FaceId>(face_offset_.size() - 1);
        DartId d = static_cast<DartId>(start);
        do {
            face_of_[d] = f;
            face_darts_.push_back(d);
            d = face_next(d);
        } while (d != static_cast<DartId>(start));
        face_offset_.push_back(face_darts_.size());
    }
}

void PlaneGraph::find_components() {
    const std::size_t n = num_vertices();
    component_.assign(n, kNone);
    num_components_ = 0;
    std::vector<VertexId> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (component_[s] != kNone)
            continue;
        const auto c = static_cast<VertexId>(num_components_++);
        component_[s] = c;
        stack.push_back(static_cast<VertexId>(s));
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (DartId d : rotation(v)) {
                const VertexId w = head(d);
                if (component_[w] == kNone) {
                    component_[w] = c;
                    stack.push_back(w);
                }
            }
        }
    }
}

std::vector<std::vector<DartId>> PlaneGraph::rotation_lists() const {
    std::vector<std::vector<DartId>> out(num_vertices());
    for (std::size_t v = 0; v < num_vertices(); ++v) {
        auto r = rotation(static_cast<VertexId>(v));
        out[v].assign(r.begin(), r.end());
    }
    return out;
}

std::size_t distinct_vertices_on_face(const PlaneGraph& g, FaceId f) {
    std::vector<VertexId> seen;
    for (DartId d : g.face_walk(f))
        seen.push_back(g.tail(d));
    std::sort(seen.begin(), seen.end());
    return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

Classification classify(const PlaneGraph& g) {
    Classification c;
    const std::size_t n = g.num_vertices();
    const std::size_t m = g.num_edges();
    c.vertex_degree.resize(n);
    for (std::size_t v = 0; v < n; ++v)
        c.vertex_degree[v] = g.degree(static_cast<VertexId>(v));

    c.edge_is_loop.assign(m, 0);
    c.edge_is_bridge.assign(m, 0);
    c.edge_has_parallel.assign(m, 0);
    std::vector<std::pair<std::pair<VertexId, VertexId>, EdgeId>> keyed;
    keyed.reserve(m);
    for (std::size_t e = 0; e < m; ++e) {
        const auto ei = static_cast<EdgeId>(e);
        c.edge_is_loop[e] = g.is_loop(ei);
        // On the sphere an edge sees the same face on both sides iff it is a bridge.
        c.edge_is_bridge[e] = !c.edge_is_loop[e] && g.face_of(2 * ei) == g.face_of(2 * ei + 1);
        auto a = g.endpoint_u(ei), b = g.endpoint_v(ei);
        if (a > b)
            std::swap(a, b);
        keyed.push_back({{a, b}, ei});
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i + 1 < keyed.size(); ++i)
        if (keyed[i].first == keyed[i + 1].first)
            c.edge_has_parallel[keyed[i].second] = c.edge_has_parallel[keyed[i + 1].second] = 1;

    std::vector<std::int32_t> stamp(n, -1);
    c.faces.resize(g.num_faces());
    for (std::size_t f = 0; f < g.num_faces(); ++f) {
        FaceInfo& info = c.faces[f];
        const auto walk = g.face_walk(static_cast<FaceId>(f));
        info.degree = walk.size();
        for (DartId d : walk) {
            const VertexId v = g.tail(d);
            if (stamp[v] != static_cast<std::int32_t>(f)) {
                stamp[v] = static_cast<std::int32_t>(f);
                ++info.distinct_vertices;
            }
        }
        info.is_triangle = info.degree == 3;
        info.is_three_plus = info.distinct_vertices >= 3;
        if (info.degree == 2) {
            const EdgeId e0 = edge_of(walk[0]), e1 = edge_of(walk[1]);
            info.is_bigon = e0 != e1 && !g.is_loop(e0) && !g.is_loop(e1);
        }
    }
    return c;
}

PlaneGraph dual(const PlaneGraph& g) {
    std::vector<std::vector<DartId>> rotation(g.num_faces());
    for (std::size_t f = 0; f < g.num_faces(); ++f) {
        auto walk = g.face_walk(static_cast<FaceId>(f));
        rotation[f].assign(walk.begin(), walk.end());
    }
    return PlaneGraph::from_rotation(g.num_faces(), g.num_edges(), rotation);
}

Subgraph restrict_edges(const PlaneGraph& g, const std::vector<char>& keep, bool keep_isolated) {
    Subgraph s;
    const std::size_t n = g.num_vertices();
    const std::size_t m = g.num_edges();
    s.parent_to_edge.assign(m, kNone);
    s.parent_to_vertex.assign(n, kNone);
    for (std::size_t e = 0; e < m; ++e) {
        if (!keep[e])
            continue;
        s.parent_to_edge[e] = static_cast<EdgeId>(s.edge_to_parent.size());
        s.edge_to_parent.push_back(static_cast<EdgeId>(e));
    }
    for (std::size_t v = 0; v < n; ++v) {
        bool has = keep_isolated;
        for (DartId d : g.rotation(static_cast<VertexId>(v)))
            has = has || keep[edge_of(d)];
        if (!has)
            continue;
        s.parent_to_vertex[v] = static_cast<VertexId>(s.vertex_to_parent.size());
        s.vertex_to_parent.push_back(static_cast<VertexId>(v));
    }
    std::vector<std::vector<DartId>> rotation(s.vertex_to_parent.size());
    for (std::size_t i = 0; i < s.vertex_to_parent.size(); ++i)
        for (DartId d : g.rotation(s.vertex_to_parent[i]))
            if (keep[edge_of(d)])
                rotation[i].push_back(s.dart_from_parent(d));
    if (!s.vertex_to_parent.empty())
        s.graph = PlaneGraph::from_rotation(s.vertex_to_parent.size(), s.edge_to_parent.size(), rotation);
    return s;
}

bool euler_holds(const PlaneGraph& g) {
    std::vector<char> has_dart(g.num_components(), 0);
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (g.degree(static_cast<VertexId>(v)) > 0)
            has_dart[g.component_of()[v]] = 1;
    // An isolated vertex has no darts and hence no traced face; it still
    // bounds one face of its own sphere.
    const auto isolated = std::count(has_dart.begin(), has_dart.end(), 0);
    const auto lhs = static_cast<long long>(g.num_vertices()) - static_cast<long long>(g.num_edges()) +
                     static_cast<long long>(g.num_faces()) + isolated;
    return lhs == 2 * static_cast<long long>(g.num_components());
}

// ---------------------------------------------------------------------------

EmbeddingBuilder::EmbeddingBuilder(std::size_t n) : any_dart_(n, kNone) {}

EmbeddingBuilder::EmbeddingBuilder(const PlaneGraph& g)
    : tail_(g.num_darts()), next_(g.num_darts()), prev_(g.num_darts()), alive_(g.num_edges(), 1),
      any_dart_(g.num_vertices(), kNone) {
    for (std::size_t d = 0; d < g.num_darts(); ++d) {
        const auto di = static_cast<DartId>(d);
        tail_[d] = g.tail(di);
        next_[d] = g.rot_next(di);
        prev_[d] = g.rot_prev(di);
    }
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (g.degree(static_cast<VertexId>(v)) > 0)
            any_dart_[v] = g.rotation(static_cast<VertexId>(v))[0];
}

VertexId EmbeddingBuilder::add_vertex() {
    any_dart_.push_back(kNone);
    return static_cast<VertexId>(any_dart_.size() - 1);
}

void EmbeddingBuilder::link_after(DartId d, VertexId v, DartId after) {
    tail_[d] = v;
    if (after == kNone) {
        if (any_dart_[v] != kNone)
            throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " is not isolated");
        next_[d] = prev_[d] = d;
        any_dart_[v] = d;
        return;
    }
    if (tail_[after] != v)
        throw Error(ErrorKind::InvalidArgument, "insertion dart does not leave vertex " + std::to_string(v));
    const DartId nx = next_[after];
    next_[after] = d;
    prev_[d] = after;
    next_[d] = nx;
    prev_[nx] = d;
}

EdgeId EmbeddingBuilder::add_edge(VertexId u, DartId after_u, VertexId v, DartId after_v) {
    const auto e = static_cast<EdgeId>(alive_.size());
    alive_.push_back(1);
    tail_.resize(tail_.size() + 2);
    next_.resize(next_.size() + 2);
    prev_.resize(prev_.size() + 2);
    link_after(2 * e, u, after_u);
    if (u == v && after_v == kNone)
        after_v = 2 * e;  // second end of a loop at a formerly isolated vertex
    link_after(2 * e + 1, v, after_v);
    return e;
}

EdgeId EmbeddingBuilder::add_chord(DartId in_u, DartId in_v) {
    return add_edge(head(in_u), twin(in_u), head(in_v), twin(in_v));
}

void EmbeddingBuilder::remove_edge(EdgeId e) {
    for (DartId d : {2 * e, 2 * e + 1}) {
        const VertexId v = tail_[d];
        if (next_[d] == d) {
            any_dart_[v] = kNone;
        } else {
            next_[prev_[d]] = next_[d];
            prev_[next_[d]] = prev_[d];
            if (any_dart_[v] == d)
                any_dart_[v] = next_[d];
        }
    }
    alive_[e] = 0;
}

std::size_t EmbeddingBuilder::degree(VertexId v) const {
    const DartId start = any_dart_[v];
    if (start == kNone)
        return 0;
    std::size_t k = 0;
    DartId d = start;
    do {
        ++k;
        d = next_[d];
    } while (d != start);
    return k;
}

PlaneGraph EmbeddingBuilder::build(std::vector<EdgeId>* edge_map) const {
    std::vector<EdgeId> new_id(alive_.size(), kNone);
    std::vector<EdgeId> old_id;
    for (std::size_t e = 0; e < alive_.size(); ++e) {
        if (!alive_[e])
            continue;
        new_id[e] = static_cast<EdgeId>(old_id.size());
        old_id.push_back(static_cast<EdgeId>(e));
    }
    std::vector<std::vector<DartId>> rotation(num_vertices());
    for (std::size_t v = 0; v < num_vertices(); ++v) {
        const DartId start = any_dart_[v];
        if (start == kNone)
            continue;
        DartId d = start;
        do {
            rotation[v].push_back(2 * new_id[edge_of(d)] + (d & 1));
            d = next_[d];
        } while (d != start);
    }
    const std::size_t m = old_id.size();
    if (edge_map)
        *edge_map = std::move(old_id);
    return PlaneGraph::from_rotation(num_vertices(), m, rotation);
}

} // namespace facehit
