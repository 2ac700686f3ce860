#pragma once

#include <span>
#include <vector>

#include "facehit/types.hpp"

namespace facehit {

/// A plane multigraph stored as a rotation system over darts.
///
/// Dart 2e leaves the "u" endpoint of edge e and dart 2e+1 leaves its "v"
/// endpoint; for a loop both darts sit at the same vertex. The rotation of a
/// vertex lists its outgoing darts in clockwise order.
///
/// Faces follow one fixed convention: the successor of dart d on its facial
/// walk is rot_next(twin(d)). No outer face is stored; callers that need one
/// pick it explicitly.
///
/// Instances are immutable once built.
class PlaneGraph {
public:
    PlaneGraph() = default;

    /// rotation[v] lists the darts leaving v in clockwise order. Every dart
    /// 0..2m-1 must occur exactly once. Throws Error(MalformedRotation).
    static PlaneGraph from_rotation(std::size_t n, std::size_t m,
                                    const std::vector<std::vector<DartId>>& rotation);

    std::size_t num_vertices() const noexcept { return rot_offset_.empty() ? 0 : rot_offset_.size() - 1; }
    std::size_t num_edges() const noexcept { return tail_.size() / 2; }
    std::size_t num_darts() const noexcept { return tail_.size(); }
    std::size_t num_faces() const noexcept { return face_offset_.empty() ? 0 : face_offset_.size() - 1; }
    std::size_t num_components() const noexcept { return num_components_; }

    VertexId tail(DartId d) const { return tail_[d]; }
    VertexId head(DartId d) const { return tail_[twin(d)]; }
    VertexId endpoint_u(EdgeId e) const { return tail_[2 * e]; }
    VertexId endpoint_v(EdgeId e) const { return tail_[2 * e + 1]; }
    VertexId other_end(EdgeId e, VertexId x) const { return endpoint_u(e) == x ? endpoint_v(e) : endpoint_u(e); }
    bool is_loop(EdgeId e) const { return endpoint_u(e) == endpoint_v(e); }

    std::size_t degree(VertexId v) const { return rot_offset_[v + 1] - rot_offset_[v]; }
    std::span<const DartId> rotation(VertexId v) const {
        return {rot_darts_.data() + rot_offset_[v], rot_darts_.data() + rot_offset_[v + 1]};
    }
    DartId rot_next(DartId d) const;
    DartId rot_prev(DartId d) const;

    DartId face_next(DartId d) const { return rot_next(twin(d)); }
    FaceId face_of(DartId d) const { return face_of_[d]; }
    std::span<const DartId> face_walk(FaceId f) const {
        return {face_darts_.data() + face_offset_[f], face_darts_.data() + face_offset_[f + 1]};
    }
    std::size_t face_degree(FaceId f) const { return face_offset_[f + 1] - face_offset_[f]; }

    /// Component index of every vertex (isolated vertices get their own).
    const std::vector<VertexId>& component_of() const noexcept { return component_; }

    /// Full rotation lists, e.g. for serialization or rebuilding.
    std::vector<std::vector<DartId>> rotation_lists() const;

private:
    void trace_faces();
    void find_components();

    std::vector<VertexId> tail_;
    std::vector<std::size_t> rot_offset_;
    std::vector<DartId> rot_darts_;
    std::vector<std::int32_t> rot_pos_;  // position of each dart inside its vertex rotation
    std::vector<std::size_t> face_offset_;
    std::vector<DartId> face_darts_;
    std::vector<FaceId> face_of_;
    std::vector<VertexId> component_;
    std::size_t num_components_ = 0;
};

/// Per-face, per-edge and per-vertex structural flags.
struct FaceInfo {
    std::size_t degree = 0;
    std::size_t distinct_vertices = 0;
    bool is_bigon = false;
    bool is_triangle = false;
    bool is_three_plus = false;
};

struct Classification {
    std::vector<FaceInfo> faces;
    std::vector<char> edge_is_loop;
    std::vector<char> edge_is_bridge;
    std::vector<char> edge_has_parallel;
    std::vector<std::size_t> vertex_degree;
};

Classification classify(const PlaneGraph& g);

/// Number of distinct vertices on the walk of f.
std::size_t distinct_vertices_on_face(const PlaneGraph& g, FaceId f);

/// The dual graph. Dual vertex i is face i of g; dual edge e crosses primal
/// edge e, so the edge bijection is the identity on ids. Dual dart d is owned
/// by face_of(d), and the rotation at a dual vertex is its facial walk.
/// With this choice dual(dual(g)) reproduces the rotation system of g.
PlaneGraph dual(const PlaneGraph& g);

/// A graph derived from a parent by keeping a subset of its edges.
struct Subgraph {
    PlaneGraph graph;
    std::vector<VertexId> vertex_to_parent;
    std::vector<EdgeId> edge_to_parent;
    std::vector<VertexId> parent_to_vertex;  // kNone for dropped vertices
    std::vector<EdgeId> parent_to_edge;      // kNone for dropped edges

    DartId dart_to_parent(DartId d) const { return 2 * edge_to_parent[edge_of(d)] + (d & 1); }
    DartId dart_from_parent(DartId d) const {
        const EdgeId e = parent_to_edge[edge_of(d)];
        return e == kNone ? kNone : 2 * e + (d & 1);
    }
};

/// Restricts the rotation system of g to the edges flagged in keep.
/// Vertices without kept edges are dropped unless keep_isolated is set.
Subgraph restrict_edges(const PlaneGraph& g, const std::vector<char>& keep, bool keep_isolated = false);

/// Mutable rotation system used to grow supergraphs and generators.
///
/// A corner is named by the dart arriving at it along a facial walk; adding
/// a chord between two corners of the same face splits that face and keeps
/// the embedding planar.
class EmbeddingBuilder {
public:
    explicit EmbeddingBuilder(std::size_t n = 0);
    explicit EmbeddingBuilder(const PlaneGraph& g);

    std::size_t num_vertices() const noexcept { return any_dart_.size(); }
    std::size_t num_edge_slots() const noexcept { return tail_.size() / 2; }
    bool alive(EdgeId e) const { return alive_[e] != 0; }

    VertexId add_vertex();

    /// Adds an edge whose u-side is placed right after after_u in the
    /// rotation of its tail (kNone: u is currently isolated, pass the vertex
    /// through u). Same for the v-side.
    EdgeId add_edge(VertexId u, DartId after_u, VertexId v, DartId after_v);

    /// Chord from the corner entered by in_u to the corner entered by in_v.
    /// Dart 2e of the result leaves the first corner.
    EdgeId add_chord(DartId in_u, DartId in_v);

    void remove_edge(EdgeId e);

    VertexId tail(DartId d) const { return tail_[d]; }
    VertexId head(DartId d) const { return tail_[twin(d)]; }
    DartId rot_next(DartId d) const { return next_[d]; }
    DartId rot_prev(DartId d) const { return prev_[d]; }
    DartId face_next(DartId d) const { return next_[twin(d)]; }
    DartId any_dart(VertexId v) const { return any_dart_[v]; }
    std::size_t degree(VertexId v) const;

    /// Freezes into a PlaneGraph; removed edges are compacted away, the map
    /// from new to old edge ids is written to edge_map when given.
    PlaneGraph build(std::vector<EdgeId>* edge_map = nullptr) const;

private:
    void link_after(DartId d, VertexId v, DartId after);

    std::vector<VertexId> tail_;
    std::vector<DartId> next_;
    std::vector<DartId> prev_;
    std::vector<char> alive_;
    std::vector<DartId> any_dart_;
};

/// Euler characteristic check for every component: n - m + f = 2 each.
bool euler_holds(const PlaneGraph& g);

} // namespace facehit
