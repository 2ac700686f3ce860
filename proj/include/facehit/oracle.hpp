#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "facehit/plane_graph.hpp"

namespace facehit {

/// Outcome of one property check. A failure names a concrete offender.
struct CheckResult {
    bool ok = true;
    std::string witness;           // human readable, empty on success
    std::vector<std::int32_t> ids;  // offending vertex, face, edge or cycle
};

struct NamedCheck {
    std::string name;
    CheckResult result;
};

struct VerificationReport {
    std::vector<NamedCheck> checks;
    bool ok() const;
    std::string summary() const;
};

enum class FaceMode { All, ThreePlus };

CheckResult is_dominating(const PlaneGraph& g, const std::vector<VertexId>& s);

/// Every face (or every 3+-face) has a vertex of s on its walk.
CheckResult hits_faces(const PlaneGraph& g, const std::vector<VertexId>& s, FaceMode mode);

/// Every face (or every 3+-face) has an edge of the set on its walk.
CheckResult hits_faces_with_edges(const PlaneGraph& g, const std::vector<EdgeId>& edges, FaceMode mode);

/// The spanning subgraph (V, edges) is bipartite; otherwise ids is an odd
/// closed walk given as a vertex sequence.
CheckResult is_bipartite(const PlaneGraph& g, const std::vector<EdgeId>& edges);

CheckResult is_edge_cover(const PlaneGraph& g, const std::vector<EdgeId>& edges);

/// Partition of V, both classes dominating and hitting the faces of the mode.
VerificationReport verify_partition(const PlaneGraph& g, const std::vector<VertexId>& v1,
                                    const std::vector<VertexId>& v2, FaceMode mode);

/// Bipartite edge cover that hits every 3+-face and contains e_hat.
VerificationReport verify_cover(const PlaneGraph& g, const std::vector<EdgeId>& h_edges, EdgeId e_hat);

/// Bit masks (bit v set = v in V1) of all partitions valid for the mode.
/// Requires n <= 20.
std::vector<std::uint32_t> brute_force_valid_partitions(const PlaneGraph& g, FaceMode mode);

std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>>
brute_force_partition_exists(const PlaneGraph& g, FaceMode mode);

/// Orientation-preserving isomorphism of connected embedded graphs.
bool embedded_isomorphic(const PlaneGraph& a, const PlaneGraph& b);

// ---------------------------------------------------------------------------
// Instance generators. All are deterministic in their seed.

/// Simple graph from clockwise neighbour lists; edge ids follow the first
/// appearance of each pair (u < v) scanning vertices in order.
PlaneGraph from_neighbour_lists(const std::vector<std::vector<VertexId>>& nbrs);

PlaneGraph gen_cycle(std::size_t length);
PlaneGraph gen_k4();
PlaneGraph gen_prism();
PlaneGraph gen_octahedron();

/// Simple triangulation: K3 for n = 3, otherwise K4 grown by random face
/// splits and then shuffled by random edge flips.
PlaneGraph gen_triangulation(std::size_t n, std::uint64_t seed);

/// Random spanning tree of a triangulation plus a random subset of its other
/// edges. With strict off, loops and doubled edges are sprinkled in.
PlaneGraph gen_sparse_plane(std::size_t n, std::uint64_t seed, bool strict);

/// Random 2-connected simple plane graph: a triangulation thinned while
/// every vertex keeps degree >= 2 and no cutvertex appears.
PlaneGraph gen_biconnected(std::size_t n, std::uint64_t seed);

/// copies = n / 4 doubled K4s (every edge replaced by a bigon) chained by
/// bridges.
PlaneGraph gen_k4_bigons(std::size_t n, std::uint64_t seed);

/// Triangle with one loop for seed 0; otherwise a sparse graph decorated
/// with loops, some holding pendant vertices and some nested.
PlaneGraph gen_loop_attachments(std::size_t n, std::uint64_t seed);

/// Small blocks (cycles, K4, triangulations, doubled edges, loops) glued
/// at shared vertices or through bridges.
PlaneGraph gen_multi_block_chain(std::size_t blocks, std::uint64_t seed);

/// 2-connected simple graph whose faces all have odd degree >= 5, built by
/// subdividing a random 2-connected graph on about n vertices. With
/// min_degree_three every face is a pentagon and every degree is at least
/// 3 (about n vertices, 9k - 16 for a k-vertex base triangulation; the
/// dodecahedron for k = 4).
PlaneGraph gen_odd_faces(std::size_t n, std::uint64_t seed, bool min_degree_three);

/// Replaces edge e by a path with counts[e] inner vertices; new vertices get
/// ids from n upward and the path keeps the rotation slots of e.
PlaneGraph subdivide(const PlaneGraph& g, const std::vector<std::size_t>& counts);

/// Disjoint union; vertex and edge ids are offset in argument order.
PlaneGraph disjoint_union(const std::vector<PlaneGraph>& parts);

} // namespace facehit
