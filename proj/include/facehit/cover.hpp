#pragma once

#include <optional>
#include <vector>

#include "facehit/matching.hpp"
#include "facehit/plane_graph.hpp"

namespace facehit {

/// Bipartite edge cover H of G that hits every 3+-face and contains the
/// reference edge.
struct BipartiteCover {
    std::vector<EdgeId> h_edges;           // sorted edge ids of G
    std::vector<EdgeId> removed_matching;  // edges of G whose dual edge was matched
    EdgeId reference_edge = kNone;
};

enum class PartitionMode {
    Strict,      // every face must be a 3+-face and every face gets hit
    Permissive,  // any connected multigraph; 3+-faces get hit
};

struct VertexPartition {
    std::vector<VertexId> v1;
    std::vector<VertexId> v2;
    BipartiteCover witness;
};

/// Triangulated loop-free g: H = E minus a dual perfect matching that
/// avoids the dual of e_hat. Every face of H has degree 4. Throws HasLoop,
/// NotTriangulated.
BipartiteCover cover_triangulated(const PlaneGraph& g, EdgeId e_hat,
                                  MatchingEngine engine = MatchingEngine::Cubic);

/// 2-connected, bigon-free g with n >= 2.
BipartiteCover cover_biconnected_nobigons(const PlaneGraph& g, EdgeId e_hat,
                                          MatchingEngine engine = MatchingEngine::Cubic);

/// 2-connected g with n >= 2; bigons are collapsed to one edge (never
/// dropping e_hat) and their partners re-added afterwards.
BipartiteCover cover_biconnected(const PlaneGraph& g, EdgeId e_hat, MatchingEngine engine = MatchingEngine::Cubic);

/// Connected g with n >= 2, combined over blocks. Throws Disconnected,
/// TooSmall, InvalidArgument (e_hat out of range or a loop).
BipartiteCover cover(const PlaneGraph& g, EdgeId e_hat, MatchingEngine engine = MatchingEngine::Cubic);

/// Lowest-id non-loop edge of the component of v (of vertex 0 by default).
EdgeId default_reference_edge(const PlaneGraph& g, VertexId v = 0);

/// Checks the preconditions of partition without running it; throws the
/// same errors.
void check_partition_preconditions(const PlaneGraph& g, PartitionMode mode);

/// Two disjoint dominating sets, both hitting every 3+-face (every face in
/// strict mode). Disconnected inputs are solved per component; e_hat is used
/// in its own component, every other component takes its default edge.
/// Throws TooSmall (n < 2 or an isolated vertex), StrictModeViolation.
VertexPartition partition(const PlaneGraph& g, std::optional<EdgeId> e_hat = std::nullopt,
                          PartitionMode mode = PartitionMode::Strict,
                          MatchingEngine engine = MatchingEngine::Cubic);

/// Colour classes of the spanning subgraph (V, edges); every component is
/// coloured from its lowest-id vertex, which goes to the first class.
std::pair<std::vector<VertexId>, std::vector<VertexId>> two_colour(const PlaneGraph& g,
                                                                  const std::vector<EdgeId>& edges);

} // namespace facehit
