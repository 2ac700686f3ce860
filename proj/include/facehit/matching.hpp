#pragma once

#include <vector>

#include "facehit/plane_graph.hpp"

namespace facehit {

enum class MatchingEngine {
    Blossom,  // Edmonds from an empty matching, full reset per search
    Cubic,    // degree-driven greedy start plus localized augmenting search
};

/// Edge ids of a perfect matching, sorted.
struct Matching {
    std::vector<EdgeId> edges;
};

/// Perfect matching of a 3-regular bridgeless multigraph containing
/// forced_edge. Throws NotCubic, NotBridgeless, InvalidArgument.
Matching perfect_matching_cubic(const PlaneGraph& gstar, EdgeId forced_edge,
                                MatchingEngine engine = MatchingEngine::Cubic);

/// Perfect matching avoiding `avoided`, obtained by forcing the lowest-id
/// other non-loop edge at its u endpoint.
Matching avoiding_matching(const PlaneGraph& gstar, EdgeId avoided, MatchingEngine engine = MatchingEngine::Cubic);

/// All perfect matchings by backtracking; for graphs with at most 16
/// vertices. Each matching is a sorted edge list; the list is sorted.
std::vector<std::vector<EdgeId>> matching_oracle(const PlaneGraph& g);

/// Every vertex covered exactly once by the edge set.
bool is_perfect_matching(const PlaneGraph& g, const std::vector<EdgeId>& edges);

/// Bridge flags per edge: a non-loop edge with the same face on both sides.
std::vector<char> find_bridges(const PlaneGraph& g);

} // namespace facehit
