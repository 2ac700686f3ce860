#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "facehit/cover.hpp"
#include "facehit/plane_graph.hpp"

namespace facehit {

/// Text format: a header line "facehit-graph 1" followed by a JSON body
/// {"n", "edges": [[id, u, v (, tag)]...], "rotation": [[[edge, "u"|"v"]...]...]}.
/// Rotations are clockwise; the end tag picks the dart of the edge.
struct GraphDocument {
    PlaneGraph graph;
    std::vector<std::string> edge_tags;  // empty, or one tag per edge
};

/// Header "facehit-partition 1" and a JSON body.
struct PartitionDocument {
    std::vector<VertexId> v1;
    std::vector<VertexId> v2;
    std::vector<EdgeId> h_edges;
    std::vector<EdgeId> removed_matching;
    EdgeId reference_edge = kNone;
    std::string mode = "strict";
    std::size_t n = 0;
    std::size_t m = 0;
    double pipeline_ms = 0.0;
};

/// Throws Error(Parse) for malformed text and Error(MalformedRotation) when
/// the rotation does not fit the edge list.
GraphDocument parse_graph(std::string_view text);
std::string write_graph(const GraphDocument& doc);
std::string write_graph(const PlaneGraph& g);

PartitionDocument parse_partition(std::string_view text);
std::string write_partition(const PartitionDocument& doc);
PartitionDocument make_partition_document(const PlaneGraph& g, const VertexPartition& p, PartitionMode mode,
                                          double pipeline_ms);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

/// Process exit code for an error kind: 2 parse, 3 precondition, 4 bug.
int exit_code_for(ErrorKind kind) noexcept;

/// Drawing options. Vectors may be empty; otherwise one entry per vertex or
/// edge.
struct DrawStyle {
    std::vector<int> vertex_class;    // -1 none, 0 first class, 1 second class
    std::vector<char> edge_dashed;    // added edges
    std::vector<char> edge_emphasis;  // e.g. cover edges
    std::string title;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Straight-line layout: per component, the longest face is pinned to a
/// circle and every other vertex sits at the barycentre of its neighbours.
std::vector<Point> tutte_layout(const PlaneGraph& g, std::size_t iterations = 400);

std::string to_dot(const PlaneGraph& g, const DrawStyle& style);
std::string to_svg(const PlaneGraph& g, const DrawStyle& style);

} // namespace facehit
