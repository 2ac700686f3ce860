#pragma once

#include <string>
#include <vector>

#include "facehit/plane_graph.hpp"

namespace facehit {

struct Block {
    std::vector<VertexId> vertices;  // parent ids
    std::vector<EdgeId> edges;       // parent ids
    bool trivial = false;            // a single loop with its endpoint
};

struct BlockForest {
    std::vector<Block> blocks;
    std::vector<char> is_cutvertex;
    std::vector<std::int32_t> block_of_edge;
};

/// 2-connected components of a connected multigraph. Loops form trivial
/// blocks and make their endpoint a cutvertex. Iterative, linear time.
BlockForest blocks(const PlaneGraph& g);

/// Induced embedding of one block.
Subgraph block_subgraph(const PlaneGraph& g, const Block& b);

/// st-numbering with number[s] = 0 and number[t] = n-1; every other vertex
/// has both a lower- and a higher-numbered neighbour. (s,t) must be an edge
/// of the 2-connected graph g.
std::vector<std::int32_t> st_numbering(const PlaneGraph& g, EdgeId st_edge, VertexId s);

struct Ear {
    std::vector<VertexId> path;  // y_0 .. y_{k+1}
    std::vector<DartId> darts;   // darts along path, in walk order of the closed face
    FaceId face = kNone;         // face of G closed by this ear (kNone for the first ear)
};

struct EarDecomposition {
    std::vector<Ear> ears;
    VertexId s = kNone;
    VertexId t = kNone;
    EdgeId first_edge = kNone;
    FaceId second_face = kNone;
    FaceId outer_face = kNone;
    DartId outer_dart = kNone;  // dart of the first edge whose face is the outer face
};

/// Face-adding ear decomposition: the first ear is first_edge, the second
/// ear closes second_face, and with the other face at first_edge as outer
/// face every later ear closes exactly one interior face.
///
/// Built from an st-numbering (bipolar orientation) by sweeping the interior
/// faces in a topological order of the dual orientation, smallest face id
/// first among ready faces.
EarDecomposition ear_decomposition(const PlaneGraph& g, EdgeId first_edge, VertexId s, FaceId second_face);

struct EarReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Checks the ear decomposition definition plus the face property: every
/// interior face of each prefix graph G_i is a face of g. Quadratic; meant
/// for tests and debug runs.
EarReport validate_ear_decomposition(const PlaneGraph& g, const EarDecomposition& ed);

/// True iff g is connected, has at least 3 vertices and no cutvertex
/// (a loop counts as a cutvertex).
bool is_biconnected(const PlaneGraph& g);

} // namespace facehit
