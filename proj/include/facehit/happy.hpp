#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "facehit/decompose.hpp"
#include "facehit/plane_graph.hpp"

namespace facehit {

enum class Happiness : unsigned char { Unhappy = 0, Happy = 1, InteriorHappy = 2 };

/// Growing supergraph G_i^+ of a face-adding ear decomposition.
///
/// Edges 0..m-1 are the edges of G; chords get ids m, m+1, ... Every chord
/// lies inside one face of G, so corners of G are never invalidated.
struct AugmentationState {
    EmbeddingBuilder gplus;
    std::vector<char> interior_happy;  // per vertex, only ever set
    std::vector<char> happy;           // filled by close_outer
    std::vector<std::int32_t> chord_stage;  // index of the ear whose step added the chord
    std::size_t original_edges = 0;
    std::size_t ears_done = 0;  // G_i^+ has been built for i = ears_done
};

struct HappySupergraph {
    PlaneGraph gplus;
    std::vector<char> original;  // per edge of gplus
    std::optional<VertexId> unhappy_vertex;
};

/// Per-ear hook for verifying invariants; receives the state after ear i
/// (1-based, i = state.ears_done).
using EarObserver = std::function<void(const AugmentationState&)>;

AugmentationState start_augmentation(const PlaneGraph& g, const EarDecomposition& ed);

/// Adds ear i (0-based index into ed.ears, i >= 1) and the chords of
/// phases 1-3 inside its face.
void augment_ear(const PlaneGraph& g, const EarDecomposition& ed, AugmentationState& state, std::size_t i);

/// Folds augment_ear over all ears.
AugmentationState build_gn_plus(const PlaneGraph& g, const EarDecomposition& ed,
                                const EarObserver& observer = {});

/// Cuts unhappy vertices off the outer face, fixes t (or s when t is
/// already interior-happy), and fan-triangulates the rest.
HappySupergraph close_outer(const PlaneGraph& g, const EarDecomposition& ed, AugmentationState& state);

/// Triangulated loop-free supergraph where every vertex
/// except possibly s is happy. The ear decomposition starts with
/// first_edge and closes the lower-id face at first_edge second.
HappySupergraph build_happy_supergraph(const PlaneGraph& g, EdgeId first_edge, VertexId s,
                                       const EarObserver& observer = {});

/// Supergraph where every vertex is happy. Throws OddCycleUnfixable for
/// cycles of odd length >= 5.
HappySupergraph build_all_happy(const PlaneGraph& g, const EarObserver& observer = {});

enum class AllHappyCase { EvenOrTriangleFace = 1, DegreeTwoVertex = 2, MergedFaces = 3 };

/// Which case build_all_happy dispatches to (throws like build_all_happy).
AllHappyCase all_happy_case(const PlaneGraph& g);

/// Brute-force angle scan. A vertex is happy if some triangular face has an
/// angle at it made of two original edges; interior-happy if such a face is
/// not outer_face.
std::vector<Happiness> check_happiness(const PlaneGraph& gplus, const std::vector<char>& original,
                                       FaceId outer_face = kNone);

struct InvariantReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Checks invariants (a)-(e) for the current stage of state from scratch.
InvariantReport check_augmentation_invariants(const PlaneGraph& g, const EarDecomposition& ed,
                                              const AugmentationState& state);

} // namespace facehit
