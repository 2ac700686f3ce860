#include "doctest.h"

#include <algorithm>
#include <functional>

#include "facehit/cover.hpp"
#include "facehit/oracle.hpp"

using namespace facehit;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& err) {
        return err.kind();
    }
    return ErrorKind::InvariantViolation;
}

bool contains(const std::vector<EdgeId>& v, EdgeId e) { return std::find(v.begin(), v.end(), e) != v.end(); }

void require_valid_cover(const PlaneGraph& g, const BipartiteCover& c) {
    const VerificationReport rep = verify_cover(g, c.h_edges, c.reference_edge);
    INFO(rep.summary());
    REQUIRE(rep.ok());
}

void require_valid_partition(const PlaneGraph& g, const VertexPartition& p, FaceMode mode) {
    const VerificationReport rep = verify_partition(g, p.v1, p.v2, mode);
    INFO(rep.summary());
    REQUIRE(rep.ok());
    CHECK(std::min(p.v1.size(), p.v2.size()) <= g.num_vertices() / 2);
}

// Every face degree of the spanning subgraph (V, edges), restricted to the
// vertices touched by the edges.
std::vector<std::size_t> face_degrees_of(const PlaneGraph& g, const std::vector<EdgeId>& edges) {
    std::vector<char> keep(g.num_edges(), 0);
    for (EdgeId e : edges) keep[e] = 1;
    const Subgraph sub = restrict_edges(g, keep);
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < sub.graph.num_faces(); ++f) out.push_back(sub.graph.face_degree(static_cast<FaceId>(f)));
    return out;
}

// Angle scan: every corner of every face keeps one of its edges.
bool angle_property(const PlaneGraph& g, const std::vector<EdgeId>& h) {
    std::vector<char> in(g.num_edges(), 0);
    for (EdgeId e : h) in[e] = 1;
    for (DartId d = 0; d < static_cast<DartId>(2 * g.num_edges()); ++d)
        if (!in[edge_of(d)] && !in[edge_of(g.face_next(d))]) return false;
    return true;
}

PlaneGraph single_edge() { return PlaneGraph::from_rotation(2, 1, {{0}, {1}}); }
PlaneGraph two_parallel() { return PlaneGraph::from_rotation(2, 2, {{0, 2}, {1, 3}}); }
// Triangle 0-1-2 with edge 3 doubling edge 0.
PlaneGraph doubled_triangle() { return PlaneGraph::from_rotation(3, 4, {{0, 6, 5}, {1, 2, 7}, {3, 4}}); }
// Two triangles sharing vertex 0.
PlaneGraph bowtie() { return from_neighbour_lists({{1, 2, 3, 4}, {2, 0}, {0, 1}, {4, 0}, {0, 3}}); }

} // namespace

TEST_CASE("cover_triangulated on K4 leaves a 4-cycle through e_hat") {
    const PlaneGraph k4 = gen_k4();
    for (EdgeId e = 0; e < 6; ++e) {
        const BipartiteCover c = cover_triangulated(k4, e);
        CHECK(c.h_edges.size() == 4);
        CHECK(c.removed_matching.size() == 2);
        CHECK(contains(c.h_edges, e));
        for (std::size_t deg : face_degrees_of(k4, c.h_edges)) CHECK(deg == 4);
        CHECK(angle_property(k4, c.h_edges));
        require_valid_cover(k4, c);
    }
}

TEST_CASE("cover_triangulated on the octahedron keeps 2n-4 edges") {
    const PlaneGraph oct = gen_octahedron();
    for (EdgeId e = 0; e < 12; ++e) {
        const BipartiteCover c = cover_triangulated(oct, e);
        CHECK(c.h_edges.size() == 8);
        for (std::size_t deg : face_degrees_of(oct, c.h_edges)) CHECK(deg == 4);
        CHECK(angle_property(oct, c.h_edges));
        require_valid_cover(oct, c);
    }
}

TEST_CASE("cover_triangulated preconditions") {
    CHECK(kind_of([] { cover_triangulated(gen_loop_attachments(3, 0), 0); }) == ErrorKind::HasLoop);
    CHECK(kind_of([] { cover_triangulated(gen_cycle(4), 0); }) == ErrorKind::NotTriangulated);
    CHECK(kind_of([] { cover_triangulated(gen_k4(), 6); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("cover_triangulated on random triangulations") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const PlaneGraph g = gen_triangulation(4 + seed * 3, seed);
        const EdgeId e = static_cast<EdgeId>(seed % g.num_edges());
        const BipartiteCover c = cover_triangulated(g, e);
        CHECK(c.removed_matching.size() == g.num_vertices() - 2);
        CHECK(angle_property(g, c.h_edges));
        require_valid_cover(g, c);
    }
}

TEST_CASE("cover_biconnected_nobigons examples") {
    SUBCASE("C5 gives a Hamiltonian path") {
        const PlaneGraph c5 = gen_cycle(5);
        for (EdgeId e = 0; e < 5; ++e) {
            const BipartiteCover c = cover_biconnected_nobigons(c5, e);
            CHECK(c.h_edges.size() == 4);
            require_valid_cover(c5, c);
        }
    }
    SUBCASE("K4 matches the triangulated cover") {
        const PlaneGraph k4 = gen_k4();
        for (EdgeId e = 0; e < 6; ++e)
            CHECK(cover_biconnected_nobigons(k4, e).h_edges == cover_triangulated(k4, e).h_edges);
    }
    SUBCASE("C4") {
        const PlaneGraph c4 = gen_cycle(4);
        const BipartiteCover c = cover_biconnected_nobigons(c4, 1);
        CHECK(c.h_edges.size() >= 2);
        require_valid_cover(c4, c);
    }
    SUBCASE("single edge") {
        const BipartiteCover c = cover_biconnected_nobigons(single_edge(), 0);
        CHECK(c.h_edges == std::vector<EdgeId>{0});
    }
}

TEST_CASE("cover_biconnected collapses bigons") {
    SUBCASE("two parallel edges") {
        const PlaneGraph g = two_parallel();
        for (EdgeId e = 0; e < 2; ++e) {
            const BipartiteCover c = cover_biconnected(g, e);
            CHECK(contains(c.h_edges, e));
            require_valid_cover(g, c);
        }
    }
    SUBCASE("triangle with a doubled edge") {
        const PlaneGraph g = doubled_triangle();
        const Classification cl = classify(g);
        CHECK(std::count_if(cl.faces.begin(), cl.faces.end(), [](const FaceInfo& f) { return f.is_bigon; }) == 1);
        for (EdgeId e = 0; e < 4; ++e) {
            const BipartiteCover c = cover_biconnected(g, e);
            require_valid_cover(g, c);
            // Partners enter together.
            CHECK(contains(c.h_edges, 0) == contains(c.h_edges, 3));
        }
    }
    SUBCASE("simple input equals the bigon-free cover") {
        const PlaneGraph g = gen_biconnected(30, 5);
        CHECK(cover_biconnected(g, 3).h_edges == cover_biconnected_nobigons(g, 3).h_edges);
    }
}

TEST_CASE("cover over blocks") {
    SUBCASE("bowtie") {
        const PlaneGraph g = bowtie();
        for (EdgeId e = 0; e < 6; ++e) {
            const BipartiteCover c = cover(g, e);
            CHECK(c.h_edges.size() == 4);
            require_valid_cover(g, c);
        }
    }
    SUBCASE("triangle with a loop") {
        const PlaneGraph g = gen_loop_attachments(3, 0);
        const BipartiteCover c = cover(g, 0);
        for (EdgeId e : c.h_edges) CHECK_FALSE(g.is_loop(e));
        require_valid_cover(g, c);
    }
    SUBCASE("single edge") { CHECK(cover(single_edge(), 0).h_edges == std::vector<EdgeId>{0}); }
    SUBCASE("errors") {
        CHECK(kind_of([] { cover(PlaneGraph::from_rotation(1, 0, {{}}), 0); }) == ErrorKind::TooSmall);
        CHECK(kind_of([] { cover(disjoint_union({single_edge(), single_edge()}), 0); }) == ErrorKind::Disconnected);
        const PlaneGraph tl = gen_loop_attachments(3, 0);
        EdgeId loop = 0;
        while (!tl.is_loop(loop)) ++loop;
        CHECK(kind_of([&] { cover(tl, loop); }) == ErrorKind::InvalidArgument);
    }
}

TEST_CASE("cover on adversarial families") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const PlaneGraph chain = gen_multi_block_chain(2 + seed % 6, seed);
        require_valid_cover(chain, cover(chain, default_reference_edge(chain)));
        const PlaneGraph loops = gen_loop_attachments(5 + seed, seed);
        require_valid_cover(loops, cover(loops, default_reference_edge(loops)));
        const PlaneGraph bigons = gen_k4_bigons(4 * (1 + seed % 5), seed);
        require_valid_cover(bigons, cover(bigons, default_reference_edge(bigons)));
        const PlaneGraph sparse = gen_sparse_plane(3 + seed * 2, seed, false);
        for (EdgeId e = 0; e < static_cast<EdgeId>(sparse.num_edges()); e += 7)
            if (!sparse.is_loop(e)) require_valid_cover(sparse, cover(sparse, e));
    }
}

TEST_CASE("partition examples") {
    SUBCASE("K3") {
        const VertexPartition p = partition(gen_cycle(3));
        CHECK(p.v1.size() + p.v2.size() == 3);
        CHECK(std::min(p.v1.size(), p.v2.size()) == 1);
        require_valid_partition(gen_cycle(3), p, FaceMode::All);
    }
    SUBCASE("K4") {
        const VertexPartition p = partition(gen_k4());
        CHECK(p.v1.size() == 2);
        CHECK(p.v2.size() == 2);
        require_valid_partition(gen_k4(), p, FaceMode::All);
    }
    SUBCASE("single edge") {
        const VertexPartition p = partition(single_edge());
        CHECK(p.v1 == std::vector<VertexId>{0});
        CHECK(p.v2 == std::vector<VertexId>{1});
    }
    SUBCASE("C5") {
        const VertexPartition p = partition(gen_cycle(5));
        CHECK(std::min(p.v1.size(), p.v2.size()) == 2);
        require_valid_partition(gen_cycle(5), p, FaceMode::All);
    }
}

TEST_CASE("partition modes and errors") {
    CHECK(kind_of([] { partition(two_parallel()); }) == ErrorKind::StrictModeViolation);
    CHECK(kind_of([] { partition(doubled_triangle()); }) == ErrorKind::StrictModeViolation);
    CHECK(kind_of([] { partition(gen_loop_attachments(3, 0)); }) == ErrorKind::StrictModeViolation);
    require_valid_partition(two_parallel(), partition(two_parallel(), std::nullopt, PartitionMode::Permissive),
                            FaceMode::ThreePlus);
    require_valid_partition(doubled_triangle(), partition(doubled_triangle(), 3, PartitionMode::Permissive),
                            FaceMode::ThreePlus);
    CHECK(kind_of([] { partition(PlaneGraph::from_rotation(1, 0, {{}})); }) == ErrorKind::TooSmall);
    CHECK(kind_of([] { partition(disjoint_union({gen_cycle(3), PlaneGraph::from_rotation(1, 0, {{}})})); }) ==
          ErrorKind::TooSmall);
    // A vertex whose only edge is a loop has no neighbour.
    CHECK(kind_of([] { partition(PlaneGraph::from_rotation(1, 1, {{0, 1}}), std::nullopt, PartitionMode::Permissive); }) ==
          ErrorKind::TooSmall);
}

TEST_CASE("partition of disconnected inputs is per component") {
    const PlaneGraph g = disjoint_union({gen_k4(), gen_cycle(5), single_edge(), gen_triangulation(20, 3)});
    const VertexPartition p = partition(g, 9);
    CHECK(contains(p.witness.h_edges, 9));
    require_valid_partition(g, p, FaceMode::All);
}

TEST_CASE("partition on random strict and permissive instances") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const std::size_t n = 3 + seed * 3;
        const PlaneGraph t = gen_triangulation(n, seed);
        require_valid_partition(t, partition(t), FaceMode::All);
        const PlaneGraph s = gen_sparse_plane(n, seed, true);
        require_valid_partition(s, partition(s), FaceMode::All);
        const PlaneGraph p = gen_sparse_plane(n, seed, false);
        require_valid_partition(p, partition(p, std::nullopt, PartitionMode::Permissive), FaceMode::ThreePlus);
        const VertexPartition blossom = partition(t, std::nullopt, PartitionMode::Strict, MatchingEngine::Blossom);
        require_valid_partition(t, blossom, FaceMode::All);
    }
}

TEST_CASE("partition is among the brute-force solutions") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const PlaneGraph g = seed % 2 ? gen_triangulation(3 + seed % 10, seed) : gen_sparse_plane(3 + seed % 10, seed, true);
        const VertexPartition p = partition(g);
        std::uint32_t mask = 0;
        for (VertexId v : p.v1) mask |= 1u << v;
        const auto valid = brute_force_valid_partitions(g, FaceMode::All);
        CHECK(std::find(valid.begin(), valid.end(), mask) != valid.end());
    }
}
