#include "doctest.h"

#include <algorithm>
#include <functional>

#include "facehit/decompose.hpp"
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

// Two triangles 0-1-2 and 2-3-4 sharing vertex 2.
PlaneGraph bowtie() { return from_neighbour_lists({{1, 2}, {2, 0}, {0, 1, 3, 4}, {4, 2}, {2, 3}}); }

void check_st(const PlaneGraph& g, EdgeId e, VertexId s) {
    const auto num = st_numbering(g, e, s);
    const VertexId t = g.other_end(e, s);
    CHECK(num[s] == 0);
    CHECK(num[t] == static_cast<std::int32_t>(g.num_vertices() - 1));
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (static_cast<VertexId>(v) == s || static_cast<VertexId>(v) == t) continue;
        bool lower = false, higher = false;
        for (DartId d : g.rotation(static_cast<VertexId>(v))) {
            lower = lower || num[g.head(d)] < num[v];
            higher = higher || num[g.head(d)] > num[v];
        }
        CHECK(lower);
        CHECK(higher);
    }
}

} // namespace

TEST_CASE("blocks") {
    const BlockForest k4 = blocks(gen_k4());
    CHECK(k4.blocks.size() == 1);
    CHECK(std::count(k4.is_cutvertex.begin(), k4.is_cutvertex.end(), 1) == 0);

    const BlockForest bt = blocks(bowtie());
    CHECK(bt.blocks.size() == 2);
    CHECK(bt.is_cutvertex[2]);
    CHECK(std::count(bt.is_cutvertex.begin(), bt.is_cutvertex.end(), 1) == 1);

    const PlaneGraph tl = gen_loop_attachments(3, 0);
    const BlockForest lb = blocks(tl);
    CHECK(lb.blocks.size() == 2);
    int trivial = 0;
    for (const Block& b : lb.blocks) trivial += b.trivial;
    CHECK(trivial == 1);
    CHECK(lb.is_cutvertex[0]);

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const PlaneGraph g = gen_multi_block_chain(5, seed);
        const BlockForest f = blocks(g);
        std::size_t edges = 0;
        std::vector<int> seen(g.num_vertices(), 0);
        for (const Block& b : f.blocks) {
            edges += b.edges.size();
            for (VertexId v : b.vertices) ++seen[v];
        }
        CHECK(edges == g.num_edges());
        for (std::size_t v = 0; v < g.num_vertices(); ++v) CHECK((seen[v] >= 2) == (f.is_cutvertex[v] != 0));
    }
}

TEST_CASE("st_numbering") {
    check_st(gen_k4(), 0, gen_k4().endpoint_u(0));
    check_st(gen_cycle(7), 3, gen_cycle(7).endpoint_v(3));
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const PlaneGraph g = gen_biconnected(5 + seed, seed);
        const EdgeId e = static_cast<EdgeId>(seed % g.num_edges());
        check_st(g, e, g.endpoint_u(e));
    }
}

TEST_CASE("ear_decomposition on small graphs") {
    const PlaneGraph c4 = gen_cycle(4);
    const VertexId s = c4.endpoint_u(0);
    const EarDecomposition ed = ear_decomposition(c4, 0, s, c4.face_of(0));
    REQUIRE(ed.ears.size() == 2);
    CHECK(ed.ears[0].path.size() == 2);
    CHECK(ed.ears[1].path.size() == 4);
    CHECK(ed.ears[1].face == c4.face_of(0));
    CHECK(validate_ear_decomposition(c4, ed).ok);

    // K4 has m - n + 2 = 4 ears: the edge plus one per interior face.
    const PlaneGraph k4 = gen_k4();
    for (EdgeId e = 0; e < 6; ++e) {
        for (int side = 0; side < 2; ++side) {
            const EarDecomposition ek = ear_decomposition(k4, e, k4.endpoint_u(e), k4.face_of(2 * e + side));
            CHECK(ek.ears.size() == 4);
            const EarReport rep = validate_ear_decomposition(k4, ek);
            CHECK(rep.ok);
        }
    }
}

TEST_CASE("ear_decomposition preconditions") {
    const PlaneGraph pendant = from_neighbour_lists({{1, 2}, {2, 0}, {0, 1, 3}, {2}});
    CHECK(kind_of([&] { ear_decomposition(pendant, 0, 0, 0); }) == ErrorKind::NotBiconnected);

    EmbeddingBuilder b(gen_cycle(3));
    b.add_edge(b.tail(0), 0, b.head(0), b.rot_prev(1));
    const PlaneGraph big = b.build();
    CHECK(kind_of([&] { ear_decomposition(big, 1, big.endpoint_u(1), big.face_of(2)); }) == ErrorKind::BigonPresent);

    const PlaneGraph k4 = gen_k4();
    FaceId off = kNone;
    for (FaceId f = 0; f < 4; ++f)
        if (f != k4.face_of(0) && f != k4.face_of(1)) off = f;
    CHECK(kind_of([&] { ear_decomposition(k4, 0, k4.endpoint_u(0), off); }) == ErrorKind::EdgeNotOnFace);
}

TEST_CASE("validate_ear_decomposition catches broken decompositions") {
    const PlaneGraph k4 = gen_k4();
    EarDecomposition ed = ear_decomposition(k4, 0, k4.endpoint_u(0), k4.face_of(0));
    REQUIRE(validate_ear_decomposition(k4, ed).ok);

    EarDecomposition same = ed;
    // A closed walk around a triangle: darts are consistent, endpoints equal.
    same.ears[1].darts.assign(k4.face_walk(0).begin(), k4.face_walk(0).end());
    same.ears[1].path.clear();
    for (DartId d : same.ears[1].darts) same.ears[1].path.push_back(k4.tail(d));
    same.ears[1].path.push_back(same.ears[1].path.front());
    const EarReport r1 = validate_ear_decomposition(k4, same);
    CHECK_FALSE(r1.ok);
    bool named = false;
    for (const auto& v : r1.violations) named = named || v.find("two distinct endpoints") != std::string::npos;
    CHECK(named);

    EarDecomposition swapped = ed;
    std::swap(swapped.ears[1], swapped.ears[3]);
    CHECK_FALSE(validate_ear_decomposition(k4, swapped).ok);
}

TEST_CASE("ear_decomposition on random 2-connected graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const PlaneGraph g = gen_biconnected(4 + seed % 25, seed);
        REQUIRE(is_biconnected(g));
        const EdgeId e = static_cast<EdgeId>((seed * 7) % g.num_edges());
        const FaceId f = g.face_of(2 * e + static_cast<DartId>(seed % 2));
        const EarDecomposition ed = ear_decomposition(g, e, g.endpoint_v(e), f);
        CHECK(ed.ears.size() == g.num_edges() - g.num_vertices() + 2);
        const EarReport rep = validate_ear_decomposition(g, ed);
        CHECK(rep.ok);
        if (!rep.ok) MESSAGE(rep.violations.front());
    }
}
