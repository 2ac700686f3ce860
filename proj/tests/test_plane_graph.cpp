#include "doctest.h"

#include "facehit/oracle.hpp"
#include "facehit/plane_graph.hpp"

using namespace facehit;

namespace {

PlaneGraph single_edge() { return PlaneGraph::from_rotation(2, 1, {{0}, {1}}); }

PlaneGraph single_loop() { return PlaneGraph::from_rotation(1, 1, {{0, 1}}); }

PlaneGraph doubled_edge() { return PlaneGraph::from_rotation(2, 2, {{0, 2}, {1, 3}}); }

std::size_t degree_sum(const PlaneGraph& g) {
    std::size_t s = 0;
    for (std::size_t f = 0; f < g.num_faces(); ++f) s += g.face_degree(static_cast<FaceId>(f));
    return s;
}

} // namespace

TEST_CASE("build: single edge, triangle, tetrahedron") {
    const PlaneGraph e = single_edge();
    CHECK(e.num_vertices() == 2);
    CHECK(e.num_edges() == 1);
    CHECK(e.num_faces() == 1);

    const PlaneGraph k3 = gen_cycle(3);
    CHECK(k3.num_faces() == 2);
    CHECK(euler_holds(k3));

    const PlaneGraph k4 = gen_k4();
    CHECK(k4.num_vertices() == 4);
    CHECK(k4.num_edges() == 6);
    CHECK(k4.num_faces() == 4);
    CHECK(euler_holds(k4));
}

TEST_CASE("build rejects malformed rotations") {
    auto kind_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& err) {
            return err.kind();
        }
        return ErrorKind::InvariantViolation;
    };
    CHECK(kind_of([] { PlaneGraph::from_rotation(0, 0, {}); }) == ErrorKind::MalformedRotation);
    CHECK(kind_of([] { PlaneGraph::from_rotation(2, 1, {{0}, {0}}); }) == ErrorKind::MalformedRotation);
    CHECK(kind_of([] { PlaneGraph::from_rotation(2, 1, {{0}, {}}); }) == ErrorKind::MalformedRotation);
    CHECK(kind_of([] { PlaneGraph::from_rotation(2, 1, {{0}, {5}}); }) == ErrorKind::MalformedRotation);
}

TEST_CASE("trace_faces") {
    const PlaneGraph e = single_edge();
    CHECK(e.face_degree(0) == 2);

    const PlaneGraph k3 = gen_cycle(3);
    for (FaceId f = 0; f < 2; ++f) {
        CHECK(k3.face_degree(f) == 3);
        CHECK(distinct_vertices_on_face(k3, f) == 3);
    }

    const PlaneGraph loop = single_loop();
    CHECK(loop.num_faces() == 2);
    CHECK(loop.face_degree(0) == 1);
    CHECK(loop.face_degree(1) == 1);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const PlaneGraph g = gen_sparse_plane(30, seed, false);
        CHECK(degree_sum(g) == 2 * g.num_edges());
        CHECK(euler_holds(g));
    }
}

TEST_CASE("dual") {
    const PlaneGraph d4 = dual(gen_k4());
    CHECK(d4.num_vertices() == 4);
    CHECK(d4.num_edges() == 6);
    for (VertexId v = 0; v < 4; ++v) CHECK(d4.degree(v) == 3);

    const PlaneGraph de = dual(single_edge());
    CHECK(de.num_vertices() == 1);
    CHECK(de.num_edges() == 1);
    CHECK(de.is_loop(0));

    const PlaneGraph db = dual(doubled_edge());
    CHECK(db.num_vertices() == 2);
    CHECK(db.num_edges() == 2);
    CHECK_FALSE(db.is_loop(0));
    CHECK_FALSE(db.is_loop(1));

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const PlaneGraph g = gen_sparse_plane(3 + seed % 8, seed, seed % 2 == 0);
        CHECK(embedded_isomorphic(dual(dual(g)), g));
    }
    const PlaneGraph tri = gen_triangulation(40, 3);
    const PlaneGraph td = dual(tri);
    for (std::size_t v = 0; v < td.num_vertices(); ++v) CHECK(td.degree(static_cast<VertexId>(v)) == 3);
}

TEST_CASE("classify") {
    const Classification cb = classify(doubled_edge());
    CHECK(cb.faces[0].is_bigon);
    CHECK_FALSE(cb.faces[0].is_three_plus);

    const Classification c4 = classify(gen_k4());
    for (const FaceInfo& f : c4.faces) {
        CHECK(f.is_three_plus);
        CHECK(f.is_triangle);
    }

    // Loop at v with a pendant edge (v,w) inside: walk loop, vw, wv.
    EmbeddingBuilder b(2);
    const EdgeId loop = b.add_edge(0, kNone, 0, kNone);
    b.add_edge(0, 2 * loop + 1, 1, kNone);
    const PlaneGraph g = b.build();
    const Classification cl = classify(g);
    bool found = false;
    for (const FaceInfo& f : cl.faces) {
        if (f.degree == 3) {
            found = true;
            CHECK(f.distinct_vertices == 2);
            CHECK_FALSE(f.is_three_plus);
        }
    }
    CHECK(found);
    CHECK(cl.edge_is_loop[0]);
    CHECK(cl.edge_is_bridge[1]);
}

TEST_CASE("restrict_edges keeps the induced rotation") {
    const PlaneGraph k4 = gen_k4();
    std::vector<char> keep(6, 1);
    keep[0] = 0;
    const Subgraph s = restrict_edges(k4, keep);
    CHECK(s.graph.num_edges() == 5);
    CHECK(s.graph.num_faces() == 3);
    CHECK(euler_holds(s.graph));
    CHECK(s.parent_to_edge[0] == kNone);
}
