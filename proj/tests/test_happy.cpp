#include "doctest.h"

#include <algorithm>
#include <array>
#include <functional>

#include "facehit/happy.hpp"
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

std::size_t count(const std::vector<Happiness>& h, Happiness what) {
    return static_cast<std::size_t>(std::count(h.begin(), h.end(), what));
}

std::size_t unhappy(const std::vector<Happiness>& h) { return count(h, Happiness::Unhappy); }

bool all_triangles(const PlaneGraph& g) {
    for (std::size_t f = 0; f < g.num_faces(); ++f)
        if (g.face_degree(static_cast<FaceId>(f)) != 3) return false;
    return true;
}

bool loop_free(const PlaneGraph& g) {
    for (std::size_t e = 0; e < g.num_edges(); ++e)
        if (g.is_loop(static_cast<EdgeId>(e))) return false;
    return true;
}

EarDecomposition decompose_at(const PlaneGraph& g, EdgeId e) {
    return ear_decomposition(g, e, g.endpoint_u(e), std::min(g.face_of(2 * e), g.face_of(2 * e + 1)));
}

// Frozen G_i^+ together with its origin flags.
std::pair<PlaneGraph, std::vector<char>> freeze(const AugmentationState& st) {
    std::vector<EdgeId> map;
    PlaneGraph p = st.gplus.build(&map);
    std::vector<char> orig(p.num_edges(), 0);
    for (std::size_t e = 0; e < map.size(); ++e) orig[e] = static_cast<std::size_t>(map[e]) < st.original_edges;
    return {p, orig};
}

void check_pipeline(const PlaneGraph& g, EdgeId e) {
    const EarDecomposition ed = decompose_at(g, e);
    bool all_ok = true;
    const AugmentationState st = build_gn_plus(g, ed, [&](const AugmentationState& s) {
        const InvariantReport r = check_augmentation_invariants(g, ed, s);
        if (!r.ok) {
            all_ok = false;
            MESSAGE(r.violations.front());
        }
    });
    CHECK(all_ok);
    AugmentationState copy = st;
    const HappySupergraph hs = close_outer(g, ed, copy);
    CHECK(all_triangles(hs.gplus));
    CHECK(loop_free(hs.gplus));
    CHECK(hs.gplus.num_edges() == 3 * g.num_vertices() - 6);
    const auto h = check_happiness(hs.gplus, hs.original);
    for (std::size_t v = 0; v < h.size(); ++v)
        if (static_cast<VertexId>(v) != ed.s) CHECK(h[v] != Happiness::Unhappy);
    CHECK(hs.unhappy_vertex.has_value() == (h[ed.s] == Happiness::Unhappy));
}

} // namespace

TEST_CASE("check_happiness") {
    const PlaneGraph k4 = gen_k4();
    const auto h = check_happiness(k4, std::vector<char>(6, 1));
    CHECK(unhappy(h) == 0);

    // C4 with the chord (s, y2): the outer face is a 4-gon, so the two chord
    // endpoints lack an original angle in a triangle.
    const PlaneGraph c4 = gen_cycle(4);
    EmbeddingBuilder b(c4);
    const DartId d0 = 0;  // 0 -> 1
    b.add_chord(c4.face_walk(c4.face_of(d0)).back(), b.face_next(d0));
    const PlaneGraph g = b.build();
    std::vector<char> orig(g.num_edges(), 0);
    std::fill(orig.begin(), orig.begin() + 4, 1);
    const auto hc = check_happiness(g, orig);
    CHECK(unhappy(hc) == 2);
}

TEST_CASE("C5 chord sets leave an endpoint of the first edge unhappy") {
    // Exhaustive over the 5 chords of C5 drawn inside one face: any subset
    // that keeps the embedding planar is a set of non-crossing diagonals.
    const PlaneGraph c5 = gen_cycle(5);
    const FaceId inside = c5.face_of(0);
    const auto walk = c5.face_walk(inside);
    std::vector<std::pair<int, int>> diagonals;
    for (int a = 0; a < 5; ++a)
        for (int c = a + 2; c < 5; ++c)
            if (!(a == 0 && c == 4)) diagonals.push_back({a, c});
    auto crosses = [](std::pair<int, int> x, std::pair<int, int> y) {
        auto in = [](int lo, int hi, int v) { return lo < v && v < hi; };
        return (in(x.first, x.second, y.first) && !in(x.first, x.second, y.second) && y.second != x.second &&
                y.second != x.first) ||
               (in(x.first, x.second, y.second) && !in(x.first, x.second, y.first) && y.first != x.first &&
                y.first != x.second);
    };
    for (int mask = 0; mask < (1 << diagonals.size()); ++mask) {
        std::vector<std::pair<int, int>> chosen;
        for (std::size_t i = 0; i < diagonals.size(); ++i)
            if (mask >> i & 1) chosen.push_back(diagonals[i]);
        bool planar = true;
        for (std::size_t i = 0; i < chosen.size(); ++i)
            for (std::size_t j = i + 1; j < chosen.size(); ++j) planar = planar && !crosses(chosen[i], chosen[j]);
        if (!planar) continue;
        // Add chords from outermost to innermost so corners stay valid: use
        // fresh builders and locate corners by their vertices each time.
        EmbeddingBuilder b(c5);
        for (auto [a, c] : chosen) {
            const VertexId va = c5.tail(walk[a]);
            const VertexId vc = c5.tail(walk[c]);
            // Find a face containing corners at va and vc on the inside.
            DartId in_a = kNone, in_c = kNone;
            const PlaneGraph cur = b.build();
            for (std::size_t f = 0; f < cur.num_faces() && in_a == kNone; ++f) {
                const auto w = cur.face_walk(static_cast<FaceId>(f));
                if (cur.face_of(1) == static_cast<FaceId>(f)) continue;  // outer side of dart 0
                DartId ia = kNone, ic = kNone;
                for (DartId d : w) {
                    if (cur.head(d) == va) ia = d;
                    if (cur.head(d) == vc) ic = d;
                }
                if (ia != kNone && ic != kNone) {
                    in_a = ia;
                    in_c = ic;
                }
            }
            REQUIRE(in_a != kNone);
            b.add_chord(in_a, in_c);
        }
        const PlaneGraph g = b.build();
        std::vector<char> orig(g.num_edges(), 0);
        std::fill(orig.begin(), orig.begin() + 5, 1);
        const auto h = check_happiness(g, orig);
        CHECK((h[c5.endpoint_u(0)] == Happiness::Unhappy || h[c5.endpoint_v(0)] == Happiness::Unhappy ||
               unhappy(h) > 0));
    }
}

TEST_CASE("augment_ear examples") {
    // C4: k = 2, l = 0. One chord (s, y2).
    const PlaneGraph c4 = gen_cycle(4);
    const EarDecomposition ed = decompose_at(c4, 0);
    const AugmentationState st = build_gn_plus(c4, ed);
    CHECK(st.chord_stage.size() == 1);
    const auto [p, orig] = freeze(st);
    const auto h = check_happiness(p, orig, p.face_of(ed.outer_dart));
    // Path s-y1-y2-t gets the chord (s, y2): y1 and t become interior-happy.
    std::vector<VertexId> path = ed.ears[1].path;
    if (path.front() == ed.t) std::reverse(path.begin(), path.end());
    CHECK(h[ed.s] != Happiness::InteriorHappy);
    CHECK(h[path[1]] == Happiness::InteriorHappy);
    CHECK(h[path[2]] != Happiness::InteriorHappy);
    CHECK(h[ed.t] == Happiness::InteriorHappy);
    CHECK(p.endpoint_u(4) + p.endpoint_v(4) == ed.s + path[2]);

    // K4: every interior face is already a triangle.
    const PlaneGraph k4 = gen_k4();
    const AugmentationState sk = build_gn_plus(k4, decompose_at(k4, 0));
    CHECK(sk.chord_stage.empty());

    // C5: two chords, exactly s not interior-happy.
    const PlaneGraph c5 = gen_cycle(5);
    const EarDecomposition e5 = decompose_at(c5, 0);
    const AugmentationState s5 = build_gn_plus(c5, e5);
    CHECK(s5.chord_stage.size() == 2);
    const auto [p5, o5] = freeze(s5);
    const auto h5 = check_happiness(p5, o5, p5.face_of(e5.outer_dart));
    CHECK(h5[e5.s] != Happiness::InteriorHappy);
    CHECK(h5[e5.ears[1].path[1]] == Happiness::InteriorHappy);
    CHECK(h5[e5.ears[1].path[3]] == Happiness::InteriorHappy);
}

TEST_CASE("close_outer") {
    const PlaneGraph c3 = gen_cycle(3);
    const EarDecomposition e3 = decompose_at(c3, 0);
    AugmentationState s3 = build_gn_plus(c3, e3);
    const HappySupergraph h3 = close_outer(c3, e3, s3);
    CHECK_FALSE(h3.unhappy_vertex.has_value());
    CHECK(h3.gplus.num_edges() == 3);

    // C4 ends with every vertex happy: s gets its angle from the outer triangle.
    const PlaneGraph c4 = gen_cycle(4);
    const EarDecomposition e4 = decompose_at(c4, 0);
    AugmentationState s4 = build_gn_plus(c4, e4);
    const HappySupergraph h4 = close_outer(c4, e4, s4);
    CHECK(unhappy(check_happiness(h4.gplus, h4.original)) == 0);

    const PlaneGraph c5 = gen_cycle(5);
    const EarDecomposition e5 = decompose_at(c5, 0);
    AugmentationState s5 = build_gn_plus(c5, e5);
    const HappySupergraph h5 = close_outer(c5, e5, s5);
    const auto hh = check_happiness(h5.gplus, h5.original);
    CHECK(unhappy(hh) == 1);
    CHECK(hh[e5.s] == Happiness::Unhappy);
    CHECK(h5.unhappy_vertex == e5.s);
}

TEST_CASE("pipeline invariants on cycles and random 2-connected graphs") {
    for (std::size_t len = 3; len <= 12; ++len) check_pipeline(gen_cycle(len), 0);
    check_pipeline(gen_k4(), 2);
    check_pipeline(gen_octahedron(), 5);
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const PlaneGraph g = gen_biconnected(4 + seed % 40, seed);
        check_pipeline(g, static_cast<EdgeId>(seed % g.num_edges()));
    }
}

TEST_CASE("build_all_happy") {
    CHECK(kind_of([] { build_all_happy(gen_cycle(5)); }) == ErrorKind::OddCycleUnfixable);
    CHECK(kind_of([] { build_all_happy(gen_cycle(7)); }) == ErrorKind::OddCycleUnfixable);

    const HappySupergraph h4 = build_all_happy(gen_cycle(4));
    CHECK(unhappy(check_happiness(h4.gplus, h4.original)) == 0);
    CHECK(all_happy_case(gen_cycle(4)) == AllHappyCase::EvenOrTriangleFace);

    const HappySupergraph h3 = build_all_happy(gen_cycle(3));
    CHECK(unhappy(check_happiness(h3.gplus, h3.original)) == 0);

    std::array<int, 4> cases{};
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const PlaneGraph g = gen_biconnected(3 + seed % 8, seed);
        if (g.num_edges() == g.num_vertices() && g.num_vertices() % 2 == 1 && g.num_vertices() >= 5) {
            CHECK(kind_of([&] { build_all_happy(g); }) == ErrorKind::OddCycleUnfixable);
            continue;
        }
        const AllHappyCase c = all_happy_case(g);
        ++cases[static_cast<int>(c)];
        const HappySupergraph hs = build_all_happy(g);
        CHECK(all_triangles(hs.gplus));
        CHECK(loop_free(hs.gplus));
        const auto h = check_happiness(hs.gplus, hs.original);
        CHECK(unhappy(h) == 0);
    }
    MESSAGE("case counts: " << cases[1] << " " << cases[2] << " " << cases[3]);
}

TEST_CASE("build_all_happy on all-odd-face graphs") {
    std::array<int, 4> cases{};
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const bool cubic = seed % 2 == 0;
        const PlaneGraph g = gen_odd_faces(cubic ? 6 + seed % 30 : 4 + seed % 12, seed, cubic);
        for (std::size_t f = 0; f < g.num_faces(); ++f) {
            CHECK(g.face_degree(static_cast<FaceId>(f)) % 2 == 1);
            CHECK(g.face_degree(static_cast<FaceId>(f)) >= 5);
        }
        if (g.num_faces() == 2) {
            CHECK(kind_of([&] { build_all_happy(g); }) == ErrorKind::OddCycleUnfixable);
            continue;
        }
        const AllHappyCase c = all_happy_case(g);
        ++cases[static_cast<int>(c)];
        CHECK((c == AllHappyCase::MergedFaces) == cubic);
        const HappySupergraph hs = build_all_happy(g);
        CHECK(all_triangles(hs.gplus));
        CHECK(loop_free(hs.gplus));
        CHECK(unhappy(check_happiness(hs.gplus, hs.original)) == 0);
    }
    MESSAGE("case counts: " << cases[1] << " " << cases[2] << " " << cases[3]);
}
