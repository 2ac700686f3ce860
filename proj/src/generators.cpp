#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "facehit/oracle.hpp"

namespace facehit {

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Puts a new vertex inside the triangle whose walk starts with d1 and joins
// it to the three corners. Returns the new vertex.
VertexId split_triangle(EmbeddingBuilder& b, DartId d1) {
    const DartId d2 = b.face_next(d1);
    const DartId d3 = b.face_next(d2);
    const VertexId x = b.add_vertex();
    const EdgeId e = b.add_edge(x, kNone, b.head(d3), twin(d3));
    const DartId into_x = 2 * e + 1;
    b.add_chord(d1, into_x);
    b.add_chord(d2, into_x);
    return x;
}

bool adjacent(const EmbeddingBuilder& b, VertexId a, VertexId c) {
    const DartId start = b.any_dart(a);
    DartId d = start;
    do {
        if (b.head(d) == c) return true;
        d = b.rot_next(d);
    } while (d != start);
    return false;
}

struct Union {
    std::vector<std::int32_t> parent;
    explicit Union(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::int32_t find(std::int32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Inserts a loop at the corner after dart `after` (kNone for an isolated
// vertex). Returns the dart whose face is the inside of the loop.
DartId add_loop(EmbeddingBuilder& b, VertexId v, DartId after) {
    const EdgeId e = b.add_edge(v, after, v, after == kNone ? kNone : after);
    return 2 * e;
}

// Parallel copy of the edge of dart d, forming a bigon with it.
void double_edge(EmbeddingBuilder& b, DartId d) {
    b.add_edge(b.tail(d), d, b.head(d), b.rot_prev(twin(d)));
}

// Glue rotation lists: vertex b's darts are spliced into a's rotation at
// position pos, and b disappears. Ids above b shift down by one.
PlaneGraph identify(const PlaneGraph& g, VertexId a, VertexId bv, std::size_t pos) {
    auto rot = g.rotation_lists();
    auto& ra = rot[a];
    const auto& rb = rot[bv];
    ra.insert(ra.begin() + static_cast<std::ptrdiff_t>(std::min(pos, ra.size())), rb.begin(), rb.end());
    rot.erase(rot.begin() + bv);
    return PlaneGraph::from_rotation(rot.size(), g.num_edges(), rot);
}

PlaneGraph add_bridge(const PlaneGraph& g, VertexId a, std::size_t pa, VertexId bv, std::size_t pb) {
    auto rot = g.rotation_lists();
    const auto e = static_cast<DartId>(g.num_edges());
    rot[a].insert(rot[a].begin() + static_cast<std::ptrdiff_t>(std::min(pa, rot[a].size())), 2 * e);
    rot[bv].insert(rot[bv].begin() + static_cast<std::ptrdiff_t>(std::min(pb, rot[bv].size())), 2 * e + 1);
    return PlaneGraph::from_rotation(rot.size(), g.num_edges() + 1, rot);
}

} // namespace

PlaneGraph from_neighbour_lists(const std::vector<std::vector<VertexId>>& nbrs) {
    const std::size_t n = nbrs.size();
    std::vector<std::vector<DartId>> rot(n);
    std::map<std::pair<VertexId, VertexId>, EdgeId> ids;
    for (std::size_t v = 0; v < n; ++v) {
        const auto vi = static_cast<VertexId>(v);
        for (VertexId w : nbrs[v]) {
            if (w == vi) throw Error(ErrorKind::InvalidArgument, "neighbour lists must be simple");
            const std::pair<VertexId, VertexId> key{std::min(vi, w), std::max(vi, w)};
            const EdgeId e = ids.try_emplace(key, static_cast<EdgeId>(ids.size())).first->second;
            rot[v].push_back(vi == key.first ? 2 * e : 2 * e + 1);
        }
    }
    return PlaneGraph::from_rotation(n, ids.size(), rot);
}

PlaneGraph gen_cycle(std::size_t length) {
    if (length < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs length >= 3");
    std::vector<std::vector<VertexId>> nbrs(length);
    for (std::size_t v = 0; v < length; ++v) {
        nbrs[v] = {static_cast<VertexId>((v + 1) % length), static_cast<VertexId>((v + length - 1) % length)};
    }
    return from_neighbour_lists(nbrs);
}

PlaneGraph gen_k4() { return from_neighbour_lists({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}); }

PlaneGraph gen_prism() {
    // Outer triangle 0,1,2 and inner triangle 3,4,5 with rungs i -- i+3.
    return from_neighbour_lists({{1, 3, 2}, {2, 4, 0}, {0, 5, 1}, {0, 4, 5}, {1, 5, 3}, {2, 3, 4}});
}

PlaneGraph gen_octahedron() {
    // Poles 0 and 5 around the equator 1,2,3,4.
    return from_neighbour_lists({{1, 2, 3, 4},
                                 {0, 4, 5, 2},
                                 {0, 1, 5, 3},
                                 {0, 2, 5, 4},
                                 {0, 3, 5, 1},
                                 {1, 4, 3, 2}});
}

PlaneGraph gen_triangulation(std::size_t n, std::uint64_t seed) {
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "triangulation needs n >= 3");
    if (n == 3) return gen_cycle(3);
    Rng rng(seed);
    EmbeddingBuilder b(gen_k4());
    std::vector<DartId> faces;  // one dart per triangle
    {
        const PlaneGraph k4 = gen_k4();
        for (std::size_t f = 0; f < k4.num_faces(); ++f) faces.push_back(k4.face_walk(static_cast<FaceId>(f))[0]);
    }
    std::vector<std::int32_t> deg(n, 3);
    while (b.num_vertices() < n) {
        const std::size_t i = pick(rng, faces.size());
        const DartId d1 = faces[i];
        const DartId d2 = b.face_next(d1);
        const DartId d3 = b.face_next(d2);
        for (DartId d : {d1, d2, d3}) ++deg[b.tail(d)];
        split_triangle(b, d1);
        faces[i] = d1;
        faces.push_back(d2);
        faces.push_back(d3);
    }
    // Flips spread the degree distribution away from the stacked shape.
    const std::size_t flips = n;
    for (std::size_t k = 0; k < flips; ++k) {
        const auto e = static_cast<EdgeId>(pick(rng, b.num_edge_slots()));
        if (!b.alive(e)) continue;
        const DartId p = 2 * e;
        const DartId q = 2 * e + 1;
        const VertexId a = b.tail(p);
        const VertexId bb = b.head(p);
        const DartId bc = b.face_next(p);
        const DartId ad = b.face_next(q);
        const VertexId c = b.head(bc);
        const VertexId d = b.head(ad);
        if (c == d || deg[a] <= 3 || deg[bb] <= 3 || adjacent(b, c, d)) continue;
        b.remove_edge(e);
        b.add_chord(bc, ad);
        --deg[a];
        --deg[bb];
        ++deg[c];
        ++deg[d];
    }
    return b.build();
}

PlaneGraph gen_sparse_plane(std::size_t n, std::uint64_t seed, bool strict) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "sparse graph needs n >= 2");
    if (n == 2) return PlaneGraph::from_rotation(2, 1, {{0}, {1}});
    const PlaneGraph tri = gen_triangulation(n, seed);
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<EdgeId> order(tri.num_edges());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const double keep_extra = std::uniform_real_distribution<double>(0.0, 0.7)(rng);
    Union uf(n);
    std::vector<char> keep(tri.num_edges(), 0);
    for (EdgeId e : order) {
        if (uf.unite(tri.endpoint_u(e), tri.endpoint_v(e)) || coin(rng, keep_extra)) keep[e] = 1;
    }
    PlaneGraph g = restrict_edges(tri, keep).graph;
    if (strict) return g;

    EmbeddingBuilder b(g);
    const std::size_t extras = 1 + pick(rng, std::max<std::size_t>(1, n / 4));
    for (std::size_t k = 0; k < extras; ++k) {
        const auto v = static_cast<VertexId>(pick(rng, n));
        if (coin(rng, 0.5)) {
            add_loop(b, v, b.any_dart(v));
        } else {
            double_edge(b, b.any_dart(v));
        }
    }
    return b.build();
}

PlaneGraph gen_biconnected(std::size_t n, std::uint64_t seed) {
    PlaneGraph tri = gen_triangulation(n, seed);
    if (n <= 3) return tri;
    Rng rng(seed * 31 + 7);
    EmbeddingBuilder b(tri);
    std::vector<EdgeId> order(tri.num_edges());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const double attempt = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
    std::vector<std::int32_t> mark(n, -1);
    for (EdgeId e : order) {
        if (!coin(rng, attempt)) continue;
        // Removing e keeps every face a simple cycle iff the two merged faces
        // share no vertex besides the endpoints of e.
        const VertexId u = b.tail(2 * e);
        const VertexId v = b.head(2 * e);
        bool ok = true;
        DartId d = b.face_next(2 * e);
        while (d != 2 * e) {
            mark[b.tail(d)] = e;
            d = b.face_next(d);
        }
        d = b.face_next(2 * e + 1);
        while (d != 2 * e + 1) {
            const VertexId x = b.tail(d);
            if (x != u && x != v && mark[x] == e) ok = false;
            d = b.face_next(d);
        }
        if (ok) b.remove_edge(e);
    }
    return b.build();
}

PlaneGraph subdivide(const PlaneGraph& g, const std::vector<std::size_t>& counts) {
    std::vector<std::vector<DartId>> rot = g.rotation_lists();
    std::size_t m = g.num_edges();
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        if (counts[e] == 0) continue;
        // Edge e becomes the first segment; the last segment takes over the
        // v-side slot of e at its endpoint.
        const VertexId v = g.endpoint_v(static_cast<EdgeId>(e));
        DartId back = static_cast<DartId>(2 * e + 1);
        for (std::size_t j = 0; j < counts[e]; ++j) {
            const auto next = static_cast<EdgeId>(m++);
            rot.push_back({back, 2 * next});
            back = 2 * next + 1;
        }
        for (DartId& d : rot[v])
            if (d == static_cast<DartId>(2 * e + 1)) d = back;
    }
    return PlaneGraph::from_rotation(rot.size(), m, rot);
}

PlaneGraph gen_odd_faces(std::size_t n, std::uint64_t seed, bool min_degree_three) {
    Rng rng(seed + 0x51ed);
    if (min_degree_three) {
        // Every edge of a triangulation gets two subdivision vertices; inside
        // each 9-face a new vertex takes the first subdivision vertex after
        // each original corner. Both sides of an edge pick different
        // subdivision vertices, and all faces become pentagons.
        const std::size_t base = std::max<std::size_t>(4, (n + 16) / 9);
        const PlaneGraph t = gen_triangulation(base, rng());
        const PlaneGraph g = subdivide(t, std::vector<std::size_t>(t.num_edges(), 2));
        EmbeddingBuilder b(g);
        for (std::size_t f = 0; f < g.num_faces(); ++f) {
            std::vector<DartId> into;
            for (DartId d : g.face_walk(static_cast<FaceId>(f)))
                if (static_cast<std::size_t>(g.tail(d)) < base) into.push_back(d);
            const VertexId x = b.add_vertex();
            const EdgeId e = b.add_edge(x, kNone, b.head(into[0]), twin(into[0]));
            for (std::size_t i = 1; i < into.size(); ++i) b.add_chord(into[i], 2 * e + 1);
        }
        return b.build();
    }
    for (std::uint64_t attempt = 0; attempt < 200; ++attempt) {
        const PlaneGraph g = gen_biconnected(std::max<std::size_t>(n, 3), rng());
        const std::size_t f = g.num_faces();
        if (f % 2) continue;
        // Dual T-join: flip the parity of every even face along a spanning
        // tree of the dual.
        const PlaneGraph d = dual(g);
        std::vector<char> need(f, 0);
        for (std::size_t x = 0; x < f; ++x) need[x] = g.face_degree(static_cast<FaceId>(x)) % 2 == 0;
        std::vector<EdgeId> up(f, kNone);
        std::vector<VertexId> order{0};
        std::vector<char> seen(f, 0);
        seen[0] = 1;
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (DartId dd : d.rotation(order[i])) {
                const VertexId w = d.head(dd);
                if (seen[w]) continue;
                seen[w] = 1;
                up[w] = edge_of(dd);
                order.push_back(w);
            }
        }
        std::vector<std::size_t> counts(g.num_edges(), 0);
        for (std::size_t i = order.size(); i-- > 1;) {
            const VertexId x = order[i];
            if (!need[x]) continue;
            counts[up[x]] += 1;
            need[d.other_end(up[x], x)] ^= 1;
        }
        std::vector<std::size_t> degree(f);
        for (std::size_t x = 0; x < f; ++x) degree[x] = g.face_degree(static_cast<FaceId>(x));
        for (std::size_t e = 0; e < g.num_edges(); ++e) {
            degree[g.face_of(static_cast<DartId>(2 * e))] += counts[e];
            degree[g.face_of(static_cast<DartId>(2 * e + 1))] += counts[e];
        }
        for (std::size_t x = 0; x < f; ++x) {
            const auto fx = static_cast<FaceId>(x);
            while (degree[x] < 5) {
                const EdgeId e = edge_of(g.face_walk(fx)[pick(rng, g.face_degree(fx))]);
                counts[e] += 2;
                degree[g.face_of(2 * e)] += 2;
                degree[g.face_of(2 * e + 1)] += 2;
            }
        }
        return subdivide(g, counts);
    }
    throw Error(ErrorKind::InvariantViolation, "odd-face generator gave up");
}

PlaneGraph disjoint_union(const std::vector<PlaneGraph>& parts) {
    std::vector<std::vector<DartId>> rot;
    std::size_t m = 0;
    for (const PlaneGraph& p : parts) {
        for (const auto& r : p.rotation_lists()) {
            std::vector<DartId> shifted;
            shifted.reserve(r.size());
            for (DartId d : r) shifted.push_back(d + static_cast<DartId>(2 * m));
            rot.push_back(std::move(shifted));
        }
        m += p.num_edges();
    }
    return PlaneGraph::from_rotation(rot.size(), m, rot);
}

PlaneGraph gen_k4_bigons(std::size_t n, std::uint64_t seed) {
    const std::size_t copies = std::max<std::size_t>(1, n / 4);
    Rng rng(seed);
    EmbeddingBuilder k(gen_k4());
    for (EdgeId e = 0; e < 6; ++e) double_edge(k, 2 * e);
    const PlaneGraph doubled = k.build();
    PlaneGraph g = disjoint_union(std::vector<PlaneGraph>(copies, doubled));
    for (std::size_t c = 1; c < copies; ++c) {
        const auto a = static_cast<VertexId>(4 * (c - 1) + pick(rng, 4));
        const auto bv = static_cast<VertexId>(4 * c + pick(rng, 4));
        g = add_bridge(g, a, pick(rng, 7), bv, pick(rng, 7));
    }
    return g;
}

PlaneGraph gen_loop_attachments(std::size_t n, std::uint64_t seed) {
    if (seed == 0) {
        EmbeddingBuilder b(gen_cycle(3));
        add_loop(b, 0, b.any_dart(0));
        return b.build();
    }
    Rng rng(seed);
    EmbeddingBuilder b(gen_sparse_plane(std::max<std::size_t>(n, 2), seed, true));
    const std::size_t base = b.num_vertices();
    const std::size_t loops = 1 + pick(rng, std::max<std::size_t>(1, base / 2));
    for (std::size_t k = 0; k < loops; ++k) {
        const auto v = static_cast<VertexId>(pick(rng, base));
        DartId after = b.any_dart(v);
        for (std::size_t s = pick(rng, 4); s > 0; --s) after = b.rot_next(after);
        DartId inside = add_loop(b, v, after);
        switch (pick(rng, 3)) {
        case 0:
            break;
        case 1: {  // pendant vertex inside the loop
            const VertexId w = b.add_vertex();
            b.add_edge(v, twin(inside), w, kNone);
            break;
        }
        default:  // nested loop inside the loop
            add_loop(b, v, twin(inside));
            break;
        }
    }
    return b.build();
}

PlaneGraph gen_multi_block_chain(std::size_t blocks, std::uint64_t seed) {
    Rng rng(seed);
    auto random_block = [&]() -> PlaneGraph {
        switch (pick(rng, 6)) {
        case 0: return gen_cycle(3 + pick(rng, 4));
        case 1: return gen_k4();
        case 2: return gen_triangulation(4 + pick(rng, 6), rng());
        case 3: {
            EmbeddingBuilder b(gen_cycle(3 + pick(rng, 3)));
            double_edge(b, 0);
            return b.build();
        }
        case 4: return PlaneGraph::from_rotation(2, 1, {{0}, {1}});
        default: {
            EmbeddingBuilder b(1);
            add_loop(b, 0, kNone);
            return b.build();
        }
        }
    };
    PlaneGraph g = random_block();
    for (std::size_t k = 1; k < std::max<std::size_t>(blocks, 1); ++k) {
        const PlaneGraph next = random_block();
        const std::size_t n0 = g.num_vertices();
        const auto a = static_cast<VertexId>(pick(rng, n0));
        const auto bv = static_cast<VertexId>(n0 + pick(rng, next.num_vertices()));
        const PlaneGraph both = disjoint_union({g, next});
        const std::size_t pa = pick(rng, both.degree(a) + 1);
        if (coin(rng, 0.6)) {
            g = identify(both, a, bv, pa);
        } else {
            g = add_bridge(both, a, pa, bv, pick(rng, both.degree(bv) + 1));
        }
    }
    return g;
}

} // namespace facehit
