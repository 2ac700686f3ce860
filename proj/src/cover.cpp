#include "facehit/cover.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "facehit/decompose.hpp"
#include "facehit/happy.hpp"

namespace facehit {

namespace {

void require_edge(const PlaneGraph& g, EdgeId e) {
    if (e < 0 || static_cast<std::size_t>(e) >= g.num_edges())
        throw Error(ErrorKind::InvalidArgument, "edge " + std::to_string(e) + " out of range");
}

// Maps a cover of a subgraph back to parent edge ids and appends it.
void lift(const Subgraph& sub, const BipartiteCover& c, BipartiteCover& out) {
    for (EdgeId e : c.h_edges) out.h_edges.push_back(sub.edge_to_parent[e]);
    for (EdgeId e : c.removed_matching) out.removed_matching.push_back(sub.edge_to_parent[e]);
}

void normalize(BipartiteCover& c) {
    for (auto* v : {&c.h_edges, &c.removed_matching}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
}

struct UnionFind {
    std::vector<std::int32_t> p;
    explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    std::int32_t find(std::int32_t x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(std::int32_t a, std::int32_t b) { p[find(a)] = find(b); }
};

} // namespace

BipartiteCover cover_triangulated(const PlaneGraph& g, EdgeId e_hat, MatchingEngine engine) {
    require_edge(g, e_hat);
    for (std::size_t e = 0; e < g.num_edges(); ++e)
        if (g.is_loop(static_cast<EdgeId>(e)))
            throw Error(ErrorKind::HasLoop, "edge " + std::to_string(e) + " is a loop");
    if (g.num_components() != 1) throw Error(ErrorKind::Disconnected, "graph is not connected");
    for (std::size_t f = 0; f < g.num_faces(); ++f)
        if (g.face_degree(static_cast<FaceId>(f)) != 3)
            throw Error(ErrorKind::NotTriangulated, "face " + std::to_string(f) + " has degree " +
                                                        std::to_string(g.face_degree(static_cast<FaceId>(f))));
    // Dual edge ids equal primal edge ids.
    const Matching m = avoiding_matching(dual(g), e_hat, engine);
    std::vector<char> matched(g.num_edges(), 0);
    for (EdgeId e : m.edges) matched[e] = 1;
    BipartiteCover c;
    c.reference_edge = e_hat;
    for (std::size_t e = 0; e < g.num_edges(); ++e)
        (matched[e] ? c.removed_matching : c.h_edges).push_back(static_cast<EdgeId>(e));
    return c;
}

BipartiteCover cover_biconnected_nobigons(const PlaneGraph& g, EdgeId e_hat, MatchingEngine engine) {
    require_edge(g, e_hat);
    BipartiteCover c;
    c.reference_edge = e_hat;
    if (g.num_vertices() == 2) {
        // A 2-connected bigon-free graph on two vertices is a single edge.
        c.h_edges.resize(g.num_edges());
        std::iota(c.h_edges.begin(), c.h_edges.end(), 0);
        return c;
    }
    const VertexId s = g.tail(2 * e_hat);
    const HappySupergraph plus = build_happy_supergraph(g, e_hat, s);
    const BipartiteCover cp = cover_triangulated(plus.gplus, e_hat, engine);
    // Original edges keep their ids inside G+.
    const auto m = static_cast<EdgeId>(g.num_edges());
    for (EdgeId e : cp.h_edges)
        if (e < m) c.h_edges.push_back(e);
    for (EdgeId e : cp.removed_matching)
        if (e < m) c.removed_matching.push_back(e);
    return c;
}

BipartiteCover cover_biconnected(const PlaneGraph& g, EdgeId e_hat, MatchingEngine engine) {
    require_edge(g, e_hat);
    const std::size_t m = g.num_edges();
    UnionFind uf(m);
    bool any = false;
    const Classification cl = classify(g);
    for (std::size_t f = 0; f < g.num_faces(); ++f) {
        if (!cl.faces[f].is_bigon) continue;
        const auto walk = g.face_walk(static_cast<FaceId>(f));
        uf.unite(edge_of(walk[0]), edge_of(walk[1]));
        any = true;
    }
    if (!any) return cover_biconnected_nobigons(g, e_hat, engine);

    // One kept edge per bundle: e_hat if it is in the bundle, else the lowest id.
    std::vector<EdgeId> rep(m, kNone);
    for (std::size_t e = 0; e < m; ++e) {
        const auto root = uf.find(static_cast<EdgeId>(e));
        if (rep[root] == kNone) rep[root] = static_cast<EdgeId>(e);
    }
    rep[uf.find(e_hat)] = e_hat;
    std::vector<char> keep(m, 0);
    for (std::size_t e = 0; e < m; ++e) keep[e] = rep[uf.find(static_cast<EdgeId>(e))] == static_cast<EdgeId>(e);

    const Subgraph sub = restrict_edges(g, keep);
    BipartiteCover inner = cover_biconnected_nobigons(sub.graph, sub.parent_to_edge[e_hat], engine);
    BipartiteCover c;
    c.reference_edge = e_hat;
    lift(sub, inner, c);
    std::vector<char> kept_in_h(m, 0);
    for (EdgeId e : c.h_edges) kept_in_h[e] = 1;
    for (std::size_t e = 0; e < m; ++e)
        if (!keep[e] && kept_in_h[rep[uf.find(static_cast<EdgeId>(e))]]) c.h_edges.push_back(static_cast<EdgeId>(e));
    normalize(c);
    return c;
}

BipartiteCover cover(const PlaneGraph& g, EdgeId e_hat, MatchingEngine engine) {
    if (g.num_vertices() < 2) throw Error(ErrorKind::TooSmall, "cover needs at least two vertices");
    if (g.num_components() != 1) throw Error(ErrorKind::Disconnected, "graph is not connected");
    require_edge(g, e_hat);
    if (g.is_loop(e_hat)) throw Error(ErrorKind::InvalidArgument, "reference edge is a loop");

    const BlockForest forest = blocks(g);
    const std::size_t nb = forest.blocks.size();
    BipartiteCover out;
    out.reference_edge = e_hat;
    if (nb == 1) {
        out = cover_biconnected(g, e_hat, engine);
        return out;
    }

    // Vertex -> blocks incidence for walking the block-cut tree.
    std::vector<std::vector<std::int32_t>> blocks_at(g.num_vertices());
    for (std::size_t b = 0; b < nb; ++b)
        for (VertexId v : forest.blocks[b].vertices) blocks_at[v].push_back(static_cast<std::int32_t>(b));

    // The outer face of G is a face at e_hat; every block takes as outer
    // face the face that contains its parent block, which then also
    // contains the outer face of G.
    const FaceId outer = std::min(g.face_of(2 * e_hat), g.face_of(2 * e_hat + 1));
    const std::int32_t root = forest.block_of_edge[e_hat];
    std::vector<DartId> outer_dart(nb, kNone);  // parent dart on the outer face of the block
    outer_dart[root] = g.face_of(2 * e_hat) == outer ? 2 * e_hat : 2 * e_hat + 1;
    std::vector<char> seen_block(nb, 0), seen_vertex(g.num_vertices(), 0);
    std::vector<std::int32_t> queue{root};
    seen_block[root] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const std::int32_t b = queue[qi];
        for (VertexId c : forest.blocks[b].vertices) {
            if (!forest.is_cutvertex[c] || seen_vertex[c]) continue;
            seen_vertex[c] = 1;
            // A dart of b at c, then for each child block the next dart of
            // that block after it in the rotation at c.
            DartId from_parent = kNone;
            for (DartId d : g.rotation(c))
                if (forest.block_of_edge[edge_of(d)] == b) {
                    from_parent = d;
                    break;
                }
            DartId d = from_parent;
            for (std::size_t step = 0; step < g.degree(c); ++step) {
                d = g.rot_next(d);
                const std::int32_t cb = forest.block_of_edge[edge_of(d)];
                if (seen_block[cb]) continue;
                seen_block[cb] = 1;
                outer_dart[cb] = d;
                queue.push_back(cb);
            }
        }
    }

    for (std::size_t b = 0; b < nb; ++b) {
        const Block& blk = forest.blocks[b];
        if (blk.trivial) continue;
        const Subgraph sub = block_subgraph(g, blk);
        EdgeId ref;
        if (static_cast<std::int32_t>(b) == root) {
            ref = sub.parent_to_edge[e_hat];
        } else {
            const DartId od = sub.dart_from_parent(outer_dart[b]);
            ref = kNone;
            for (DartId d : sub.graph.face_walk(sub.graph.face_of(od))) {
                const EdgeId pe = sub.edge_to_parent[edge_of(d)];
                if (ref == kNone || pe < sub.edge_to_parent[ref]) ref = edge_of(d);
            }
        }
        lift(sub, cover_biconnected(sub.graph, ref, engine), out);
    }
    normalize(out);
    return out;
}

EdgeId default_reference_edge(const PlaneGraph& g, VertexId v) {
    const auto& comp = g.component_of();
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto ei = static_cast<EdgeId>(e);
        if (!g.is_loop(ei) && comp[g.endpoint_u(ei)] == comp[v]) return ei;
    }
    throw Error(ErrorKind::TooSmall, "component of vertex " + std::to_string(v) + " has no non-loop edge");
}

std::pair<std::vector<VertexId>, std::vector<VertexId>> two_colour(const PlaneGraph& g,
                                                                  const std::vector<EdgeId>& edges) {
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> off(n + 1, 0);
    for (EdgeId e : edges) {
        ++off[g.endpoint_u(e) + 1];
        ++off[g.endpoint_v(e) + 1];
    }
    for (std::size_t v = 0; v < n; ++v) off[v + 1] += off[v];
    std::vector<VertexId> adj(off[n]);
    std::vector<std::size_t> fill(off.begin(), off.end() - 1);
    for (EdgeId e : edges) {
        adj[fill[g.endpoint_u(e)]++] = g.endpoint_v(e);
        adj[fill[g.endpoint_v(e)]++] = g.endpoint_u(e);
    }
    std::vector<int> colour(n, -1);
    std::vector<VertexId> queue;
    queue.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (colour[r] >= 0) continue;
        colour[r] = 0;
        queue.clear();
        queue.push_back(static_cast<VertexId>(r));
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const VertexId x = queue[i];
            for (std::size_t k = off[x]; k < off[x + 1]; ++k) {
                const VertexId y = adj[k];
                if (colour[y] < 0) {
                    colour[y] = 1 - colour[x];
                    queue.push_back(y);
                } else if (colour[y] == colour[x]) {
                    throw Error(ErrorKind::InvariantViolation, "cover is not bipartite at vertex " + std::to_string(y));
                }
            }
        }
    }
    std::pair<std::vector<VertexId>, std::vector<VertexId>> out;
    for (std::size_t v = 0; v < n; ++v) (colour[v] == 0 ? out.first : out.second).push_back(static_cast<VertexId>(v));
    return out;
}

void check_partition_preconditions(const PlaneGraph& g, PartitionMode mode) {
    if (g.num_vertices() < 2) throw Error(ErrorKind::TooSmall, "partition needs at least two vertices");
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        const auto vi = static_cast<VertexId>(v);
        bool has_neighbour = false;
        for (DartId d : g.rotation(vi)) has_neighbour = has_neighbour || g.head(d) != vi;
        if (!has_neighbour)
            throw Error(ErrorKind::TooSmall, "vertex " + std::to_string(v) + " has no neighbour");
    }
    if (mode != PartitionMode::Strict) return;
    // A component that is a single edge has one face of degree 2, but that
    // face sees both endpoints and they always land in different classes.
    const auto& comp = g.component_of();
    std::vector<std::size_t> comp_vertices(g.num_components(), 0), comp_edges(g.num_components(), 0);
    for (std::size_t v = 0; v < g.num_vertices(); ++v) ++comp_vertices[comp[v]];
    for (std::size_t e = 0; e < g.num_edges(); ++e) ++comp_edges[comp[g.endpoint_u(static_cast<EdgeId>(e))]];
    for (std::size_t f = 0; f < g.num_faces(); ++f) {
        const auto fi = static_cast<FaceId>(f);
        const auto c = comp[g.tail(g.face_walk(fi).front())];
        if (comp_vertices[c] == 2 && comp_edges[c] == 1) continue;
        if (g.face_degree(fi) <= 2)
            throw Error(ErrorKind::StrictModeViolation,
                        "face " + std::to_string(f) + " has degree " + std::to_string(g.face_degree(fi)));
        if (distinct_vertices_on_face(g, fi) < 3)
            throw Error(ErrorKind::StrictModeViolation,
                        "face " + std::to_string(f) + " sees fewer than three distinct vertices");
    }
}

namespace {

// Vertices renumbered in breadth-first order and edges in order of first
// appearance. Each component then occupies a contiguous range of ids, and
// neighbours tend to get nearby ids, which keeps the large passes of the
// pipeline cache friendly.
struct Renumbering {
    std::vector<VertexId> vertex_old;
    std::vector<EdgeId> edge_old;
    std::vector<EdgeId> edge_new;
    std::vector<std::size_t> vertex_start;  // per component, plus a sentinel
    std::vector<std::size_t> edge_start;
};

Renumbering renumber(const PlaneGraph& g) {
    const std::size_t n = g.num_vertices(), m = g.num_edges();
    Renumbering r;
    r.vertex_old.reserve(n);
    r.edge_old.reserve(m);
    r.edge_new.assign(m, kNone);
    std::vector<char> seen(n, 0);
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        r.vertex_start.push_back(r.vertex_old.size());
        r.edge_start.push_back(r.edge_old.size());
        seen[root] = 1;
        r.vertex_old.push_back(static_cast<VertexId>(root));
        for (std::size_t i = r.vertex_start.back(); i < r.vertex_old.size(); ++i) {
            for (DartId d : g.rotation(r.vertex_old[i])) {
                const EdgeId e = edge_of(d);
                if (r.edge_new[e] == kNone) {
                    r.edge_new[e] = static_cast<EdgeId>(r.edge_old.size());
                    r.edge_old.push_back(e);
                }
                const VertexId w = g.head(d);
                if (!seen[w]) {
                    seen[w] = 1;
                    r.vertex_old.push_back(w);
                }
            }
        }
    }
    r.vertex_start.push_back(n);
    r.edge_start.push_back(m);
    return r;
}

// Component c of g as a graph of its own, in the renumbered ids shifted to
// start at zero.
PlaneGraph component_graph(const PlaneGraph& g, const Renumbering& r, std::size_t c) {
    const std::size_t v0 = r.vertex_start[c], v1 = r.vertex_start[c + 1];
    const auto shift = static_cast<DartId>(2 * r.edge_start[c]);
    std::vector<std::vector<DartId>> rot(v1 - v0);
    for (std::size_t i = v0; i < v1; ++i) {
        auto& list = rot[i - v0];
        list.reserve(g.degree(r.vertex_old[i]));
        for (DartId d : g.rotation(r.vertex_old[i])) list.push_back(2 * r.edge_new[edge_of(d)] + (d & 1) - shift);
    }
    return PlaneGraph::from_rotation(v1 - v0, r.edge_start[c + 1] - r.edge_start[c], rot);
}

} // namespace

VertexPartition partition(const PlaneGraph& g, std::optional<EdgeId> e_hat, PartitionMode mode,
                          MatchingEngine engine) {
    check_partition_preconditions(g, mode);
    if (e_hat) {
        require_edge(g, *e_hat);
        if (g.is_loop(*e_hat)) throw Error(ErrorKind::InvalidArgument, "reference edge is a loop");
    }
    const EdgeId ref = e_hat ? *e_hat : default_reference_edge(g, 0);
    const Renumbering r = renumber(g);
    const std::size_t nc = r.vertex_start.size() - 1;

    VertexPartition out;
    for (std::size_t c = 0; c < nc; ++c) {
        const std::size_t e0 = r.edge_start[c], e1 = r.edge_start[c + 1];
        // The given edge in its own component, the lowest non-loop edge elsewhere.
        EdgeId chosen = kNone;
        for (std::size_t i = e0; i < e1; ++i) {
            const EdgeId old = r.edge_old[i];
            if (old == ref) {
                chosen = old;
                break;
            }
            if (!g.is_loop(old) && (chosen == kNone || old < chosen)) chosen = old;
        }
        if (chosen == kNone) throw Error(ErrorKind::TooSmall, "a component has no non-loop edge");
        const PlaneGraph comp = component_graph(g, r, c);
        const BipartiteCover part = cover(comp, static_cast<EdgeId>(r.edge_new[chosen] - e0), engine);
        for (EdgeId e : part.h_edges) out.witness.h_edges.push_back(r.edge_old[e0 + e]);
        for (EdgeId e : part.removed_matching) out.witness.removed_matching.push_back(r.edge_old[e0 + e]);
    }
    out.witness.reference_edge = ref;
    normalize(out.witness);
    auto [a, b] = two_colour(g, out.witness.h_edges);
    out.v1 = std::move(a);
    out.v2 = std::move(b);
    return out;
}

} // namespace facehit
