#include "facehit/decompose.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

namespace facehit {

BlockForest blocks(const PlaneGraph& g) {
    const std::size_t n = g.num_vertices();
    const std::size_t m = g.num_edges();
    BlockForest forest;
    forest.is_cutvertex.assign(n, 0);
    forest.block_of_edge.assign(m, kNone);

    std::vector<std::int32_t> disc(n, -1), low(n, 0);
    std::vector<EdgeId> parent_edge(n, kNone);
    std::vector<EdgeId> edge_stack;
    struct Frame {
        VertexId v;
        std::size_t next;
    };
    std::vector<Frame> frames;
    std::int32_t timer = 0;

    auto emit_block = [&](std::vector<EdgeId> edges, bool trivial) {
        Block b;
        b.trivial = trivial;
        const auto id = static_cast<std::int32_t>(forest.blocks.size());
        for (EdgeId e : edges) {
            forest.block_of_edge[e] = id;
            b.vertices.push_back(g.endpoint_u(e));
            b.vertices.push_back(g.endpoint_v(e));
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        std::sort(edges.begin(), edges.end());
        b.edges = std::move(edges);
        forest.blocks.push_back(std::move(b));
    };

    for (std::size_t root = 0; root < n; ++root) {
        if (disc[root] != -1)
            continue;
        disc[root] = low[root] = timer++;
        frames.push_back({static_cast<VertexId>(root), 0});
        while (!frames.empty()) {
            Frame& fr = frames.back();
            const VertexId v = fr.v;
            const auto rot = g.rotation(v);
            if (fr.next < rot.size()) {
                const DartId d = rot[fr.next++];
                const EdgeId e = edge_of(d);
                if (g.is_loop(e) || e == parent_edge[v])
                    continue;
                const VertexId w = g.head(d);
                if (disc[w] == -1) {
                    edge_stack.push_back(e);
                    parent_edge[w] = e;
                    disc[w] = low[w] = timer++;
                    frames.push_back({w, 0});
                } else if (disc[w] < disc[v]) {
                    edge_stack.push_back(e);
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }
            frames.pop_back();
            if (frames.empty())
                break;
            const VertexId p = frames.back().v;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) {
                std::vector<EdgeId> comp;
                const EdgeId pe = parent_edge[v];
                while (true) {
                    const EdgeId e = edge_stack.back();
                    edge_stack.pop_back();
                    comp.push_back(e);
                    if (e == pe)
                        break;
                }
                emit_block(std::move(comp), false);
            }
        }
    }

    for (std::size_t e = 0; e < m; ++e)
        if (g.is_loop(static_cast<EdgeId>(e)))
            emit_block({static_cast<EdgeId>(e)}, true);

    std::vector<std::int32_t> count(n, 0);
    for (const Block& b : forest.blocks)
        for (VertexId v : b.vertices)
            ++count[v];
    for (std::size_t v = 0; v < n; ++v)
        forest.is_cutvertex[v] = count[v] >= 2;
    return forest;
}

Subgraph block_subgraph(const PlaneGraph& g, const Block& b) {
    std::vector<char> keep(g.num_edges(), 0);
    for (EdgeId e : b.edges)
        keep[e] = 1;
    return restrict_edges(g, keep);
}

bool is_biconnected(const PlaneGraph& g) {
    if (g.num_vertices() < 3 || g.num_components() != 1)
        return false;
    const BlockForest f = blocks(g);
    return f.blocks.size() == 1 && !f.blocks[0].trivial;
}

std::vector<std::int32_t> st_numbering(const PlaneGraph& g, EdgeId st_edge, VertexId s) {
    const std::size_t n = g.num_vertices();
    const VertexId t = g.other_end(st_edge, s);
    std::vector<std::int32_t> disc(n, -1);
    std::vector<VertexId> parent(n, kNone), low(n, kNone), preorder;
    std::vector<EdgeId> parent_edge(n, kNone);
    preorder.reserve(n);

    // DFS rooted at s whose first tree edge is (s,t); low[v] is the vertex
    // of minimum preorder reachable from the subtree of v by one back edge.
    disc[s] = 0;
    low[s] = s;
    preorder.push_back(s);
    disc[t] = 1;
    low[t] = t;
    parent[t] = s;
    parent_edge[t] = st_edge;
    preorder.push_back(t);
    struct Frame {
        VertexId v;
        std::size_t next;
    };
    std::vector<Frame> frames{{t, 0}};
    std::int32_t timer = 2;
    while (!frames.empty()) {
        Frame& fr = frames.back();
        const VertexId v = fr.v;
        const auto rot = g.rotation(v);
        if (fr.next < rot.size()) {
            const DartId d = rot[fr.next++];
            const EdgeId e = edge_of(d);
            if (e == parent_edge[v] || g.is_loop(e))
                continue;
            const VertexId w = g.head(d);
            if (disc[w] == -1) {
                disc[w] = timer++;
                parent[w] = v;
                parent_edge[w] = e;
                low[w] = w;
                preorder.push_back(w);
                frames.push_back({w, 0});
            } else if (disc[w] < disc[low[v]]) {
                low[v] = w;
            }
            continue;
        }
        frames.pop_back();
        if (!frames.empty()) {
            const VertexId p = frames.back().v;
            if (disc[low[v]] < disc[low[p]])
                low[p] = low[v];
        }
    }
    if (preorder.size() != n)
        throw Error(ErrorKind::NotBiconnected, "graph is not connected");

    // Linked list insertion with signs (Tarjan's formulation).
    std::vector<VertexId> next(n, kNone), prev(n, kNone);
    std::vector<char> minus(n, 0);
    next[s] = t;
    prev[t] = s;
    minus[s] = 1;
    for (std::size_t i = 2; i < n; ++i) {
        const VertexId v = preorder[i];
        const VertexId p = parent[v];
        if (minus[low[v]]) {
            const VertexId a = prev[p];
            next[a] = v;
            prev[v] = a;
            next[v] = p;
            prev[p] = v;
            minus[p] = 0;
        } else {
            const VertexId b = next[p];
            next[p] = v;
            prev[v] = p;
            next[v] = b;
            if (b != kNone)
                prev[b] = v;
            minus[p] = 1;
        }
    }
    std::vector<std::int32_t> number(n, -1);
    std::int32_t k = 0;
    for (VertexId v = s; v != kNone; v = next[v])
        number[v] = k++;
    if (k != static_cast<std::int32_t>(n) || number[t] != k - 1)
        throw Error(ErrorKind::InvariantViolation, "st-numbering list is inconsistent");
    return number;
}

EarDecomposition ear_decomposition(const PlaneGraph& g, EdgeId first_edge, VertexId s, FaceId second_face) {
    if (first_edge < 0 || static_cast<std::size_t>(first_edge) >= g.num_edges())
        throw Error(ErrorKind::InvalidArgument, "first edge out of range");
    if (g.endpoint_u(first_edge) != s && g.endpoint_v(first_edge) != s)
        throw Error(ErrorKind::InvalidArgument, "s is not an endpoint of the first edge");
    if (!is_biconnected(g))
        throw Error(ErrorKind::NotBiconnected, "ear decomposition needs a 2-connected graph with n >= 3");
    const Classification cls = classify(g);
    for (std::size_t f = 0; f < cls.faces.size(); ++f)
        if (cls.faces[f].is_bigon)
            throw Error(ErrorKind::BigonPresent, "face " + std::to_string(f) + " is a bigon");

    const DartId d_st = g.endpoint_u(first_edge) == s ? 2 * first_edge : 2 * first_edge + 1;
    const VertexId t = g.head(d_st);
    FaceId outer;
    if (g.face_of(d_st) == second_face)
        outer = g.face_of(twin(d_st));
    else if (g.face_of(twin(d_st)) == second_face)
        outer = g.face_of(d_st);
    else
        throw Error(ErrorKind::EdgeNotOnFace,
                    "edge " + std::to_string(first_edge) + " is not on face " + std::to_string(second_face));

    const std::vector<std::int32_t> number = st_numbering(g, first_edge, s);
    const bool forward = g.face_of(d_st) == outer;
    const std::size_t m = g.num_edges();
    const std::size_t nf = g.num_faces();

    // Dual orientation: every edge except (s,t) points from the face that is
    // swept first to the face swept later.
    std::vector<FaceId> from(m, kNone), to(m, kNone);
    std::vector<std::int32_t> indeg(nf, 0);
    for (std::size_t e = 0; e < m; ++e) {
        if (static_cast<EdgeId>(e) == first_edge)
            continue;
        const auto ei = static_cast<EdgeId>(e);
        const DartId d_low = number[g.endpoint_u(ei)] < number[g.endpoint_v(ei)] ? 2 * ei : 2 * ei + 1;
        from[e] = forward ? g.face_of(d_low) : g.face_of(twin(d_low));
        to[e] = forward ? g.face_of(twin(d_low)) : g.face_of(d_low);
        if (from[e] == outer)
            throw Error(ErrorKind::InvariantViolation, "outer face has an outgoing dual edge");
        ++indeg[to[e]];
    }

    EarDecomposition ed;
    ed.s = s;
    ed.t = t;
    ed.first_edge = first_edge;
    ed.second_face = second_face;
    ed.outer_face = outer;
    ed.outer_dart = g.face_of(d_st) == outer ? d_st : twin(d_st);
    ed.ears.push_back(Ear{{s, t}, {d_st}, kNone});

    std::priority_queue<FaceId, std::vector<FaceId>, std::greater<>> ready;
    if (indeg[second_face] != 0)
        throw Error(ErrorKind::InvariantViolation, "second face is not a source of the dual orientation");
    ready.push(second_face);
    while (!ready.empty()) {
        const FaceId f = ready.top();
        ready.pop();
        const auto walk = g.face_walk(f);
        const std::size_t len = walk.size();
        auto is_ear = [&](std::size_t i) {
            const EdgeId e = edge_of(walk[i % len]);
            return e != first_edge && from[e] == f;
        };
        std::size_t start = len;
        std::size_t total = 0;
        for (std::size_t i = 0; i < len; ++i) {
            if (is_ear(i)) {
                ++total;
                if (!is_ear(i + len - 1))
                    start = i;
            }
        }
        if (start == len || total == len)
            throw Error(ErrorKind::InvariantViolation, "face " + std::to_string(f) + " has no proper ear");
        Ear ear;
        ear.face = f;
        for (std::size_t i = start; is_ear(i) && ear.darts.size() < len; ++i)
            ear.darts.push_back(walk[i % len]);
        if (ear.darts.size() != total)
            throw Error(ErrorKind::InvariantViolation, "ear of face " + std::to_string(f) + " is not contiguous");
        for (DartId d : ear.darts)
            ear.path.push_back(g.tail(d));
        ear.path.push_back(g.head(ear.darts.back()));
        for (DartId d : ear.darts) {
            const EdgeId e = edge_of(d);
            if (--indeg[to[e]] == 0 && to[e] != outer)
                ready.push(to[e]);
        }
        ed.ears.push_back(std::move(ear));
    }
    if (ed.ears.size() != nf)
        throw Error(ErrorKind::InvariantViolation, "sweep reached " + std::to_string(ed.ears.size() - 1) + " of " +
                                                       std::to_string(nf - 1) + " interior faces");
    return ed;
}

EarReport validate_ear_decomposition(const PlaneGraph& g, const EarDecomposition& ed) {
    EarReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    const std::size_t n = g.num_vertices();
    const std::size_t m = g.num_edges();
    if (ed.ears.empty()) {
        fail("no ears");
        return rep;
    }
    const Ear& first = ed.ears[0];
    if (first.darts.size() != 1 || first.path.size() != 2)
        fail("ear 1: the first path must be a single edge");

    std::vector<std::int32_t> used(m, 0);
    std::vector<std::size_t> ear_of_edge(m, 0);
    std::vector<char> in_v(n, 0);
    for (std::size_t i = 0; i < ed.ears.size(); ++i) {
        const Ear& ear = ed.ears[i];
        const std::string tag = "ear " + std::to_string(i + 1) + ": ";
        if (ear.darts.empty() || ear.path.size() != ear.darts.size() + 1) {
            fail(tag + "path with at least one edge required");
            continue;
        }
        bool consistent = true;
        for (std::size_t j = 0; j < ear.darts.size(); ++j) {
            const DartId d = ear.darts[j];
            if (d < 0 || static_cast<std::size_t>(d) >= g.num_darts() || g.tail(d) != ear.path[j] ||
                g.head(d) != ear.path[j + 1]) {
                consistent = false;
                break;
            }
        }
        if (!consistent) {
            fail(tag + "darts do not follow the vertex path");
            continue;
        }
        for (DartId d : ear.darts) {
            ++used[edge_of(d)];
            ear_of_edge[edge_of(d)] = i;
        }
        const VertexId a = ear.path.front(), b = ear.path.back();
        if (a == b)
            fail(tag + "two distinct endpoints required");
        if (i > 0) {
            if (!in_v[a] || !in_v[b])
                fail(tag + "endpoint not in V_{i-1}");
            std::vector<VertexId> inner(ear.path.begin() + 1, ear.path.end() - 1);
            for (VertexId v : inner)
                if (in_v[v])
                    fail(tag + "internal vertex " + std::to_string(v) + " already in V_{i-1}");
            std::sort(inner.begin(), inner.end());
            if (std::adjacent_find(inner.begin(), inner.end()) != inner.end())
                fail(tag + "internal vertices repeat");
        }
        for (VertexId v : ear.path)
            in_v[v] = 1;
    }
    for (std::size_t e = 0; e < m; ++e)
        if (used[e] != 1)
            fail("edge " + std::to_string(e) + " belongs to " + std::to_string(used[e]) + " ears");
    if (!rep.ok)
        return rep;

    // Every interior face of G_i must be a face of g.
    std::vector<char> keep(m, 0);
    keep[edge_of(first.darts[0])] = 1;
    for (std::size_t i = 1; i < ed.ears.size(); ++i) {
        for (DartId d : ed.ears[i].darts)
            keep[edge_of(d)] = 1;
        const Subgraph sub = restrict_edges(g, keep);
        const DartId od = sub.dart_from_parent(ed.outer_dart);
        const FaceId sub_outer = sub.graph.face_of(od);
        bool closed_found = false;
        for (std::size_t f = 0; f < sub.graph.num_faces(); ++f) {
            if (static_cast<FaceId>(f) == sub_outer)
                continue;
            const auto walk = sub.graph.face_walk(static_cast<FaceId>(f));
            const FaceId gf = g.face_of(sub.dart_to_parent(walk[0]));
            bool same = walk.size() == g.face_degree(gf);
            for (DartId d : walk)
                same = same && g.face_of(sub.dart_to_parent(d)) == gf;
            if (!same)
                fail("G_" + std::to_string(i + 1) + ": interior face is not a face of G");
            if (gf == ed.ears[i].face)
                closed_found = true;
        }
        if (!closed_found)
            fail("ear " + std::to_string(i + 1) + ": recorded face is not an interior face of G_" +
                 std::to_string(i + 1));
        if (!rep.ok)
            break;
    }
    return rep;
}

} // namespace facehit
