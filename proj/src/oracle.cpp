#include "facehit/oracle.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace facehit {

namespace {

CheckResult fail(std::string witness, std::vector<std::int32_t> ids) {
    return CheckResult{false, std::move(witness), std::move(ids)};
}

bool face_counts(const PlaneGraph& g, FaceId f, FaceMode mode) {
    return mode == FaceMode::All || distinct_vertices_on_face(g, f) >= 3;
}

std::vector<char> membership(std::size_t n, const std::vector<VertexId>& s) {
    std::vector<char> in(n, 0);
    for (VertexId v : s)
        if (v >= 0 && static_cast<std::size_t>(v) < n) in[v] = 1;
    return in;
}

// Canonical dart labelling reachable from a start dart, following twin and
// rotation successor. Two embeddings are isomorphic iff some start in the
// second reproduces the code of a fixed start in the first.
std::vector<std::int32_t> canonical_code(const PlaneGraph& g, DartId start) {
    std::vector<std::int32_t> label(g.num_darts(), -1);
    std::vector<DartId> order;
    label[start] = 0;
    order.push_back(start);
    std::vector<std::int32_t> code;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const DartId d = order[i];
        for (DartId nb : {twin(d), g.rot_next(d)}) {
            if (label[nb] < 0) {
                label[nb] = static_cast<std::int32_t>(order.size());
                order.push_back(nb);
            }
            code.push_back(label[nb]);
        }
    }
    return code;
}

} // namespace

bool VerificationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.result.ok; });
}

std::string VerificationReport::summary() const {
    std::ostringstream out;
    for (const NamedCheck& c : checks) {
        out << (c.result.ok ? "PASS " : "FAIL ") << c.name;
        if (!c.result.ok) out << ": " << c.result.witness;
        out << '\n';
    }
    return out.str();
}

CheckResult is_dominating(const PlaneGraph& g, const std::vector<VertexId>& s) {
    const std::size_t n = g.num_vertices();
    const std::vector<char> in = membership(n, s);
    for (std::size_t v = 0; v < n; ++v) {
        if (in[v]) continue;
        bool seen = false;
        for (DartId d : g.rotation(static_cast<VertexId>(v))) seen = seen || in[g.head(d)];
        if (!seen) return fail("vertex " + std::to_string(v) + " has no neighbour in the set", {static_cast<std::int32_t>(v)});
    }
    return {};
}

CheckResult hits_faces(const PlaneGraph& g, const std::vector<VertexId>& s, FaceMode mode) {
    const std::vector<char> in = membership(g.num_vertices(), s);
    for (std::size_t f = 0; f < g.num_faces(); ++f) {
        const auto fi = static_cast<FaceId>(f);
        if (!face_counts(g, fi, mode)) continue;
        const auto walk = g.face_walk(fi);
        if (std::none_of(walk.begin(), walk.end(), [&](DartId d) { return in[g.tail(d)] != 0; }))
            return fail("face " + std::to_string(f) + " (degree " + std::to_string(walk.size()) + ") is not hit",
                        {static_cast<std::int32_t>(f)});
    }
    return {};
}

CheckResult hits_faces_with_edges(const PlaneGraph& g, const std::vector<EdgeId>& edges, FaceMode mode) {
    std::vector<char> in(g.num_edges(), 0);
    for (EdgeId e : edges) in[e] = 1;
    for (std::size_t f = 0; f < g.num_faces(); ++f) {
        const auto fi = static_cast<FaceId>(f);
        if (!face_counts(g, fi, mode)) continue;
        const auto walk = g.face_walk(fi);
        if (std::none_of(walk.begin(), walk.end(), [&](DartId d) { return in[edge_of(d)] != 0; }))
            return fail("face " + std::to_string(f) + " has no edge of the set", {static_cast<std::int32_t>(f)});
    }
    return {};
}

CheckResult is_bipartite(const PlaneGraph& g, const std::vector<EdgeId>& edges) {
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
    for (EdgeId e : edges) {
        const VertexId u = g.endpoint_u(e);
        const VertexId v = g.endpoint_v(e);
        if (u == v) return fail("loop " + std::to_string(e) + " is an odd cycle", {u});
        adj[u].push_back({v, e});
        adj[v].push_back({u, e});
    }
    std::vector<int> color(n, -1);
    std::vector<VertexId> parent(n, kNone);
    std::vector<int> depth(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        if (color[r] >= 0) continue;
        color[r] = 0;
        std::deque<VertexId> q{static_cast<VertexId>(r)};
        while (!q.empty()) {
            const VertexId x = q.front();
            q.pop_front();
            for (auto [y, e] : adj[x]) {
                (void)e;
                if (color[y] < 0) {
                    color[y] = 1 - color[x];
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    q.push_back(y);
                } else if (color[y] == color[x]) {
                    // Odd cycle: tree paths from x and y up to their meeting point.
                    std::vector<VertexId> left{x}, right{y};
                    VertexId a = x, b = y;
                    while (a != b) {
                        if (depth[a] >= depth[b]) {
                            a = parent[a];
                            left.push_back(a);
                        } else {
                            b = parent[b];
                            right.push_back(b);
                        }
                    }
                    right.pop_back();
                    left.insert(left.end(), right.rbegin(), right.rend());
                    std::ostringstream w;
                    w << "odd cycle";
                    for (VertexId v : left) w << ' ' << v;
                    return fail(w.str(), std::vector<std::int32_t>(left.begin(), left.end()));
                }
            }
        }
    }
    return {};
}

CheckResult is_edge_cover(const PlaneGraph& g, const std::vector<EdgeId>& edges) {
    std::vector<char> covered(g.num_vertices(), 0);
    for (EdgeId e : edges) covered[g.endpoint_u(e)] = covered[g.endpoint_v(e)] = 1;
    for (std::size_t v = 0; v < covered.size(); ++v)
        if (!covered[v]) return fail("vertex " + std::to_string(v) + " is not covered", {static_cast<std::int32_t>(v)});
    return {};
}

VerificationReport verify_partition(const PlaneGraph& g, const std::vector<VertexId>& v1,
                                    const std::vector<VertexId>& v2, FaceMode mode) {
    VerificationReport r;
    CheckResult part;
    std::vector<int> count(g.num_vertices(), 0);
    for (const auto* side : {&v1, &v2}) {
        for (VertexId v : *side) {
            if (v < 0 || static_cast<std::size_t>(v) >= g.num_vertices()) {
                part = fail("vertex id " + std::to_string(v) + " out of range", {v});
                break;
            }
            ++count[v];
        }
    }
    if (part.ok) {
        for (std::size_t v = 0; v < count.size(); ++v) {
            if (count[v] != 1) {
                part = fail("vertex " + std::to_string(v) + (count[v] == 0 ? " is in neither class" : " is in both classes"),
                            {static_cast<std::int32_t>(v)});
                break;
            }
        }
    }
    r.checks.push_back({"partition", part});
    r.checks.push_back({"v1 dominating", is_dominating(g, v1)});
    r.checks.push_back({"v2 dominating", is_dominating(g, v2)});
    const char* what = mode == FaceMode::All ? " hits every face" : " hits every 3+-face";
    r.checks.push_back({std::string("v1") + what, hits_faces(g, v1, mode)});
    r.checks.push_back({std::string("v2") + what, hits_faces(g, v2, mode)});
    return r;
}

VerificationReport verify_cover(const PlaneGraph& g, const std::vector<EdgeId>& h_edges, EdgeId e_hat) {
    VerificationReport r;
    r.checks.push_back({"bipartite", is_bipartite(g, h_edges)});
    r.checks.push_back({"edge cover", is_edge_cover(g, h_edges)});
    r.checks.push_back({"hits 3+-faces", hits_faces_with_edges(g, h_edges, FaceMode::ThreePlus)});
    CheckResult has_ref;
    if (std::find(h_edges.begin(), h_edges.end(), e_hat) == h_edges.end())
        has_ref = fail("reference edge " + std::to_string(e_hat) + " missing", {e_hat});
    r.checks.push_back({"contains reference edge", has_ref});
    return r;
}

std::vector<std::uint32_t> brute_force_valid_partitions(const PlaneGraph& g, FaceMode mode) {
    const std::size_t n = g.num_vertices();
    if (n > 20) throw Error(ErrorKind::InvalidArgument, "brute force limited to 20 vertices");
    std::vector<std::uint32_t> closed(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        closed[v] = 1u << v;
        for (DartId d : g.rotation(static_cast<VertexId>(v))) closed[v] |= 1u << g.head(d);
    }
    std::vector<std::uint32_t> faces;
    for (std::size_t f = 0; f < g.num_faces(); ++f) {
        if (!face_counts(g, static_cast<FaceId>(f), mode)) continue;
        std::uint32_t mask = 0;
        for (DartId d : g.face_walk(static_cast<FaceId>(f))) mask |= 1u << g.tail(d);
        faces.push_back(mask);
    }
    const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s <= all; ++s) {
        const std::uint32_t t = all & ~s;
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) ok = (closed[v] & s) && (closed[v] & t);
        for (std::size_t f = 0; f < faces.size() && ok; ++f) ok = (faces[f] & s) && (faces[f] & t);
        if (ok) out.push_back(s);
        if (s == all) break;
    }
    return out;
}

std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>>
brute_force_partition_exists(const PlaneGraph& g, FaceMode mode) {
    const auto masks = brute_force_valid_partitions(g, mode);
    if (masks.empty()) return std::nullopt;
    std::pair<std::vector<VertexId>, std::vector<VertexId>> out;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        ((masks.front() >> v) & 1u ? out.first : out.second).push_back(static_cast<VertexId>(v));
    return out;
}

bool embedded_isomorphic(const PlaneGraph& a, const PlaneGraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() || a.num_faces() != b.num_faces())
        return false;
    if (a.num_edges() == 0) return true;
    const auto reference = canonical_code(a, 0);
    for (std::size_t d = 0; d < b.num_darts(); ++d)
        if (canonical_code(b, static_cast<DartId>(d)) == reference) return true;
    return false;
}

} // namespace facehit
