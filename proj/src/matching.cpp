#include "facehit/matching.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

namespace facehit {

namespace {

// Adjacency over non-loop edges among the vertices that are still free.
struct Adjacency {
    std::vector<std::size_t> offset;
    std::vector<VertexId> to;
    std::vector<EdgeId> edge;
};

Adjacency build_adjacency(const PlaneGraph& g, const std::vector<char>& excluded) {
    const std::size_t n = g.num_vertices();
    Adjacency a;
    a.offset.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (excluded[v]) continue;
        for (DartId d : g.rotation(static_cast<VertexId>(v))) {
            const VertexId w = g.head(d);
            if (w != static_cast<VertexId>(v) && !excluded[w]) ++a.offset[v + 1];
        }
    }
    for (std::size_t v = 0; v < n; ++v) a.offset[v + 1] += a.offset[v];
    a.to.resize(a.offset[n]);
    a.edge.resize(a.offset[n]);
    std::vector<std::size_t> fill(a.offset.begin(), a.offset.end() - 1);
    for (std::size_t v = 0; v < n; ++v) {
        if (excluded[v]) continue;
        for (DartId d : g.rotation(static_cast<VertexId>(v))) {
            const VertexId w = g.head(d);
            if (w == static_cast<VertexId>(v) || excluded[w]) continue;
            a.to[fill[v]] = w;
            a.edge[fill[v]] = edge_of(d);
            ++fill[v];
        }
    }
    return a;
}

// Edmonds' blossom search with explicit parent edges so that parallel edges
// come out with the right ids. State touched by a search is recorded and
// reset afterwards, which keeps short searches cheap on large graphs.
// Blossom bases live in a union-find so a contraction costs only the bases
// it merges.
class BlossomMatcher {
public:
    BlossomMatcher(const Adjacency& adj, std::size_t n)
        : adj_(adj), mate_(n, kNone), mate_edge_(n, kNone), parent_(n, kNone), parent_edge_(n, kNone),
          set_(n), base_of_(n), used_(n, 0), in_blossom_(n, 0), lca_stamp_(n, 0) {
        for (std::size_t v = 0; v < n; ++v) set_[v] = base_of_[v] = static_cast<VertexId>(v);
    }

    void match(VertexId a, VertexId b, EdgeId e) {
        mate_[a] = b;
        mate_[b] = a;
        mate_edge_[a] = mate_edge_[b] = e;
    }

    bool matched(VertexId v) const { return mate_[v] != kNone; }
    EdgeId mate_edge(VertexId v) const { return mate_edge_[v]; }

    bool augment_from(VertexId root) {
        const VertexId end = find_path(root);
        if (end != kNone) {
            VertexId v = end;
            while (v != kNone) {
                const VertexId pv = parent_[v];
                const VertexId ppv = mate_[pv];
                match(v, pv, parent_edge_[v]);
                v = ppv;
            }
        }
        reset();
        return end != kNone;
    }

private:
    void touch(VertexId v) { touched_.push_back(v); }

    void reset() {
        for (VertexId v : touched_) {
            parent_[v] = kNone;
            parent_edge_[v] = kNone;
            set_[v] = base_of_[v] = v;
            used_[v] = 0;
        }
        touched_.clear();
        queue_.clear();
    }

    VertexId find(VertexId x) {
        while (set_[x] != x) x = set_[x] = set_[set_[x]];
        return x;
    }

    VertexId base(VertexId x) { return base_of_[find(x)]; }

    VertexId lca(VertexId a, VertexId b) {
        ++stamp_;
        for (;;) {
            a = base(a);
            lca_stamp_[a] = stamp_;
            if (mate_[a] == kNone) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base(b);
            if (lca_stamp_[b] == stamp_) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(VertexId v, VertexId b, VertexId child, EdgeId child_edge) {
        while (base(v) != b) {
            flag(base(v));
            flag(base(mate_[v]));
            parent_[v] = child;
            parent_edge_[v] = child_edge;
            child = mate_[v];
            child_edge = parent_edge_[child];
            v = parent_[child];
        }
    }

    void flag(VertexId b) {
        if (!in_blossom_[b]) {
            in_blossom_[b] = 1;
            flagged_.push_back(b);
        }
    }

    VertexId find_path(VertexId root) {
        used_[root] = 1;
        touch(root);
        queue_.push_back(root);
        while (!queue_.empty()) {
            const VertexId v = queue_.front();
            queue_.pop_front();
            for (std::size_t i = adj_.offset[v]; i < adj_.offset[v + 1]; ++i) {
                VertexId to = adj_.to[i];
                const EdgeId e = adj_.edge[i];
                if (base(v) == base(to) || mate_[v] == to) continue;
                if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
                    const VertexId cur = lca(v, to);
                    mark_path(v, cur, to, e);
                    mark_path(to, cur, v, e);
                    // Unused flagged bases are odd vertices outside any
                    // blossom; they turn even and join the queue.
                    VertexId root_set = find(cur);
                    for (VertexId b : flagged_) {
                        const VertexId r = find(b);
                        if (r != root_set) set_[r] = root_set;
                        if (!used_[b]) {
                            used_[b] = 1;
                            queue_.push_back(b);
                        }
                        in_blossom_[b] = 0;
                    }
                    base_of_[find(cur)] = cur;
                    flagged_.clear();
                } else if (parent_[to] == kNone) {
                    parent_[to] = v;
                    parent_edge_[to] = e;
                    touch(to);
                    if (mate_[to] == kNone) return to;
                    to = mate_[to];
                    used_[to] = 1;
                    touch(to);
                    queue_.push_back(to);
                }
            }
        }
        return kNone;
    }

    const Adjacency& adj_;
    std::vector<VertexId> mate_;
    std::vector<EdgeId> mate_edge_;
    std::vector<VertexId> parent_;
    std::vector<EdgeId> parent_edge_;
    std::vector<VertexId> set_;      // union-find parent
    std::vector<VertexId> base_of_;  // base of each union-find root
    std::vector<char> used_;
    std::vector<char> in_blossom_;
    std::vector<std::uint32_t> lca_stamp_;
    std::uint32_t stamp_ = 0;
    std::vector<VertexId> touched_;
    std::vector<VertexId> flagged_;
    std::deque<VertexId> queue_;
};

// Karp-Sipser style start: match degree-one vertices first, otherwise match
// an arbitrary free vertex with its free neighbour of least degree.
void greedy_start(const Adjacency& adj, const std::vector<char>& excluded, BlossomMatcher& bm) {
    const std::size_t n = excluded.size();
    std::vector<std::int32_t> deg(n, 0);
    std::vector<VertexId> ones;
    for (std::size_t v = 0; v < n; ++v) {
        if (excluded[v]) continue;
        deg[v] = static_cast<std::int32_t>(adj.offset[v + 1] - adj.offset[v]);
        if (deg[v] == 1) ones.push_back(static_cast<VertexId>(v));
    }
    auto take = [&](VertexId a, VertexId b, EdgeId e) {
        bm.match(a, b, e);
        for (VertexId x : {a, b}) {
            for (std::size_t i = adj.offset[x]; i < adj.offset[x + 1]; ++i) {
                const VertexId w = adj.to[i];
                if (bm.matched(w)) continue;
                if (--deg[w] == 1) ones.push_back(w);
            }
        }
    };
    auto best_neighbour = [&](VertexId v, VertexId& w, EdgeId& e) {
        w = kNone;
        for (std::size_t i = adj.offset[v]; i < adj.offset[v + 1]; ++i) {
            const VertexId x = adj.to[i];
            if (bm.matched(x)) continue;
            if (w == kNone || deg[x] < deg[w]) {
                w = x;
                e = adj.edge[i];
            }
        }
    };
    std::size_t sweep = 0;
    for (;;) {
        VertexId v = kNone;
        while (!ones.empty() && v == kNone) {
            const VertexId c = ones.back();
            ones.pop_back();
            if (!bm.matched(c) && deg[c] == 1) v = c;
        }
        if (v == kNone) {
            while (sweep < n && (excluded[sweep] || bm.matched(static_cast<VertexId>(sweep)) || deg[sweep] == 0))
                ++sweep;
            if (sweep == n) break;
            v = static_cast<VertexId>(sweep);
        }
        VertexId w;
        EdgeId e = kNone;
        best_neighbour(v, w, e);
        if (w == kNone) {
            deg[v] = 0;
            continue;
        }
        take(v, w, e);
    }
}

void require_cubic_bridgeless(const PlaneGraph& g) {
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(static_cast<VertexId>(v)) != 3)
            throw Error(ErrorKind::NotCubic, "vertex " + std::to_string(v) + " has degree " +
                                                 std::to_string(g.degree(static_cast<VertexId>(v))));
    }
    const std::vector<char> bridge = find_bridges(g);
    for (std::size_t e = 0; e < bridge.size(); ++e) {
        if (bridge[e]) throw Error(ErrorKind::NotBridgeless, "edge " + std::to_string(e) + " is a bridge");
    }
}

} // namespace

std::vector<char> find_bridges(const PlaneGraph& g) {
    std::vector<char> out(g.num_edges(), 0);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto ei = static_cast<EdgeId>(e);
        out[e] = !g.is_loop(ei) && g.face_of(2 * ei) == g.face_of(2 * ei + 1);
    }
    return out;
}

Matching perfect_matching_cubic(const PlaneGraph& gstar, EdgeId forced_edge, MatchingEngine engine) {
    if (forced_edge < 0 || static_cast<std::size_t>(forced_edge) >= gstar.num_edges())
        throw Error(ErrorKind::InvalidArgument, "forced edge out of range");
    require_cubic_bridgeless(gstar);
    if (gstar.is_loop(forced_edge)) throw Error(ErrorKind::InvalidArgument, "forced edge is a loop");

    const std::size_t n = gstar.num_vertices();
    std::vector<char> excluded(n, 0);
    const VertexId fu = gstar.endpoint_u(forced_edge);
    const VertexId fv = gstar.endpoint_v(forced_edge);
    excluded[fu] = excluded[fv] = 1;

    const Adjacency adj = build_adjacency(gstar, excluded);
    BlossomMatcher bm(adj, n);
    if (engine == MatchingEngine::Cubic) greedy_start(adj, excluded, bm);
    for (std::size_t v = 0; v < n; ++v) {
        const auto vi = static_cast<VertexId>(v);
        if (excluded[v] || bm.matched(vi)) continue;
        if (!bm.augment_from(vi))
            throw Error(ErrorKind::InvariantViolation,
                        "no perfect matching through edge " + std::to_string(forced_edge));
    }

    Matching out;
    out.edges.reserve(n / 2);
    out.edges.push_back(forced_edge);
    for (std::size_t v = 0; v < n; ++v) {
        if (excluded[v]) continue;
        out.edges.push_back(bm.mate_edge(static_cast<VertexId>(v)));
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
    return out;
}

Matching avoiding_matching(const PlaneGraph& gstar, EdgeId avoided, MatchingEngine engine) {
    if (avoided < 0 || static_cast<std::size_t>(avoided) >= gstar.num_edges())
        throw Error(ErrorKind::InvalidArgument, "avoided edge out of range");
    require_cubic_bridgeless(gstar);
    if (gstar.is_loop(avoided)) throw Error(ErrorKind::InvalidArgument, "avoided edge is a loop");
    const VertexId u = gstar.endpoint_u(avoided);
    EdgeId forced = kNone;
    for (DartId d : gstar.rotation(u)) {
        const EdgeId e = edge_of(d);
        if (e != avoided && !gstar.is_loop(e) && (forced == kNone || e < forced)) forced = e;
    }
    if (forced == kNone) throw Error(ErrorKind::InvariantViolation, "no edge to force next to the avoided edge");
    return perfect_matching_cubic(gstar, forced, engine);
}

bool is_perfect_matching(const PlaneGraph& g, const std::vector<EdgeId>& edges) {
    std::vector<int> cover(g.num_vertices(), 0);
    for (EdgeId e : edges) {
        if (e < 0 || static_cast<std::size_t>(e) >= g.num_edges() || g.is_loop(e)) return false;
        ++cover[g.endpoint_u(e)];
        ++cover[g.endpoint_v(e)];
    }
    return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

std::vector<std::vector<EdgeId>> matching_oracle(const PlaneGraph& g) {
    const std::size_t n = g.num_vertices();
    if (n > 16) throw Error(ErrorKind::InvalidArgument, "matching oracle limited to 16 vertices");
    std::vector<std::vector<EdgeId>> out;
    std::vector<char> used(n, 0);
    std::vector<EdgeId> chosen;
    std::function<void()> rec = [&]() {
        std::size_t v = 0;
        while (v < n && used[v]) ++v;
        if (v == n) {
            std::vector<EdgeId> m = chosen;
            std::sort(m.begin(), m.end());
            out.push_back(std::move(m));
            return;
        }
        used[v] = 1;
        for (DartId d : g.rotation(static_cast<VertexId>(v))) {
            const VertexId w = g.head(d);
            if (w == static_cast<VertexId>(v) || used[w]) continue;
            used[w] = 1;
            chosen.push_back(edge_of(d));
            rec();
            chosen.pop_back();
            used[w] = 0;
        }
        used[v] = 0;
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace facehit
