#include "facehit/happy.hpp"

#include <algorithm>
#include <string>

namespace facehit {

namespace {

// The remaining part of one face of G while chords are being added inside
// it. Node i sits at vertex tail(walk[i]) and its corner is entered by
// in[i]. Cutting node v off adds the chord between its two current
// neighbours; a node that never receives a chord ends up in a triangle
// whose angle at it consists of two edges of G.
class FacePolygon {
public:
    FacePolygon(const PlaneGraph& g, FaceId f, AugmentationState& state, std::int32_t stage)
        : state_(state), stage_(stage) {
        const auto walk = g.face_walk(f);
        const std::size_t len = walk.size();
        walk_.assign(walk.begin(), walk.end());
        vertex_.resize(len);
        in_.resize(len);
        next_.resize(len);
        prev_.resize(len);
        touched_.assign(len, 0);
        alive_.assign(len, 1);
        for (std::size_t i = 0; i < len; ++i) {
            vertex_[i] = g.tail(walk[i]);
            in_[i] = walk[(i + len - 1) % len];
            next_[i] = static_cast<std::int32_t>((i + 1) % len);
            prev_[i] = static_cast<std::int32_t>((i + len - 1) % len);
        }
        size_ = len;
    }

    std::size_t length() const { return walk_.size(); }
    std::int32_t position_of(DartId d) const {
        const auto it = std::find(walk_.begin(), walk_.end(), d);
        if (it == walk_.end())
            throw Error(ErrorKind::InvariantViolation, "dart " + std::to_string(d) + " not on face");
        return static_cast<std::int32_t>(it - walk_.begin());
    }
    std::int32_t wrap(std::int64_t i) const {
        const auto len = static_cast<std::int64_t>(walk_.size());
        return static_cast<std::int32_t>(((i % len) + len) % len);
    }
    VertexId vertex(std::int32_t node) const { return vertex_[node]; }
    bool alive(std::int32_t node) const { return alive_[node] != 0; }

    void cut(std::int32_t node) {
        if (!alive_[node])
            throw Error(ErrorKind::InvariantViolation,
                        "vertex " + std::to_string(vertex_[node]) + " was already cut off");
        if (size_ <= 3)
            return;  // already a triangle
        const std::int32_t a = prev_[node], b = next_[node];
        const EdgeId e = state_.gplus.add_chord(in_[a], in_[b]);
        state_.chord_stage.push_back(stage_);
        in_[b] = 2 * e;
        touched_[a] = touched_[b] = 1;
        next_[a] = b;
        prev_[b] = a;
        alive_[node] = 0;
        --size_;
    }

    void fan() {
        std::int32_t root = -1;
        for (std::size_t i = 0; i < alive_.size(); ++i)
            if (alive_[i] && (root < 0 || vertex_[i] < vertex_[root]))
                root = static_cast<std::int32_t>(i);
        while (size_ > 3)
            cut(next_[root]);
    }

    void mark_untouched(std::vector<char>& flag) const {
        for (std::size_t i = 0; i < vertex_.size(); ++i)
            if (!touched_[i])
                flag[vertex_[i]] = 1;
    }

private:
    AugmentationState& state_;
    std::int32_t stage_;
    std::vector<DartId> walk_;
    std::vector<VertexId> vertex_;
    std::vector<DartId> in_;
    std::vector<std::int32_t> next_, prev_;
    std::vector<char> touched_, alive_;
    std::size_t size_ = 0;
};

// Logical enumeration of a face closed by an ear:
// y_0 .. y_{k+1} = z_0, z_1 .. z_{l+1} = y_0.
struct EarFrame {
    std::vector<std::int32_t> y;
    std::vector<std::int32_t> z;
    std::size_t k() const { return y.size() - 2; }
    std::size_t l() const { return z.size() - 2; }
};

EarFrame frame_for(const FacePolygon& poly, const Ear& ear, bool reversed) {
    const std::int32_t p0 = poly.position_of(ear.darts.front());
    const auto len = static_cast<std::int64_t>(poly.length());
    const auto kp1 = static_cast<std::int64_t>(ear.darts.size());
    EarFrame fr;
    for (std::int64_t j = 0; j <= kp1; ++j)
        fr.y.push_back(poly.wrap(p0 + j));
    for (std::int64_t j = kp1; j <= len; ++j)
        fr.z.push_back(poly.wrap(p0 + j));
    if (reversed) {
        std::reverse(fr.y.begin(), fr.y.end());
        std::reverse(fr.z.begin(), fr.z.end());
    }
    return fr;
}

void phase_one(FacePolygon& poly, const EarFrame& fr, const std::vector<char>& ih) {
    for (std::size_t j = 1; j <= fr.l(); ++j)
        if (!ih[poly.vertex(fr.z[j])])
            poly.cut(fr.z[j]);
}

void standard_phases(FacePolygon& poly, const EarFrame& fr, const std::vector<char>& ih) {
    phase_one(poly, fr, ih);
    const std::size_t k = fr.k();
    if (k % 2 == 1) {
        for (std::size_t j = 1; j <= k; j += 2)
            poly.cut(fr.y[j]);
    } else {
        if (!ih[poly.vertex(fr.y[k + 1])])
            poly.cut(fr.y[k + 1]);
        for (std::size_t j = 1; j + 1 <= k; j += 2)
            poly.cut(fr.y[j]);
    }
    poly.fan();
}

std::vector<Happiness> verified_happiness(const HappySupergraph& hs) {
    return check_happiness(hs.gplus, hs.original);
}

void require_no_bigons(const PlaneGraph& g) {
    const Classification cls = classify(g);
    for (std::size_t f = 0; f < cls.faces.size(); ++f)
        if (cls.faces[f].is_bigon)
            throw Error(ErrorKind::BigonPresent, "face " + std::to_string(f) + " is a bigon");
}

FaceId lower_face_at(const PlaneGraph& g, EdgeId e) {
    return std::min(g.face_of(2 * e), g.face_of(2 * e + 1));
}

} // namespace

AugmentationState start_augmentation(const PlaneGraph& g, const EarDecomposition& ed) {
    (void)ed;
    AugmentationState st{EmbeddingBuilder(g), std::vector<char>(g.num_vertices(), 0), {}, {}, g.num_edges(), 1};
    return st;
}

void augment_ear(const PlaneGraph& g, const EarDecomposition& ed, AugmentationState& state, std::size_t i) {
    if (i == 0 || i >= ed.ears.size())
        throw Error(ErrorKind::InvalidArgument, "ear index out of range");
    const Ear& ear = ed.ears[i];
    FacePolygon poly(g, ear.face, state, static_cast<std::int32_t>(i));
    // The second ear runs from s to t, so its Phase 2 fixes t.
    const bool reversed = i == 1 && ear.path.front() == ed.t;
    const EarFrame fr = frame_for(poly, ear, reversed);
    standard_phases(poly, fr, state.interior_happy);
    poly.mark_untouched(state.interior_happy);
    state.ears_done = i + 1;
}

AugmentationState build_gn_plus(const PlaneGraph& g, const EarDecomposition& ed, const EarObserver& observer) {
    AugmentationState st = start_augmentation(g, ed);
    if (observer)
        observer(st);
    for (std::size_t i = 1; i < ed.ears.size(); ++i) {
        augment_ear(g, ed, st, i);
        if (observer)
            observer(st);
    }
    return st;
}

HappySupergraph close_outer(const PlaneGraph& g, const EarDecomposition& ed, AugmentationState& state) {
    const auto stage = static_cast<std::int32_t>(ed.ears.size());
    FacePolygon poly(g, ed.outer_face, state, stage);
    const std::int32_t p = poly.position_of(ed.outer_dart);
    // z_0 = s, z_1 .. z_l, z_{l+1} = t along the outer face away from (s,t).
    std::vector<std::int32_t> z;
    const auto len = static_cast<std::int64_t>(poly.length());
    if (g.tail(ed.outer_dart) == ed.s) {
        for (std::int64_t j = 0; j < len; ++j)
            z.push_back(poly.wrap(p - j));
    } else {
        for (std::int64_t j = 0; j < len; ++j)
            z.push_back(poly.wrap(p + 1 + j));
    }
    const std::vector<char>& ih = state.interior_happy;
    for (std::size_t j = 1; j + 1 < z.size(); ++j)
        if (!ih[poly.vertex(z[j])])
            poly.cut(z[j]);
    if (!ih[ed.t])
        poly.cut(z.back());
    else if (!ih[ed.s])
        poly.cut(z.front());
    poly.fan();

    state.happy = state.interior_happy;
    poly.mark_untouched(state.happy);

    HappySupergraph hs;
    hs.gplus = state.gplus.build();
    hs.original.assign(hs.gplus.num_edges(), 0);
    std::fill(hs.original.begin(), hs.original.begin() + static_cast<std::ptrdiff_t>(state.original_edges), 1);

    const std::vector<Happiness> scan = verified_happiness(hs);
    for (std::size_t v = 0; v < scan.size(); ++v) {
        const bool h = scan[v] != Happiness::Unhappy;
        if (h != (state.happy[v] != 0))
            throw Error(ErrorKind::InvariantViolation,
                        "happiness bookkeeping disagrees with angle scan at vertex " + std::to_string(v));
        if (!h && static_cast<VertexId>(v) != ed.s)
            throw Error(ErrorKind::InvariantViolation, "vertex " + std::to_string(v) + " left unhappy");
    }
    if (!state.happy[ed.s])
        hs.unhappy_vertex = ed.s;
    return hs;
}

HappySupergraph build_happy_supergraph(const PlaneGraph& g, EdgeId first_edge, VertexId s,
                                       const EarObserver& observer) {
    const EarDecomposition ed = ear_decomposition(g, first_edge, s, lower_face_at(g, first_edge));
    AugmentationState st = build_gn_plus(g, ed, observer);
    return close_outer(g, ed, st);
}

// ---------------------------------------------------------------------------

namespace {

struct DegreeTwoChoice {
    VertexId x = kNone;
    VertexId t = kNone;
    DartId t_to_x = kNone;
};

DegreeTwoChoice find_degree_two(const PlaneGraph& g) {
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        const auto x = static_cast<VertexId>(v);
        if (g.degree(x) != 2)
            continue;
        for (DartId d : g.rotation(x)) {
            const VertexId w = g.head(d);
            if (g.degree(w) >= 3)
                return {x, w, twin(d)};
        }
    }
    return {};
}

bool has_even_or_triangle_face(const PlaneGraph& g, FaceId* which) {
    for (std::size_t f = 0; f < g.num_faces(); ++f) {
        const std::size_t d = g.face_degree(static_cast<FaceId>(f));
        if (d % 2 == 0 || d == 3) {
            if (which)
                *which = static_cast<FaceId>(f);
            return true;
        }
    }
    return false;
}

void check_all_happy_preconditions(const PlaneGraph& g) {
    if (!is_biconnected(g))
        throw Error(ErrorKind::NotBiconnected, "all-happy augmentation needs a 2-connected graph with n >= 3");
    require_no_bigons(g);
    bool cycle = true;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        cycle = cycle && g.degree(static_cast<VertexId>(v)) == 2;
    if (cycle && g.num_vertices() % 2 == 1 && g.num_vertices() >= 5)
        throw Error(ErrorKind::OddCycleUnfixable,
                    "cycle of odd length " + std::to_string(g.num_vertices()) + ": one vertex must stay unhappy");
}

HappySupergraph finish_all_happy(const PlaneGraph& g, const EarDecomposition& ed, AugmentationState& st) {
    if (!st.interior_happy[ed.s] && !st.interior_happy[ed.t])
        throw Error(ErrorKind::InvariantViolation, "neither end of the first ear became interior-happy");
    HappySupergraph hs = close_outer(g, ed, st);
    if (hs.unhappy_vertex)
        throw Error(ErrorKind::InvariantViolation,
                    "vertex " + std::to_string(*hs.unhappy_vertex) + " left unhappy by all-happy augmentation");
    return hs;
}

// Faces F_2 and F_3 are treated as one face of even degree with the shared
// edge (s',t') removed; every other vertex of it is cut off, choosing the
// parity class that keeps s' and t'.
void merged_first_faces(const PlaneGraph& g, const EarDecomposition& ed, AugmentationState& st) {
    if (ed.ears.size() < 3)
        throw Error(ErrorKind::InvariantViolation, "expected at least three ears");
    const Ear& e2 = ed.ears[1];
    const Ear& e3 = ed.ears[2];
    FacePolygon p2(g, e2.face, st, 2);
    FacePolygon p3(g, e3.face, st, 2);

    // Shared edge between the endpoints of P_3: a dart on F_2 whose twin is on F_3.
    DartId shared = kNone;
    for (DartId d : g.face_walk(e2.face))
        if (g.face_of(twin(d)) == e3.face)
            shared = d;
    if (shared == kNone)
        throw Error(ErrorKind::InvariantViolation, "F_2 and F_3 share no edge");
    {
        const VertexId a = e3.path.front(), b = e3.path.back();
        const VertexId u = g.tail(shared), w = g.head(shared);
        if (!((a == u && b == w) || (a == w && b == u)))
            throw Error(ErrorKind::InvariantViolation, "endpoints of P_3 are not consecutive on F_2");
    }

    // F_2 from s to t, avoiding the edge (s,t).
    const DartId st_on_f2 = twin(ed.outer_dart);
    const std::int32_t q = p2.position_of(st_on_f2);
    const auto len2 = static_cast<std::int64_t>(p2.length());
    std::vector<std::int32_t> seq2;
    if (g.tail(st_on_f2) == ed.t) {
        for (std::int64_t j = 1; j <= len2; ++j)
            seq2.push_back(p2.wrap(q + j));
    } else {
        for (std::int64_t j = 0; j < len2; ++j)
            seq2.push_back(p2.wrap(q - j));
    }
    // Shared edge inside seq2.
    std::size_t pos = seq2.size();
    for (std::size_t j = 0; j + 1 < seq2.size(); ++j) {
        const VertexId a = p2.vertex(seq2[j]), b = p2.vertex(seq2[j + 1]);
        if ((a == g.tail(shared) && b == g.head(shared)) || (a == g.head(shared) && b == g.tail(shared)))
            pos = j;
    }
    if (pos == seq2.size())
        throw Error(ErrorKind::InvariantViolation, "shared edge not found along F_2");

    // F_3 from y_i to y_j avoiding the shared edge.
    const DartId shared3 = twin(shared);
    const std::int32_t r = p3.position_of(shared3);
    const auto len3 = static_cast<std::int64_t>(p3.length());
    std::vector<std::int32_t> seq3;  // interior vertices of P_3, from the y_i side
    if (g.head(shared3) == p2.vertex(seq2[pos])) {
        for (std::int64_t j = 2; j < len3; ++j)
            seq3.push_back(p3.wrap(r + j));
    } else {
        for (std::int64_t j = len3 - 1; j >= 2; --j)
            seq3.push_back(p3.wrap(r + j));
    }

    struct Slot {
        FacePolygon* poly;
        std::int32_t node;
    };
    std::vector<Slot> yhat;
    for (std::size_t j = 0; j <= pos; ++j)
        yhat.push_back({&p2, seq2[j]});
    for (std::int32_t node : seq3)
        yhat.push_back({&p3, node});
    for (std::size_t j = pos + 1; j < seq2.size(); ++j)
        yhat.push_back({&p2, seq2[j]});
    const std::size_t i_idx = pos;
    const std::size_t j_idx = pos + 1 + seq3.size();
    if ((j_idx - i_idx) % 2 != 0 || yhat.size() % 2 != 0)
        throw Error(ErrorKind::InvariantViolation, "merged face has odd parity");

    const std::size_t keep_parity = i_idx % 2;
    for (std::size_t m = 0; m < yhat.size(); ++m)
        if (m % 2 != keep_parity)
            yhat[m].poly->cut(yhat[m].node);
    p2.fan();
    p3.fan();
    p2.mark_untouched(st.interior_happy);
    p3.mark_untouched(st.interior_happy);
    st.ears_done = 3;
}

void special_degree_two_ear(const PlaneGraph& g, const Ear& ear, std::size_t index, const DegreeTwoChoice& c,
                            AugmentationState& st) {
    FacePolygon poly(g, ear.face, st, static_cast<std::int32_t>(index));
    bool reversed;
    if (ear.path.back() == c.t)
        reversed = false;
    else if (ear.path.front() == c.t)
        reversed = true;
    else
        throw Error(ErrorKind::InvariantViolation, "ear closing the face beyond (x,t) does not end at t");
    const EarFrame fr = frame_for(poly, ear, reversed);
    const std::vector<char>& ih = st.interior_happy;
    const std::size_t k = fr.k();
    if (ih[c.t] || k % 2 == 0) {
        standard_phases(poly, fr, ih);
    } else {
        if (fr.l() < 1 || poly.vertex(fr.z[1]) != c.x)
            throw Error(ErrorKind::InvariantViolation, "x is not next to t on the old boundary");
        phase_one(poly, fr, ih);
        poly.cut(fr.y[k + 1]);  // chord (x, y_k)
        if (!ih[poly.vertex(fr.y[0])])
            poly.cut(fr.y[0]);  // chord (z_l, y_1)
        for (std::size_t j = 2; j + 1 <= k; j += 2)
            poly.cut(fr.y[j]);
        poly.fan();
    }
    poly.mark_untouched(st.interior_happy);
    st.ears_done = index + 1;
}

} // namespace

AllHappyCase all_happy_case(const PlaneGraph& g) {
    check_all_happy_preconditions(g);
    if (has_even_or_triangle_face(g, nullptr))
        return AllHappyCase::EvenOrTriangleFace;
    if (find_degree_two(g).x != kNone)
        return AllHappyCase::DegreeTwoVertex;
    return AllHappyCase::MergedFaces;
}

HappySupergraph build_all_happy(const PlaneGraph& g, const EarObserver& observer) {
    const AllHappyCase which = all_happy_case(g);

    if (which == AllHappyCase::EvenOrTriangleFace) {
        FaceId f = kNone;
        has_even_or_triangle_face(g, &f);
        const DartId d = g.face_walk(f)[0];
        const EarDecomposition ed = ear_decomposition(g, edge_of(d), g.tail(d), f);
        AugmentationState st = build_gn_plus(g, ed, observer);
        return finish_all_happy(g, ed, st);
    }

    if (which == AllHappyCase::DegreeTwoVertex) {
        const DegreeTwoChoice c = find_degree_two(g);
        const DartId t_to_s = g.rot_prev(c.t_to_x);
        const VertexId s = g.head(t_to_s);
        const FaceId f2 = g.face_of(c.t_to_x);
        const FaceId f_beyond = g.face_of(twin(c.t_to_x));
        const EarDecomposition ed = ear_decomposition(g, edge_of(t_to_s), s, f2);
        AugmentationState st = start_augmentation(g, ed);
        if (observer)
            observer(st);
        for (std::size_t i = 1; i < ed.ears.size(); ++i) {
            if (ed.ears[i].face == f_beyond)
                special_degree_two_ear(g, ed.ears[i], i, c, st);
            else
                augment_ear(g, ed, st, i);
            if (observer)
                observer(st);
        }
        if (!st.interior_happy[c.t])
            throw Error(ErrorKind::InvariantViolation, "t did not become interior-happy");
        return finish_all_happy(g, ed, st);
    }

    // No even or triangular face and no vertex of degree 2.
    const EarDecomposition ed = ear_decomposition(g, 0, g.endpoint_u(0), lower_face_at(g, 0));
    AugmentationState st = start_augmentation(g, ed);
    if (observer)
        observer(st);
    merged_first_faces(g, ed, st);
    if (observer)
        observer(st);
    for (std::size_t i = 3; i < ed.ears.size(); ++i) {
        augment_ear(g, ed, st, i);
        if (observer)
            observer(st);
    }
    return finish_all_happy(g, ed, st);
}

// ---------------------------------------------------------------------------

std::vector<Happiness> check_happiness(const PlaneGraph& gplus, const std::vector<char>& original,
                                       FaceId outer_face) {
    std::vector<Happiness> out(gplus.num_vertices(), Happiness::Unhappy);
    for (std::size_t f = 0; f < gplus.num_faces(); ++f) {
        const auto walk = gplus.face_walk(static_cast<FaceId>(f));
        if (walk.size() != 3)
            continue;
        const bool interior = static_cast<FaceId>(f) != outer_face;
        for (std::size_t i = 0; i < 3; ++i) {
            const DartId in = walk[i], out_d = walk[(i + 1) % 3];
            const EdgeId a = edge_of(in), b = edge_of(out_d);
            if (a == b || !original[a] || !original[b])
                continue;
            Happiness& h = out[gplus.head(in)];
            if (interior)
                h = Happiness::InteriorHappy;
            else if (h == Happiness::Unhappy)
                h = Happiness::Happy;
        }
    }
    return out;
}

InvariantReport check_augmentation_invariants(const PlaneGraph& g, const EarDecomposition& ed,
                                              const AugmentationState& state) {
    InvariantReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back("G_" + std::to_string(state.ears_done) + "^+: " + msg);
    };
    const std::size_t i = state.ears_done;
    const std::size_t m = g.num_edges();
    const PlaneGraph plus = state.gplus.build();

    std::vector<char> keep_g(m, 0);
    for (std::size_t j = 0; j < i && j < ed.ears.size(); ++j)
        for (DartId d : ed.ears[j].darts)
            keep_g[edge_of(d)] = 1;
    std::vector<char> keep_plus(plus.num_edges(), 0);
    std::copy(keep_g.begin(), keep_g.end(), keep_plus.begin());
    for (std::size_t c = 0; c < state.chord_stage.size(); ++c)
        if (static_cast<std::size_t>(state.chord_stage[c]) < i)
            keep_plus[m + c] = 1;

    const Subgraph gi = restrict_edges(g, keep_g);
    const Subgraph gp = restrict_edges(plus, keep_plus);
    const DartId od_plus = gp.dart_from_parent(ed.outer_dart);
    const FaceId outer_gp = gp.graph.face_of(od_plus);

    // (a) same outer walk, compared as dart sequences starting at the (s,t) dart.
    {
        std::vector<DartId> a, b;
        DartId d = gi.dart_from_parent(ed.outer_dart);
        do {
            a.push_back(gi.dart_to_parent(d));
            d = gi.graph.face_next(d);
        } while (d != gi.dart_from_parent(ed.outer_dart));
        d = od_plus;
        do {
            b.push_back(gp.dart_to_parent(d));
            d = gp.graph.face_next(d);
        } while (d != od_plus);
        if (a != b)
            fail("(a) outer face differs from the outer face of G_i");
    }
    // (b)
    for (std::size_t f = 0; f < gp.graph.num_faces(); ++f)
        if (static_cast<FaceId>(f) != outer_gp && gp.graph.face_degree(static_cast<FaceId>(f)) != 3)
            fail("(b) interior face " + std::to_string(f) + " has degree " +
                 std::to_string(gp.graph.face_degree(static_cast<FaceId>(f))));
    // (e)
    for (std::size_t e = 0; e < gp.graph.num_edges(); ++e)
        if (gp.graph.is_loop(static_cast<EdgeId>(e)))
            fail("(e) loop at vertex " + std::to_string(gp.vertex_to_parent[gp.graph.endpoint_u(static_cast<EdgeId>(e))]));

    std::vector<char> original(gp.graph.num_edges());
    for (std::size_t e = 0; e < original.size(); ++e)
        original[e] = static_cast<std::size_t>(gp.edge_to_parent[e]) < m;
    const std::vector<Happiness> h = check_happiness(gp.graph, original, outer_gp);
    std::vector<char> on_outer(gp.graph.num_vertices(), 0);
    for (DartId d : gp.graph.face_walk(outer_gp))
        on_outer[gp.graph.tail(d)] = 1;
    // (c)
    for (std::size_t v = 0; v < on_outer.size(); ++v)
        if (!on_outer[v] && h[v] != Happiness::InteriorHappy)
            fail("(c) interior vertex " + std::to_string(gp.vertex_to_parent[v]) + " is not interior-happy");
    // (d)
    for (DartId d : gp.graph.face_walk(outer_gp)) {
        if (gp.edge_to_parent[edge_of(d)] == ed.first_edge)
            continue;
        if (h[gp.graph.tail(d)] != Happiness::InteriorHappy && h[gp.graph.head(d)] != Happiness::InteriorHappy)
            fail("(d) outer edge " + std::to_string(gp.edge_to_parent[edge_of(d)]) +
                 " has no interior-happy endpoint");
    }
    // The bookkeeping must agree with the scan.
    for (std::size_t v = 0; v < gp.graph.num_vertices(); ++v) {
        const VertexId pv = gp.vertex_to_parent[v];
        if ((h[v] == Happiness::InteriorHappy) != (state.interior_happy[pv] != 0))
            fail("interior-happy flag of vertex " + std::to_string(pv) + " disagrees with angle scan");
    }
    return rep;
}

} // namespace facehit
