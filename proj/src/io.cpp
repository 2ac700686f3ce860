#include "facehit/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace facehit {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kGraphHeader = "facehit-graph 1";
constexpr std::string_view kPartitionHeader = "facehit-partition 1";

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

Json parse_body(std::string_view text, std::string_view header) {
    const auto nl = text.find('\n');
    std::string_view first = text.substr(0, nl);
    if (!first.empty() && first.back() == '\r') first.remove_suffix(1);
    if (first != header)
        parse_error("expected header '" + std::string(header) + "', found '" + std::string(first.substr(0, 60)) + "'");
    if (nl == std::string_view::npos) parse_error("missing document body");
    try {
        return Json::parse(text.substr(nl + 1));
    } catch (const Json::exception& e) {
        parse_error(std::string("invalid JSON: ") + e.what());
    }
}

template <class T>
T get_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        parse_error(std::string("field '") + key + "': " + e.what());
    }
}

std::int64_t as_index(const Json& j, const char* what) {
    if (!j.is_number_integer()) parse_error(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

} // namespace

GraphDocument parse_graph(std::string_view text) {
    const Json body = parse_body(text, kGraphHeader);
    const auto n = get_field<std::int64_t>(body, "n");
    if (n < 0) parse_error("n must be non-negative");
    const Json edges = get_field<Json>(body, "edges");
    const Json rotation = get_field<Json>(body, "rotation");
    if (!edges.is_array() || !rotation.is_array()) parse_error("edges and rotation must be arrays");
    if (rotation.size() != static_cast<std::size_t>(n)) parse_error("rotation needs one list per vertex");

    const std::size_t m = edges.size();
    std::vector<std::pair<VertexId, VertexId>> ends(m);
    GraphDocument doc;
    const bool tagged = m > 0 && edges[0].is_array() && edges[0].size() == 4;
    if (tagged) doc.edge_tags.assign(m, "");
    for (std::size_t i = 0; i < m; ++i) {
        const Json& e = edges[i];
        if (!e.is_array() || e.size() < 3 || e.size() > 4) parse_error("edge entry " + std::to_string(i) + " must be [id, u, v(, tag)]");
        if (as_index(e[0], "edge id") != static_cast<std::int64_t>(i))
            parse_error("edge ids must be 0.." + std::to_string(m) + "-1 in order; entry " + std::to_string(i));
        const auto u = as_index(e[1], "endpoint"), v = as_index(e[2], "endpoint");
        if (u < 0 || u >= n || v < 0 || v >= n) parse_error("edge " + std::to_string(i) + " has an endpoint out of range");
        ends[i] = {static_cast<VertexId>(u), static_cast<VertexId>(v)};
        if ((e.size() == 4) != tagged) parse_error("either every edge or no edge carries a tag");
        if (tagged) {
            if (!e[3].is_string()) parse_error("edge tag must be a string");
            doc.edge_tags[i] = e[3].get<std::string>();
        }
    }

    std::vector<std::vector<DartId>> rot(static_cast<std::size_t>(n));
    for (std::size_t v = 0; v < rot.size(); ++v) {
        const Json& list = rotation[v];
        if (!list.is_array()) parse_error("rotation of vertex " + std::to_string(v) + " must be an array");
        for (const Json& entry : list) {
            if (!entry.is_array() || entry.size() != 2 || !entry[1].is_string())
                parse_error("rotation entries are [edge, \"u\"|\"v\"] at vertex " + std::to_string(v));
            const auto e = as_index(entry[0], "rotation edge");
            if (e < 0 || static_cast<std::size_t>(e) >= m)
                throw Error(ErrorKind::MalformedRotation, "vertex " + std::to_string(v) + " names unknown edge " + std::to_string(e));
            const std::string side = entry[1].get<std::string>();
            if (side != "u" && side != "v") parse_error("end tag must be \"u\" or \"v\"");
            const VertexId expected = side == "u" ? ends[e].first : ends[e].second;
            if (expected != static_cast<VertexId>(v))
                throw Error(ErrorKind::MalformedRotation, "edge " + std::to_string(e) + " end " + side +
                                                              " is listed at vertex " + std::to_string(v) +
                                                              " but belongs to vertex " + std::to_string(expected));
            rot[v].push_back(static_cast<DartId>(2 * e + (side == "v")));
        }
    }
    doc.graph = PlaneGraph::from_rotation(static_cast<std::size_t>(n), m, rot);
    return doc;
}

std::string write_graph(const GraphDocument& doc) {
    const PlaneGraph& g = doc.graph;
    Json body;
    body["n"] = g.num_vertices();
    Json edges = Json::array();
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto ei = static_cast<EdgeId>(e);
        Json entry = Json::array({ei, g.endpoint_u(ei), g.endpoint_v(ei)});
        if (!doc.edge_tags.empty()) entry.push_back(doc.edge_tags[e]);
        edges.push_back(std::move(entry));
    }
    body["edges"] = std::move(edges);
    Json rotation = Json::array();
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        Json list = Json::array();
        for (DartId d : g.rotation(static_cast<VertexId>(v))) list.push_back(Json::array({edge_of(d), (d & 1) ? "v" : "u"}));
        rotation.push_back(std::move(list));
    }
    body["rotation"] = std::move(rotation);
    return std::string(kGraphHeader) + "\n" + body.dump() + "\n";
}

std::string write_graph(const PlaneGraph& g) { return write_graph(GraphDocument{g, {}}); }

PartitionDocument parse_partition(std::string_view text) {
    const Json body = parse_body(text, kPartitionHeader);
    PartitionDocument doc;
    doc.v1 = get_field<std::vector<VertexId>>(body, "v1");
    doc.v2 = get_field<std::vector<VertexId>>(body, "v2");
    doc.h_edges = get_field<std::vector<EdgeId>>(body, "h_edges");
    doc.removed_matching = get_field<std::vector<EdgeId>>(body, "removed_matching");
    doc.reference_edge = get_field<EdgeId>(body, "reference_edge");
    doc.mode = get_field<std::string>(body, "mode");
    if (doc.mode != "strict" && doc.mode != "permissive") parse_error("mode must be strict or permissive");
    const Json stats = get_field<Json>(body, "stats");
    doc.n = get_field<std::size_t>(stats, "n");
    doc.m = get_field<std::size_t>(stats, "m");
    doc.pipeline_ms = get_field<double>(stats, "pipeline_ms");
    return doc;
}

std::string write_partition(const PartitionDocument& doc) {
    Json body;
    body["v1"] = doc.v1;
    body["v2"] = doc.v2;
    body["h_edges"] = doc.h_edges;
    body["removed_matching"] = doc.removed_matching;
    body["reference_edge"] = doc.reference_edge;
    body["mode"] = doc.mode;
    body["stats"] = Json{{"n", doc.n},
                         {"m", doc.m},
                         {"size_v1", doc.v1.size()},
                         {"size_v2", doc.v2.size()},
                         {"pipeline_ms", doc.pipeline_ms}};
    return std::string(kPartitionHeader) + "\n" + body.dump() + "\n";
}

PartitionDocument make_partition_document(const PlaneGraph& g, const VertexPartition& p, PartitionMode mode,
                                          double pipeline_ms) {
    PartitionDocument doc;
    doc.v1 = p.v1;
    doc.v2 = p.v2;
    doc.h_edges = p.witness.h_edges;
    doc.removed_matching = p.witness.removed_matching;
    doc.reference_edge = p.witness.reference_edge;
    doc.mode = mode == PartitionMode::Strict ? "strict" : "permissive";
    doc.n = g.num_vertices();
    doc.m = g.num_edges();
    doc.pipeline_ms = pipeline_ms;
    return doc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    out << text;
}

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::MalformedRotation:
        return 2;
    case ErrorKind::InvariantViolation:
        return 4;
    default:
        return 3;
    }
}

std::vector<Point> tutte_layout(const PlaneGraph& g, std::size_t iterations) {
    const std::size_t n = g.num_vertices();
    std::vector<Point> pos(n);
    std::vector<char> pinned(n, 0);
    const auto& comp = g.component_of();
    const std::size_t nc = g.num_components();

    // The longest face of each component becomes its outer boundary.
    std::vector<FaceId> outer(nc, kNone);
    for (std::size_t f = 0; f < g.num_faces(); ++f) {
        const auto fi = static_cast<FaceId>(f);
        const auto c = comp[g.tail(g.face_walk(fi).front())];
        if (outer[c] == kNone || distinct_vertices_on_face(g, fi) > distinct_vertices_on_face(g, outer[c])) outer[c] = fi;
    }
    const double side = std::ceil(std::sqrt(static_cast<double>(nc)));
    for (std::size_t c = 0; c < nc; ++c) {
        const Point centre{2.5 * static_cast<double>(c % static_cast<std::size_t>(side)),
                           2.5 * std::floor(static_cast<double>(c) / side)};
        std::vector<VertexId> ring;
        if (outer[c] != kNone) {
            for (DartId d : g.face_walk(outer[c])) {
                const VertexId v = g.tail(d);
                if (std::find(ring.begin(), ring.end(), v) == ring.end()) ring.push_back(v);
            }
        }
        for (std::size_t i = 0; i < ring.size(); ++i) {
            const double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(ring.size());
            pos[ring[i]] = {centre.x + std::cos(a), centre.y - std::sin(a)};
            pinned[ring[i]] = 1;
        }
        for (std::size_t v = 0; v < n; ++v)
            if (comp[v] == static_cast<VertexId>(c) && !pinned[v]) pos[v] = centre;
    }
    for (std::size_t it = 0; it < iterations; ++it) {
        for (std::size_t v = 0; v < n; ++v) {
            if (pinned[v]) continue;
            Point sum;
            std::size_t cnt = 0;
            for (DartId d : g.rotation(static_cast<VertexId>(v))) {
                const VertexId w = g.head(d);
                if (w == static_cast<VertexId>(v)) continue;
                sum.x += pos[w].x;
                sum.y += pos[w].y;
                ++cnt;
            }
            if (cnt) pos[v] = {sum.x / static_cast<double>(cnt), sum.y / static_cast<double>(cnt)};
        }
    }
    return pos;
}

namespace {

const char* kClassFill[2] = {"#d95f02", "#1b9e77"};

bool flag(const std::vector<char>& v, std::size_t i) { return i < v.size() && v[i]; }

} // namespace

std::string to_dot(const PlaneGraph& g, const DrawStyle& style) {
    const auto pos = tutte_layout(g);
    std::ostringstream out;
    out << "graph facehit {\n  graph [splines=true";
    if (!style.title.empty()) out << ", label=\"" << style.title << "\"";
    out << "];\n  node [shape=circle, style=filled, fillcolor=white, width=0.3, fixedsize=true];\n";
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        out << "  " << v << " [pos=\"" << pos[v].x * 150 << ',' << pos[v].y * 150 << "!\"";
        if (v < style.vertex_class.size() && style.vertex_class[v] >= 0)
            out << ", fillcolor=\"" << kClassFill[style.vertex_class[v] & 1] << "\"";
        out << "];\n";
    }
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto ei = static_cast<EdgeId>(e);
        out << "  " << g.endpoint_u(ei) << " -- " << g.endpoint_v(ei) << " [id=\"e" << e << "\"";
        if (flag(style.edge_dashed, e)) out << ", style=dashed, color=\"#3366cc\"";
        if (flag(style.edge_emphasis, e)) out << ", penwidth=2.5";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_svg(const PlaneGraph& g, const DrawStyle& style) {
    const auto pos = tutte_layout(g);
    double minx = 0, miny = 0, maxx = 0, maxy = 0;
    for (std::size_t v = 0; v < pos.size(); ++v) {
        minx = v ? std::min(minx, pos[v].x) : pos[v].x;
        miny = v ? std::min(miny, pos[v].y) : pos[v].y;
        maxx = v ? std::max(maxx, pos[v].x) : pos[v].x;
        maxy = v ? std::max(maxy, pos[v].y) : pos[v].y;
    }
    const double scale = 200.0, margin = 40.0;
    auto sx = [&](double x) { return margin + (x - minx) * scale; };
    auto sy = [&](double y) { return margin + (y - miny) * scale; };
    const double width = 2 * margin + (maxx - minx) * scale, height = 2 * margin + (maxy - miny) * scale;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    if (!style.title.empty()) out << "  <title>" << style.title << "</title>\n";

    // Parallel edges bend by their rank among the edges of the same pair.
    std::vector<std::pair<std::pair<VertexId, VertexId>, EdgeId>> keyed;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto ei = static_cast<EdgeId>(e);
        keyed.push_back({std::minmax(g.endpoint_u(ei), g.endpoint_v(ei)), ei});
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> rank(g.num_edges(), 0);
    for (std::size_t i = 1; i < keyed.size(); ++i)
        if (keyed[i].first == keyed[i - 1].first) rank[keyed[i].second] = rank[keyed[i - 1].second] + 1;

    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto ei = static_cast<EdgeId>(e);
        const Point a = pos[g.endpoint_u(ei)], b = pos[g.endpoint_v(ei)];
        std::string stroke = "#333333";
        std::string extra;
        if (flag(style.edge_dashed, e)) {
            stroke = "#3366cc";
            extra += " stroke-dasharray=\"6,4\"";
        }
        const double w = flag(style.edge_emphasis, e) ? 3.0 : 1.2;
        out << "  <path id=\"e" << e << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << w << "\"" << extra << " d=\"";
        if (g.is_loop(ei)) {
            const double r = 0.12 * (1 + rank[e]);
            out << "M " << sx(a.x) << ' ' << sy(a.y) << " c " << -r * scale << ' ' << -2 * r * scale << ' ' << r * scale
                << ' ' << -2 * r * scale << " 0 0";
        } else {
            const int k = rank[e];
            const double bend = (k % 2 ? 1 : -1) * 0.15 * ((k + 1) / 2);
            const double mx = (a.x + b.x) / 2 - (b.y - a.y) * bend, my = (a.y + b.y) / 2 + (b.x - a.x) * bend;
            out << "M " << sx(a.x) << ' ' << sy(a.y) << " Q " << sx(mx) << ' ' << sy(my) << ' ' << sx(b.x) << ' ' << sy(b.y);
        }
        out << "\"/>\n";
    }
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        std::string fill = "white";
        if (v < style.vertex_class.size() && style.vertex_class[v] >= 0) fill = kClassFill[style.vertex_class[v] & 1];
        out << "  <circle cx=\"" << sx(pos[v].x) << "\" cy=\"" << sy(pos[v].y) << "\" r=\"9\" fill=\"" << fill
            << "\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << sx(pos[v].x) << "\" y=\"" << sy(pos[v].y) + 4
            << "\" font-size=\"10\" text-anchor=\"middle\">" << v << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace facehit
