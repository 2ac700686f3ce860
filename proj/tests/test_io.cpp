#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "facehit/happy.hpp"
#include "facehit/io.hpp"
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

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t c = 0;
    for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++c;
    return c;
}

} // namespace

TEST_CASE("graph documents round-trip byte for byte") {
    const std::vector<PlaneGraph> graphs = {gen_k4(), gen_cycle(7), gen_loop_attachments(3, 0), gen_k4_bigons(8, 2),
                                            gen_sparse_plane(40, 9, false), gen_multi_block_chain(4, 3)};
    for (const PlaneGraph& g : graphs) {
        const std::string text = write_graph(g);
        const GraphDocument doc = parse_graph(text);
        CHECK(doc.graph.rotation_lists() == g.rotation_lists());
        CHECK(write_graph(doc) == text);
    }
    GraphDocument tagged{gen_cycle(3), {"original", "added", "original"}};
    const std::string text = write_graph(tagged);
    CHECK(parse_graph(text).edge_tags == tagged.edge_tags);
    CHECK(write_graph(parse_graph(text)) == text);
}

TEST_CASE("graph document format") {
    const std::string k2 = "facehit-graph 1\n{\"n\":2,\"edges\":[[0,0,1]],\"rotation\":[[[0,\"u\"]],[[0,\"v\"]]]}\n";
    CHECK(write_graph(PlaneGraph::from_rotation(2, 1, {{0}, {1}})) == k2);
    const GraphDocument doc = parse_graph(k2);
    CHECK(doc.graph.num_vertices() == 2);
    CHECK(doc.graph.num_faces() == 1);
}

TEST_CASE("graph document errors") {
    CHECK(kind_of([] { parse_graph("junk\n{}"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_graph("facehit-graph 1\n{\"n\":"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_graph("facehit-graph 1\n{\"edges\":[],\"rotation\":[]}"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_graph("facehit-graph 1\n{\"n\":2,\"edges\":[[1,0,1]],\"rotation\":[[[0,\"u\"]],[[0,\"v\"]]]}"); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([] { parse_graph("facehit-graph 1\n{\"n\":2,\"edges\":[[0,0,5]],\"rotation\":[[],[]]}"); }) == ErrorKind::Parse);
    // End tag on the wrong vertex.
    CHECK(kind_of([] { parse_graph("facehit-graph 1\n{\"n\":2,\"edges\":[[0,0,1]],\"rotation\":[[[0,\"v\"]],[[0,\"u\"]]]}"); }) ==
          ErrorKind::MalformedRotation);
    // A dart listed twice, another missing.
    CHECK(kind_of([] { parse_graph("facehit-graph 1\n{\"n\":2,\"edges\":[[0,0,1]],\"rotation\":[[[0,\"u\"],[0,\"u\"]],[]]}"); }) ==
          ErrorKind::MalformedRotation);
    CHECK(kind_of([] { parse_graph("facehit-graph 1\n{\"n\":2,\"edges\":[[0,0,1]],\"rotation\":[[[3,\"u\"]],[]]}"); }) ==
          ErrorKind::MalformedRotation);
    CHECK(kind_of([] {
              parse_graph("facehit-graph 1\n{\"n\":3,\"edges\":[[0,0,1,\"a\"],[1,1,2]],\"rotation\":[[[0,\"u\"]],[[0,\"v\"],[1,\"u\"]],[[1,\"v\"]]]}");
          }) == ErrorKind::Parse);
}

TEST_CASE("partition documents") {
    const PlaneGraph k4 = gen_k4();
    const VertexPartition p = partition(k4);
    const PartitionDocument doc = make_partition_document(k4, p, PartitionMode::Strict, 1.5);
    const std::string text = write_partition(doc);
    CHECK(text.rfind("facehit-partition 1\n", 0) == 0);
    const PartitionDocument back = parse_partition(text);
    CHECK(back.v1 == p.v1);
    CHECK(back.v2 == p.v2);
    CHECK(back.h_edges == p.witness.h_edges);
    CHECK(back.removed_matching == p.witness.removed_matching);
    CHECK(back.reference_edge == p.witness.reference_edge);
    CHECK(back.n == 4);
    CHECK(back.m == 6);
    CHECK(write_partition(back) == text);
    CHECK(kind_of([] { parse_partition("facehit-partition 1\n{\"v1\":[0]}"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_partition("facehit-graph 1\n{}"); }) == ErrorKind::Parse);
}

TEST_CASE("exit codes") {
    CHECK(exit_code_for(ErrorKind::Parse) == 2);
    CHECK(exit_code_for(ErrorKind::MalformedRotation) == 2);
    CHECK(exit_code_for(ErrorKind::StrictModeViolation) == 3);
    CHECK(exit_code_for(ErrorKind::TooSmall) == 3);
    CHECK(exit_code_for(ErrorKind::InvariantViolation) == 4);
}

TEST_CASE("drawings") {
    SUBCASE("K4 as DOT") {
        const std::string dot = to_dot(gen_k4(), {});
        CHECK(count(dot, "pos=") == 4);
        CHECK(count(dot, " -- ") == 6);
    }
    SUBCASE("supergraph of C5 marks added edges") {
        const PlaneGraph c5 = gen_cycle(5);
        const HappySupergraph hs = build_happy_supergraph(c5, 0, c5.endpoint_u(0));
        DrawStyle style;
        for (char o : hs.original) style.edge_dashed.push_back(!o);
        const std::size_t added = static_cast<std::size_t>(std::count(hs.original.begin(), hs.original.end(), 0));
        CHECK(added == hs.gplus.num_edges() - 5);
        CHECK(count(to_svg(hs.gplus, style), "stroke-dasharray") == added);
        CHECK(count(to_dot(hs.gplus, style), "style=dashed") == added);
    }
    SUBCASE("partition colours") {
        const PlaneGraph k4 = gen_k4();
        const VertexPartition p = partition(k4);
        DrawStyle style;
        style.vertex_class.assign(4, 0);
        for (VertexId v : p.v2) style.vertex_class[v] = 1;
        const std::string svg = to_svg(k4, style);
        CHECK(count(svg, "<circle") == 4);
        CHECK(count(svg, "#d95f02") == 2);
        CHECK(count(svg, "#1b9e77") == 2);
    }
    SUBCASE("layout keeps vertices finite on multigraphs") {
        const PlaneGraph g = gen_multi_block_chain(5, 4);
        for (const Point& pt : tutte_layout(g)) {
            CHECK(std::isfinite(pt.x));
            CHECK(std::isfinite(pt.y));
        }
        CHECK(count(to_svg(g, {}), "<path") == g.num_edges());
    }
}
