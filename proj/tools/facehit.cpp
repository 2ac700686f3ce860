// Command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "facehit/facehit.h"

namespace {

struct GraphFree {
    void operator()(fh_graph* g) const { fh_graph_free(g); }
};
struct PartitionFree {
    void operator()(fh_partition* p) const { fh_partition_free(p); }
};
struct StringFree {
    void operator()(char* s) const { fh_string_free(s); }
};
using GraphPtr = std::unique_ptr<fh_graph, GraphFree>;
using PartitionPtr = std::unique_ptr<fh_partition, PartitionFree>;
using StringPtr = std::unique_ptr<char, StringFree>;

int report(fh_status st) {
    if (st != FH_OK) std::cerr << "facehit: " << fh_last_error() << '\n';
    return st;
}

int emit(const std::string& path, const char* text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "facehit: cannot write " << path << '\n';
        return FH_PRECONDITION;
    }
    out << text;
    return 0;
}

fh_status load_graph(const std::string& path, GraphPtr& out) {
    fh_graph* g = nullptr;
    fh_status st;
    if (path == "-") {
        std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        st = fh_graph_parse(text.c_str(), &g);
    } else {
        st = fh_graph_read_file(path.c_str(), &g);
    }
    out.reset(g);
    return st;
}

fh_engine parse_engine(const std::string& name) { return name == "blossom" ? FH_ENGINE_BLOSSOM : FH_ENGINE_CUBIC; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partition plane graphs into two dominating, face-hitting vertex sets"};
    app.require_subcommand(1);
    app.set_version_flag("--version", fh_version());

    // partition
    std::string p_input, p_output;
    int p_ref = -1;
    bool p_permissive = false;
    std::string p_engine = "cubic";
    auto* part = app.add_subcommand("partition", "Compute a vertex partition for a graph document");
    part->add_option("input", p_input, "graph document, or - for stdin")->required();
    part->add_option("--reference-edge,-e", p_ref, "edge kept in the cover (default: lowest non-loop edge)");
    auto* strict_flag = part->add_flag("--strict", "require every face to have three distinct vertices (default)");
    part->add_flag("--permissive", p_permissive, "allow small faces; only 3+-faces are hit")->excludes(strict_flag);
    part->add_option("--engine", p_engine, "matching engine")->check(CLI::IsMember({"cubic", "blossom"}));
    part->add_option("--output,-o", p_output, "output file (default stdout)");

    // verify
    std::string v_graph, v_partition;
    auto* verify = app.add_subcommand("verify", "Check a partition document against its graph");
    verify->add_option("graph", v_graph, "graph document")->required();
    verify->add_option("partition", v_partition, "partition document")->required();

    // gen
    std::string g_kind, g_output;
    std::size_t g_n = 0;
    std::uint64_t g_seed = 1;
    auto* gen = app.add_subcommand("gen", "Generate a graph document");
    gen->add_option("kind", g_kind, "generator")
        ->required()
        ->check(CLI::IsMember({"triangulation", "sparse", "sparse-permissive", "biconnected", "odd_cycle", "k4_bigons",
                               "loop_attachments", "multi_block_chain", "odd_faces"}));
    gen->add_option("n", g_n, "size parameter")->required();
    gen->add_option("--seed,-s", g_seed, "random seed");
    gen->add_option("--output,-o", g_output, "output file (default stdout)");

    // bench
    std::vector<std::size_t> b_sizes{10000, 100000, 1000000};
    std::size_t b_seeds = 5;
    std::string b_engine = "cubic", b_kind = "triangulation";
    auto* bench = app.add_subcommand("bench", "Time the partition pipeline on generated graphs");
    bench->add_option("--sizes", b_sizes, "vertex counts")->delimiter(',');
    bench->add_option("--seeds", b_seeds, "seeds per size");
    bench->add_option("--engine", b_engine, "matching engine")->check(CLI::IsMember({"cubic", "blossom"}));
    bench->add_option("--kind", b_kind, "generator");

    // export
    std::string x_input, x_partition, x_output;
    bool x_svg = false;
    int x_gplus = -1;
    auto* exp = app.add_subcommand("export", "Draw a graph as DOT or SVG");
    exp->add_option("input", x_input, "graph document")->required();
    auto* dot_flag = exp->add_flag("--dot", "Graphviz output (default)");
    exp->add_flag("--svg", x_svg, "SVG output")->excludes(dot_flag);
    exp->add_option("--partition,-p", x_partition, "colour vertices by a partition document");
    exp->add_option("--gplus", x_gplus, "draw the triangulated supergraph built from this reference edge");
    exp->add_option("--output,-o", x_output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : FH_PARSE_ERROR;
    }

    if (*part) {
        GraphPtr g;
        if (fh_status st = load_graph(p_input, g)) return report(st);
        fh_options opts;
        fh_options_default(&opts);
        opts.reference_edge = p_ref;
        opts.strict = p_permissive ? 0 : 1;
        opts.engine = parse_engine(p_engine);
        fh_partition* raw = nullptr;
        if (fh_status st = fh_partition_compute(g.get(), &opts, &raw)) return report(st);
        PartitionPtr p(raw);
        char* text = nullptr;
        if (fh_status st = fh_partition_serialize(p.get(), &text)) return report(st);
        StringPtr owned(text);
        std::size_t a = 0, b = 0;
        fh_partition_class(p.get(), 1, &a);
        fh_partition_class(p.get(), 2, &b);
        std::cerr << "n=" << fh_graph_num_vertices(g.get()) << " |V1|=" << a << " |V2|=" << b
                  << " pipeline_ms=" << fh_partition_pipeline_ms(p.get()) << '\n';
        return emit(p_output, text);
    }

    if (*verify) {
        GraphPtr g;
        if (fh_status st = load_graph(v_graph, g)) return report(st);
        fh_partition* raw = nullptr;
        if (fh_status st = fh_partition_read_file(v_partition.c_str(), &raw)) return report(st);
        PartitionPtr p(raw);
        char* text = nullptr;
        const fh_status st = fh_verify(g.get(), p.get(), &text);
        StringPtr owned(text);
        if (text) std::cout << text;
        if (st == FH_OK) std::cout << "OK\n";
        return st == FH_VERIFY_FAILED ? (std::cout << "INVALID\n", st) : report(st);
    }

    if (*gen) {
        fh_graph* raw = nullptr;
        if (fh_status st = fh_graph_generate(g_kind.c_str(), g_n, g_seed, &raw)) return report(st);
        GraphPtr g(raw);
        char* text = nullptr;
        if (fh_status st = fh_graph_serialize(g.get(), &text)) return report(st);
        StringPtr owned(text);
        return emit(g_output, text);
    }

    if (*bench) {
        std::printf("%10s %6s %12s %12s %8s\n", "n", "seeds", "total_ms", "ns/vertex", "valid");
        double previous = 0.0;
        for (std::size_t n : b_sizes) {
            double total_ms = 0.0;
            bool valid = true;
            for (std::size_t s = 0; s < b_seeds; ++s) {
                fh_graph* raw = nullptr;
                if (fh_status st = fh_graph_generate(b_kind.c_str(), n, 1000 + s, &raw)) return report(st);
                GraphPtr g(raw);
                fh_options opts;
                fh_options_default(&opts);
                opts.strict = b_kind == "triangulation" || b_kind == "sparse";
                opts.engine = parse_engine(b_engine);
                fh_partition* praw = nullptr;
                if (fh_status st = fh_partition_compute(g.get(), &opts, &praw)) return report(st);
                PartitionPtr p(praw);
                total_ms += fh_partition_pipeline_ms(p.get());
                if (n <= 100000) valid = valid && fh_verify(g.get(), p.get(), nullptr) == FH_OK;
            }
            const double per_vertex = total_ms * 1e6 / static_cast<double>(n * b_seeds);
            std::printf("%10zu %6zu %12.2f %12.1f %8s", n, b_seeds, total_ms, per_vertex, valid ? "yes" : "NO");
            if (previous > 0) std::printf("  ratio %.2f", per_vertex / previous);
            std::printf("\n");
            previous = per_vertex;
        }
        return 0;
    }

    if (*exp) {
        GraphPtr g;
        if (fh_status st = load_graph(x_input, g)) return report(st);
        if (x_gplus >= 0) {
            fh_graph* raw = nullptr;
            if (fh_status st = fh_graph_happy_supergraph(g.get(), x_gplus, &raw)) return report(st);
            g.reset(raw);
        }
        PartitionPtr p;
        if (!x_partition.empty()) {
            fh_partition* raw = nullptr;
            if (fh_status st = fh_partition_read_file(x_partition.c_str(), &raw)) return report(st);
            p.reset(raw);
        }
        char* text = nullptr;
        if (fh_status st = fh_export(g.get(), p.get(), x_svg ? FH_FORMAT_SVG : FH_FORMAT_DOT, &text)) return report(st);
        StringPtr owned(text);
        return emit(x_output, text);
    }
    return 0;
}
