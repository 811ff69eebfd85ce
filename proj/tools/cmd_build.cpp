#include <algorithm>
#include <filesystem>
#include <iostream>
#include <memory>
#include <thread>

#include "commands.hpp"
#include "stl/hierarchy.hpp"
#include "stl/index_io.hpp"
#include "stl/labelling.hpp"

namespace stl::cli {
namespace {

struct BuildOpts {
    std::string graph_path;
    std::string out_path;
    double beta = 0.2;
    uint32_t leaf_threshold = 8;
    uint64_t partition_seed = 1;
    unsigned threads = 0;  // 0: one per hardware thread
};

void run(const BuildOpts& o) {
    unsigned threads =
        o.threads ? o.threads
                  : std::max(1u, std::thread::hardware_concurrency());
    uint64_t t0 = now_us();
    Index idx;
    idx.graph = load_graph(o.graph_path);
    idx.meta.beta = o.beta;
    idx.meta.leaf_threshold = o.leaf_threshold;
    idx.meta.seed = o.partition_seed;
    BuildConfig cfg;
    cfg.beta = o.beta;
    cfg.leaf_threshold = o.leaf_threshold;
    cfg.seed = o.partition_seed;
    idx.hierarchy = build_hierarchy(idx.graph, cfg);
    LabelBuildStats ls;
    idx.labelling = build_labels(idx.graph, idx.hierarchy, threads, &ls);
    save_index(o.out_path, idx);
    uint64_t wall = now_us() - t0;

    // Height: the longest label, i.e. the most predecessors any vertex has.
    uint32_t height = 0;
    for (vertex_t v = 0; v < idx.graph.num_vertices(); ++v)
        height = std::max(height, idx.hierarchy.label_len(v));
    std::cout << "build n=" << idx.graph.num_vertices()
              << " m=" << idx.graph.num_edges() << " height=" << height
              << " levels=" << idx.hierarchy.max_level() + 1
              << " label_entries=" << idx.labelling.total_entries()
              << " index_bytes=" << std::filesystem::file_size(o.out_path)
              << " pops=" << ls.pops << " writes=" << ls.writes
              << " threads=" << threads << " build_s=" << double(wall) / 1e6
              << "\n";
}

}  // namespace

void add_build(CLI::App& app) {
    auto o = std::make_shared<BuildOpts>();
    CLI::App* sub =
        app.add_subcommand("build", "construct an index from a DIMACS graph");
    sub->add_option("graph", o->graph_path, "DIMACS .gr file")->required();
    sub->add_option("-o,--out", o->out_path, "output index file")->required();
    sub->add_option("--beta", o->beta, "separator balance slack");
    sub->add_option("--leaf-threshold", o->leaf_threshold,
                    "max vertices in a leaf node");
    sub->add_option("--partition-seed", o->partition_seed,
                    "separator RNG seed");
    sub->add_option("--threads", o->threads, "label build threads")
        ->envname("STL_THREADS");
    sub->callback([o] { run(*o); });
}

}  // namespace stl::cli
