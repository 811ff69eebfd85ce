#include <iostream>
#include <memory>

#include "commands.hpp"
#include "stl/workload.hpp"

namespace stl::cli {
namespace {

struct GenOpts {
    std::string graph_path;
    std::string out_path;
    WorkloadConfig cfg;
};

void run(const GenOpts& o) {
    Graph g = load_graph(o.graph_path);
    Workload w = generate_workload(g, o.cfg);
    save_workload(o.out_path, w);
    for (size_t i = 0; i < w.query_sets.size(); ++i)
        if (w.query_sets[i].pairs.size() < o.cfg.queries_per_set)
            std::cerr << "warning: query set " << i << " holds "
                      << w.query_sets[i].pairs.size() << " of "
                      << o.cfg.queries_per_set << " pairs\n";
    std::cout << "workload batches=" << w.increases.size()
              << " batch_size=" << o.cfg.batch_size
              << " factor=" << w.factor << " qsets=" << w.query_sets.size()
              << " seed=" << w.seed << "\n";
}

}  // namespace

void add_gen_workload(CLI::App& app) {
    auto o = std::make_shared<GenOpts>();
    CLI::App* sub = app.add_subcommand(
        "gen-workload", "sample update batches and stratified query sets");
    sub->add_option("graph", o->graph_path, "DIMACS .gr file")->required();
    sub->add_option("-o,--out", o->out_path, "output workload file")
        ->required();
    sub->add_option("--batches", o->cfg.batches, "update batch count");
    sub->add_option("--batch-size", o->cfg.batch_size, "edges per batch");
    sub->add_option("--factor", o->cfg.factor,
                    "weight growth factor for increase events");
    sub->add_option("--seed", o->cfg.seed, "RNG seed");
    sub->add_option("--query-sets", o->cfg.query_sets,
                    "number of distance bands");
    sub->add_option("--queries-per-set", o->cfg.queries_per_set,
                    "pairs per band");
    sub->add_option("--min-distance", o->cfg.min_distance,
                    "lower edge of the first band");
    sub->add_option("--sample-sources", o->cfg.sample_sources,
                    "sources sampled to estimate the largest distance");
    sub->callback([o] { run(*o); });
}

}  // namespace stl::cli
