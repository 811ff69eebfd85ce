#include <iostream>
#include <memory>
#include <span>

#include "commands.hpp"
#include "stl/index_io.hpp"
#include "stl/label_search.hpp"
#include "stl/pareto_search.hpp"

namespace stl::cli {
namespace {

struct UpdateOpts {
    std::string index_path;
    std::string update_path;
    std::string out_path;
    std::string algo = "pareto";
};

void run(const UpdateOpts& o) {
    Index idx = load_index(o.index_path);
    auto events = read_updates(o.update_path, idx.graph.num_vertices());
    bool pareto = o.algo == "pareto";
    LsWorkspace lws(idx.graph.num_vertices());
    ParetoWorkspace pws(idx.graph.num_vertices());

    UpdateStats agg;
    agg.algo = pareto ? "pareto" : "ls";
    for (size_t k = 0; k < events.size(); ++k) {
        AppliedUpdate ap;
        try {
            ap = apply_update(idx.graph, events[k]);
        } catch (const EdgeNotFound& e) {
            throw std::runtime_error(o.update_path + " update " +
                                     std::to_string(k + 1) + ": " + e.what());
        }
        UpdateStats st;
        st.algo = agg.algo;
        if (ap.kind == UpdateKind::noop) {
            st.direction = "noop";
        } else if (pareto) {
            st = ap.kind == UpdateKind::decrease
                     ? pareto_decrease(idx.graph, idx.hierarchy,
                                       idx.labelling, ap, pws)
                     : pareto_increase(idx.graph, idx.hierarchy,
                                       idx.labelling, ap, pws);
        } else {
            std::span<const AppliedUpdate> one(&ap, 1);
            st = ap.kind == UpdateKind::decrease
                     ? ls_decrease(idx.graph, idx.hierarchy, idx.labelling,
                                   one, lws)
                     : ls_increase(idx.graph, idx.hierarchy, idx.labelling,
                                   one, lws);
        }
        std::cout << st.line() << "\n";
        agg.add(st);
    }
    std::cout << "aggregate algo=" << agg.algo << " updates=" << events.size()
              << " seeds=" << agg.seeds << " pops=" << agg.pops
              << " writes=" << agg.writes << " l_delta=" << agg.l_delta
              << " v_delta=" << agg.v_delta
              << " repair_uncovered=" << agg.repair_uncovered
              << " wall_us=" << agg.wall_us << "\n";
    save_index(o.out_path.empty() ? o.index_path : o.out_path, idx);
}

}  // namespace

void add_update(CLI::App& app) {
    auto o = std::make_shared<UpdateOpts>();
    CLI::App* sub = app.add_subcommand(
        "update", "apply weight changes and maintain the labels");
    sub->add_option("index", o->index_path, "index file")->required();
    sub->add_option("updates", o->update_path,
                    "update file, one 'u <a> <b> <w>' per line")
        ->required();
    sub->add_option("--algo", o->algo, "maintenance algorithm")
        ->check(CLI::IsMember({"label-search", "pareto"}));
    sub->add_option("-o,--out", o->out_path,
                    "output index (default: overwrite input)");
    sub->callback([o] { run(*o); });
}

}  // namespace stl::cli
