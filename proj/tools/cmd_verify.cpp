#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <span>

#include "commands.hpp"
#include "stl/index_io.hpp"
#include "stl/label_search.hpp"
#include "stl/labelling.hpp"
#include "stl/pareto_search.hpp"
#include "stl/partition.hpp"

namespace stl::cli {
namespace {

struct VerifyOpts {
    std::string index_path;
    std::string mode;
    uint64_t seed = 1;
    uint64_t samples = 1000;  // 0: exhaustive
};

constexpr size_t kMaxPrinted = 20;

void report(size_t count, const std::string& line) {
    if (count < kMaxPrinted) std::cout << line << "\n";
    if (count == kMaxPrinted) std::cout << "... further mismatches elided\n";
}

size_t check_queries_from(const Index& idx, vertex_t s,
                          const std::vector<distance_t>& oracle,
                          size_t& mismatches) {
    size_t n = idx.graph.num_vertices();
    for (vertex_t t = 0; t < n; ++t) {
        distance_t got =
            query_distance(idx.hierarchy, idx.labelling, s, t);
        if (got != oracle[t])
            report(mismatches++, "mismatch s=" + std::to_string(s + 1) +
                                     " t=" + std::to_string(t + 1) +
                                     " expected=" + fmt_dist(oracle[t]) +
                                     " got=" + fmt_dist(got));
    }
    return n;
}

void run_static(const Index& idx, const VerifyOpts& o) {
    size_t n = idx.graph.num_vertices();
    size_t mismatches = 0, checked = 0;
    if (o.samples == 0) {
        // Exhaustive: every label entry against an independent rebuild,
        // then every pair against the plain Dijkstra oracle.
        Labelling ref = rebuild_reference(idx.graph, idx.hierarchy);
        for (vertex_t v = 0; v < n; ++v) {
            auto mine = idx.labelling.label(v);
            auto want = ref.label(v);
            for (size_t i = 0; i < mine.size(); ++i) {
                ++checked;
                if (mine[i] != want[i])
                    report(mismatches++,
                           "mismatch v=" + std::to_string(v + 1) +
                               " i=" + std::to_string(i) +
                               " expected=" + fmt_dist(want[i]) +
                               " got=" + fmt_dist(mine[i]));
            }
        }
        for (vertex_t s = 0; s < n; ++s)
            checked +=
                check_queries_from(idx, s, dijkstra_all(idx.graph, s),
                                   mismatches);
    } else {
        std::mt19937_64 rng(o.seed);
        for (uint64_t k = 0; k < o.samples; ++k) {
            vertex_t s = vertex_t(rng_below(rng, n));
            vertex_t t = vertex_t(rng_below(rng, n));
            distance_t want = oracle_distance(idx.graph, s, t);
            distance_t got =
                query_distance(idx.hierarchy, idx.labelling, s, t);
            ++checked;
            if (got != want)
                report(mismatches++,
                       "mismatch s=" + std::to_string(s + 1) +
                           " t=" + std::to_string(t + 1) +
                           " expected=" + fmt_dist(want) +
                           " got=" + fmt_dist(got));
        }
    }
    std::cout << "verify mode=static checked=" << checked
              << " mismatches=" << mismatches << "\n";
    if (mismatches)
        throw VerificationFailure(std::to_string(mismatches) +
                                  " static mismatches");
}

void write_counterexample(const Graph& g, const UpdateEvent& e,
                          uint64_t seed, size_t update_index,
                          const char* algo) {
    std::ofstream gr("stl_counterexample.gr");
    gr << "c seed=" << seed << " update_index=" << update_index
       << " algo=" << algo << "\n";
    gr << "p sp " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (vertex_t u = 0; u < g.num_vertices(); ++u)
        for (const Neighbor& nb : g.neighbors(u))
            if (u < nb.to)
                gr << "a " << u + 1 << " " << nb.to + 1 << " " << nb.weight
                   << "\n";
    std::ofstream up("stl_counterexample.updates");
    up << "u " << e.u + 1 << " " << e.v + 1 << " " << e.new_weight << "\n";
}

void run_dynamic(Index& idx, const VerifyOpts& o) {
    size_t n = idx.graph.num_vertices();
    std::vector<std::pair<vertex_t, vertex_t>> edges;
    for (vertex_t u = 0; u < n; ++u)
        for (const Neighbor& nb : idx.graph.neighbors(u))
            if (u < nb.to) edges.push_back({u, nb.to});
    if (edges.empty()) throw std::runtime_error("graph has no edges");

    std::mt19937_64 rng(o.seed);
    Labelling ls_lab = idx.labelling;
    Labelling par_lab = idx.labelling;
    LsWorkspace lws(n);
    ParetoWorkspace pws(n);
    uint64_t noops = 0;
    for (uint64_t k = 0; k < o.samples; ++k) {
        auto [u, v] = edges[rng_below(rng, edges.size())];
        weight_t w = idx.graph.edge_weight(u, v);
        // Uniform over [0, 2w+1]: decreases, increases and noops all occur.
        UpdateEvent e{u, v, weight_t(rng_below(rng, 2 * uint64_t(w) + 2))};
        Graph before = idx.graph;
        AppliedUpdate ap = apply_update(idx.graph, e);
        if (ap.kind == UpdateKind::noop) {
            ++noops;
            continue;
        }
        std::span<const AppliedUpdate> one(&ap, 1);
        if (ap.kind == UpdateKind::decrease) {
            ls_decrease(idx.graph, idx.hierarchy, ls_lab, one, lws);
            pareto_decrease(idx.graph, idx.hierarchy, par_lab, ap, pws);
        } else {
            ls_increase(idx.graph, idx.hierarchy, ls_lab, one, lws);
            pareto_increase(idx.graph, idx.hierarchy, par_lab, ap, pws);
        }
        Labelling ref = rebuild_reference(idx.graph, idx.hierarchy);
        const char* bad = nullptr;
        if (!(ls_lab == ref)) bad = "label-search";
        else if (!(par_lab == ref)) bad = "pareto";
        if (bad) {
            write_counterexample(before, e, o.seed, k + 1, bad);
            std::cout << "verify mode=dynamic updates=" << k + 1
                      << " noops=" << noops << " mismatches=1\n";
            throw VerificationFailure(
                std::string(bad) + " diverged from rebuild at update " +
                std::to_string(k + 1) +
                "; wrote stl_counterexample.gr and stl_counterexample.updates");
        }
    }
    std::cout << "verify mode=dynamic updates=" << o.samples
              << " noops=" << noops << " mismatches=0\n";
}

void run_hierarchy(const Index& idx) {
    auto problems = idx.hierarchy.verify(idx.graph, idx.meta.beta);
    for (const std::string& p : problems) std::cout << "problem " << p << "\n";

    // Rebuilding with the stored settings must reproduce the tree exactly;
    // separators ignore weights, so this holds across weight updates too.
    BuildConfig cfg;
    cfg.beta = idx.meta.beta;
    cfg.leaf_threshold = idx.meta.leaf_threshold;
    cfg.seed = idx.meta.seed;
    Hierarchy re = build_hierarchy(idx.graph, cfg);
    bool stable = re.num_nodes() == idx.hierarchy.num_nodes() &&
                  re.cut_pool() == idx.hierarchy.cut_pool();
    for (uint32_t i = 0; stable && i < re.num_nodes(); ++i) {
        const HierNode& a = re.node(i);
        const HierNode& b = idx.hierarchy.node(i);
        stable = a.parent == b.parent && a.cut_begin == b.cut_begin &&
                 a.cut_size == b.cut_size;
    }
    std::cout << "verify mode=hierarchy problems=" << problems.size()
              << " rebuild_identical=" << (stable ? "yes" : "no") << "\n";
    if (!problems.empty() || !stable)
        throw VerificationFailure("hierarchy verification failed");
}

void run(const VerifyOpts& o) {
    Index idx = load_index(o.index_path);
    if (o.mode == "static") run_static(idx, o);
    else if (o.mode == "dynamic") run_dynamic(idx, o);
    else run_hierarchy(idx);
}

}  // namespace

void add_verify(CLI::App& app) {
    auto o = std::make_shared<VerifyOpts>();
    CLI::App* sub =
        app.add_subcommand("verify", "check an index against oracles");
    sub->add_option("index", o->index_path, "index file")->required();
    sub->add_option("--mode", o->mode, "what to check")
        ->required()
        ->check(CLI::IsMember({"static", "dynamic", "hierarchy"}));
    sub->add_option("--seed", o->seed, "RNG seed");
    sub->add_option("--samples", o->samples,
                    "sampled queries or updates; 0 checks everything");
    sub->callback([o] { run(*o); });
}

}  // namespace stl::cli
