// Microbenchmarks: query latency, label maintenance per update family, and
// index construction, on seeded random graphs and grids.
#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <span>
#include <vector>

#include "stl/graph.hpp"
#include "stl/hierarchy.hpp"
#include "stl/label_search.hpp"
#include "stl/labelling.hpp"
#include "stl/pareto_search.hpp"
#include "stl/partition.hpp"

using namespace stl;

namespace {

Graph random_connected(std::mt19937_64& rng, size_t n, size_t extra) {
    std::vector<std::vector<Neighbor>> adj(n);
    auto add = [&](vertex_t u, vertex_t v, weight_t w) {
        for (const Neighbor& nb : adj[u])
            if (nb.to == v) return;
        adj[u].push_back({v, w});
        adj[v].push_back({u, w});
    };
    for (vertex_t v = 1; v < n; ++v)
        add(vertex_t(rng_below(rng, v)), v, weight_t(1 + rng_below(rng, 100)));
    for (size_t i = 0; i < extra; ++i) {
        vertex_t u = vertex_t(rng_below(rng, n));
        vertex_t v = vertex_t(rng_below(rng, n));
        if (u != v) add(u, v, weight_t(1 + rng_below(rng, 100)));
    }
    return Graph::from_adjacency(std::move(adj));
}

Graph grid(size_t rows, size_t cols, std::mt19937_64& rng) {
    std::vector<std::vector<Neighbor>> adj(rows * cols);
    auto id = [&](size_t r, size_t c) { return vertex_t(r * cols + c); };
    auto add = [&](vertex_t u, vertex_t v) {
        weight_t w = weight_t(1 + rng_below(rng, 10));
        adj[u].push_back({v, w});
        adj[v].push_back({u, w});
    };
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) add(id(r, c), id(r, c + 1));
            if (r + 1 < rows) add(id(r, c), id(r + 1, c));
        }
    return Graph::from_adjacency(std::move(adj));
}

struct Fixture {
    Graph graph;
    Hierarchy hierarchy;
    Labelling labels;
    std::vector<std::pair<vertex_t, vertex_t>> edges;
};

Fixture make_fixture(size_t side) {
    std::mt19937_64 rng(13 + side);
    Fixture f{grid(side, side, rng), {}, {}, {}};
    f.hierarchy = build_hierarchy(f.graph);
    f.labels = build_labels(f.graph, f.hierarchy, 1);
    for (vertex_t u = 0; u < f.graph.num_vertices(); ++u)
        for (const Neighbor& nb : f.graph.neighbors(u))
            if (u < nb.to) f.edges.push_back({u, nb.to});
    return f;
}

Fixture& fixture(size_t side) {
    static std::map<size_t, Fixture> cache;
    auto it = cache.find(side);
    if (it == cache.end()) it = cache.emplace(side, make_fixture(side)).first;
    return it->second;
}

void bm_query(benchmark::State& state) {
    Fixture& f = fixture(size_t(state.range(0)));
    size_t n = f.graph.num_vertices();
    std::mt19937_64 rng(7);
    uint64_t checksum = 0;
    for (auto _ : state) {
        vertex_t s = vertex_t(rng_below(rng, n));
        vertex_t t = vertex_t(rng_below(rng, n));
        checksum += query_distance(f.hierarchy, f.labels, s, t);
    }
    benchmark::DoNotOptimize(checksum);
}
BENCHMARK(bm_query)->Arg(32)->Arg(64);

// One doubled edge, maintained, then restored outside the timer.
template <bool Pareto>
void bm_increase(benchmark::State& state) {
    Fixture& f = fixture(size_t(state.range(0)));
    std::mt19937_64 rng(11);
    LsWorkspace lws(f.graph.num_vertices());
    ParetoWorkspace pws(f.graph.num_vertices());
    for (auto _ : state) {
        state.PauseTiming();
        auto [u, v] = f.edges[rng_below(rng, f.edges.size())];
        weight_t w = f.graph.edge_weight(u, v);
        AppliedUpdate up = apply_update(f.graph, {u, v, 2 * w});
        state.ResumeTiming();
        if (Pareto) {
            pareto_increase(f.graph, f.hierarchy, f.labels, up, pws);
        } else {
            std::span<const AppliedUpdate> one(&up, 1);
            ls_increase(f.graph, f.hierarchy, f.labels, one, lws);
        }
        state.PauseTiming();
        AppliedUpdate down = apply_update(f.graph, {u, v, w});
        pareto_decrease(f.graph, f.hierarchy, f.labels, down, pws);
        state.ResumeTiming();
    }
}
BENCHMARK(bm_increase<false>)->Name("bm_ls_increase")->Arg(32)->Arg(64);
BENCHMARK(bm_increase<true>)->Name("bm_pareto_increase")->Arg(32)->Arg(64);

// One halved edge, maintained, then restored outside the timer.
template <bool Pareto>
void bm_decrease(benchmark::State& state) {
    Fixture& f = fixture(size_t(state.range(0)));
    std::mt19937_64 rng(17);
    LsWorkspace lws(f.graph.num_vertices());
    ParetoWorkspace pws(f.graph.num_vertices());
    for (auto _ : state) {
        state.PauseTiming();
        auto [u, v] = f.edges[rng_below(rng, f.edges.size())];
        weight_t w = f.graph.edge_weight(u, v);
        if (w == 0) {
            state.ResumeTiming();
            continue;
        }
        AppliedUpdate up = apply_update(f.graph, {u, v, w / 2});
        state.ResumeTiming();
        if (Pareto) {
            pareto_decrease(f.graph, f.hierarchy, f.labels, up, pws);
        } else {
            std::span<const AppliedUpdate> one(&up, 1);
            ls_decrease(f.graph, f.hierarchy, f.labels, one, lws);
        }
        state.PauseTiming();
        AppliedUpdate back = apply_update(f.graph, {u, v, w});
        pareto_increase(f.graph, f.hierarchy, f.labels, back, pws);
        state.ResumeTiming();
    }
}
BENCHMARK(bm_decrease<false>)->Name("bm_ls_decrease")->Arg(32)->Arg(64);
BENCHMARK(bm_decrease<true>)->Name("bm_pareto_decrease")->Arg(32)->Arg(64);

void bm_build(benchmark::State& state) {
    std::mt19937_64 rng(23);
    Graph g = random_connected(rng, size_t(state.range(0)),
                               2 * size_t(state.range(0)));
    for (auto _ : state) {
        Hierarchy h = build_hierarchy(g);
        Labelling l = build_labels(g, h, 1);
        benchmark::DoNotOptimize(l.total_entries());
    }
}
BENCHMARK(bm_build)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
