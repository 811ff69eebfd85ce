#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "stl/workload.hpp"
#include "testutil.hpp"

using namespace stl;
using namespace testutil;

namespace {

Graph big_grid(std::mt19937_64& rng) {
    return grid_graph(20, 20, rng, 400);  // distances comfortably above 1000
}

}  // namespace

TEST_CASE("workload has the requested shape") {
    std::mt19937_64 rng(401);
    Graph g = big_grid(rng);
    WorkloadConfig cfg;
    cfg.batches = 4;
    cfg.batch_size = 6;
    cfg.factor = 2.0;
    cfg.query_sets = 5;
    cfg.queries_per_set = 40;
    Workload w = generate_workload(g, cfg);

    REQUIRE(w.increases.size() == 4);
    REQUIRE(w.restores.size() == 4);
    for (size_t b = 0; b < 4; ++b) {
        CHECK(w.increases[b].size() == 6);
        REQUIRE(w.restores[b].size() == 6);
        std::set<std::pair<vertex_t, vertex_t>> batch_edges;
        for (size_t k = 0; k < w.increases[b].size(); ++k) {
            const UpdateEvent& inc = w.increases[b][k];
            const UpdateEvent& res = w.restores[b][k];
            CHECK(inc.u == res.u);
            CHECK(inc.v == res.v);
            CHECK(res.new_weight == g.edge_weight(inc.u, inc.v));
            // factor 2 with positive weights strictly increases.
            CHECK(inc.new_weight > res.new_weight);
            CHECK(inc.new_weight ==
                  weight_t(std::llround(2.0 * res.new_weight)));
            // No edge twice within one batch.
            CHECK(batch_edges
                      .insert({std::min(inc.u, inc.v), std::max(inc.u, inc.v)})
                      .second);
        }
    }

    REQUIRE(w.query_sets.size() == 5);
    for (size_t i = 0; i < w.query_sets.size(); ++i) {
        const QuerySet& qs = w.query_sets[i];
        CHECK(qs.d_lo < qs.d_hi);
        if (i > 0) CHECK(qs.d_lo == w.query_sets[i - 1].d_hi);
        CHECK(!qs.pairs.empty());
        CHECK(qs.pairs.size() <= 40);
    }
    CHECK(w.query_sets.front().d_lo == 1000);
}

TEST_CASE("stratified pairs fall inside their distance band") {
    std::mt19937_64 rng(403);
    Graph g = big_grid(rng);
    WorkloadConfig cfg;
    cfg.batches = 1;
    cfg.batch_size = 2;
    cfg.query_sets = 4;
    cfg.queries_per_set = 25;
    Workload w = generate_workload(g, cfg);
    for (const QuerySet& qs : w.query_sets) {
        for (auto [s, t] : qs.pairs) {
            distance_t d = oracle_distance(g, s, t);
            CAPTURE(s);
            CAPTURE(t);
            CHECK(d >= qs.d_lo);
            CHECK(d < qs.d_hi);
        }
    }
}

TEST_CASE("generation is deterministic for a fixed seed") {
    std::mt19937_64 rng(405);
    Graph g = big_grid(rng);
    WorkloadConfig cfg;
    cfg.batches = 3;
    cfg.batch_size = 4;
    cfg.query_sets = 3;
    cfg.queries_per_set = 10;
    Workload a = generate_workload(g, cfg);
    Workload b = generate_workload(g, cfg);
    REQUIRE(a.increases.size() == b.increases.size());
    for (size_t i = 0; i < a.increases.size(); ++i)
        for (size_t k = 0; k < a.increases[i].size(); ++k) {
            CHECK(a.increases[i][k].u == b.increases[i][k].u);
            CHECK(a.increases[i][k].v == b.increases[i][k].v);
            CHECK(a.increases[i][k].new_weight == b.increases[i][k].new_weight);
        }
    REQUIRE(a.query_sets.size() == b.query_sets.size());
    for (size_t i = 0; i < a.query_sets.size(); ++i)
        CHECK(a.query_sets[i].pairs == b.query_sets[i].pairs);

    cfg.seed = 43;
    Workload c = generate_workload(g, cfg);
    bool any_diff = c.query_sets.size() != a.query_sets.size();
    for (size_t i = 0; !any_diff && i < a.query_sets.size(); ++i)
        any_diff = a.query_sets[i].pairs != c.query_sets[i].pairs;
    CHECK(any_diff);
}

TEST_CASE("factor one point zero produces restore-equal weights") {
    std::mt19937_64 rng(407);
    Graph g = big_grid(rng);
    WorkloadConfig cfg;
    cfg.batches = 2;
    cfg.batch_size = 3;
    cfg.factor = 1.0;
    cfg.query_sets = 2;
    cfg.queries_per_set = 5;
    Workload w = generate_workload(g, cfg);
    // round(1.0 * w) == w: the events exist but change nothing; downstream
    // classification turns them into noops.
    for (size_t b = 0; b < w.increases.size(); ++b)
        for (size_t k = 0; k < w.increases[b].size(); ++k)
            CHECK(w.increases[b][k].new_weight == w.restores[b][k].new_weight);
}

TEST_CASE("workload files round-trip") {
    std::mt19937_64 rng(409);
    Graph g = big_grid(rng);
    WorkloadConfig cfg;
    cfg.batches = 3;
    cfg.batch_size = 5;
    cfg.query_sets = 4;
    cfg.queries_per_set = 12;
    Workload w = generate_workload(g, cfg);

    auto path = std::filesystem::temp_directory_path() / "stl_test_wl.txt";
    save_workload(path.string(), w);
    Workload back = load_workload(path.string());

    CHECK(back.factor == w.factor);
    CHECK(back.seed == w.seed);
    REQUIRE(back.increases.size() == w.increases.size());
    for (size_t b = 0; b < w.increases.size(); ++b) {
        REQUIRE(back.increases[b].size() == w.increases[b].size());
        for (size_t k = 0; k < w.increases[b].size(); ++k) {
            CHECK(back.increases[b][k].u == w.increases[b][k].u);
            CHECK(back.increases[b][k].v == w.increases[b][k].v);
            CHECK(back.increases[b][k].new_weight ==
                  w.increases[b][k].new_weight);
            CHECK(back.restores[b][k].new_weight ==
                  w.restores[b][k].new_weight);
        }
    }
    REQUIRE(back.query_sets.size() == w.query_sets.size());
    for (size_t i = 0; i < w.query_sets.size(); ++i) {
        CHECK(back.query_sets[i].d_lo == w.query_sets[i].d_lo);
        CHECK(back.query_sets[i].d_hi == w.query_sets[i].d_hi);
        CHECK(back.query_sets[i].pairs == w.query_sets[i].pairs);
    }
    std::remove(path.string().c_str());
}

TEST_CASE("malformed workload files are rejected with line numbers") {
    auto path = std::filesystem::temp_directory_path() / "stl_test_badwl.txt";
    auto write = [&](const char* text) {
        std::ofstream out(path);
        out << text;
    };
    write("not a workload\n");
    CHECK_THROWS_AS(load_workload(path.string()), ParseError);
    write("wl 1 2 2.0 7\nbatch 0\nu 1 2\n");  // missing fields
    CHECK_THROWS_AS(load_workload(path.string()), ParseError);
    std::remove(path.string().c_str());
}
