#include <algorithm>
#include <set>

#include "doctest.h"
#include "stl/partition.hpp"
#include "testutil.hpp"

using namespace stl;
using namespace testutil;

namespace {

std::vector<vertex_t> all_verts(const Graph& g) {
    std::vector<vertex_t> v(g.num_vertices());
    for (vertex_t i = 0; i < v.size(); ++i) v[i] = i;
    return v;
}

// The three separator requirements: the pieces partition the input set, no
// edge crosses between the two sides, and each side obeys the balance bound.
void check_separator(const Graph& g, const std::vector<vertex_t>& verts,
                     const Separator& sep, double beta) {
    std::set<vertex_t> seen;
    for (vertex_t v : sep.cut) seen.insert(v);
    for (vertex_t v : sep.side_a) seen.insert(v);
    for (vertex_t v : sep.side_b) seen.insert(v);
    CHECK(seen.size() == sep.cut.size() + sep.side_a.size() + sep.side_b.size());
    CHECK(seen == std::set<vertex_t>(verts.begin(), verts.end()));

    std::set<vertex_t> in_a(sep.side_a.begin(), sep.side_a.end());
    std::set<vertex_t> in_b(sep.side_b.begin(), sep.side_b.end());
    for (vertex_t v : sep.side_a)
        for (const Neighbor& nb : g.neighbors(v)) CHECK(!in_b.count(nb.to));

    double bound = (1.0 - beta) * double(verts.size()) + 1e-9;
    CHECK(double(sep.side_a.size()) <= bound);
    CHECK(double(sep.side_b.size()) <= bound);
}

Separator run(const Graph& g, const std::vector<vertex_t>& verts, double beta,
              uint64_t seed = 1) {
    PartitionWorkspace ws(g.num_vertices());
    std::mt19937_64 rng(seed);
    return find_balanced_separator(g, verts, beta, 3, 4, ws, rng);
}

}  // namespace

TEST_CASE("separator of a path graph is small and balanced") {
    size_t n = 64;
    Graph g(n);
    for (vertex_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1, 1);
    Separator sep = run(g, all_verts(g), 0.2);
    check_separator(g, all_verts(g), sep, 0.2);
    // A path always has a one-vertex balanced separator; allow a little slack
    // but rule out fallback-sized cuts.
    CHECK(sep.cut.size() <= 3);
    CHECK(!sep.side_a.empty());
    CHECK(!sep.side_b.empty());
}

TEST_CASE("separator of a grid is balanced with a modest cut") {
    std::mt19937_64 wrng(3);
    Graph g = grid_graph(12, 12, wrng);
    Separator sep = run(g, all_verts(g), 0.2);
    check_separator(g, all_verts(g), sep, 0.2);
    // A 12x12 grid splits along a line of about 12 vertices.
    CHECK(sep.cut.size() <= 24);
    CHECK(!sep.side_a.empty());
    CHECK(!sep.side_b.empty());
}

TEST_CASE("separator on a vertex subset ignores outside vertices") {
    std::mt19937_64 wrng(5);
    Graph g = grid_graph(10, 10, wrng);
    std::vector<vertex_t> verts;
    for (vertex_t v = 0; v < 50; ++v) verts.push_back(v);  // top half
    Separator sep = run(g, verts, 0.2);
    check_separator(g, verts, sep, 0.2);
}

TEST_CASE("disconnected balanced components need no cut") {
    Graph g(10);
    for (vertex_t v = 0; v < 4; ++v) g.add_edge(v, (v + 1) % 5, 1);
    g.add_edge(4, 0, 1);
    for (vertex_t v = 5; v < 9; ++v) g.add_edge(v, v + 1, 1);
    g.add_edge(9, 5, 1);
    Separator sep = run(g, all_verts(g), 0.2);
    check_separator(g, all_verts(g), sep, 0.2);
    CHECK(sep.cut.empty());
    CHECK(sep.side_a.size() == 5);
    CHECK(sep.side_b.size() == 5);
}

TEST_CASE("one dominant component still yields a valid separator") {
    // A 40-vertex path plus two isolated vertices: the path must be split.
    Graph g(42);
    for (vertex_t v = 0; v + 1 < 40; ++v) g.add_edge(v, v + 1, 1);
    Separator sep = run(g, all_verts(g), 0.2);
    check_separator(g, all_verts(g), sep, 0.2);
    CHECK(!sep.side_a.empty());
    CHECK(!sep.side_b.empty());
}

TEST_CASE("complete graph: no small two-sided separator exists") {
    // Removing fewer than n-2 vertices from K_n leaves at least 2 vertices
    // that are still adjacent, so every nonempty-sides separator has a cut of
    // at least n-2. The returned separator must still obey the bound, which
    // forces an empty side here.
    size_t n = 5;
    Graph g(n);
    for (vertex_t u = 0; u < n; ++u)
        for (vertex_t v = u + 1; v < n; ++v) g.add_edge(u, v, 1);
    Separator sep = run(g, all_verts(g), 0.2);
    check_separator(g, all_verts(g), sep, 0.2);
    if (!sep.side_a.empty() && !sep.side_b.empty())
        CHECK(sep.cut.size() >= n - 2);
}

TEST_CASE("single vertex set") {
    Graph g(3);
    g.add_edge(0, 1, 1);
    Separator sep = run(g, {2}, 0.2);
    CHECK(sep.cut == std::vector<vertex_t>{2});
    CHECK(sep.side_a.empty());
    CHECK(sep.side_b.empty());
}

TEST_CASE("separator is deterministic for a fixed seed") {
    std::mt19937_64 wrng(9);
    Graph g = random_connected(wrng, 120, 200);
    Separator a = run(g, all_verts(g), 0.2, 42);
    Separator b = run(g, all_verts(g), 0.2, 42);
    CHECK(a.cut == b.cut);
    CHECK(a.side_a == b.side_a);
    CHECK(a.side_b == b.side_b);
}

TEST_CASE("separator requirements hold across random graphs") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 20; ++it) {
        size_t n = 10 + rng_below(rng, 150);
        Graph g = random_connected(rng, n, rng_below(rng, 2 * n));
        Separator sep = run(g, all_verts(g), 0.2, rng());
        check_separator(g, all_verts(g), sep, 0.2);
    }
}

TEST_CASE("workspace reuse across many calls stays clean") {
    std::mt19937_64 rng(33);
    Graph g = random_connected(rng, 80, 120);
    PartitionWorkspace ws(g.num_vertices());
    std::mt19937_64 srng(1);
    // Alternate between different vertex subsets; stale stamps from one call
    // must not leak into the next.
    std::vector<vertex_t> evens, odds;
    for (vertex_t v = 0; v < g.num_vertices(); ++v)
        (v % 2 ? odds : evens).push_back(v);
    for (int round = 0; round < 10; ++round) {
        Separator s1 = find_balanced_separator(g, evens, 0.2, 2, 2, ws, srng);
        check_separator(g, evens, s1, 0.2);
        Separator s2 = find_balanced_separator(g, odds, 0.2, 2, 2, ws, srng);
        check_separator(g, odds, s2, 0.2);
    }
}
