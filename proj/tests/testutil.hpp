#pragma once

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "stl/graph.hpp"
#include "stl/hierarchy.hpp"
#include "stl/labelling.hpp"
#include "stl/partition.hpp"

namespace testutil {

using namespace stl;

// Ground-truth single-source distances by plain Bellman-Ford relaxation.
// Deliberately shares nothing with the library's Dijkstra code paths.
inline std::vector<distance_t> bellman_ford(const Graph& g, vertex_t src) {
    size_t n = g.num_vertices();
    std::vector<distance_t> dist(n, kInfinity);
    dist[src] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (vertex_t v = 0; v < n; ++v) {
            if (dist[v] >= kInfinity) continue;
            for (const Neighbor& nb : g.neighbors(v)) {
                if (dist[v] + nb.weight < dist[nb.to]) {
                    dist[nb.to] = dist[v] + nb.weight;
                    changed = true;
                }
            }
        }
    }
    return dist;
}

// Bellman-Ford over the subgraph induced by vertices accepted by `pred`.
template <typename Pred>
std::vector<distance_t> bellman_ford_restricted(const Graph& g, vertex_t src,
                                                Pred pred) {
    size_t n = g.num_vertices();
    std::vector<distance_t> dist(n, kInfinity);
    if (!pred(src)) return dist;
    dist[src] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (vertex_t v = 0; v < n; ++v) {
            if (dist[v] >= kInfinity || !pred(v)) continue;
            for (const Neighbor& nb : g.neighbors(v)) {
                if (!pred(nb.to)) continue;
                if (dist[v] + nb.weight < dist[nb.to]) {
                    dist[nb.to] = dist[v] + nb.weight;
                    changed = true;
                }
            }
        }
    }
    return dist;
}

inline weight_t random_weight(std::mt19937_64& rng, weight_t max_w,
                              bool allow_zero) {
    if (allow_zero) return weight_t(rng_below(rng, max_w + 1));
    return weight_t(1 + rng_below(rng, max_w));
}

// Connected graph: random spanning tree plus `extra` random edges. Parallel
// picks collapse through add_edge's min-merge rule.
inline Graph random_connected(std::mt19937_64& rng, size_t n, size_t extra,
                              weight_t max_w = 100, bool allow_zero = true) {
    Graph g(n);
    for (vertex_t v = 1; v < n; ++v)
        g.add_edge(vertex_t(rng_below(rng, v)), v,
                   random_weight(rng, max_w, allow_zero));
    for (size_t e = 0; e < extra; ++e) {
        vertex_t u = vertex_t(rng_below(rng, n));
        vertex_t v = vertex_t(rng_below(rng, n));
        if (u == v) continue;
        g.add_edge(u, v, random_weight(rng, max_w, allow_zero));
    }
    return g;
}

// 4-neighbor grid with random weights in [1, max_w].
inline Graph grid_graph(size_t rows, size_t cols, std::mt19937_64& rng,
                        weight_t max_w = 10) {
    Graph g(rows * cols);
    auto at = [cols](size_t r, size_t c) { return vertex_t(r * cols + c); };
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols)
                g.add_edge(at(r, c), at(r, c + 1),
                           random_weight(rng, max_w, false));
            if (r + 1 < rows)
                g.add_edge(at(r, c), at(r + 1, c),
                           random_weight(rng, max_w, false));
        }
    return g;
}

// All edges of the graph as (u, v) with u < v, in adjacency order.
inline std::vector<std::pair<vertex_t, vertex_t>> edge_pairs(const Graph& g) {
    std::vector<std::pair<vertex_t, vertex_t>> out;
    for (vertex_t u = 0; u < g.num_vertices(); ++u)
        for (const Neighbor& nb : g.neighbors(u))
            if (u < nb.to) out.push_back({u, nb.to});
    return out;
}

// The sixteen-vertex walkthrough fixture: a small road-like network with a
// hand-assembled hierarchy whose distances are all worked out by hand in the
// tests that use it.
struct Demo16 {
    Graph g;
    Hierarchy h;
    // Vertices are numbered 1..16 in the write-ups; shift to internal ids.
    static vertex_t v(int one_based) { return vertex_t(one_based - 1); }
};

inline Demo16 make_demo16() {
    std::istringstream in(
        "c sixteen vertex fixture\n"
        "p sp 16 20\n"
        "a 1 9 4\n"
        "a 2 9 4\n"
        "a 5 9 3\n"
        "a 9 14 2\n"
        "a 9 3 3\n"
        "a 3 7 2\n"
        "a 14 12 9\n"
        "a 1 12 3\n"
        "a 1 8 1\n"
        "a 12 4 2\n"
        "a 12 10 3\n"
        "a 4 11 3\n"
        "a 10 11 3\n"
        "a 4 13 2\n"
        "a 2 13 9\n"
        "a 13 15 4\n"
        "a 15 16 3\n"
        "a 6 11 6\n"
        "a 6 13 5\n"
        "a 5 6 8\n");
    Graph g = parse_dimacs(in);
    auto v = [](int x) { return vertex_t(x - 1); };
    std::vector<AssembleNode> nodes(9);
    nodes[0] = {kNoNode, {v(2), v(4), v(5), v(10)}};
    nodes[1] = {0, {v(9)}};
    nodes[2] = {1, {v(3), v(7)}};
    nodes[3] = {1, {v(14), v(12), v(1), v(8)}};
    nodes[4] = {0, {v(6)}};
    nodes[5] = {4, {v(15)}};
    nodes[6] = {5, {v(16)}};
    nodes[7] = {5, {v(13)}};
    nodes[8] = {4, {v(11)}};
    return {std::move(g), Hierarchy::assemble(16, nodes)};
}

// True when fn() throws E and the message contains `needle`.
template <typename E, typename Fn>
bool throws_containing(Fn&& fn, const std::string& needle) {
    try {
        fn();
    } catch (const E& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    } catch (...) {
        return false;
    }
    return false;
}

// First differing label entry between two labellings, for failure messages.
inline std::string first_label_diff(const Labelling& a, const Labelling& b) {
    if (a.num_vertices() != b.num_vertices()) return "vertex count differs";
    for (vertex_t v = 0; v < a.num_vertices(); ++v) {
        auto la = a.label(v);
        auto lb = b.label(v);
        if (la.size() != lb.size())
            return "label length differs at vertex " + std::to_string(v + 1);
        for (size_t i = 0; i < la.size(); ++i)
            if (la[i] != lb[i])
                return "vertex " + std::to_string(v + 1) + " position " +
                       std::to_string(i) + ": " + std::to_string(la[i]) +
                       " vs " + std::to_string(lb[i]);
    }
    return "";
}

// Vertices whose label changed between two labellings, as 1-based ids.
inline std::set<int> changed_vertices(const Labelling& a, const Labelling& b) {
    std::set<int> out;
    for (vertex_t v = 0; v < a.num_vertices(); ++v) {
        auto la = a.label(v);
        auto lb = b.label(v);
        for (size_t i = 0; i < la.size(); ++i)
            if (la[i] != lb[i]) {
                out.insert(int(v) + 1);
                break;
            }
    }
    return out;
}

}  // namespace testutil
