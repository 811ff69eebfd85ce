#pragma once

#include <cstddef>
#include <istream>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stl/types.hpp"

namespace stl {

struct Neighbor {
    vertex_t to;
    weight_t weight;
};

// Undirected weighted graph with O(1) edge weight updates. Vertices are
// 0-based internally; the DIMACS reader shifts 1-based ids down on input.
class Graph {
public:
    Graph() = default;
    explicit Graph(size_t n) : adj_(n) {}

    size_t num_vertices() const { return adj_.size(); }
    size_t num_edges() const { return num_edges_; }

    // Merges parallel edges by keeping the smaller weight, drops self-loops.
    void add_edge(vertex_t u, vertex_t v, weight_t w);

    std::span<const Neighbor> neighbors(vertex_t v) const {
        return {adj_[v].data(), adj_[v].size()};
    }

    bool has_edge(vertex_t u, vertex_t v) const {
        return slots_.find(edge_key(u, v)) != slots_.end();
    }

    weight_t edge_weight(vertex_t u, vertex_t v) const;

    // Returns the previous weight. Throws std::out_of_range if absent.
    weight_t set_weight(vertex_t u, vertex_t v, weight_t w);

    // Rebuilds a graph from explicit adjacency lists, preserving their
    // order exactly. Lists must be symmetric, self-loop free and free of
    // parallel edges; throws std::invalid_argument otherwise.
    static Graph from_adjacency(std::vector<std::vector<Neighbor>> adj);

private:
    static uint64_t edge_key(vertex_t u, vertex_t v) {
        vertex_t a = u < v ? u : v;
        vertex_t b = u < v ? v : u;
        return (uint64_t(a) << 32) | b;
    }

    std::vector<std::vector<Neighbor>> adj_;
    // Edge key -> adjacency slot of the edge in both endpoint lists,
    // (index in adj_[min], index in adj_[max]).
    std::unordered_map<uint64_t, std::pair<uint32_t, uint32_t>> slots_;
    size_t num_edges_ = 0;
};

// A requested weight change on an existing edge.
struct UpdateEvent {
    vertex_t u;
    vertex_t v;
    weight_t new_weight;
};

enum class UpdateKind { noop, decrease, increase };

// The result of applying an UpdateEvent: what actually changed.
struct AppliedUpdate {
    vertex_t u;
    vertex_t v;
    weight_t old_weight;
    weight_t new_weight;
    UpdateKind kind;
};

class EdgeNotFound : public std::runtime_error {
public:
    EdgeNotFound(vertex_t u, vertex_t v)
        : std::runtime_error("no edge " + std::to_string(u + 1) + " " +
                             std::to_string(v + 1)) {}
};

AppliedUpdate apply_update(Graph& g, const UpdateEvent& e);

class ParseError : public std::runtime_error {
public:
    ParseError(size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
};

// Reads the 9th DIMACS shortest path format: 'c' comments, one
// 'p sp <n> <m>' header, 'a <u> <v> <w>' arcs with 1-based endpoints.
// Arcs are treated as undirected edges; both orientations of the same pair
// collapse to one edge with the minimum weight seen.
Graph parse_dimacs(std::istream& in);

// Dijkstra from src over the subgraph induced by vertices accepted by
// `pred`. Returns a distance per vertex (kInfinity where unreached).
// Plain binary heap with lazy deletion; fine for tests and reference use.
template <typename Pred>
std::vector<distance_t> dijkstra_restricted(const Graph& g, vertex_t src,
                                            Pred pred) {
    std::vector<distance_t> dist(g.num_vertices(), kInfinity);
    if (!pred(src)) return dist;
    using Item = std::pair<distance_t, vertex_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[src] = 0;
    pq.push({0, src});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d != dist[v]) continue;
        for (const Neighbor& nb : g.neighbors(v)) {
            if (!pred(nb.to)) continue;
            distance_t nd = d + nb.weight;
            if (nd < dist[nb.to]) {
                dist[nb.to] = nd;
                pq.push({nd, nb.to});
            }
        }
    }
    return dist;
}

inline std::vector<distance_t> dijkstra_all(const Graph& g, vertex_t src) {
    return dijkstra_restricted(g, src, [](vertex_t) { return true; });
}

// Single-pair distance on the full graph, for checks and small tools.
distance_t oracle_distance(const Graph& g, vertex_t s, vertex_t t);

}  // namespace stl
