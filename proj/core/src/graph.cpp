#include "stl/graph.hpp"

#include <limits>
#include <sstream>

namespace stl {

void Graph::add_edge(vertex_t u, vertex_t v, weight_t w) {
    if (u == v) return;
    uint64_t key = edge_key(u, v);
    auto it = slots_.find(key);
    if (it != slots_.end()) {
        auto [iu, iv] = it->second;
        vertex_t a = u < v ? u : v;
        vertex_t b = u < v ? v : u;
        if (w < adj_[a][iu].weight) {
            adj_[a][iu].weight = w;
            adj_[b][iv].weight = w;
        }
        return;
    }
    vertex_t a = u < v ? u : v;
    vertex_t b = u < v ? v : u;
    slots_[key] = {uint32_t(adj_[a].size()), uint32_t(adj_[b].size())};
    adj_[a].push_back({b, w});
    adj_[b].push_back({a, w});
    ++num_edges_;
}

weight_t Graph::edge_weight(vertex_t u, vertex_t v) const {
    auto it = slots_.find(edge_key(u, v));
    if (it == slots_.end()) throw EdgeNotFound(u, v);
    vertex_t a = u < v ? u : v;
    return adj_[a][it->second.first].weight;
}

weight_t Graph::set_weight(vertex_t u, vertex_t v, weight_t w) {
    auto it = slots_.find(edge_key(u, v));
    if (it == slots_.end()) throw EdgeNotFound(u, v);
    auto [iu, iv] = it->second;
    vertex_t a = u < v ? u : v;
    vertex_t b = u < v ? v : u;
    weight_t old = adj_[a][iu].weight;
    adj_[a][iu].weight = w;
    adj_[b][iv].weight = w;
    return old;
}

Graph Graph::from_adjacency(std::vector<std::vector<Neighbor>> adj) {
    Graph g;
    g.adj_ = std::move(adj);
    size_t n = g.adj_.size();
    constexpr uint32_t kUnset = UINT32_MAX;
    for (vertex_t u = 0; u < n; ++u) {
        for (uint32_t i = 0; i < g.adj_[u].size(); ++i) {
            vertex_t v = g.adj_[u][i].to;
            if (v >= n) throw std::invalid_argument("neighbor out of range");
            if (v == u) throw std::invalid_argument("self-loop in adjacency");
            auto [it, fresh] = g.slots_.try_emplace(edge_key(u, v), kUnset, kUnset);
            uint32_t& cell = v < u ? it->second.second : it->second.first;
            if (cell != kUnset)
                throw std::invalid_argument("duplicate edge in adjacency");
            cell = i;
        }
    }
    for (auto& [key, slot] : g.slots_) {
        if (slot.first == kUnset || slot.second == kUnset)
            throw std::invalid_argument("asymmetric adjacency");
        vertex_t a = vertex_t(key >> 32);
        vertex_t b = vertex_t(key);
        if (g.adj_[a][slot.first].weight != g.adj_[b][slot.second].weight)
            throw std::invalid_argument("edge weight mismatch");
    }
    g.num_edges_ = g.slots_.size();
    return g;
}

AppliedUpdate apply_update(Graph& g, const UpdateEvent& e) {
    weight_t old = g.set_weight(e.u, e.v, e.new_weight);
    UpdateKind kind = e.new_weight < old   ? UpdateKind::decrease
                      : e.new_weight > old ? UpdateKind::increase
                                           : UpdateKind::noop;
    return {e.u, e.v, old, e.new_weight, kind};
}

Graph parse_dimacs(std::istream& in) {
    std::string line;
    size_t lineno = 0;
    bool have_header = false;
    uint64_t n = 0, m = 0, arcs_seen = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            if (have_header) throw ParseError(lineno, "duplicate p line");
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "sp")
                throw ParseError(lineno, "expected 'p sp <n> <m>'");
            if (n == 0) throw ParseError(lineno, "empty graph");
            if (n > size_t(std::numeric_limits<vertex_t>::max()))
                throw ParseError(lineno, "too many vertices");
            g = Graph(n);
            have_header = true;
        } else if (tag == 'a') {
            if (!have_header) throw ParseError(lineno, "arc before p line");
            uint64_t u, v, w;
            if (!(ls >> u >> v >> w))
                throw ParseError(lineno, "expected 'a <u> <v> <w>'");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "vertex id out of range");
            if (w > std::numeric_limits<weight_t>::max())
                throw ParseError(lineno, "weight out of range");
            g.add_edge(vertex_t(u - 1), vertex_t(v - 1), weight_t(w));
            ++arcs_seen;
        } else {
            throw ParseError(lineno, std::string("unknown line tag '") + tag +
                                         "'");
        }
    }
    if (!have_header) throw ParseError(lineno, "missing p line");
    if (arcs_seen != m)
        throw ParseError(lineno, "arc count mismatch: header says " +
                                     std::to_string(m) + ", saw " +
                                     std::to_string(arcs_seen));
    return g;
}

distance_t oracle_distance(const Graph& g, vertex_t s, vertex_t t) {
    if (s == t) return 0;
    // Early-exit Dijkstra.
    std::vector<distance_t> dist(g.num_vertices(), kInfinity);
    using Item = std::pair<distance_t, vertex_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[s] = 0;
    pq.push({0, s});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d != dist[v]) continue;
        if (v == t) return d;
        for (const Neighbor& nb : g.neighbors(v)) {
            distance_t nd = d + nb.weight;
            if (nd < dist[nb.to]) {
                dist[nb.to] = nd;
                pq.push({nd, nb.to});
            }
        }
    }
    return kInfinity;
}

}  // namespace stl
