#include "stl/hierarchy.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "stl/partition.hpp"

namespace stl {

Hierarchy Hierarchy::assemble(size_t num_vertices,
                              const std::vector<AssembleNode>& in) {
    if (in.empty()) throw std::invalid_argument("no nodes");
    Hierarchy h;
    h.nodes_.resize(in.size());
    h.node_of_.assign(num_vertices, kNoNode);
    h.tau_.assign(num_vertices, 0);
    h.rank_.assign(num_vertices, 0);

    for (uint32_t i = 0; i < in.size(); ++i) {
        const AssembleNode& an = in[i];
        HierNode& n = h.nodes_[i];
        n.parent = an.parent;
        if (an.parent == kNoNode) {
            if (i != 0) throw std::invalid_argument("non-root without parent");
        } else {
            if (an.parent >= i)
                throw std::invalid_argument("parent after child");
            HierNode& p = h.nodes_[an.parent];
            if (p.left == kNoNode)
                p.left = i;
            else if (p.right == kNoNode)
                p.right = i;
            else
                throw std::invalid_argument("more than two children");
            n.level = p.level + 1;
        }
        n.cut_begin = uint32_t(h.cut_pool_.size());
        n.cut_size = uint32_t(an.cut.size());
        for (uint32_t r = 0; r < an.cut.size(); ++r) {
            vertex_t v = an.cut[r];
            if (v >= num_vertices)
                throw std::invalid_argument("cut vertex out of range");
            if (h.node_of_[v] != kNoNode)
                throw std::invalid_argument("vertex in two cuts");
            h.node_of_[v] = i;
            h.rank_[v] = r;
            h.cut_pool_.push_back(v);
        }
    }
    for (vertex_t v = 0; v < num_vertices; ++v)
        if (h.node_of_[v] == kNoNode)
            throw std::invalid_argument("vertex in no cut");

    for (uint32_t i = 0; i < h.nodes_.size(); ++i) {
        HierNode& n = h.nodes_[i];
        n.tau_offset = n.parent == kNoNode
                           ? 0
                           : h.nodes_[n.parent].tau_offset +
                                 h.nodes_[n.parent].cut_size;
        n.subtree_verts = n.cut_size;
        h.max_level_ = std::max(h.max_level_, n.level);
    }
    for (uint32_t i = uint32_t(h.nodes_.size()); i-- > 1;)
        h.nodes_[h.nodes_[i].parent].subtree_verts +=
            h.nodes_[i].subtree_verts;

    for (vertex_t v = 0; v < num_vertices; ++v)
        h.tau_[v] = h.nodes_[h.node_of_[v]].tau_offset + h.rank_[v];

    // Root-path bitstrings, one bit per level: 0 for a left child, 1 for a
    // right child, stored word aligned per node.
    for (uint32_t i = 0; i < h.nodes_.size(); ++i) {
        HierNode& n = h.nodes_[i];
        uint32_t words = std::max<uint32_t>(1, (n.level + 63) / 64);
        n.bits_offset = uint32_t(h.bits_pool_.size());
        h.bits_pool_.resize(h.bits_pool_.size() + words, 0);
        if (n.parent != kNoNode) {
            const HierNode& p = h.nodes_[n.parent];
            uint32_t pwords = std::max<uint32_t>(1, (p.level + 63) / 64);
            for (uint32_t w = 0; w < pwords; ++w)
                h.bits_pool_[n.bits_offset + w] = h.bits_pool_[p.bits_offset + w];
            if (p.right == i) {
                uint32_t bit = n.level - 1;
                h.bits_pool_[n.bits_offset + bit / 64] |= uint64_t(1)
                                                          << (bit % 64);
            }
        }
    }

    // Cumulative cut counts along the root path, cum[l] = cut vertices in
    // ancestors through level l, the node's own level included.
    for (uint32_t i = 0; i < h.nodes_.size(); ++i) {
        HierNode& n = h.nodes_[i];
        n.cum_offset = uint32_t(h.cum_pool_.size());
        if (n.parent != kNoNode) {
            const HierNode& p = h.nodes_[n.parent];
            for (uint32_t l = 0; l <= p.level; ++l)
                h.cum_pool_.push_back(h.cum_pool_[p.cum_offset + l]);
        }
        h.cum_pool_.push_back(n.tau_offset + n.cut_size);
    }
    return h;
}

uint32_t Hierarchy::node_lca_level(uint32_t a, uint32_t b) const {
    uint32_t m = std::min(nodes_[a].level, nodes_[b].level);
    const uint64_t* wa = bits_pool_.data() + nodes_[a].bits_offset;
    const uint64_t* wb = bits_pool_.data() + nodes_[b].bits_offset;
    uint32_t words = (m + 63) / 64;
    for (uint32_t w = 0; w < words; ++w) {
        uint64_t x = wa[w] ^ wb[w];
        if (x) return std::min(m, w * 64 + uint32_t(std::countr_zero(x)));
    }
    return m;
}

uint32_t Hierarchy::lca_level(vertex_t s, vertex_t t) const {
    return node_lca_level(node_of_[s], node_of_[t]);
}

uint32_t Hierarchy::common_label_prefix_len(vertex_t s, vertex_t t) const {
    uint32_t ns = node_of_[s], nt = node_of_[t];
    uint32_t p = node_lca_level(ns, nt);
    uint32_t shared_cuts = cum_pool_[nodes_[ns].cum_offset + p];
    return std::min({label_len(s), label_len(t), shared_cuts});
}

bool Hierarchy::precedes(vertex_t r, vertex_t v) const {
    uint32_t nr = node_of_[r], nv = node_of_[v];
    if (nr == nv) return rank_[r] <= rank_[v];
    return nodes_[nr].level < nodes_[nv].level &&
           node_lca_level(nr, nv) == nodes_[nr].level;
}

std::vector<std::string> Hierarchy::verify(const Graph& g, double beta) const {
    std::vector<std::string> problems;
    auto report = [&](std::string s) {
        if (problems.size() < 50) problems.push_back(std::move(s));
    };

    if (g.num_vertices() != num_vertices())
        report("vertex count differs from graph");

    for (uint32_t i = 0; i < nodes_.size(); ++i) {
        const HierNode& n = nodes_[i];
        uint32_t kids = n.cut_size;
        for (uint32_t c : {n.left, n.right}) {
            if (c == kNoNode) continue;
            kids += nodes_[c].subtree_verts;
            double cap = (1.0 - beta) * double(n.subtree_verts) + 1e-9;
            if (double(nodes_[c].subtree_verts) > cap)
                report("balance violated at node " + std::to_string(i) +
                       ": child " + std::to_string(c) + " holds " +
                       std::to_string(nodes_[c].subtree_verts) + " of " +
                       std::to_string(n.subtree_verts));
            if (nodes_[c].parent != i || nodes_[c].level != n.level + 1)
                report("bad child link at node " + std::to_string(i));
        }
        if (kids != n.subtree_verts)
            report("subtree size wrong at node " + std::to_string(i));
        uint32_t expect_tau = n.parent == kNoNode
                                  ? 0
                                  : nodes_[n.parent].tau_offset +
                                        nodes_[n.parent].cut_size;
        if (n.tau_offset != expect_tau)
            report("tau offset wrong at node " + std::to_string(i));
        if (cum_pool_[n.cum_offset + n.level] != n.tau_offset + n.cut_size)
            report("cumulative cuts wrong at node " + std::to_string(i));
    }
    if (!nodes_.empty() && nodes_[0].subtree_verts != num_vertices())
        report("root subtree does not cover all vertices");

    for (vertex_t v = 0; v < num_vertices(); ++v) {
        uint32_t nid = node_of_[v];
        if (cut_pool_[nodes_[nid].cut_begin + rank_[v]] != v)
            report("cut position wrong for vertex " + std::to_string(v));
        if (tau_[v] != nodes_[nid].tau_offset + rank_[v])
            report("tau wrong for vertex " + std::to_string(v));
    }

    // Every edge must stay inside one root path: its endpoints' nodes are
    // ancestor and descendant (or equal), never from disjoint subtrees.
    for (vertex_t u = 0; u < g.num_vertices(); ++u) {
        for (const Neighbor& nb : g.neighbors(u)) {
            if (nb.to < u) continue;
            uint32_t nu = node_of_[u], nv = node_of_[nb.to];
            uint32_t lca = node_lca_level(nu, nv);
            if (lca != std::min(nodes_[nu].level, nodes_[nv].level))
                report("edge " + std::to_string(u + 1) + "-" +
                       std::to_string(nb.to + 1) +
                       " joins incomparable nodes");
        }
    }
    return problems;
}

Hierarchy build_hierarchy(const Graph& g, const BuildConfig& cfg) {
    size_t n = g.num_vertices();
    uint32_t leaf = std::max<uint32_t>(1, cfg.leaf_threshold);
    std::vector<AssembleNode> nodes;
    PartitionWorkspace ws(n);
    std::mt19937_64 rng(cfg.seed);

    struct Task {
        std::vector<vertex_t> verts;
        uint32_t parent;
    };
    std::vector<Task> stack;
    std::vector<vertex_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    stack.push_back({std::move(all), kNoNode});

    while (!stack.empty()) {
        Task t = std::move(stack.back());
        stack.pop_back();
        uint32_t id = uint32_t(nodes.size());
        std::sort(t.verts.begin(), t.verts.end());
        if (t.verts.size() <= leaf) {
            nodes.push_back({t.parent, std::move(t.verts)});
            continue;
        }
        Separator sep = find_balanced_separator(
            g, t.verts, cfg.beta, cfg.restarts, cfg.refine_passes, ws, rng);
        std::sort(sep.cut.begin(), sep.cut.end());
        nodes.push_back({t.parent, std::move(sep.cut)});
        // Depth first, first side on top, so children follow their parent
        // and the first side becomes the left child.
        if (!sep.side_b.empty()) stack.push_back({std::move(sep.side_b), id});
        if (!sep.side_a.empty()) stack.push_back({std::move(sep.side_a), id});
    }
    return Hierarchy::assemble(n, nodes);
}

}  // namespace stl
