#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stl/graph.hpp"
#include "stl/types.hpp"

namespace stl {

// One node of the separator tree. Nodes are stored in a flat vector with the
// root at index 0; children always have larger indices than their parent.
struct HierNode {
    uint32_t parent = kNoNode;
    uint32_t left = kNoNode;   // first child
    uint32_t right = kNoNode;  // second child, kNoNode if absent
    uint32_t level = 0;        // root is 0
    uint32_t cut_begin = 0;    // into the cut pool
    uint32_t cut_size = 0;
    uint32_t tau_offset = 0;   // cut vertices in strict ancestors
    uint32_t subtree_verts = 0;
    uint32_t bits_offset = 0;  // word offset into the bit pool
    uint32_t cum_offset = 0;   // offset into the cumulative-cut pool
};

// Input shape for assembling a hierarchy from explicit nodes. Parents must
// precede children; node 0 is the root. The cut order is preserved and
// defines the tie-break order of vertices that share a node.
struct AssembleNode {
    uint32_t parent = kNoNode;
    std::vector<vertex_t> cut;
};

// Separator tree over the graph's vertices. Each vertex belongs to exactly
// one node; vertices of a node's cut separate the child vertex sets from
// each other and from the rest of the graph. Per vertex it exposes tau, the
// number of strict predecessors in the order "ancestor-node cut vertices
// first, then earlier cut positions of the own node".
class Hierarchy {
public:
    Hierarchy() = default;

    static Hierarchy assemble(size_t num_vertices,
                              const std::vector<AssembleNode>& nodes);

    size_t num_vertices() const { return node_of_.size(); }
    uint32_t num_nodes() const { return uint32_t(nodes_.size()); }
    const HierNode& node(uint32_t id) const { return nodes_[id]; }

    uint32_t node_of(vertex_t v) const { return node_of_[v]; }
    uint32_t tau(vertex_t v) const { return tau_[v]; }
    uint32_t rank_in_node(vertex_t v) const { return rank_[v]; }
    // Number of label entries of v: one per strict predecessor plus self.
    uint32_t label_len(vertex_t v) const { return tau_[v] + 1; }

    std::span<const vertex_t> cut(uint32_t id) const {
        const HierNode& n = nodes_[id];
        return {cut_pool_.data() + n.cut_begin, n.cut_size};
    }

    uint32_t max_level() const { return max_level_; }

    // Depth of the deepest node that is an ancestor-or-self of both
    // vertices' nodes.
    uint32_t lca_level(vertex_t s, vertex_t t) const;

    // Number of label positions shared by s and t: their labels refer to
    // the same predecessor vertex at every index below this.
    uint32_t common_label_prefix_len(vertex_t s, vertex_t t) const;

    // True if r precedes v in the vertex order: r's node is a strict
    // ancestor of v's node, or they share a node and r's cut position is
    // not after v's. Implies position tau(r) of v's label refers to r.
    bool precedes(vertex_t r, vertex_t v) const;

    // Structural checks: every vertex in exactly one cut, child subtree
    // sizes within (1 - beta) of the parent, all edges between vertices of
    // comparable nodes, derived arrays consistent. Returns problem
    // descriptions, empty if sound.
    std::vector<std::string> verify(const Graph& g, double beta) const;

    // Raw pieces for serialization.
    const std::vector<HierNode>& nodes() const { return nodes_; }
    const std::vector<vertex_t>& cut_pool() const { return cut_pool_; }

private:
    uint32_t node_lca_level(uint32_t a, uint32_t b) const;

    std::vector<HierNode> nodes_;
    std::vector<vertex_t> cut_pool_;
    std::vector<uint64_t> bits_pool_;  // per-node root-path bitstring
    std::vector<uint32_t> cum_pool_;   // per-node cumulative cut counts
    std::vector<uint32_t> node_of_;    // per vertex
    std::vector<uint32_t> tau_;        // per vertex
    std::vector<uint32_t> rank_;       // per vertex, position in its cut
    uint32_t max_level_ = 0;
};

struct BuildConfig {
    double beta = 0.2;            // balance slack: child <= (1-beta) * node
    uint32_t leaf_threshold = 8;  // vertex sets this small become leaves
    uint64_t seed = 1;
    uint32_t restarts = 3;        // separator attempts per node
    uint32_t refine_passes = 4;   // boundary refinement sweeps
};

// Builds the tree by recursive balanced separation. Deterministic for a
// fixed seed; independent of edge weights (separators grow by hop count).
Hierarchy build_hierarchy(const Graph& g, const BuildConfig& cfg = {});

}  // namespace stl
