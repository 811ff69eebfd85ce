#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stl/graph.hpp"
#include "stl/hierarchy.hpp"
#include "stl/types.hpp"

namespace stl {

// Distance labels, one entry per (vertex, predecessor) pair, flat in memory.
// L(v)[i] is the distance from v to its i-th predecessor r, restricted to
// paths whose interior stays among vertices that r precedes. The last entry
// is always the self distance 0.
class Labelling {
public:
    Labelling() = default;
    explicit Labelling(const Hierarchy& h);

    size_t num_vertices() const { return offsets_.size() - 1; }
    uint64_t total_entries() const { return data_.size(); }

    std::span<distance_t> label(vertex_t v) {
        return {data_.data() + offsets_[v], size_t(offsets_[v + 1] - offsets_[v])};
    }
    std::span<const distance_t> label(vertex_t v) const {
        return {data_.data() + offsets_[v], size_t(offsets_[v + 1] - offsets_[v])};
    }

    distance_t entry(vertex_t v, uint32_t i) const {
        return data_[offsets_[v] + i];
    }
    void set_entry(vertex_t v, uint32_t i, distance_t d) {
        data_[offsets_[v] + i] = d;
    }

    bool operator==(const Labelling& o) const = default;

    // Raw pieces for serialization.
    const std::vector<uint64_t>& offsets() const { return offsets_; }
    const std::vector<distance_t>& data() const { return data_; }
    std::vector<distance_t>& data() { return data_; }
    void adopt(std::vector<uint64_t> offsets, std::vector<distance_t> data);

private:
    std::vector<uint64_t> offsets_;  // n + 1
    std::vector<distance_t> data_;
};

struct LabelBuildStats {
    uint64_t pops = 0;
    uint64_t writes = 0;
    uint64_t wall_us = 0;
};

// Computes all labels with one pruned search per predecessor vertex.
// Searches that share a label position cover disjoint vertex sets, so they
// run in parallel without locks. Deterministic regardless of thread count.
Labelling build_labels(const Graph& g, const Hierarchy& h, unsigned threads = 1,
                       LabelBuildStats* stats = nullptr);

// Same result computed the slow way: one plain restricted Dijkstra per
// predecessor over an explicit vertex filter. Reference for tests and
// `verify`; shares no search code with build_labels.
Labelling rebuild_reference(const Graph& g, const Hierarchy& h);

// Point-to-point distance: minimum entry-pair sum over the common label
// prefix. kInfinity if disconnected.
distance_t query_distance(const Hierarchy& h, const Labelling& l, vertex_t s,
                          vertex_t t);

}  // namespace stl
