#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "stl/graph.hpp"
#include "stl/hierarchy.hpp"
#include "stl/labelling.hpp"
#include "stl/stats.hpp"
#include "stl/types.hpp"

namespace stl {

// One processed queue entry of an interval search, recorded when a caller
// asks for a trace: vertex, distance, the position interval after clamping,
// and whether clamping emptied it.
struct ParetoTraceEntry {
    vertex_t v;
    distance_t d;
    uint32_t lo;
    uint32_t hi;
    bool skipped;

    bool operator==(const ParetoTraceEntry&) const = default;
};

// Scratch for the interval searches. Epoch-stamped like the others.
class ParetoWorkspace {
public:
    explicit ParetoWorkspace(size_t n)
        : level_(n, 0),
          level_stamp_(n, 0),
          aff_lo_(n, 0),
          aff_hi_(n, 0),
          aff_stamp_(n, 0),
          touched_stamp_(n, 0) {}

    std::vector<uint32_t> level_;  // lowest unprocessed position per vertex
    std::vector<uint64_t> level_stamp_;
    uint64_t level_epoch_ = 0;
    std::vector<uint32_t> aff_lo_;  // affected position interval per vertex
    std::vector<uint32_t> aff_hi_;
    std::vector<uint64_t> aff_stamp_;
    uint64_t aff_epoch_ = 0;
    std::vector<uint64_t> touched_stamp_;
    uint64_t touched_epoch_ = 0;
    std::vector<vertex_t> affected_order_;  // first-hit order, for repair
    // Pre-update values of bumped entries, keyed (v << 32) | position.
    std::unordered_map<uint64_t, distance_t> snapshot_;
};

// Repairs labels after one applied weight decrease with two interval
// searches, one per edge orientation. A search carries a whole position
// interval per queue entry instead of one search per position.
UpdateStats pareto_decrease(const Graph& g, const Hierarchy& h, Labelling& l,
                            const AppliedUpdate& u, ParetoWorkspace& ws,
                            std::vector<ParetoTraceEntry>* trace = nullptr);

// Repairs labels after one applied weight increase: two interval searches
// detect entries supported through the edge at its old weight (comparing
// against pre-update values kept in a snapshot), bump them to a safe upper
// bound, then one shared repair pass settles every affected interval.
UpdateStats pareto_increase(const Graph& g, const Hierarchy& h, Labelling& l,
                            const AppliedUpdate& u, ParetoWorkspace& ws,
                            std::vector<ParetoTraceEntry>* trace = nullptr);

}  // namespace stl
