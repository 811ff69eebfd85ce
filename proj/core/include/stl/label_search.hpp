#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stl/graph.hpp"
#include "stl/hierarchy.hpp"
#include "stl/labelling.hpp"
#include "stl/stats.hpp"
#include "stl/types.hpp"

namespace stl {

// One starting point for the per-position searches: vertex v enters the
// queue of label position r with distance d.
struct LabelSearchSeed {
    uint32_t r;
    distance_t d;
    vertex_t v;

    bool operator==(const LabelSearchSeed&) const = default;
};

// Scratch for the per-position searches, epoch-stamped so consecutive
// updates reuse it without clearing.
class LsWorkspace {
public:
    explicit LsWorkspace(size_t n)
        : dist_(n, 0),
          dist_stamp_(n, 0),
          mark_stamp_(n, 0),
          touched_stamp_(n, 0) {}

    std::vector<distance_t> dist_;
    std::vector<uint64_t> dist_stamp_;
    uint64_t dist_epoch_ = 0;
    std::vector<uint64_t> mark_stamp_;  // affected-set membership per position
    uint64_t mark_epoch_ = 0;
    std::vector<uint64_t> touched_stamp_;  // vertices counted in v_delta
    uint64_t touched_epoch_ = 0;
    std::vector<std::pair<distance_t, vertex_t>> heap_;
    std::vector<vertex_t> affected_;
    std::vector<distance_t> affected_old_;
};

// Queue seeds a weight decrease induces, for every shared label position of
// the edge's endpoints: the endpoint whose entry the shortened edge now
// undercuts, with the undercutting distance. Sorted by position.
std::vector<LabelSearchSeed> decrease_seeds(const Hierarchy& h,
                                            const Labelling& l,
                                            const AppliedUpdate& u);

// Detection seeds a weight increase induces: endpoints whose entry exactly
// matched a path over the edge at its old weight, carrying that entry value.
std::vector<LabelSearchSeed> increase_seeds(const Hierarchy& h,
                                            const Labelling& l,
                                            const AppliedUpdate& u);

// Repairs labels after the given weight decreases, which must already be
// applied to the graph. One pruned search per label position that received
// seeds; a popped vertex only spreads if it beats the current entry.
UpdateStats ls_decrease(const Graph& g, const Hierarchy& h, Labelling& l,
                        std::span<const AppliedUpdate> ups, LsWorkspace& ws);

// Repairs labels after weight increases, already applied to the graph.
// Per label position: grow the set of entries whose old value was supported
// through an updated edge, reset them, then re-run a pruned search seeded
// with bounds obtained from unaffected neighbors.
UpdateStats ls_increase(const Graph& g, const Hierarchy& h, Labelling& l,
                        std::span<const AppliedUpdate> ups, LsWorkspace& ws);

}  // namespace stl
