#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stl/graph.hpp"
#include "stl/types.hpp"

namespace stl {

struct WorkloadConfig {
    uint32_t batches = 10;        // update batches
    uint32_t batch_size = 10;     // edges per batch
    double factor = 5.0;          // increased weight = round(factor * old)
    uint32_t query_sets = 10;     // distance-stratified pair sets
    uint32_t queries_per_set = 10000;
    distance_t min_distance = 1000;  // lower edge of the first set
    uint32_t sample_sources = 64;    // sources used to estimate the range
    uint64_t seed = 42;
};

struct QuerySet {
    distance_t d_lo = 0;  // half-open distance band [d_lo, d_hi)
    distance_t d_hi = 0;
    std::vector<std::pair<vertex_t, vertex_t>> pairs;
};

// A benchmark script: per batch, the increases to apply and the events that
// restore the original weights, plus query pairs bucketed by distance. The
// distance bands grow geometrically from min_distance to the largest
// distance seen from the sampled sources.
struct Workload {
    double factor = 0;
    uint64_t seed = 0;
    std::vector<std::vector<UpdateEvent>> increases;  // one vector per batch
    std::vector<std::vector<UpdateEvent>> restores;
    std::vector<QuerySet> query_sets;
};

Workload generate_workload(const Graph& g, const WorkloadConfig& cfg);

// Plain text, line oriented, 1-based vertex ids.
void save_workload(const std::string& path, const Workload& w);
Workload load_workload(const std::string& path);

}  // namespace stl
