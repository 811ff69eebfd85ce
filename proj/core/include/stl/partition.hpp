#pragma once

#include <random>
#include <vector>

#include "stl/graph.hpp"
#include "stl/types.hpp"

namespace stl {

// A balanced vertex separator of a vertex set S: removing `cut` leaves no
// edge between `side_a` and `side_b`, and each side holds at most
// (1 - beta) * |S| vertices. Either side may be empty.
struct Separator {
    std::vector<vertex_t> cut;
    std::vector<vertex_t> side_a;
    std::vector<vertex_t> side_b;
};

// Scratch arrays sized to the full graph, reused across separator calls.
// All marks are epoch-stamped so reuse needs no clearing.
class PartitionWorkspace {
public:
    explicit PartitionWorkspace(size_t n)
        : stamp_(n, 0),
          side_(n, 0),
          side_stamp_(n, 0),
          dist_(n, 0),
          dist_stamp_(n, 0),
          comp_(n, 0) {}

    std::vector<uint64_t> stamp_;       // membership in the current set
    uint64_t epoch_ = 0;
    std::vector<uint8_t> side_;         // 0 = A, 1 = B, 2 = cut
    std::vector<uint64_t> side_stamp_;
    uint64_t side_epoch_ = 0;
    std::vector<uint32_t> dist_;        // BFS layers / visit marks
    std::vector<uint64_t> dist_stamp_;
    uint64_t bfs_epoch_ = 0;
    std::vector<uint32_t> comp_;        // component ids
    std::vector<vertex_t> queue_;
};

// Finds a balanced separator of the subgraph induced by `verts`.
// Tries alternating-frontier growth from pseudo-peripheral pairs, covers the
// crossing edges, refines the boundary, and regroups components. Falls back
// to cutting ceil(beta * |S|) vertices with one side empty, which always
// satisfies the balance bound. `verts` must be duplicate-free.
Separator find_balanced_separator(const Graph& g,
                                  const std::vector<vertex_t>& verts,
                                  double beta, uint32_t restarts,
                                  uint32_t refine_passes,
                                  PartitionWorkspace& ws, std::mt19937_64& rng);

// Uniform integer in [0, n). Explicit mapping so results depend only on the
// engine, not on library distribution internals.
inline uint64_t rng_below(std::mt19937_64& rng, uint64_t n) {
    return n ? rng() % n : 0;
}

}  // namespace stl
