#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "stl/graph.hpp"
#include "stl/hierarchy.hpp"
#include "stl/labelling.hpp"

namespace stl {

class IndexError : public std::runtime_error {
public:
    explicit IndexError(const std::string& what) : std::runtime_error(what) {}
};

// Build parameters recorded alongside the index so a rebuild can reproduce it.
struct BuildMeta {
    double beta = 0.2;
    uint32_t leaf_threshold = 8;
    uint64_t seed = 1;
};

struct Index {
    Graph graph;
    Hierarchy hierarchy;
    Labelling labelling;
    BuildMeta meta;
};

// Binary container, magic "STL1", little-endian fields, crc32 trailer over
// everything after the magic. Carries the graph adjacency (in list order),
// the hierarchy and the labelling, so queries and updates need no separate
// graph file. Saving the result of a load reproduces the file byte for byte.
void save_index(const std::string& path, const Index& idx);
Index load_index(const std::string& path);

}  // namespace stl
