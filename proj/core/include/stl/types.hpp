#pragma once

#include <cstdint>

namespace stl {

using vertex_t = uint32_t;
using weight_t = uint32_t;
using distance_t = uint64_t;

// Sentinel for "no vertex" / "no node" slots.
constexpr vertex_t kNoVertex = UINT32_MAX;
constexpr uint32_t kNoNode = UINT32_MAX;

// Unreachable marker. Chosen well below UINT64_MAX so that adding two label
// entries in the query hot loop cannot wrap even without a saturation check:
// 2 * kInfinity still fits in 64 bits and compares larger than any real
// distance (path lengths are bounded by n * max_weight < 2^52).
constexpr distance_t kInfinity = 1ULL << 62;

// Saturating add for stored distances. Keeps every persisted value at most
// kInfinity so the raw-add comparison trick above stays valid.
inline distance_t dist_add(distance_t a, distance_t b) {
    distance_t s = a + b;
    return s >= kInfinity ? kInfinity : s;
}

}  // namespace stl
