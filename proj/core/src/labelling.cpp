#include "stl/labelling.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace stl {

Labelling::Labelling(const Hierarchy& h) {
    size_t n = h.num_vertices();
    offsets_.resize(n + 1);
    uint64_t total = 0;
    for (vertex_t v = 0; v < n; ++v) {
        offsets_[v] = total;
        total += h.label_len(v);
    }
    offsets_[n] = total;
    data_.assign(total, kInfinity);
}

void Labelling::adopt(std::vector<uint64_t> offsets,
                      std::vector<distance_t> data) {
    if (offsets.empty() || offsets.back() != data.size())
        throw std::invalid_argument("label layout mismatch");
    offsets_ = std::move(offsets);
    data_ = std::move(data);
}

namespace {

// Min-heap over a plain vector, reused across searches.
using HeapItem = std::pair<distance_t, vertex_t>;

void heap_push(std::vector<HeapItem>& h, HeapItem x) {
    h.push_back(x);
    std::push_heap(h.begin(), h.end(), std::greater<>());
}

HeapItem heap_pop(std::vector<HeapItem>& h) {
    std::pop_heap(h.begin(), h.end(), std::greater<>());
    HeapItem x = h.back();
    h.pop_back();
    return x;
}

}  // namespace

Labelling build_labels(const Graph& g, const Hierarchy& h, unsigned threads,
                       LabelBuildStats* stats) {
    auto t0 = std::chrono::steady_clock::now();
    size_t n = h.num_vertices();
    Labelling lab(h);

    // One search per predecessor vertex, largest subtrees first so threads
    // do not idle behind one long tail search. Searches that share a label
    // position have disjoint reach, so every write lands in its own slot.
    std::vector<vertex_t> anchors(n);
    std::iota(anchors.begin(), anchors.end(), 0);
    std::sort(anchors.begin(), anchors.end(), [&](vertex_t a, vertex_t b) {
        uint32_t sa = h.node(h.node_of(a)).subtree_verts;
        uint32_t sb = h.node(h.node_of(b)).subtree_verts;
        if (sa != sb) return sa > sb;
        return a < b;
    });

    std::atomic<size_t> next{0};
    std::atomic<uint64_t> total_pops{0}, total_writes{0};

    auto worker = [&] {
        std::vector<distance_t> dist(n);
        std::vector<uint64_t> stamp(n, 0);
        uint64_t epoch = 0;
        std::vector<HeapItem> heap;
        uint64_t pops = 0, writes = 0;
        for (;;) {
            size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n) break;
            vertex_t r = anchors[i];
            uint32_t rt = h.tau(r);
            ++epoch;
            heap.clear();
            dist[r] = 0;
            stamp[r] = epoch;
            heap_push(heap, {0, r});
            while (!heap.empty()) {
                auto [d, v] = heap_pop(heap);
                if (d != dist[v]) continue;  // superseded entry
                ++pops;
                lab.set_entry(v, rt, d);
                ++writes;
                for (const Neighbor& nb : g.neighbors(v)) {
                    if (h.tau(nb.to) <= rt) continue;
                    distance_t nd = d + nb.weight;
                    if (stamp[nb.to] != epoch || nd < dist[nb.to]) {
                        stamp[nb.to] = epoch;
                        dist[nb.to] = nd;
                        heap_push(heap, {nd, nb.to});
                    }
                }
            }
        }
        total_pops.fetch_add(pops, std::memory_order_relaxed);
        total_writes.fetch_add(writes, std::memory_order_relaxed);
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    if (stats) {
        stats->pops = total_pops.load();
        stats->writes = total_writes.load();
        stats->wall_us = uint64_t(
            std::chrono::duration_cast<std::chrono::microseconds>(
                std::chrono::steady_clock::now() - t0)
                .count());
    }
    return lab;
}

Labelling rebuild_reference(const Graph& g, const Hierarchy& h) {
    size_t n = h.num_vertices();
    Labelling lab(h);
    for (vertex_t r = 0; r < n; ++r) {
        auto dist = dijkstra_restricted(
            g, r, [&](vertex_t x) { return h.precedes(r, x); });
        uint32_t rt = h.tau(r);
        for (vertex_t v = 0; v < n; ++v)
            if (dist[v] < kInfinity && h.precedes(r, v))
                lab.set_entry(v, rt, dist[v]);
    }
    return lab;
}

distance_t query_distance(const Hierarchy& h, const Labelling& l, vertex_t s,
                          vertex_t t) {
    if (s == t) return 0;
    uint32_t k = h.common_label_prefix_len(s, t);
    auto ls = l.label(s);
    auto lt = l.label(t);
    distance_t best = kInfinity;
    for (uint32_t i = 0; i < k; ++i) {
        // Entries are capped at kInfinity, far below the wrap point, so the
        // raw sum orders correctly even for unreachable pairs.
        distance_t c = ls[i] + lt[i];
        if (c < best) best = c;
    }
    return best >= kInfinity ? kInfinity : best;
}

}  // namespace stl
