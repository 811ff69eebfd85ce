#include "stl/label_search.hpp"

#include <algorithm>
#include <chrono>

namespace stl {

namespace {

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

uint64_t elapsed_us(std::chrono::steady_clock::time_point t0) {
    return uint64_t(std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count());
}

// Orients an update so that u comes first in the vertex order; their labels
// then share exactly the positions 0 .. tau(u).
std::pair<vertex_t, vertex_t> oriented(const Hierarchy& h,
                                       const AppliedUpdate& up) {
    return h.tau(up.u) <= h.tau(up.v) ? std::pair{up.u, up.v}
                                      : std::pair{up.v, up.u};
}

void count_touched(LsWorkspace& ws, vertex_t v, uint64_t& counter) {
    if (ws.touched_stamp_[v] != ws.touched_epoch_) {
        ws.touched_stamp_[v] = ws.touched_epoch_;
        ++counter;
    }
}

// Dijkstra over one label position: pops ascending, a popped distance only
// lands (and spreads) if it beats the current entry, and relaxation stays
// below the position's predecessor in the vertex order. Change counters are
// optional; the increase repair accounts for changes by snapshot instead
// and must not consume the touched stamps.
void run_position_search(const Graph& g, const Hierarchy& h, Labelling& l,
                         uint32_t r, LsWorkspace& ws, uint64_t& pops,
                         uint64_t& writes, uint64_t* changed_entries,
                         uint64_t* changed_vertices) {
    auto& heap = ws.heap_;
    uint64_t e = ws.dist_epoch_;
    while (!heap.empty()) {
        auto [d, v] = heap_pop(heap);
        if (ws.dist_stamp_[v] != e || d != ws.dist_[v]) continue;
        ++pops;
        if (d >= l.entry(v, r)) continue;
        l.set_entry(v, r, d);
        ++writes;
        if (changed_entries) {
            ++*changed_entries;
            count_touched(ws, v, *changed_vertices);
        }
        for (const Neighbor& nb : g.neighbors(v)) {
            vertex_t n = nb.to;
            if (h.tau(n) <= r) continue;
            distance_t nd = d + nb.weight;
            if (nd >= l.entry(n, r)) continue;
            if (ws.dist_stamp_[n] != e || nd < ws.dist_[n]) {
                ws.dist_stamp_[n] = e;
                ws.dist_[n] = nd;
                heap_push(heap, {nd, n});
            }
        }
    }
}

void seed_queue(LsWorkspace& ws, distance_t d, vertex_t v) {
    if (ws.dist_stamp_[v] != ws.dist_epoch_ || d < ws.dist_[v]) {
        ws.dist_stamp_[v] = ws.dist_epoch_;
        ws.dist_[v] = d;
        heap_push(ws.heap_, {d, v});
    }
}

}  // namespace

std::vector<LabelSearchSeed> decrease_seeds(const Hierarchy& h,
                                            const Labelling& l,
                                            const AppliedUpdate& u) {
    std::vector<LabelSearchSeed> out;
    auto [a, b] = oriented(h, u);
    distance_t w = u.new_weight;
    for (uint32_t r = 0; r <= h.tau(a); ++r) {
        distance_t da = l.entry(a, r), db = l.entry(b, r);
        if (da + w < db)
            out.push_back({r, da + w, b});
        else if (db + w < da)
            out.push_back({r, db + w, a});
    }
    return out;
}

std::vector<LabelSearchSeed> increase_seeds(const Hierarchy& h,
                                            const Labelling& l,
                                            const AppliedUpdate& u) {
    std::vector<LabelSearchSeed> out;
    auto [a, b] = oriented(h, u);
    distance_t w = u.old_weight;
    for (uint32_t r = 0; r <= h.tau(a); ++r) {
        distance_t da = l.entry(a, r), db = l.entry(b, r);
        // The predecessor's own entry (always 0) never depends on any edge,
        // so the predecessor itself is not a candidate.
        if (da < kInfinity && da + w == db && h.tau(b) > r)
            out.push_back({r, db, b});
        if (db < kInfinity && db + w == da && h.tau(a) > r)
            out.push_back({r, da, a});
    }
    return out;
}

UpdateStats ls_decrease(const Graph& g, const Hierarchy& h, Labelling& l,
                        std::span<const AppliedUpdate> ups, LsWorkspace& ws) {
    auto t0 = std::chrono::steady_clock::now();
    UpdateStats st;
    st.algo = "ls";
    st.direction = "decrease";

    std::vector<LabelSearchSeed> seeds;
    for (const AppliedUpdate& u : ups) {
        auto s = decrease_seeds(h, l, u);
        seeds.insert(seeds.end(), s.begin(), s.end());
    }
    st.seeds = seeds.size();
    std::sort(seeds.begin(), seeds.end(), [](auto& x, auto& y) {
        return std::tie(x.r, x.d, x.v) < std::tie(y.r, y.d, y.v);
    });

    ++ws.touched_epoch_;
    size_t i = 0;
    while (i < seeds.size()) {
        uint32_t r = seeds[i].r;
        ++ws.dist_epoch_;
        ws.heap_.clear();
        for (; i < seeds.size() && seeds[i].r == r; ++i)
            seed_queue(ws, seeds[i].d, seeds[i].v);
        run_position_search(g, h, l, r, ws, st.pops, st.writes, &st.l_delta,
                            &st.v_delta);
    }
    st.wall_us = elapsed_us(t0);
    return st;
}

UpdateStats ls_increase(const Graph& g, const Hierarchy& h, Labelling& l,
                        std::span<const AppliedUpdate> ups, LsWorkspace& ws) {
    auto t0 = std::chrono::steady_clock::now();
    UpdateStats st;
    st.algo = "ls";
    st.direction = "increase";

    std::vector<LabelSearchSeed> seeds;
    for (const AppliedUpdate& u : ups) {
        auto s = increase_seeds(h, l, u);
        seeds.insert(seeds.end(), s.begin(), s.end());
    }
    st.seeds = seeds.size();
    std::sort(seeds.begin(), seeds.end(), [](auto& x, auto& y) {
        return std::tie(x.r, x.d, x.v) < std::tie(y.r, y.d, y.v);
    });

    ++ws.touched_epoch_;
    size_t i = 0;
    while (i < seeds.size()) {
        uint32_t r = seeds[i].r;

        // Grow the affected set: entries whose value is still explained by
        // a path over an edge at its old weight, transitively.
        uint64_t me = ++ws.mark_epoch_;
        auto& aff = ws.affected_;
        auto& old_vals = ws.affected_old_;
        aff.clear();
        old_vals.clear();
        auto mark = [&](vertex_t v) {
            if (ws.mark_stamp_[v] == me) return;
            ws.mark_stamp_[v] = me;
            aff.push_back(v);
            old_vals.push_back(l.entry(v, r));
        };
        for (; i < seeds.size() && seeds[i].r == r; ++i) mark(seeds[i].v);
        for (size_t idx = 0; idx < aff.size(); ++idx) {
            vertex_t v = aff[idx];
            ++st.pops;
            distance_t dv = l.entry(v, r);
            for (const Neighbor& nb : g.neighbors(v)) {
                vertex_t n = nb.to;
                if (h.tau(n) <= r || ws.mark_stamp_[n] == me) continue;
                distance_t dn = l.entry(n, r);
                if (dn < kInfinity && dn == dv + nb.weight) mark(n);
            }
        }

        // Reset the affected entries, then seed the search with bounds over
        // unaffected neighbors. The bounds stay queue-only: entries keep
        // kInfinity until a pop proves a distance, so inner affected
        // vertices still improve through relaxation.
        for (vertex_t v : aff) l.set_entry(v, r, kInfinity);
        ++ws.dist_epoch_;
        ws.heap_.clear();
        for (vertex_t v : aff) {
            distance_t bound = kInfinity;
            for (const Neighbor& nb : g.neighbors(v)) {
                vertex_t n = nb.to;
                if (h.tau(n) < r || ws.mark_stamp_[n] == me) continue;
                distance_t c = l.entry(n, r) + nb.weight;
                if (c < bound) bound = c;
            }
            if (bound < kInfinity) {
                ++st.repair_seeds;
                seed_queue(ws, bound, v);
            }
        }
        run_position_search(g, h, l, r, ws, st.repair_pops, st.repair_writes,
                            nullptr, nullptr);

        for (size_t idx = 0; idx < aff.size(); ++idx) {
            distance_t now = l.entry(aff[idx], r);
            if (now != old_vals[idx]) {
                ++st.l_delta;
                count_touched(ws, aff[idx], st.v_delta);
            }
            if (now >= kInfinity) ++st.repair_uncovered;
        }
    }
    st.wall_us = elapsed_us(t0);
    return st;
}

}  // namespace stl
