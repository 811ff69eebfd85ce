#include "stl/pareto_search.hpp"

#include <algorithm>
#include <chrono>
#include <queue>

namespace stl {

namespace {

uint64_t elapsed_us(std::chrono::steady_clock::time_point t0) {
    return uint64_t(std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count());
}

uint64_t pair_key(vertex_t v, uint32_t i) {
    return (uint64_t(v) << 32) | i;
}

// Queue entry carrying a whole position interval. Pops ascend by distance;
// ties prefer the wider reach (larger hi), then the smaller vertex, so runs
// are reproducible pop for pop.
struct QItem {
    distance_t d;
    uint32_t lo, hi;
    vertex_t v;

    bool operator>(const QItem& o) const {
        if (d != o.d) return d > o.d;
        if (hi != o.hi) return hi < o.hi;
        if (v != o.v) return v > o.v;
        return lo > o.lo;
    }
};

using IntervalQueue =
    std::priority_queue<QItem, std::vector<QItem>, std::greater<QItem>>;

struct RepairItem {
    distance_t d;
    vertex_t v;
    uint32_t i;

    bool operator>(const RepairItem& o) const {
        return std::tie(d, v, i) > std::tie(o.d, o.v, o.i);
    }
};

using RepairQueue =
    std::priority_queue<RepairItem, std::vector<RepairItem>,
                        std::greater<RepairItem>>;

void count_touched(ParetoWorkspace& ws, vertex_t v, uint64_t& counter) {
    if (ws.touched_stamp_[v] != ws.touched_epoch_) {
        ws.touched_stamp_[v] = ws.touched_epoch_;
        ++counter;
    }
}

// One direction of the decrease repair: paths that cross the shortened edge
// into `start` first. Writes improvements directly; an entry improved at
// some position lets the interval spread on to the neighbors.
void decrease_search(const Graph& g, const Hierarchy& h, Labelling& l,
                     vertex_t anchor_side, vertex_t start, distance_t seed_d,
                     ParetoWorkspace& ws, UpdateStats& st,
                     std::vector<ParetoTraceEntry>* trace) {
    uint64_t le = ++ws.level_epoch_;
    IntervalQueue pq;
    uint32_t rmin = std::min(h.tau(anchor_side), h.tau(start));
    pq.push({seed_d, 0, rmin, start});
    ++st.seeds;
    while (!pq.empty()) {
        QItem it = pq.top();
        pq.pop();
        ++st.pops;
        uint32_t lo = it.lo, hi = it.hi;
        if (ws.level_stamp_[it.v] == le)
            lo = std::max(lo, ws.level_[it.v]);
        hi = std::min(hi, h.tau(it.v));
        bool skipped = lo > hi;
        if (trace) trace->push_back({it.v, it.d, lo, hi, skipped});
        if (skipped) continue;
        ws.level_stamp_[it.v] = le;
        ws.level_[it.v] = hi + 1;

        // A position that fails to improve here cannot improve anywhere
        // beyond this vertex either, so the interval spreads on only up to
        // the highest improved position.
        uint32_t spread = lo;
        bool improved = false;
        for (uint32_t i = lo; i <= hi; ++i) {
            ++st.interval_scan;
            distance_t cand = it.d + l.entry(anchor_side, i);
            if (cand < l.entry(it.v, i)) {
                l.set_entry(it.v, i, cand);
                ++st.writes;
                ++st.l_delta;
                count_touched(ws, it.v, st.v_delta);
                improved = true;
                spread = i;
            }
        }
        if (!improved) continue;
        for (const Neighbor& nb : g.neighbors(it.v))
            pq.push({it.d + nb.weight, lo, spread, nb.to});
    }
}

}  // namespace

UpdateStats pareto_decrease(const Graph& g, const Hierarchy& h, Labelling& l,
                            const AppliedUpdate& u, ParetoWorkspace& ws,
                            std::vector<ParetoTraceEntry>* trace) {
    auto t0 = std::chrono::steady_clock::now();
    UpdateStats st;
    st.algo = "pareto";
    st.direction = "decrease";
    ++ws.touched_epoch_;
    decrease_search(g, h, l, u.u, u.v, u.new_weight, ws, st, trace);
    decrease_search(g, h, l, u.v, u.u, u.new_weight, ws, st, trace);
    st.wall_us = elapsed_us(t0);
    return st;
}

namespace {

// One direction of the increase handling: find entries whose pre-update
// value is explained by a path over the edge at its old weight, record them
// and lift them to a safe bound. Pre-update values live in the snapshot,
// since the sibling search may already have lifted some entries.
void increase_detect(const Graph& g, const Hierarchy& h, Labelling& l,
                     vertex_t anchor_side, vertex_t start, distance_t w_old,
                     distance_t w_delta, ParetoWorkspace& ws, UpdateStats& st,
                     std::vector<ParetoTraceEntry>* trace) {
    auto old_entry = [&](vertex_t v, uint32_t i) {
        auto it = ws.snapshot_.find(pair_key(v, i));
        return it != ws.snapshot_.end() ? it->second : l.entry(v, i);
    };

    uint64_t le = ++ws.level_epoch_;
    IntervalQueue pq;
    uint32_t rmin = std::min(h.tau(anchor_side), h.tau(start));
    pq.push({w_old, 0, rmin, start});
    ++st.seeds;
    while (!pq.empty()) {
        QItem it = pq.top();
        pq.pop();
        ++st.pops;
        uint32_t lo = it.lo, hi = it.hi;
        if (ws.level_stamp_[it.v] == le)
            lo = std::max(lo, ws.level_[it.v]);
        hi = std::min(hi, h.tau(it.v));
        bool skipped = lo > hi;
        if (trace) trace->push_back({it.v, it.d, lo, hi, skipped});
        if (skipped) continue;
        ws.level_stamp_[it.v] = le;
        ws.level_[it.v] = hi + 1;

        // Mirrors the spread rule of the decrease search: positions without
        // a match here cannot match farther out.
        uint32_t spread = lo;
        bool hit = false;
        for (uint32_t i = lo; i <= hi; ++i) {
            ++st.interval_scan;
            distance_t base = old_entry(anchor_side, i);
            distance_t mine = old_entry(it.v, i);
            if (base >= kInfinity || mine >= kInfinity) continue;
            if (it.d + base != mine) continue;
            // The entry's own position is never affected: a predecessor's
            // self distance stays 0.
            if (h.tau(it.v) == i) continue;
            hit = true;
            spread = i;
            if (ws.aff_stamp_[it.v] != ws.aff_epoch_) {
                ws.aff_stamp_[it.v] = ws.aff_epoch_;
                ws.aff_lo_[it.v] = i;
                ws.aff_hi_[it.v] = i;
                ws.affected_order_.push_back(it.v);
            } else {
                ws.aff_lo_[it.v] = std::min(ws.aff_lo_[it.v], i);
                ws.aff_hi_[it.v] = std::max(ws.aff_hi_[it.v], i);
            }
            uint64_t key = pair_key(it.v, i);
            if (!ws.snapshot_.count(key)) {
                ws.snapshot_[key] = mine;
                l.set_entry(it.v, i, mine + w_delta);
                ++st.writes;
            }
        }
        if (!hit) continue;
        for (const Neighbor& nb : g.neighbors(it.v))
            pq.push({it.d + nb.weight, lo, spread, nb.to});
    }
}

// Settles every recorded interval: start from bounds offered by neighbor
// entries and keep relaxing inside the affected intervals until nothing
// improves. Unaffected entries are exact and act as fixed boundary values.
void increase_repair(const Graph& g, const Hierarchy& h, Labelling& l,
                     ParetoWorkspace& ws, UpdateStats& st) {
    RepairQueue pq;
    std::vector<vertex_t> order = ws.affected_order_;
    std::sort(order.begin(), order.end());
    for (vertex_t v : order) {
        for (uint32_t i = ws.aff_lo_[v]; i <= ws.aff_hi_[v]; ++i) {
            distance_t best = kInfinity;
            for (const Neighbor& nb : g.neighbors(v)) {
                if (h.tau(nb.to) < i) continue;
                distance_t c = l.entry(nb.to, i) + nb.weight;
                if (c < best) best = c;
            }
            if (best < l.entry(v, i)) {
                pq.push({best, v, i});
                ++st.repair_seeds;
            }
        }
    }
    while (!pq.empty()) {
        RepairItem it = pq.top();
        pq.pop();
        ++st.repair_pops;
        if (it.d >= l.entry(it.v, it.i)) continue;
        l.set_entry(it.v, it.i, it.d);
        ++st.repair_writes;
        for (const Neighbor& nb : g.neighbors(it.v)) {
            vertex_t n = nb.to;
            if (ws.aff_stamp_[n] != ws.aff_epoch_) continue;
            if (it.i < ws.aff_lo_[n] || it.i > ws.aff_hi_[n]) continue;
            distance_t nd = it.d + nb.weight;
            if (nd < l.entry(n, it.i)) pq.push({nd, n, it.i});
        }
    }
}

}  // namespace

UpdateStats pareto_increase(const Graph& g, const Hierarchy& h, Labelling& l,
                            const AppliedUpdate& u, ParetoWorkspace& ws,
                            std::vector<ParetoTraceEntry>* trace) {
    auto t0 = std::chrono::steady_clock::now();
    UpdateStats st;
    st.algo = "pareto";
    st.direction = "increase";
    ++ws.touched_epoch_;
    ++ws.aff_epoch_;
    ws.affected_order_.clear();
    ws.snapshot_.clear();
    distance_t delta = distance_t(u.new_weight) - distance_t(u.old_weight);

    increase_detect(g, h, l, u.u, u.v, u.old_weight, delta, ws, st, trace);
    increase_detect(g, h, l, u.v, u.u, u.old_weight, delta, ws, st, trace);
    increase_repair(g, h, l, ws, st);

    for (auto& [key, old] : ws.snapshot_) {
        vertex_t v = vertex_t(key >> 32);
        uint32_t i = uint32_t(key);
        distance_t now = l.entry(v, i);
        if (now != old) {
            ++st.l_delta;
            count_touched(ws, v, st.v_delta);
        }
        if (now >= kInfinity) ++st.repair_uncovered;
    }
    st.wall_us = elapsed_us(t0);
    return st;
}

}  // namespace stl
