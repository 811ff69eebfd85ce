#include "stl/partition.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace stl {

namespace {

bool in_set(const PartitionWorkspace& ws, vertex_t v) {
    return ws.stamp_[v] == ws.epoch_;
}

// Hop-count BFS from start over set members. Returns the last settled
// vertex, one of the farthest from start.
vertex_t bfs_farthest(const Graph& g, PartitionWorkspace& ws, vertex_t start) {
    uint64_t e = ++ws.bfs_epoch_;
    auto& q = ws.queue_;
    q.clear();
    q.push_back(start);
    ws.dist_stamp_[start] = e;
    vertex_t last = start;
    for (size_t h = 0; h < q.size(); ++h) {
        vertex_t v = q[h];
        last = v;
        for (const Neighbor& nb : g.neighbors(v)) {
            if (!in_set(ws, nb.to) || ws.dist_stamp_[nb.to] == e) continue;
            ws.dist_stamp_[nb.to] = e;
            q.push_back(nb.to);
        }
    }
    return last;
}

// Writes a component id per member into ws.comp_ and returns the member
// list of every component, in first-seen order.
std::vector<std::vector<vertex_t>> component_lists(
    const Graph& g, const std::vector<vertex_t>& verts,
    PartitionWorkspace& ws) {
    uint64_t e = ++ws.bfs_epoch_;
    std::vector<std::vector<vertex_t>> comps;
    auto& q = ws.queue_;
    for (vertex_t s : verts) {
        if (ws.dist_stamp_[s] == e) continue;
        uint32_t id = uint32_t(comps.size());
        comps.emplace_back();
        q.clear();
        q.push_back(s);
        ws.dist_stamp_[s] = e;
        for (size_t h = 0; h < q.size(); ++h) {
            vertex_t v = q[h];
            ws.comp_[v] = id;
            comps[id].push_back(v);
            for (const Neighbor& nb : g.neighbors(v)) {
                if (in_set(ws, nb.to) && ws.dist_stamp_[nb.to] != e) {
                    ws.dist_stamp_[nb.to] = e;
                    q.push_back(nb.to);
                }
            }
        }
    }
    return comps;
}

// Grows two BFS regions from u and v, always extending the smaller one by a
// layer, until the (connected) set is exhausted. Writes 0/1 into ws.side_.
void grow_regions(const Graph& g, PartitionWorkspace& ws, vertex_t u,
                  vertex_t v) {
    uint64_t e = ++ws.side_epoch_;
    std::vector<vertex_t> fa{u}, fb{v}, next;
    ws.side_[u] = 0;
    ws.side_stamp_[u] = e;
    ws.side_[v] = 1;
    ws.side_stamp_[v] = e;
    size_t ca = 1, cb = 1;
    while (!fa.empty() || !fb.empty()) {
        bool pick_a = fb.empty() || (!fa.empty() && ca <= cb);
        auto& front = pick_a ? fa : fb;
        uint8_t side = pick_a ? 0 : 1;
        next.clear();
        for (vertex_t x : front) {
            for (const Neighbor& nb : g.neighbors(x)) {
                vertex_t n = nb.to;
                if (!in_set(ws, n) || ws.side_stamp_[n] == e) continue;
                ws.side_stamp_[n] = e;
                ws.side_[n] = side;
                next.push_back(n);
            }
        }
        (pick_a ? ca : cb) += next.size();
        front.swap(next);
    }
}

// Minimal-looking vertex cover of the crossing edges, greedy by remaining
// degree, ties to the smaller id. The edge list order fixes the outcome.
std::vector<vertex_t> greedy_cover(
    const std::vector<std::pair<vertex_t, vertex_t>>& edges) {
    std::vector<vertex_t> cover;
    std::vector<char> covered(edges.size(), 0);
    std::unordered_map<vertex_t, uint32_t> deg;
    for (auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    size_t remaining = edges.size();
    while (remaining > 0) {
        vertex_t best = kNoVertex;
        uint32_t bd = 0;
        for (size_t i = 0; i < edges.size(); ++i) {
            if (covered[i]) continue;
            for (vertex_t x : {edges[i].first, edges[i].second}) {
                uint32_t d = deg[x];
                if (d > bd || (d == bd && x < best)) {
                    bd = d;
                    best = x;
                }
            }
        }
        cover.push_back(best);
        for (size_t i = 0; i < edges.size(); ++i) {
            if (covered[i]) continue;
            if (edges[i].first == best || edges[i].second == best) {
                covered[i] = 1;
                --remaining;
                --deg[edges[i].first];
                --deg[edges[i].second];
            }
        }
    }
    return cover;
}

struct Candidate {
    std::vector<vertex_t> cut, side_a, side_b;
    bool valid = false;

    size_t max_side() const { return std::max(side_a.size(), side_b.size()); }
    bool better_than(const Candidate& o) const {
        if (valid != o.valid) return valid;
        if (cut.size() != o.cut.size()) return cut.size() < o.cut.size();
        return max_side() < o.max_side();
    }
};

bool balanced(size_t side, size_t total, double beta) {
    return double(side) <= (1.0 - beta) * double(total) + 1e-9;
}

// Distributes component member lists over two groups, largest first into
// the smaller group. Group a may be pre-seeded.
void pack_components(std::vector<std::vector<vertex_t>>& comps,
                     std::vector<vertex_t>& a, std::vector<vertex_t>& b) {
    std::vector<uint32_t> order(comps.size());
    for (uint32_t i = 0; i < comps.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](uint32_t x, uint32_t y) {
        return comps[x].size() > comps[y].size();
    });
    for (uint32_t i : order) {
        auto& target = a.size() <= b.size() ? a : b;
        target.insert(target.end(), comps[i].begin(), comps[i].end());
    }
}

// One full attempt on a connected member set: grow regions from the given
// poles, cover the crossing edges, refine, regroup.
Candidate attempt(const Graph& g, const std::vector<vertex_t>& verts,
                  double beta, uint32_t refine_passes, PartitionWorkspace& ws,
                  vertex_t pole_a, vertex_t pole_b) {
    grow_regions(g, ws, pole_a, pole_b);

    std::vector<std::pair<vertex_t, vertex_t>> crossing;
    for (vertex_t v : verts) {
        if (ws.side_[v] != 0) continue;
        for (const Neighbor& nb : g.neighbors(v))
            if (in_set(ws, nb.to) && ws.side_[nb.to] == 1)
                crossing.push_back({v, nb.to});
    }
    for (vertex_t c : greedy_cover(crossing)) ws.side_[c] = 2;

    // Move cut vertices to a side when that shrinks the cut: absorbing c
    // into side s pulls its neighbors on the other side into the cut.
    std::vector<vertex_t> cut;
    for (vertex_t v : verts)
        if (ws.side_[v] == 2) cut.push_back(v);
    for (uint32_t pass = 0; pass < refine_passes; ++pass) {
        bool any = false;
        std::vector<vertex_t> next_cut;
        for (vertex_t c : cut) {
            uint32_t on[2] = {0, 0};
            for (const Neighbor& nb : g.neighbors(c))
                if (in_set(ws, nb.to) && ws.side_[nb.to] < 2)
                    ++on[ws.side_[nb.to]];
            uint8_t to = on[0] >= on[1] ? 0 : 1;  // pull from the lighter side
            if (on[1 - to] >= 1) {
                next_cut.push_back(c);
                continue;  // not a net win
            }
            ws.side_[c] = to;
            any = true;
        }
        cut.swap(next_cut);
        if (!any) break;
    }
    cut.clear();
    for (vertex_t v : verts)
        if (ws.side_[v] == 2) cut.push_back(v);

    // Removing the cut may split the sides further; regroup components for
    // the best reachable balance.
    std::vector<vertex_t> rest;
    for (vertex_t v : verts)
        if (ws.side_[v] != 2) rest.push_back(v);
    // Restrict membership to the uncut remainder, then restore it under a
    // fresh epoch so no stale stamps survive.
    ++ws.epoch_;
    for (vertex_t v : rest) ws.stamp_[v] = ws.epoch_;
    auto comps = component_lists(g, rest, ws);
    ++ws.epoch_;
    for (vertex_t v : verts) ws.stamp_[v] = ws.epoch_;

    Candidate cand;
    cand.cut = std::move(cut);
    pack_components(comps, cand.side_a, cand.side_b);
    cand.valid = balanced(cand.side_a.size(), verts.size(), beta) &&
                 balanced(cand.side_b.size(), verts.size(), beta);
    return cand;
}

Separator chunk_fallback(std::vector<vertex_t> verts, double beta) {
    size_t total = verts.size();
    size_t c = size_t(std::ceil(beta * double(total)));
    c = std::min(std::max<size_t>(c, 1), total);
    std::sort(verts.begin(), verts.end());
    Separator sep;
    sep.cut.assign(verts.begin(), verts.begin() + c);
    sep.side_a.assign(verts.begin() + c, verts.end());
    return sep;
}

}  // namespace

Separator find_balanced_separator(const Graph& g,
                                  const std::vector<vertex_t>& verts,
                                  double beta, uint32_t restarts,
                                  uint32_t refine_passes,
                                  PartitionWorkspace& ws,
                                  std::mt19937_64& rng) {
    size_t total = verts.size();
    if (total == 1) return chunk_fallback(verts, beta);

    ++ws.epoch_;
    for (vertex_t v : verts) ws.stamp_[v] = ws.epoch_;
    auto comps = component_lists(g, verts, ws);

    if (comps.size() > 1) {
        std::sort(comps.begin(), comps.end(),
                  [](auto& a, auto& b) { return a.size() > b.size(); });
        if (balanced(comps[0].size(), total, beta)) {
            // No cut needed, the components already split acceptably.
            Separator sep;
            pack_components(comps, sep.side_a, sep.side_b);
            if (balanced(sep.side_a.size(), total, beta) &&
                balanced(sep.side_b.size(), total, beta))
                return sep;
            return chunk_fallback(verts, beta);
        }
        // One dominant component: cut inside it, pack the rest around it.
        std::vector<vertex_t> big = comps[0];
        Separator inner = find_balanced_separator(g, big, beta, restarts,
                                                  refine_passes, ws, rng);
        Separator sep;
        sep.cut = std::move(inner.cut);
        sep.side_a = std::move(inner.side_a);
        sep.side_b = std::move(inner.side_b);
        comps.erase(comps.begin());
        pack_components(comps, sep.side_a, sep.side_b);
        if (balanced(sep.side_a.size(), total, beta) &&
            balanced(sep.side_b.size(), total, beta))
            return sep;
        return chunk_fallback(verts, beta);
    }

    Candidate best;
    for (uint32_t t = 0; t < std::max<uint32_t>(restarts, 1); ++t) {
        vertex_t pa, pb;
        if (t == 0) {
            // Pseudo-peripheral pair: farthest from an arbitrary start,
            // then farthest from that.
            pa = bfs_farthest(g, ws, verts[0]);
            pb = bfs_farthest(g, ws, pa);
            if (pa == pb) pb = verts[pa == verts[0] ? total - 1 : 0];
        } else {
            size_t i = size_t(rng_below(rng, total));
            size_t j = (i + 1 + size_t(rng_below(rng, total - 1))) % total;
            pa = verts[i];
            pb = verts[j];
        }
        Candidate cand = attempt(g, verts, beta, refine_passes, ws, pa, pb);
        if (cand.better_than(best)) best = std::move(cand);
    }

    if (!best.valid) return chunk_fallback(verts, beta);
    Separator sep;
    sep.cut = std::move(best.cut);
    sep.side_a = std::move(best.side_a);
    sep.side_b = std::move(best.side_b);
    return sep;
}

}  // namespace stl
