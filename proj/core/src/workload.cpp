#include "stl/workload.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <unordered_set>

#include "stl/partition.hpp"

namespace stl {

namespace {

std::vector<std::pair<vertex_t, vertex_t>> edge_list(const Graph& g) {
    std::vector<std::pair<vertex_t, vertex_t>> edges;
    edges.reserve(g.num_edges());
    for (vertex_t u = 0; u < g.num_vertices(); ++u)
        for (const Neighbor& nb : g.neighbors(u))
            if (u < nb.to) edges.push_back({u, nb.to});
    return edges;
}

}  // namespace

Workload generate_workload(const Graph& g, const WorkloadConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    Workload w;
    w.factor = cfg.factor;
    w.seed = cfg.seed;

    auto edges = edge_list(g);
    size_t per_batch = std::min<size_t>(cfg.batch_size, edges.size());
    for (uint32_t b = 0; b < cfg.batches; ++b) {
        std::vector<UpdateEvent> inc, res;
        std::unordered_set<uint64_t> used;
        while (inc.size() < per_batch) {
            auto [u, v] = edges[rng_below(rng, edges.size())];
            uint64_t key = (uint64_t(u) << 32) | v;
            if (!used.insert(key).second) continue;
            weight_t old = g.edge_weight(u, v);
            // factor 1.0 deliberately produces no-op events; the update
            // machinery treats them as zero work.
            uint64_t grown = uint64_t(std::llround(cfg.factor * double(old)));
            grown = std::min<uint64_t>(grown, UINT32_MAX);
            inc.push_back({u, v, weight_t(grown)});
            res.push_back({u, v, old});
        }
        w.increases.push_back(std::move(inc));
        w.restores.push_back(std::move(res));
    }

    // Farthest distance reachable from a handful of sampled sources sets
    // the top of the distance bands.
    size_t n = g.num_vertices();
    distance_t lmax = 0;
    for (uint32_t s = 0; s < cfg.sample_sources; ++s) {
        vertex_t src = vertex_t(rng_below(rng, n));
        auto dist = dijkstra_all(g, src);
        for (distance_t d : dist)
            if (d < kInfinity && d > lmax) lmax = d;
    }
    if (lmax <= cfg.min_distance) lmax = cfg.min_distance + 1;

    double x = std::pow(double(lmax) / double(cfg.min_distance),
                        1.0 / double(cfg.query_sets));
    w.query_sets.resize(cfg.query_sets);
    for (uint32_t i = 0; i < cfg.query_sets; ++i) {
        double lo = double(cfg.min_distance) * std::pow(x, double(i));
        double hi = double(cfg.min_distance) * std::pow(x, double(i + 1));
        w.query_sets[i].d_lo = distance_t(std::llround(lo));
        w.query_sets[i].d_hi =
            i + 1 == cfg.query_sets ? lmax + 1 : distance_t(std::llround(hi));
    }

    // Draw sources and harvest targets per band. A per-source cap keeps one
    // well-placed source from filling a band with near-identical pairs.
    uint32_t cap = std::max<uint32_t>(1, cfg.queries_per_set / 64);
    uint64_t attempts = 0, max_attempts = 20000;
    auto full = [&] {
        for (auto& qs : w.query_sets)
            if (qs.pairs.size() < cfg.queries_per_set) return false;
        return true;
    };
    while (!full() && attempts++ < max_attempts) {
        vertex_t src = vertex_t(rng_below(rng, n));
        auto dist = dijkstra_all(g, src);
        std::vector<uint32_t> taken(cfg.query_sets, 0);
        for (vertex_t t = 0; t < n; ++t) {
            if (t == src || dist[t] >= kInfinity) continue;
            for (uint32_t i = 0; i < cfg.query_sets; ++i) {
                auto& qs = w.query_sets[i];
                if (dist[t] < qs.d_lo || dist[t] >= qs.d_hi) continue;
                if (taken[i] < cap && qs.pairs.size() < cfg.queries_per_set) {
                    qs.pairs.push_back({src, t});
                    ++taken[i];
                }
                break;
            }
        }
    }
    return w;
}

void save_workload(const std::string& path, const Workload& w) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << std::setprecision(17);
    f << "wl 1 " << w.increases.size() << " " << w.factor << " " << w.seed
      << "\n";
    for (size_t b = 0; b < w.increases.size(); ++b) {
        f << "batch " << b << "\n";
        for (size_t k = 0; k < w.increases[b].size(); ++k) {
            const UpdateEvent& e = w.increases[b][k];
            f << "u " << (e.u + 1) << " " << (e.v + 1) << " " << e.new_weight
              << " " << w.restores[b][k].new_weight << "\n";
        }
    }
    for (size_t i = 0; i < w.query_sets.size(); ++i) {
        const QuerySet& qs = w.query_sets[i];
        f << "qset " << i << " " << qs.d_lo << " " << qs.d_hi << "\n";
        for (auto [s, t] : qs.pairs)
            f << "q " << (s + 1) << " " << (t + 1) << "\n";
    }
    if (!f) throw std::runtime_error("write failed: " + path);
}

Workload load_workload(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    Workload w;
    std::string line;
    size_t lineno = 0;
    auto fail = [&](const std::string& what) { throw ParseError(lineno, what); };
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "wl") {
            int version;
            size_t batches;
            if (!(ls >> version >> batches >> w.factor >> w.seed) ||
                version != 1)
                fail("bad header");
        } else if (tag == "batch") {
            w.increases.emplace_back();
            w.restores.emplace_back();
        } else if (tag == "u") {
            uint64_t u, v, nw, ow;
            if (!(ls >> u >> v >> nw >> ow) || w.increases.empty() || !u ||
                !v)
                fail("bad update line");
            w.increases.back().push_back(
                {vertex_t(u - 1), vertex_t(v - 1), weight_t(nw)});
            w.restores.back().push_back(
                {vertex_t(u - 1), vertex_t(v - 1), weight_t(ow)});
        } else if (tag == "qset") {
            size_t idx;
            QuerySet qs;
            if (!(ls >> idx >> qs.d_lo >> qs.d_hi)) fail("bad qset line");
            w.query_sets.push_back(std::move(qs));
        } else if (tag == "q") {
            uint64_t s, t;
            if (!(ls >> s >> t) || w.query_sets.empty() || !s || !t)
                fail("bad query line");
            w.query_sets.back().pairs.push_back(
                {vertex_t(s - 1), vertex_t(t - 1)});
        } else {
            fail("unknown tag '" + tag + "'");
        }
    }
    return w;
}

}  // namespace stl
