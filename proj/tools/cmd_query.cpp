#include <algorithm>
#include <iostream>
#include <memory>
#include <random>

#include "commands.hpp"
#include "stl/index_io.hpp"
#include "stl/labelling.hpp"
#include "stl/partition.hpp"

namespace stl::cli {
namespace {

struct QueryOpts {
    std::string index_path;
    std::vector<uint64_t> pair;  // optional positional "s t", 1-based
    std::string pairs_path;
    uint64_t random_count = 0;
    uint64_t seed = 1;
};

// Pair files hold one "s t" per line, 1-based; an optional leading 'q' tag
// and 'c' comment lines are accepted so workload query sections paste in.
std::vector<std::pair<uint64_t, uint64_t>> read_pairs(
    const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::vector<std::pair<uint64_t, uint64_t>> pairs;
    std::string line;
    size_t lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c") continue;
        uint64_t s, t;
        if (first == "q") {
            if (!(ls >> s >> t))
                throw ParseError(lineno, "expected 'q <s> <t>'");
        } else {
            std::istringstream retry(line);
            if (!(retry >> s >> t))
                throw ParseError(lineno, "expected '<s> <t>'");
        }
        pairs.push_back({s, t});
    }
    return pairs;
}

void run(const QueryOpts& o) {
    if (o.pair.size() == 1)
        throw CLI::ValidationError("query", "need both s and t");
    if (o.pair.empty() && o.pairs_path.empty() && o.random_count == 0)
        throw CLI::ValidationError("query",
                                   "need 's t', --pairs or --random");
    Index idx = load_index(o.index_path);
    size_t n = idx.graph.num_vertices();

    std::vector<std::pair<uint64_t, uint64_t>> pairs;
    if (o.pair.size() == 2) pairs.push_back({o.pair[0], o.pair[1]});
    if (!o.pairs_path.empty()) {
        auto more = read_pairs(o.pairs_path);
        pairs.insert(pairs.end(), more.begin(), more.end());
    }
    if (o.random_count) {
        std::mt19937_64 rng(o.seed);
        for (uint64_t i = 0; i < o.random_count; ++i)
            pairs.push_back({rng_below(rng, n) + 1, rng_below(rng, n) + 1});
    }

    size_t bad = 0;
    std::vector<uint64_t> lat_ns;
    lat_ns.reserve(pairs.size());
    for (size_t k = 0; k < pairs.size(); ++k) {
        auto [s, t] = pairs[k];
        if (!s || s > n || !t || t > n) {
            std::cout << "err\n";
            std::cerr << "query " << k + 1 << ": vertex out of range\n";
            ++bad;
            continue;
        }
        uint64_t q0 = now_ns();
        distance_t d = query_distance(idx.hierarchy, idx.labelling,
                                      vertex_t(s - 1), vertex_t(t - 1));
        lat_ns.push_back(now_ns() - q0);
        std::cout << fmt_dist(d) << "\n";
    }

    if (!lat_ns.empty()) {
        uint64_t total = 0;
        for (uint64_t v : lat_ns) total += v;
        std::sort(lat_ns.begin(), lat_ns.end());
        auto pct = [&](double p) {
            return double(lat_ns[size_t(p * double(lat_ns.size() - 1))]) /
                   1000.0;
        };
        std::cerr << "query pairs=" << lat_ns.size()
                  << " mean_us=" << double(total) / double(lat_ns.size()) / 1000.0
                  << " p50_us=" << pct(0.50) << " p99_us=" << pct(0.99)
                  << "\n";
    }
    if (bad)
        throw VerificationFailure(std::to_string(bad) +
                                  " queries referenced out-of-range vertices");
}

}  // namespace

void add_query(CLI::App& app) {
    auto o = std::make_shared<QueryOpts>();
    CLI::App* sub =
        app.add_subcommand("query", "answer distance queries from an index");
    sub->add_option("index", o->index_path, "index file")->required();
    sub->add_option("pair", o->pair, "source and target vertex, 1-based")
        ->expected(0, 2);
    sub->add_option("--pairs", o->pairs_path, "file with one 's t' per line");
    sub->add_option("--random", o->random_count, "sample N uniform pairs");
    sub->add_option("--seed", o->seed, "RNG seed for --random");
    sub->callback([o] { run(*o); });
}

}  // namespace stl::cli
