#pragma once

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stl/graph.hpp"

namespace stl::cli {

// Raised when a requested check fails; main maps it to exit code 1.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void add_build(CLI::App& app);
void add_query(CLI::App& app);
void add_update(CLI::App& app);
void add_bench(CLI::App& app);
void add_verify(CLI::App& app);
void add_gen_workload(CLI::App& app);

inline uint64_t now_ns() {
    using namespace std::chrono;
    return uint64_t(
        duration_cast<nanoseconds>(steady_clock::now().time_since_epoch())
            .count());
}

inline uint64_t now_us() { return now_ns() / 1000; }

inline std::string fmt_dist(distance_t d) {
    return d >= kInfinity ? "inf" : std::to_string(d);
}

inline Graph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    try {
        return parse_dimacs(f);
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

// Update files hold one event per line: "u <a> <b> <w>" or "<a> <b> <w>"
// with 1-based endpoints. Blank lines and 'c' comments are skipped.
inline std::vector<UpdateEvent> read_updates(const std::string& path,
                                             size_t num_vertices) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::vector<UpdateEvent> events;
    std::string line;
    size_t lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c") continue;
        uint64_t a, b, w;
        if (first == "u") {
            if (!(ls >> a >> b >> w))
                throw ParseError(lineno, "expected 'u <a> <b> <w>'");
        } else {
            std::istringstream retry(line);
            if (!(retry >> a >> b >> w))
                throw ParseError(lineno, "expected '<a> <b> <w>'");
        }
        if (!a || a > num_vertices || !b || b > num_vertices)
            throw ParseError(lineno, "vertex id out of range");
        if (a == b) throw ParseError(lineno, "self loop");
        if (w > UINT32_MAX) throw ParseError(lineno, "weight out of range");
        events.push_back({vertex_t(a - 1), vertex_t(b - 1), weight_t(w)});
    }
    return events;
}

}  // namespace stl::cli
