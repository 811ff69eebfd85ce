#pragma once

#include <cstdint>
#include <sstream>
#include <string>

namespace stl {

// Counters for one maintenance operation, printed as a single key=value
// line so runs can be grepped and diffed.
struct UpdateStats {
    const char* algo = "ls";         // "ls" or "pareto"
    const char* direction = "noop";  // "decrease", "increase" or "noop"
    uint64_t seeds = 0;          // initial queue entries of the main search
    uint64_t pops = 0;           // queue pops of the main search
    uint64_t writes = 0;         // label writes of the main search
    uint64_t l_delta = 0;        // entries whose final value changed
    uint64_t v_delta = 0;        // vertices with at least one changed entry
    uint64_t interval_scan = 0;  // label positions examined (interval form)
    uint64_t repair_seeds = 0;
    uint64_t repair_pops = 0;
    uint64_t repair_writes = 0;
    uint64_t repair_uncovered = 0;  // affected entries left infinite
    uint64_t wall_us = 0;

    std::string line() const {
        std::ostringstream o;
        o << "update algo=" << algo << " direction=" << direction
          << " seeds=" << seeds << " pops=" << pops << " writes=" << writes
          << " l_delta=" << l_delta << " v_delta=" << v_delta
          << " interval_scan=" << interval_scan
          << " repair_seeds=" << repair_seeds
          << " repair_pops=" << repair_pops
          << " repair_writes=" << repair_writes
          << " repair_uncovered=" << repair_uncovered
          << " wall_us=" << wall_us;
        return o.str();
    }

    // Sums counters; algo and direction keep the left side's values.
    void add(const UpdateStats& o) {
        seeds += o.seeds;
        pops += o.pops;
        writes += o.writes;
        l_delta += o.l_delta;
        v_delta += o.v_delta;
        interval_scan += o.interval_scan;
        repair_seeds += o.repair_seeds;
        repair_pops += o.repair_pops;
        repair_writes += o.repair_writes;
        repair_uncovered += o.repair_uncovered;
        wall_us += o.wall_us;
    }
};

// Side-by-side measurement of one batch of same-direction updates.
struct BatchStats {
    uint64_t index = 0;
    const char* direction = "noop";
    uint64_t size = 0;
    uint64_t pops_ls = 0;
    uint64_t pops_pareto = 0;
    uint64_t wall_ls_us = 0;
    uint64_t wall_pareto_us = 0;

    std::string line() const {
        std::ostringstream o;
        o << "batch index=" << index << " direction=" << direction
          << " size=" << size << " pops_ls=" << pops_ls
          << " pops_pareto=" << pops_pareto << " wall_ls_us=" << wall_ls_us
          << " wall_pareto_us=" << wall_pareto_us;
        return o.str();
    }
};

}  // namespace stl
