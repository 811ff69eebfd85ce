#include <set>

#include "doctest.h"
#include "stl/label_search.hpp"
#include "stl/labelling.hpp"
#include "stl/pareto_search.hpp"
#include "testutil.hpp"

using namespace stl;
using namespace testutil;

namespace {

// Changed label entries at one position, as 1-based vertex ids.
std::set<int> changed_at(const Labelling& a, const Labelling& b, uint32_t pos) {
    std::set<int> out;
    for (vertex_t v = 0; v < a.num_vertices(); ++v)
        if (a.label(v).size() > pos && a.entry(v, pos) != b.entry(v, pos))
            out.insert(int(v) + 1);
    return out;
}

std::vector<distance_t> label_of(const Labelling& l, vertex_t v) {
    return {l.label(v).begin(), l.label(v).end()};
}

}  // namespace

TEST_CASE("fixture labels match the hand-computed distances") {
    Demo16 d = make_demo16();
    auto v = Demo16::v;
    Labelling lab = build_labels(d.g, d.h);

    using D = std::vector<distance_t>;
    CHECK(label_of(lab, v(9)) == D{4, 9, 3, 10, 0});
    CHECK(label_of(lab, v(1)) == D{8, 5, 7, 6, 4, 12, 3, 0});
    CHECK(label_of(lab, v(11)) == D{14, 3, 14, 3, 6, 0});
    CHECK(label_of(lab, v(16)) == D{16, 9, 20, 21, 12, 3, 0});
    CHECK(label_of(lab, v(8)) == D{9, 6, 8, 7, 5, 13, 4, 1, 0});
    CHECK(label_of(lab, v(12)) == D{11, 2, 10, 3, 7, 9, 0});
    CHECK(label_of(lab, v(14)) == D{6, 11, 5, 12, 2, 0});
    CHECK(label_of(lab, v(5)) == D{7, 12, 0});
    CHECK(label_of(lab, v(3)) == D{7, 12, 6, 13, 3, 0});
    CHECK(label_of(lab, v(7)) == D{9, 14, 8, 15, 5, 2, 0});
    CHECK(label_of(lab, v(10)) == D{14, 5, 13, 0});
    CHECK(label_of(lab, v(4)) == D{11, 0});
    CHECK(label_of(lab, v(6)) == D{14, 7, 8, 9, 0});
    CHECK(lab.entry(v(13), 0) == 9);
    CHECK(lab.entry(v(13), 1) == 2);

    CHECK(lab == rebuild_reference(d.g, d.h));

    // The label prefix shared by 11 and 16 meets at position 1, vertex 4:
    // 3 + 9 over the common cut.
    CHECK(query_distance(d.h, lab, v(11), v(16)) == 12);

    for (vertex_t s = 0; s < 16; ++s) {
        auto truth = bellman_ford(d.g, s);
        for (vertex_t t = 0; t < 16; ++t)
            CHECK(query_distance(d.h, lab, s, t) == truth[t]);
    }
}

TEST_CASE("fixture decrease: seeds, repaired labels and counters") {
    Demo16 d = make_demo16();
    auto v = Demo16::v;
    Labelling lab = build_labels(d.g, d.h);
    Labelling before = lab;

    AppliedUpdate up = apply_update(d.g, {v(1), v(9), 1});
    REQUIRE(up.kind == UpdateKind::decrease);

    // One seed per shared label position: whichever endpoint the shortened
    // edge now undercuts.
    auto seeds = decrease_seeds(d.h, lab, up);
    std::vector<LabelSearchSeed> want = {{0, 5, v(1)},
                                         {1, 6, v(9)},
                                         {2, 4, v(1)},
                                         {3, 7, v(9)},
                                         {4, 1, v(1)}};
    CHECK(seeds == want);

    LsWorkspace ws(16);
    UpdateStats st = ls_decrease(d.g, d.h, lab, {&up, 1}, ws);
    Labelling ref = rebuild_reference(d.g, d.h);
    CAPTURE(first_label_diff(lab, ref));
    REQUIRE(lab == ref);

    CHECK(changed_at(before, lab, 0) ==
          std::set<int>{1, 4, 8, 10, 11, 12});
    CHECK(changed_at(before, lab, 2) == std::set<int>{1, 8, 10, 11, 12});
    CHECK(changed_vertices(before, lab) ==
          std::set<int>{1, 3, 4, 5, 7, 8, 9, 10, 11, 12, 14});

    CHECK(st.seeds == 5);
    CHECK(st.l_delta == 23);
    CHECK(st.v_delta == 11);
    CHECK(st.writes == 23);
    CHECK(st.repair_uncovered == 0);

    CHECK(query_distance(d.h, lab, v(2), v(11)) == 13);
    // 5-9-1-12-4-11 through the cheapened edge: 3+1+3+2+3.
    CHECK(query_distance(d.h, lab, v(5), v(11)) == 12);

    // Spot check of the restriction semantics after the update: the distance
    // from 9 to 11 depends on which predecessor's territory it is measured
    // in, since the best route leaves the smaller subgraphs.
    auto restricted = [&](vertex_t r) {
        return dijkstra_restricted(
            d.g, v(9), [&](vertex_t x) { return d.h.precedes(r, x); })[v(11)];
    };
    CHECK(restricted(v(2)) == 9);
    CHECK(restricted(v(4)) == 9);
    CHECK(restricted(v(5)) == 10);
    CHECK(restricted(v(10)) == 10);
}

TEST_CASE("fixture increase: seeds, detection and repaired labels") {
    Demo16 d = make_demo16();
    auto v = Demo16::v;
    Labelling lab = build_labels(d.g, d.h);
    Labelling before = lab;

    AppliedUpdate up = apply_update(d.g, {v(1), v(9), 7});
    REQUIRE(up.kind == UpdateKind::increase);

    // One seed per shared position whose entry was supported across the
    // edge at the old weight, carrying the endpoint's old entry value.
    auto seeds = increase_seeds(d.h, lab, up);
    std::vector<LabelSearchSeed> want = {{0, 8, v(1)},
                                         {1, 9, v(9)},
                                         {2, 7, v(1)},
                                         {3, 10, v(9)},
                                         {4, 4, v(1)}};
    CHECK(seeds == want);

    LsWorkspace ws(16);
    UpdateStats st = ls_increase(d.g, d.h, lab, {&up, 1}, ws);
    Labelling ref = rebuild_reference(d.g, d.h);
    CAPTURE(first_label_diff(lab, ref));
    REQUIRE(lab == ref);
    CHECK(st.repair_uncovered == 0);
    CHECK(st.l_delta == 18);
    CHECK(st.v_delta == 8);

    CHECK(changed_at(before, lab, 0) == std::set<int>{1, 8, 10, 12});
    CHECK(changed_at(before, lab, 2) == std::set<int>{1, 8, 10, 12});
    // 4 and 11 route around the slower edge and keep every entry.
    CHECK(label_of(lab, v(4)) == label_of(before, v(4)));
    CHECK(label_of(lab, v(11)) == label_of(before, v(11)));

    CHECK(lab.entry(v(1), 0) == 11);
    CHECK(lab.entry(v(8), 0) == 12);
    CHECK(lab.entry(v(12), 0) == 13);
    CHECK(lab.entry(v(10), 0) == 16);

    CHECK(query_distance(d.h, lab, v(2), v(10)) == 16);
}

TEST_CASE("fixture decrease via interval search leaves the same labels") {
    Demo16 d = make_demo16();
    auto v = Demo16::v;
    Labelling lab = build_labels(d.g, d.h);
    Labelling before = lab;

    AppliedUpdate up = apply_update(d.g, {v(1), v(9), 1});
    ParetoWorkspace ws(16);
    std::vector<ParetoTraceEntry> trace;
    UpdateStats st = pareto_decrease(d.g, d.h, lab, up, ws, &trace);

    Labelling ref = rebuild_reference(d.g, d.h);
    CAPTURE(first_label_diff(lab, ref));
    REQUIRE(lab == ref);

    CHECK(st.seeds == 2);
    CHECK(st.l_delta == 23);
    CHECK(st.v_delta == 11);

    // Vertex 11 is processed exactly twice: once for position 0 alone, then
    // for positions 1..2 once 0 is already settled. The second entry only
    // improves position 2.
    std::vector<ParetoTraceEntry> at11;
    for (const auto& e : trace)
        if (e.v == v(11)) at11.push_back(e);
    std::vector<ParetoTraceEntry> want = {{v(11), 9, 0, 0, false},
                                          {v(11), 10, 1, 2, false}};
    CHECK(at11 == want);
}

TEST_CASE("fixture increase via interval search leaves the same labels") {
    Demo16 d = make_demo16();
    auto v = Demo16::v;
    Labelling lab = build_labels(d.g, d.h);

    AppliedUpdate up = apply_update(d.g, {v(1), v(9), 7});
    ParetoWorkspace ws(16);
    UpdateStats st = pareto_increase(d.g, d.h, lab, up, ws);

    Labelling ref = rebuild_reference(d.g, d.h);
    CAPTURE(first_label_diff(lab, ref));
    REQUIRE(lab == ref);
    CHECK(st.repair_uncovered == 0);
    CHECK(st.l_delta == 18);
    CHECK(st.v_delta == 8);
    // Detection marks the truly changed entries plus the two entries of
    // vertex 14 whose old value the edge merely tied.
    CHECK(st.writes == 20);

    CHECK(query_distance(d.h, lab, v(2), v(10)) == 16);
}

TEST_CASE("fixture updates round-trip back to the original labels") {
    Demo16 d = make_demo16();
    auto v = Demo16::v;
    Labelling lab = build_labels(d.g, d.h);
    Labelling original = lab;
    LsWorkspace lws(16);
    ParetoWorkspace pws(16);

    AppliedUpdate up = apply_update(d.g, {v(1), v(9), 7});
    ls_increase(d.g, d.h, lab, {&up, 1}, lws);
    up = apply_update(d.g, {v(1), v(9), 4});
    ls_decrease(d.g, d.h, lab, {&up, 1}, lws);
    CAPTURE(first_label_diff(lab, original));
    CHECK(lab == original);

    up = apply_update(d.g, {v(1), v(9), 1});
    pareto_decrease(d.g, d.h, lab, up, pws);
    up = apply_update(d.g, {v(1), v(9), 4});
    pareto_increase(d.g, d.h, lab, up, pws);
    CAPTURE(first_label_diff(lab, original));
    CHECK(lab == original);
}
