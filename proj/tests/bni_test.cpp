#include <doctest.h>

#include "dcolor/bni.hpp"
#include "dcolor/oracle.hpp"

#include <algorithm>

using namespace dcolor;

TEST_CASE("per-class neighborhood bounds") {
    // Clique with two buckets: every class inside a neighborhood stays within
    // theta * (max defect + 1).
    Graph k6 = make_complete(6);
    DefectiveColoring d;
    d.q = 2;
    d.lambda = Rat(1, 2);
    d.bucket = {0, 1, 0, 1, 0, 1};
    PerClassBoundReport rep = per_class_neighborhood_bound(k6, 1, d, Rat(1, 2));
    CHECK(rep.theta_dplus1_ok);

    // Star centers see all leaves as one independent set; the bound is loose
    // but the report stays a report.
    Graph star = make_star(6);
    DefectiveColoring ds;
    ds.q = 2;
    ds.lambda = Rat(1, 2);
    ds.bucket = {0, 1, 1, 1, 1, 1};
    PerClassBoundReport rs = per_class_neighborhood_bound(star, 5, ds, Rat(1, 2));
    CHECK(rs.theta_dplus1_ok);
}

TEST_CASE("phase schedule halves to one") {
    PhaseSchedule s = PhaseSchedule::make(20, 4);
    CHECK(s.deltas.front() == 20);
    CHECK(s.deltas.back() == 1);
    for (size_t i = 1; i < s.deltas.size(); ++i) CHECK(s.deltas[i] == (s.deltas[i - 1] + 1) / 2);
    CHECK(static_cast<int>(s.deltas.size()) <= ceil_log2(20) + 2);
}

TEST_CASE("weak reduction: low degrees may all stay unassigned") {
    Graph p3 = make_path(3);
    ListAssignment lists = make_full_lists(p3, 0, 8);
    WeakReductionOutcome out = weak_reduction(p3, 2, lists, Rat(2, 1));
    Rat D(2 * 2 * 2, 1);  // 2 * theta * eta
    CHECK(oracle::verify_weak_reduction(p3, lists, out, Rat(2, 1), Rat(6, 1), D).ok);
}

TEST_CASE("weak reduction: K6 assigns every node") {
    Graph k6 = make_complete(6);
    ListAssignment lists = make_full_lists(k6, 0, 12);
    WeakReductionOutcome out = weak_reduction(k6, 1, lists, Rat(2, 1));
    CHECK(out.p == 2);
    for (NodeId v = 0; v < 6; ++v) CHECK(out.subspace_index[v] >= 0);
    CHECK(oracle::verify_weak_reduction(k6, lists, out, Rat(2, 1), Rat(3, 1), Rat(4, 1)).ok);
    // Injecting an unassigned high-degree node must fail the check.
    WeakReductionOutcome bad = out;
    bad.subspace_index[0] = -1;
    CHECK_FALSE(oracle::verify_weak_reduction(k6, lists, bad, Rat(2, 1), Rat(3, 1), Rat(4, 1)).ok);
}

TEST_CASE("weak reduction: line graph instance") {
    Graph g = make_gnp(60, 0.1, 6);
    REQUIRE(g.edge_count() > 0);
    Graph lg = line_graph(g).line_graph;
    ListAssignment lists = make_full_lists(lg, 0, 64);
    WeakReductionOutcome out = weak_reduction(lg, 2, lists, Rat(4, 1));
    CHECK(oracle::verify_weak_reduction(lg, lists, out, Rat(4, 1), Rat(6, 1), Rat(16, 1)).ok);
    CHECK(out.gate.relative_ok);
    // Post-hoc phase bound: |S(v)| <= theta * (delta_phase + deg/p).
    for (NodeId v = 0; v < lg.n(); ++v) {
        if (out.subspace_index[v] < 0) continue;
        long long same = out.new_degree[v];
        long long delta_phi = out.schedule.deltas[out.assign_phase[v]];
        CHECK(same * out.p <= 2 * (delta_phi * out.p + lg.degree(v)));
    }
}

TEST_CASE("bni recursive: base case honors the plain guarantee") {
    Graph g = make_gnp(25, 0.2, 9);
    std::vector<long long> sizes(g.n());
    for (NodeId v = 0; v < g.n(); ++v) sizes[v] = g.degree(v) + 1;
    ListAssignment lists = make_random_lists(g, sizes, 0, 30, 31);
    BniRecursiveResult r = bni_recursive_list_color(g, 2, lists, 1);
    CHECK(r.coloring.total());  // every list beats the degree
    CHECK(oracle::verify_proper(g, r.coloring).ok);
    CHECK(oracle::verify_list_respecting(lists, r.coloring).ok);
}

TEST_CASE("bni recursive: K6 with oversized lists at r=3") {
    Graph k6 = make_complete(6);
    ListAssignment lists = make_random_lists(k6, std::vector<long long>(6, 46), 0, 64, 17);
    BniRecursiveResult r = bni_recursive_list_color(k6, 1, lists, 3);
    CHECK(r.coloring.total());
    CHECK(oracle::verify_proper(k6, r.coloring).ok);
    CHECK(oracle::verify_list_respecting(lists, r.coloring).ok);
}

TEST_CASE("bni recursive: interval graph guarantee set") {
    Graph g = make_interval(40, 3);
    long long theta = oracle::neighborhood_independence(g, 40);
    int r = std::max<int>(1, static_cast<int>(ceil_root(ceil_log2(std::max(g.max_degree(), 2)), 2)));
    long long factor = 1;
    for (int i = 1; i < r; ++i) factor *= 3 * theta;
    std::vector<long long> sizes(g.n());
    long long maxneed = 2;
    for (NodeId v = 0; v < g.n(); ++v) {
        sizes[v] = factor * g.degree(v) + 1;
        maxneed = std::max(maxneed, sizes[v]);
    }
    ListAssignment lists = make_random_lists(g, sizes, 0, 2 * maxneed, 7);
    BniRecursiveResult res = bni_recursive_list_color(g, theta, lists, r);
    CHECK(res.coloring.total());
    CHECK(oracle::verify_proper(g, res.coloring).ok);
    CHECK(oracle::verify_list_respecting(lists, res.coloring).ok);
}

TEST_CASE("bni deg+1: clique permutation") {
    Graph k5 = make_complete(5);
    ListAssignment lists;
    lists.space_lo = 1;
    lists.space_hi = 6;
    lists.lists.assign(5, {1, 2, 3, 4, 5});
    TotalColoringResult r = bni_deg_plus_one(k5, 1, lists);
    CHECK(r.coloring.total());
    std::vector<Color> sorted = r.coloring.value;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<Color>{1, 2, 3, 4, 5});
}

TEST_CASE("bni deg+1: line graph of a path") {
    Graph p4 = make_path(4);
    Graph lg = line_graph(p4).line_graph;  // path with 3 nodes
    std::vector<long long> sizes(lg.n());
    for (NodeId v = 0; v < lg.n(); ++v) sizes[v] = lg.degree(v) + 1;
    ListAssignment lists = make_random_lists(lg, sizes, 0, 8, 2);
    TotalColoringResult r = bni_deg_plus_one(lg, 2, lists);
    CHECK(r.coloring.total());
    CHECK(oracle::verify_proper(lg, r.coloring).ok);
}

TEST_CASE("edge coloring: path and star") {
    Graph p3 = make_path(3);
    EdgeColoringResult r = edge_list_color(p3, {{1, 2}, {1, 2}});
    REQUIRE(r.edge_color.size() == 2);
    CHECK(r.edge_color[0] != r.edge_color[1]);
    CHECK(((r.edge_color[0] == 1 || r.edge_color[0] == 2)));

    Graph star = make_star(5);
    std::vector<std::vector<Color>> lists(4, {1, 2, 3, 4});
    EdgeColoringResult rs = edge_list_color(star, lists);
    std::vector<Color> sorted = rs.edge_color;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<Color>{1, 2, 3, 4});
}

TEST_CASE("edge coloring: default lists on gnp") {
    Graph g = make_gnp(30, 0.15, 9);
    REQUIRE(g.edge_count() > 0);
    EdgeColoringResult r = edge_list_color(g, default_edge_lists(g));
    long long top = 2 * g.max_degree() - 1;
    for (long long k = 0; k < g.edge_count(); ++k) {
        CHECK(r.edge_color[k] >= 1);
        CHECK(r.edge_color[k] <= top);
    }
    // No two edges sharing an endpoint share a color.
    for (NodeId v = 0; v < g.n(); ++v) {
        std::vector<Color> seen;
        for (NodeId u : g.neighbors(v)) seen.push_back(r.edge_color[g.edge_index(v, u)]);
        std::sort(seen.begin(), seen.end());
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    }
}

TEST_CASE("edge coloring: undersized list is rejected") {
    Graph p3 = make_path(3);
    CHECK_THROWS_AS(edge_list_color(p3, {{1}, {1, 2}}), PreconditionError);
}
