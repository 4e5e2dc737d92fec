#include <doctest.h>

#include "dcolor/io.hpp"

using namespace dcolor;

TEST_CASE("edge list text round trip") {
    Graph g = make_gnp(25, 0.2, 4);
    std::string text = io::write_edge_list(g);
    Graph back = io::read_edge_list(text);
    CHECK(back.n() == g.n());
    CHECK(back.edges() == g.edges());

    CHECK_THROWS_AS(io::read_edge_list("3"), PreconditionError);
    CHECK_THROWS_AS(io::read_edge_list("3 2\n0 1\n"), PreconditionError);
}

TEST_CASE("graph json round trip") {
    for (std::uint64_t seed : {1ULL, 9ULL}) {
        Graph g = make_gnp(20, 0.25, seed);
        Graph back = io::graph_from_json(io::graph_to_json(g));
        CHECK(back.edges() == g.edges());
        CHECK(back.n() == g.n());
    }
}

TEST_CASE("instance json round trip") {
    io::Instance inst;
    inst.graph = make_ring(6);
    inst.lists = make_random_lists(inst.graph, {3, 3, 3, 3, 3, 3}, 0, 9, 5);
    inst.edge_lists.assign(inst.graph.edge_count(), {1, 2, 3});
    io::Instance back = io::instance_from_json(io::instance_to_json(inst));
    CHECK(back.graph.edges() == inst.graph.edges());
    CHECK(back.lists.lists == inst.lists.lists);
    CHECK(back.lists.space_hi == inst.lists.space_hi);
    CHECK(back.edge_lists == inst.edge_lists);
}

TEST_CASE("metrics json round trip") {
    RunMetrics m;
    m.rounds = 42;
    m.messages_sent = 17;
    m.max_payload_bits = 23;
    m.per_phase = {{"linial", 5}, {"step1.choice", 37}};
    RunMetrics back = io::metrics_from_json(io::metrics_to_json(m));
    CHECK(back.rounds == m.rounds);
    CHECK(back.messages_sent == m.messages_sent);
    CHECK(back.max_payload_bits == m.max_payload_bits);
    CHECK(back.per_phase.size() == 2);
    CHECK(back.phase_rounds("choice") == 37);
}
