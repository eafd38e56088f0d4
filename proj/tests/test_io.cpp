#include <doctest.h>

#include <string>

#include "subdp/exact.hpp"
#include "subdp/io.hpp"
#include "test_util.hpp"

using namespace subdp;
using namespace testutil;

TEST_CASE("parse digraph") {
    DirectedGraph g = parse_graph("digraph 3 3\n0 1\n1 2\n2 0\n");
    CHECK(g == directed_cycle(3));
}

TEST_CASE("parse bigraph asset equals the constructed cube") {
    CHECK(parse_graph(read_asset("q3.g")) == cube3());
    CHECK(parse_graph(read_asset("petersen.g")) == petersen());
    CHECK(parse_graph(read_asset("k5.g")) == complete(5));
}

TEST_CASE("comments and blank lines are ignored") {
    DirectedGraph g = parse_graph("# header comment\n\ndigraph 2 1 # trailing\n\n0 1\n");
    CHECK(g.arc_count() == 1);
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_fail = [](const std::string& text, const std::string& needle) {
        try {
            parse_graph(text);
            FAIL("expected a parse error");
        } catch (const input_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_fail("graph 2 1\n0 1\n", "line 1");
    expect_fail("digraph 2 1\n0 1 2\n", "line 2");
    expect_fail("digraph 2 1\n0 5\n", "line 2");
    expect_fail("digraph 2 1\n# pad\n0 0\n", "line 3");
    expect_fail("digraph 2 2\n0 1\n", "edge lines");
}

TEST_CASE("serialize/parse round trip") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        DirectedGraph g = random_digraph(9, 300, seed);
        CHECK(parse_graph(serialize_graph(g)) == g);
        DirectedGraph b = random_bidirectional(9, 300, seed);
        std::string text = serialize_graph(b);
        CHECK(text.rfind("bigraph", 0) == 0);
        CHECK(parse_graph(text) == b);
        CHECK(serialize_graph(parse_graph(text)) == text); // canonical fixed point
    }
}

TEST_CASE("dense generator: counts and determinism") {
    DirectedGraph k4 = gen_dense_bidirectional({4, 1.0, 9, 1});
    CHECK(k4 == complete(4)); // capped at the complete graph

    DirectedGraph g = gen_dense_bidirectional({100, 0.25, 5, 1});
    CHECK(g.arc_count() == 2 * 1250);
    CHECK(is_bidirectional(g));
    CHECK(g == gen_dense_bidirectional({100, 0.25, 5, 1}));
    CHECK_FALSE(g == gen_dense_bidirectional({100, 0.25, 6, 1}));

    CHECK_THROWS_AS(gen_dense_bidirectional({10, 0.0, 1, 1}), input_error);
    CHECK_THROWS_AS(gen_dense_bidirectional({10, 1.5, 1, 1}), input_error);
}

TEST_CASE("near-complete generator") {
    DirectedGraph g = gen_near_complete_bidirectional(32, 16, 3);
    CHECK(g.arc_count() == 2 * (496 - 16));
    CHECK(is_bidirectional(g));
    CHECK(g == gen_near_complete_bidirectional(32, 16, 3));
    CHECK_THROWS_AS(gen_near_complete_bidirectional(4, 7, 1), input_error);
}

TEST_CASE("codec serialization round trip") {
    DirectedGraph q3 = cube3();
    CapacityReport rep = exact_capacity(q3);
    Codec codec = Codec::build(rep.witness_subgraph, rep.witness_coloring);
    std::string text = serialize_codec(codec);
    CHECK(text.rfind("codec 8 4", 0) == 0);

    Codec back = parse_codec(text);
    CHECK(back.alphabet_size() == codec.alphabet_size());
    CHECK(back.states() == codec.states());
    for (int s : codec.states())
        for (int m = 1; m <= codec.alphabet_size(); ++m)
            CHECK(back.encode_step(s, m) == codec.encode_step(s, m));
    CHECK(serialize_codec(back) == text);
}

TEST_CASE("codec parser rejects inconsistent tables") {
    // swapping the two decode values breaks decode-of-encode
    std::string text = "codec 2 1\n0 1 1->1\n1 2 1->0\n";
    CHECK_THROWS_AS(parse_codec(text), input_error);
    CHECK_THROWS_AS(parse_codec("codec 1 1\n0 1 2->0\n"), input_error);
    CHECK_THROWS_AS(parse_codec("codec 1 1\n0 1\n"), input_error);
}

TEST_CASE("coloring serialization round trip") {
    DirectedGraph q3 = cube3();
    Coloring col = make_coloring({0, 1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 4, 3, 2, 1}, 4);
    std::string text = serialize_coloring(col);
    Coloring back = parse_coloring(q3, text);
    CHECK(back.ell == col.ell);
    CHECK(back.domain == col.domain);
    CHECK(back.colors == col.colors);

    CHECK_THROWS_AS(parse_coloring(q3, "coloring 1 2\n9 1\n"), input_error);
    CHECK_THROWS_AS(parse_coloring(q3, "coloring 1 2\n0 3\n"), input_error);
}

TEST_CASE("bench rows are reproducible") {
    auto rows = bench_asymptotics(BenchMode::Dense, {24, 32}, 0.3, 2, 1);
    auto again = bench_asymptotics(BenchMode::Dense, {24, 32}, 0.3, 2, 1);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].n == 24);
    CHECK(rows[0].mean_ell == again[0].mean_ell);
    CHECK(rows[1].stat == again[1].stat);
    CHECK(rows[0].stat > 0.0);

    auto nc = bench_asymptotics(BenchMode::NearComplete, {16}, 0.0, 2, 1);
    REQUIRE(nc.size() == 1);
    CHECK(nc[0].mean_lower > 1.0);
    CHECK(nc[0].stat == nc[0].mean_lower / 16);
}
