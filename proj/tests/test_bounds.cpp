#include <doctest.h>

#include <cmath>

#include "subdp/bounds.hpp"
#include "subdp/exact.hpp"
#include "subdp/subgraph.hpp"
#include "test_util.hpp"

using namespace subdp;
using namespace testutil;

TEST_CASE("degree upper bound") {
    CHECK(degree_upper_bound(cube3()) == 4);
    CHECK(degree_upper_bound(petersen()) == 4);
    CHECK(degree_upper_bound(arc_free(1)) == 1);
}

TEST_CASE("k-core upper bound") {
    CHECK(kcore_upper_bound(complete(5)) == 5);
    CHECK(kcore_upper_bound(petersen()) == 4);
    // strictly better than the degree bound here: node 0 has out-degree 4
    DirectedGraph g = k4_plus_pendant();
    CHECK(kcore_upper_bound(g) == 4);
    CHECK(degree_upper_bound(g) == 5);
}

TEST_CASE("lll lower bound") {
    DirectedGraph p = petersen();
    // (3+1)/(1+ln6+3 ln6) ~ 4/8.17: floors to 0, clamped
    CHECK(lll_lower_bound(p, full_selection(p)) == 1);

    DirectedGraph one = arc_free(1);
    CHECK(lll_lower_bound(one, full_selection(one)) == 1);

    // K_200: floor(200 / (1+ln6+3 ln398)) = 9
    CHECK(lll_color_count(199, 398) == 9);
}

TEST_CASE("turan clique lower bound") {
    CHECK(turan_clique_lower_bound(complete(6)) == 6);
    CHECK(turan_clique_lower_bound(arc_free(5)) == 1);
    CHECK(turan_clique_lower_bound(bidirectional_cycle(4)) == 2);
    CHECK_THROWS_AS(turan_clique_lower_bound(directed_cycle(3)), input_error);
}

TEST_CASE("turan bound never shrinks when edges are added") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        DirectedGraph g = random_bidirectional(9, 300, seed);
        int before = turan_clique_lower_bound(g);
        auto arcs = g.arcs();
        std::mt19937_64 rng(seed * 31);
        for (int tries = 0; tries < 20; ++tries) {
            int u = static_cast<int>(rng() % 9), v = static_cast<int>(rng() % 9);
            if (u != v && !g.has_arc(u, v)) {
                arcs.emplace_back(u, v);
                arcs.emplace_back(v, u);
                break;
            }
        }
        DirectedGraph g2(9, arcs);
        CHECK(turan_clique_lower_bound(g2) >= before);
    }
}

TEST_CASE("capacity bracket composition") {
    CapacityBracket p = capacity_bracket(petersen());
    CHECK(p.lower >= 1);
    CHECK(p.upper == 4);

    CapacityBracket k6 = capacity_bracket(complete(6));
    CHECK(k6.lower == 6);
    CHECK(k6.upper == 6);
    CHECK(k6.lower_witness == LowerWitness::Turan);

    CapacityBracket one = capacity_bracket(arc_free(1));
    CHECK(one.lower == 1);
    CHECK(one.upper == 1);
}

TEST_CASE("k-core bound never exceeds the degree bound") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        DirectedGraph g = random_digraph(11, 250, seed);
        CHECK(kcore_upper_bound(g) <= degree_upper_bound(g));
    }
}

TEST_CASE("bracket sandwiches the exact value on small graphs") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        DirectedGraph g =
            seed % 2 ? random_digraph(6, 350, seed) : random_bidirectional(6, 350, seed);
        CapacityBracket b = capacity_bracket(g);
        int exact = exact_capacity(g).value;
        CHECK(b.lower <= exact);
        CHECK(exact <= b.upper);
    }
}

TEST_CASE("peel terminal beats the closed-form degree floor") {
    // terminal min degree >= max(delta_out(G), eps_out(G)/2), so the bound
    // evaluated on the terminal dominates the same formula on that floor
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        DirectedGraph g = random_bidirectional(16, 250 + 40 * (seed % 5), seed);
        if (g.arc_count() == 0)
            continue;
        DegreeStats gs = degree_stats(g);
        int delta = gs.max_out + gs.max_in;
        double floor_arg =
            std::max(static_cast<double>(gs.min_out), to_double(avg_out_degree(g)) / 2.0);
        int via_floor =
            std::max(1, static_cast<int>(std::floor(
                            (floor_arg + 1) /
                            (1.0 + std::log(6.0) + 3.0 * std::log(static_cast<double>(delta))))));
        PeelTrace t = peel_half_average(g);
        CHECK(lll_lower_bound(g, t.terminal) >= via_floor);
    }
}
