#include "subdp/bounds.hpp"

#include <cmath>

#include "subdp/subgraph.hpp"

namespace subdp {

const char* to_string(LowerWitness w) {
    switch (w) {
    case LowerWitness::Trivial: return "trivial";
    case LowerWitness::Lll: return "lll";
    case LowerWitness::Turan: return "turan";
    }
    return "?";
}

const char* to_string(UpperWitness w) {
    switch (w) {
    case UpperWitness::Degree: return "degree";
    case UpperWitness::KCore: return "kcore";
    }
    return "?";
}

int degree_upper_bound(const DirectedGraph& g) {
    return 1 + degree_stats(g).max_out;
}

int kcore_upper_bound(const DirectedGraph& g) {
    return 1 + max_core(g).k;
}

int lll_color_count(int min_out_degree, int delta) {
    if (delta <= 0)
        return 1; // arc-free: the formula's log is undefined, one color always works
    double denom = 1.0 + std::log(6.0) + 3.0 * std::log(static_cast<double>(delta));
    auto f = static_cast<long long>(std::floor((min_out_degree + 1) / denom));
    return f < 1 ? 1 : static_cast<int>(f);
}

int lll_lower_bound(const DirectedGraph& g, const SubgraphSelection& sel) {
    if (!(sel.parent() == g))
        throw input_error("selection does not belong to this graph");
    DegreeStats gs = degree_stats(g);
    return lll_color_count(degree_stats(sel).min_out, gs.max_out + gs.max_in);
}

int turan_clique_lower_bound(const DirectedGraph& g) {
    if (!is_bidirectional(g))
        throw input_error("Turan bound needs a bidirectional graph");
    long long n = g.node_count();
    long long m = g.arc_count() / 2; // undirected edge count
    int r = 1;
    // edge count above the Turan threshold forces a K_r; the margin
    // 2m(r-1) - n^2(r-2) is nonincreasing in r, so stop at the first miss
    for (long long rr = 2; rr <= n; ++rr) {
        if (2 * m * (rr - 1) > n * n * (rr - 2))
            r = static_cast<int>(rr);
        else
            break;
    }
    return r;
}

CapacityBracket capacity_bracket(const DirectedGraph& g) {
    CapacityBracket b;

    int deg_bound = degree_upper_bound(g);
    CoreResult core = max_core(g);
    int core_bound = 1 + core.k;
    if (core_bound < deg_bound) {
        b.upper = core_bound;
        b.upper_witness = UpperWitness::KCore;
    } else {
        b.upper = deg_bound;
        b.upper_witness = UpperWitness::Degree;
    }

    b.lower = 1;
    b.lower_witness = LowerWitness::Trivial;
    DegreeStats gs = degree_stats(g);
    int delta = gs.max_out + gs.max_in;
    PeelTrace peel = peel_half_average(g);
    int lll_peel = lll_color_count(degree_stats(peel.terminal).min_out, delta);
    int lll_core = lll_color_count(core.k, delta);
    int lll = lll_peel > lll_core ? lll_peel : lll_core;
    if (lll > b.lower) {
        b.lower = lll;
        b.lower_witness = LowerWitness::Lll;
    }
    if (is_bidirectional(g)) {
        int turan = turan_clique_lower_bound(g);
        if (turan > b.lower) {
            b.lower = turan;
            b.lower_witness = LowerWitness::Turan;
        }
    }
    return b;
}

} // namespace subdp
