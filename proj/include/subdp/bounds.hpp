#pragma once

#include "subdp/graph.hpp"

namespace subdp {

enum class LowerWitness { Trivial, Lll, Turan };
enum class UpperWitness { Degree, KCore };

const char* to_string(LowerWitness w);
const char* to_string(UpperWitness w);

/// Closed-form bracket around the writing capacity, with the bound that
/// produced each side.
struct CapacityBracket {
    int lower = 1;
    int upper = 1;
    LowerWitness lower_witness = LowerWitness::Trivial;
    UpperWitness upper_witness = UpperWitness::Degree;
};

/// 1 + max out-degree.
int degree_upper_bound(const DirectedGraph& g);

/// 1 + maximum core index.
int kcore_upper_bound(const DirectedGraph& g);

/// Color count certified by the local lemma for a subgraph with the given
/// minimum out-degree, where delta = max_out(G) + max_in(G). Clamped to 1:
/// a valid 1-coloring always exists, and the formula is asymptotic.
int lll_color_count(int min_out_degree, int delta);

/// Local-lemma lower bound evaluated on the selection's minimum out-degree.
int lll_lower_bound(const DirectedGraph& g, const SubgraphSelection& sel);

/// Largest r whose edge count forces a K_r subgraph, hence capacity >= r.
/// Uses the undirected edge count |arcs|/2; bidirectional input required.
int turan_clique_lower_bound(const DirectedGraph& g);

/// Best lower (trivial, LLL on peel terminal, LLL on max core, Turan when
/// bidirectional) against best upper (degree, k-core).
CapacityBracket capacity_bracket(const DirectedGraph& g);

} // namespace subdp
