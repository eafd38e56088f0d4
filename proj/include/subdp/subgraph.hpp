#pragma once

#include <memory>
#include <vector>

#include "subdp/graph.hpp"

namespace subdp {

struct PeelStep {
    int node = -1;
    int out_degree = 0;  // induced out-degree at the moment of removal
    Rational eps_out;    // average out-degree of the graph it was removed from
};

/// Record of the half-average-degree peeling sequence. Every recorded
/// removal satisfied d_out(v) <= eps_out/2 of the current graph; the
/// terminal subgraph contains no such node. `degenerate` is set when the
/// process would have emptied the graph and stopped one node early instead.
/// `graph` owns the snapshot the terminal selection points into, so the
/// trace stays valid on its own.
struct PeelTrace {
    std::shared_ptr<const DirectedGraph> graph;
    std::vector<PeelStep> removed;
    SubgraphSelection terminal;
    bool degenerate = false;
};

PeelTrace peel_half_average(const DirectedGraph& g);

/// Maximum-core decomposition result: k is the largest minimum induced
/// out-degree over induced subgraphs, subgraph a witness attaining it.
/// Self-contained like PeelTrace.
struct CoreResult {
    std::shared_ptr<const DirectedGraph> graph;
    int k = 0;
    SubgraphSelection subgraph;
};

/// Repeatedly deletes a node of minimum induced out-degree (lowest id on
/// ties) and reports the largest minimum seen, with the node set that was
/// live when the maximum first held.
CoreResult max_core(const DirectedGraph& g);

} // namespace subdp
