#pragma once

#include <memory>
#include <optional>

#include "subdp/bounds.hpp"
#include "subdp/coloring.hpp"
#include "subdp/graph.hpp"

namespace subdp {

/// True iff every closed out-neighborhood of the selection carries all
/// colors 1..ell. The coloring domain must equal the selected node set.
bool validate_coloring(const SubgraphSelection& sel, const Coloring& col);

/// Deterministic backtracking search for any valid ell-coloring of the
/// selection. Nodes are assigned in descending induced out-degree order
/// (id on ties); partial assignments are pruned as soon as some closed
/// neighborhood can no longer cover 1..ell.
std::optional<Coloring> find_valid_coloring(const SubgraphSelection& sel, int ell);

struct DomaticResult {
    int gamma = 1;
    Coloring witness;
};

/// Largest ell admitting a valid ell-coloring of the fixed selection,
/// searched downward from 1 + min induced out-degree. Always >= 1.
DomaticResult domatic_number(const SubgraphSelection& sel);

/// Capacity value with a verifiable certificate. `graph` owns the snapshot
/// the witness selection points into, so the report outlives the argument
/// graph. `target_ell` and `target_degraded` only carry information on
/// approximate reports: the local-lemma target color count and whether the
/// search had to settle below it.
struct CapacityReport {
    std::shared_ptr<const DirectedGraph> graph;
    int value = 1;
    SubgraphSelection witness_subgraph;
    Coloring witness_coloring;
    CapacityBracket bracket;
    bool exact = false;
    int target_ell = 1;
    bool target_degraded = false;
};

/// Exact writing capacity by search over induced subgraphs, descending
/// from the bracket's upper bound; the first (subset, coloring) hit is
/// optimal. Refuses graphs above node_limit.
CapacityReport exact_capacity(const DirectedGraph& g, int node_limit = 16);

/// Independent exhaustive oracle: enumerates every nonempty subset and
/// every color assignment outright. Shares no search logic with
/// exact_capacity. Refuses n > 12.
int brute_force_capacity(const DirectedGraph& g);

} // namespace subdp
