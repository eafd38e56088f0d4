#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "subdp/coloring.hpp"
#include "subdp/exact.hpp"
#include "subdp/graph.hpp"

namespace subdp {

using Rng = std::mt19937_64;

/// Independent uniform color per node, deterministic in the seed.
Coloring random_coloring(const SubgraphSelection& sel, int ell, std::uint64_t seed);

/// Nodes whose closed out-neighborhood misses some color of 1..ell.
/// Empty exactly when validate_coloring holds.
std::vector<int> find_violations(const SubgraphSelection& sel, const Coloring& col);

/// Redraws the colors of every node in the closed out-neighborhood of v,
/// in ascending node order. Touches nothing else.
void resample_neighborhood(const SubgraphSelection& sel, Coloring& col, int v, Rng& rng);

struct ResampleLog {
    std::int64_t rounds = 0;
    std::vector<std::pair<std::int64_t, int>> violated_history; // (round, node)
    bool succeeded = false;
    std::uint64_t seed = 0;
};

struct MoserTardosResult {
    std::optional<Coloring> coloring; // present iff log.succeeded
    ResampleLog log;
};

/// Resampling search: start from a uniform random coloring; while some
/// neighborhood misses a color, resample the lowest-id violated node's
/// closed neighborhood. A returned coloring is always valid.
MoserTardosResult moser_tardos(const SubgraphSelection& sel, int ell, std::uint64_t seed,
                               std::int64_t max_rounds);

/// Two-stage approximation: take the max-core subgraph, aim at the
/// local-lemma color count for its core index, and resample. Retries a few
/// fresh seeds on failure, then lowers the target (flagged in the report).
CapacityReport approx_capacity(const DirectedGraph& g, std::uint64_t seed);

} // namespace subdp
