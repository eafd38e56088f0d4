#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "subdp/codec.hpp"
#include "subdp/coloring.hpp"
#include "subdp/graph.hpp"

namespace subdp {

/// Graph text format: header "<digraph|bigraph> <n> <lines>", then one
/// "u v" per line, 0-indexed. '#' starts a comment; blank lines are
/// ignored. "bigraph" emits both directions per line. Parse errors carry
/// the offending line number.
DirectedGraph parse_graph(std::string_view text);

/// Canonical form: "bigraph" with u < v pairs when the graph is
/// bidirectional, "digraph" with all arcs otherwise; edges sorted.
std::string serialize_graph(const DirectedGraph& g);

struct EnsembleConfig {
    int n = 0;
    double alpha = 0.0; // edge-density constant in (0, 1]
    std::uint64_t seed = 0;
    int count = 1; // graphs per point (consumed by the bench driver)
};

/// Uniformly samples floor(alpha*n^2/2) distinct undirected pairs (capped
/// at the complete graph) and emits both arc directions. Deterministic per
/// seed.
DirectedGraph gen_dense_bidirectional(const EnsembleConfig& cfg);

/// Complete bidirectional graph minus `removed` uniformly chosen
/// undirected edges.
DirectedGraph gen_near_complete_bidirectional(int n, int removed, std::uint64_t seed);

/// Codec format: header "codec <n-states> <ell>", then per-state lines
/// "state decode 1->s1 2->s2 ...".
std::string serialize_codec(const Codec& codec);
Codec parse_codec(std::string_view text);

/// Coloring format: header "coloring <entries> <ell>", then "node color"
/// per line. Parsing checks the nodes against the graph.
std::string serialize_coloring(const Coloring& col);
Coloring parse_coloring(const DirectedGraph& g, std::string_view text);

enum class BenchMode { Dense, NearComplete };

struct BenchRow {
    int n = 0;
    double mean_ell = 0.0;   // mean achieved color count over seeds
    double mean_lower = 0.0; // mean Turan clique lower bound over seeds
    double stat = 0.0;       // dense: mean_ell*ln(n)/n,  near-complete: mean_lower/n
};

/// Seeded ensemble sweep; per-seed results are accumulated in seed order,
/// so the output is reproducible bit for bit.
std::vector<BenchRow> bench_asymptotics(BenchMode mode, const std::vector<int>& n_list,
                                        double alpha, int seeds, std::uint64_t base_seed);

} // namespace subdp
