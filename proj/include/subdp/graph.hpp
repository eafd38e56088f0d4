#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "subdp/errors.hpp"

namespace subdp {

/// Exact integer ratio, always reduced, denominator positive. Peeling
/// thresholds compare average degrees exactly, so they never pass through
/// floating point.
struct Rational {
    long long num = 0;
    long long den = 1;
};

Rational make_rational(long long num, long long den);
double to_double(const Rational& r);
bool operator==(const Rational& a, const Rational& b);
bool operator!=(const Rational& a, const Rational& b);
bool operator<(const Rational& a, const Rational& b);
bool operator<=(const Rational& a, const Rational& b);

struct DegreeStats {
    int min_out = 0;
    int max_out = 0;
    int min_in = 0;
    int max_in = 0;
};

/// Immutable directed graph on dense node ids 0..n-1.
///
/// Self-arcs are rejected at construction: a device may always keep its
/// current state, so a self-arc carries no information and would break
/// |N(v)| = 1 + d_out(v). Duplicate arcs are dropped. Out- and in-adjacency
/// are sorted and mutually consistent transposes.
class DirectedGraph {
public:
    DirectedGraph(int n, std::span<const std::pair<int, int>> arcs);
    DirectedGraph(int n, const std::vector<std::pair<int, int>>& arcs);

    int node_count() const { return n_; }
    std::int64_t arc_count() const { return arc_count_; }

    const std::vector<int>& out_neighbors(int v) const { return out_adj_[check_node(v)]; }
    const std::vector<int>& in_neighbors(int v) const { return in_adj_[check_node(v)]; }
    int out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }
    int in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }
    bool has_arc(int u, int v) const;

    /// All arcs as sorted (u, v) pairs.
    std::vector<std::pair<int, int>> arcs() const;

    bool operator==(const DirectedGraph& other) const;

private:
    int check_node(int v) const;

    int n_ = 0;
    std::int64_t arc_count_ = 0;
    std::vector<std::vector<int>> out_adj_;
    std::vector<std::vector<int>> in_adj_;
};

/// Nonempty node subset of a parent graph, standing for the induced
/// subgraph. Arc queries see exactly the parent arcs with both endpoints
/// selected. The parent graph must outlive the selection.
class SubgraphSelection {
public:
    SubgraphSelection(const DirectedGraph& parent, std::span<const int> nodes);

    const DirectedGraph& parent() const { return *parent_; }
    const std::vector<int>& nodes() const { return nodes_; }
    int size() const { return static_cast<int>(nodes_.size()); }
    bool contains(int v) const { return v >= 0 && v < parent_->node_count() && member_[v]; }

    int induced_out_degree(int v) const;
    int induced_in_degree(int v) const;
    bool has_induced_arc(int u, int v) const;
    std::int64_t induced_arc_count() const;
    Rational avg_out_degree() const;

    /// Same node set on the same parent graph.
    bool operator==(const SubgraphSelection& other) const;

private:
    const DirectedGraph* parent_;
    std::vector<int> nodes_;   // sorted ascending
    std::vector<char> member_; // size parent.node_count()
};

Rational avg_out_degree(const DirectedGraph& g);
bool is_bidirectional(const DirectedGraph& g);
DegreeStats degree_stats(const DirectedGraph& g);
DegreeStats degree_stats(const SubgraphSelection& sel);

/// {v} plus the selected out-neighbors of v, sorted ascending.
std::vector<int> closed_out_neighborhood(const SubgraphSelection& sel, int v);

SubgraphSelection induced_subgraph(const DirectedGraph& g, std::span<const int> nodes);
/// Further restriction; the effective node set is the intersection with the
/// existing selection.
SubgraphSelection induced_subgraph(const SubgraphSelection& sel, std::span<const int> nodes);
SubgraphSelection full_selection(const DirectedGraph& g);

/// Standalone copy of the induced subgraph. Node i of the result is
/// sel.nodes()[i].
DirectedGraph materialize(const SubgraphSelection& sel);

} // namespace subdp
