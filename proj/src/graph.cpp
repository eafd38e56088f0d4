#include "subdp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace subdp {

Rational make_rational(long long num, long long den) {
    if (den == 0)
        throw input_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

double to_double(const Rational& r) {
    return static_cast<double>(r.num) / static_cast<double>(r.den);
}

bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
// Denominators are positive, so cross-multiplication preserves order.
bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
bool operator<=(const Rational& a, const Rational& b) { return a.num * b.den <= b.num * a.den; }

DirectedGraph::DirectedGraph(int n, std::span<const std::pair<int, int>> arcs) : n_(n) {
    if (n < 1)
        throw input_error("graph needs at least one node");
    out_adj_.assign(n_, {});
    in_adj_.assign(n_, {});
    for (const auto& [u, v] : arcs) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw input_error("arc (" + std::to_string(u) + "," + std::to_string(v) +
                              ") endpoint out of range");
        if (u == v)
            throw input_error("self-arc at node " + std::to_string(u));
        out_adj_[u].push_back(v);
    }
    for (int u = 0; u < n_; ++u) {
        auto& nb = out_adj_[u];
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        arc_count_ += static_cast<std::int64_t>(nb.size());
        for (int v : nb)
            in_adj_[v].push_back(u);
    }
    // in-lists come out sorted because u runs in order
}

DirectedGraph::DirectedGraph(int n, const std::vector<std::pair<int, int>>& arcs)
    : DirectedGraph(n, std::span<const std::pair<int, int>>(arcs)) {}

int DirectedGraph::check_node(int v) const {
    if (v < 0 || v >= n_)
        throw input_error("node " + std::to_string(v) + " out of range");
    return v;
}

bool DirectedGraph::has_arc(int u, int v) const {
    const auto& nb = out_neighbors(u);
    check_node(v);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> DirectedGraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(arc_count_));
    for (int u = 0; u < n_; ++u)
        for (int v : out_adj_[u])
            out.emplace_back(u, v);
    return out;
}

bool DirectedGraph::operator==(const DirectedGraph& other) const {
    return n_ == other.n_ && out_adj_ == other.out_adj_;
}

SubgraphSelection::SubgraphSelection(const DirectedGraph& parent, std::span<const int> nodes)
    : parent_(&parent) {
    if (nodes.empty())
        throw input_error("subgraph selection must be nonempty");
    member_.assign(parent.node_count(), 0);
    for (int v : nodes) {
        if (v < 0 || v >= parent.node_count())
            throw input_error("selected node " + std::to_string(v) + " out of range");
        member_[v] = 1;
    }
    for (int v = 0; v < parent.node_count(); ++v)
        if (member_[v])
            nodes_.push_back(v);
}

int SubgraphSelection::induced_out_degree(int v) const {
    if (!contains(v))
        throw input_error("node " + std::to_string(v) + " not in selection");
    int d = 0;
    for (int w : parent_->out_neighbors(v))
        d += member_[w];
    return d;
}

int SubgraphSelection::induced_in_degree(int v) const {
    if (!contains(v))
        throw input_error("node " + std::to_string(v) + " not in selection");
    int d = 0;
    for (int w : parent_->in_neighbors(v))
        d += member_[w];
    return d;
}

bool SubgraphSelection::has_induced_arc(int u, int v) const {
    return contains(u) && contains(v) && parent_->has_arc(u, v);
}

std::int64_t SubgraphSelection::induced_arc_count() const {
    std::int64_t total = 0;
    for (int v : nodes_)
        total += induced_out_degree(v);
    return total;
}

Rational SubgraphSelection::avg_out_degree() const {
    return make_rational(induced_arc_count(), size());
}

bool SubgraphSelection::operator==(const SubgraphSelection& other) const {
    return parent_ == other.parent_ && nodes_ == other.nodes_;
}

Rational avg_out_degree(const DirectedGraph& g) {
    return make_rational(g.arc_count(), g.node_count());
}

bool is_bidirectional(const DirectedGraph& g) {
    for (int u = 0; u < g.node_count(); ++u)
        for (int v : g.out_neighbors(u))
            if (!g.has_arc(v, u))
                return false;
    return true;
}

DegreeStats degree_stats(const DirectedGraph& g) {
    DegreeStats s;
    s.min_out = s.min_in = g.node_count(); // degrees are < n
    for (int v = 0; v < g.node_count(); ++v) {
        s.min_out = std::min(s.min_out, g.out_degree(v));
        s.max_out = std::max(s.max_out, g.out_degree(v));
        s.min_in = std::min(s.min_in, g.in_degree(v));
        s.max_in = std::max(s.max_in, g.in_degree(v));
    }
    return s;
}

DegreeStats degree_stats(const SubgraphSelection& sel) {
    DegreeStats s;
    s.min_out = s.min_in = sel.parent().node_count();
    for (int v : sel.nodes()) {
        int dout = sel.induced_out_degree(v);
        int din = sel.induced_in_degree(v);
        s.min_out = std::min(s.min_out, dout);
        s.max_out = std::max(s.max_out, dout);
        s.min_in = std::min(s.min_in, din);
        s.max_in = std::max(s.max_in, din);
    }
    return s;
}

std::vector<int> closed_out_neighborhood(const SubgraphSelection& sel, int v) {
    if (!sel.contains(v))
        throw input_error("node " + std::to_string(v) + " not in selection");
    std::vector<int> nb;
    nb.reserve(sel.parent().out_neighbors(v).size() + 1);
    bool placed = false;
    for (int w : sel.parent().out_neighbors(v)) {
        if (!placed && v < w) {
            nb.push_back(v);
            placed = true;
        }
        if (sel.contains(w))
            nb.push_back(w);
    }
    if (!placed)
        nb.push_back(v);
    return nb;
}

SubgraphSelection induced_subgraph(const DirectedGraph& g, std::span<const int> nodes) {
    return SubgraphSelection(g, nodes);
}

SubgraphSelection induced_subgraph(const SubgraphSelection& sel, std::span<const int> nodes) {
    std::vector<int> kept;
    for (int v : nodes)
        if (sel.contains(v))
            kept.push_back(v);
    if (kept.empty())
        throw input_error("restriction does not intersect the selection");
    return SubgraphSelection(sel.parent(), kept);
}

SubgraphSelection full_selection(const DirectedGraph& g) {
    std::vector<int> all(g.node_count());
    std::iota(all.begin(), all.end(), 0);
    return SubgraphSelection(g, all);
}

DirectedGraph materialize(const SubgraphSelection& sel) {
    const auto& nodes = sel.nodes();
    std::vector<int> rank(sel.parent().node_count(), -1);
    for (size_t i = 0; i < nodes.size(); ++i)
        rank[nodes[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> arcs;
    for (int u : nodes)
        for (int v : sel.parent().out_neighbors(u))
            if (sel.contains(v))
                arcs.emplace_back(rank[u], rank[v]);
    return DirectedGraph(sel.size(), arcs);
}

} // namespace subdp
