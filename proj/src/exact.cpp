#include "subdp/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace subdp {

namespace {

// Closed out-neighborhoods of the selection rewritten in local indices.
std::vector<std::vector<int>> local_neighborhoods(const SubgraphSelection& sel) {
    const auto& nodes = sel.nodes();
    std::vector<int> rank(sel.parent().node_count(), -1);
    for (size_t i = 0; i < nodes.size(); ++i)
        rank[nodes[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> nb(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) {
        nb[i].push_back(static_cast<int>(i));
        for (int w : sel.parent().out_neighbors(nodes[i]))
            if (rank[w] >= 0)
                nb[i].push_back(rank[w]);
        std::sort(nb[i].begin(), nb[i].end());
    }
    return nb;
}

} // namespace

bool validate_coloring(const SubgraphSelection& sel, const Coloring& col) {
    if (col.domain != sel.nodes())
        throw input_error("coloring domain does not match the selection");

    std::vector<int> color_at(sel.parent().node_count(), 0);
    for (size_t i = 0; i < col.domain.size(); ++i)
        color_at[col.domain[i]] = col.colors[i];

    std::vector<int> seen(col.ell + 1, -1);
    int stamp = 0;
    for (int s : sel.nodes()) {
        ++stamp;
        int distinct = 0;
        int c = color_at[s];
        seen[c] = stamp;
        ++distinct;
        for (int w : sel.parent().out_neighbors(s)) {
            if (!sel.contains(w))
                continue;
            int cw = color_at[w];
            if (seen[cw] != stamp) {
                seen[cw] = stamp;
                ++distinct;
            }
        }
        if (distinct != col.ell)
            return false;
    }
    return true;
}

std::optional<Coloring> find_valid_coloring(const SubgraphSelection& sel, int ell) {
    if (ell < 1)
        throw input_error("color count must be at least 1");
    const int k = sel.size();
    auto nb = local_neighborhoods(sel);

    // no neighborhood can cover more colors than it has nodes
    for (int s = 0; s < k; ++s)
        if (static_cast<int>(nb[s].size()) < ell)
            return std::nullopt;

    // transpose: which constraints an assignment to node i touches
    std::vector<std::vector<int>> affected(k);
    for (int s = 0; s < k; ++s)
        for (int i : nb[s])
            affected[i].push_back(s);

    // most constrained first: descending induced out-degree, id breaks ties
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        size_t da = nb[a].size(), db = nb[b].size();
        return da != db ? da > db : a < b;
    });

    std::vector<int> color(k, 0);
    std::vector<int> unassigned(k);
    std::vector<int> distinct(k, 0);
    std::vector<std::vector<int>> count(k, std::vector<int>(ell + 1, 0));
    for (int s = 0; s < k; ++s)
        unassigned[s] = static_cast<int>(nb[s].size());

    int max_used = 0;

    auto feasible_after = [&](int i, int c) {
        for (int s : affected[i]) {
            --unassigned[s];
            if (++count[s][c] == 1)
                ++distinct[s];
        }
        for (int s : affected[i])
            if (distinct[s] + unassigned[s] < ell)
                return false;
        return true;
    };
    auto undo = [&](int i, int c) {
        for (int s : affected[i]) {
            ++unassigned[s];
            if (--count[s][c] == 0)
                --distinct[s];
        }
    };

    auto search = [&](auto&& self, int pos) -> bool {
        if (pos == k)
            return true;
        int i = order[pos];
        // colors beyond the first unused one are symmetric
        int cap = std::min(ell, max_used + 1);
        for (int c = 1; c <= cap; ++c) {
            bool ok = feasible_after(i, c);
            if (ok) {
                color[i] = c;
                int prev_max = max_used;
                max_used = std::max(max_used, c);
                if (self(self, pos + 1))
                    return true;
                max_used = prev_max;
                color[i] = 0;
            }
            undo(i, c);
        }
        return false;
    };

    if (!search(search, 0))
        return std::nullopt;
    return make_coloring(sel.nodes(), color, ell);
}

DomaticResult domatic_number(const SubgraphSelection& sel) {
    int hi = 1 + degree_stats(sel).min_out;
    for (int ell = hi; ell >= 1; --ell)
        if (auto col = find_valid_coloring(sel, ell))
            return DomaticResult{ell, std::move(*col)};
    throw internal_error("no valid coloring found at any ell >= 1"); // unreachable
}

CapacityReport exact_capacity(const DirectedGraph& input, int node_limit) {
    if (node_limit <= 0)
        node_limit = 16;
    const int n = input.node_count();
    if (n > node_limit || n > 30)
        throw refusal_error("exact search refused for n=" + std::to_string(n) + " (limit " +
                            std::to_string(std::min(node_limit, 30)) +
                            "); use the approximate path");

    auto snapshot = std::make_shared<const DirectedGraph>(input);
    const DirectedGraph& g = *snapshot;
    CapacityBracket bracket = capacity_bracket(g);

    std::vector<std::uint32_t> nb_mask(n, 0);
    for (int v = 0; v < n; ++v) {
        nb_mask[v] = 1u << v;
        for (int w : g.out_neighbors(v))
            nb_mask[v] |= 1u << w;
    }

    for (int ell = bracket.upper; ell >= 1; --ell) {
        // larger subsets first; within a size, Gosper's hack enumerates
        // masks in ascending numeric order
        for (int size = n; size >= 1; --size) {
            std::uint32_t mask = (size == 32) ? ~0u : ((1u << size) - 1);
            const std::uint32_t limit = (n == 32) ? ~0u : (1u << n);
            while (mask < limit) {
                int min_nb = n + 1;
                for (std::uint32_t bits = mask; bits;) {
                    int v = std::countr_zero(bits);
                    bits &= bits - 1;
                    min_nb = std::min(min_nb, std::popcount(nb_mask[v] & mask));
                    if (min_nb < ell)
                        break;
                }
                if (min_nb >= ell) {
                    std::vector<int> nodes;
                    nodes.reserve(size);
                    for (std::uint32_t bits = mask; bits;) {
                        nodes.push_back(std::countr_zero(bits));
                        bits &= bits - 1;
                    }
                    SubgraphSelection sel(g, nodes);
                    if (auto col = find_valid_coloring(sel, ell))
                        return CapacityReport{snapshot,        ell,     std::move(sel),
                                              std::move(*col), bracket, true,
                                              ell,             false};
                }
                // Gosper's hack: next mask with the same popcount
                std::uint32_t c = mask & -mask;
                std::uint32_t r = mask + c;
                if (r == 0)
                    break;
                mask = (((r ^ mask) >> 2) / c) | r;
            }
        }
    }
    throw internal_error("exact search fell through ell=1"); // unreachable
}

int brute_force_capacity(const DirectedGraph& g) {
    const int n = g.node_count();
    if (n > 12)
        throw refusal_error("brute force refused for n=" + std::to_string(n) + " (limit 12)");

    int best = 1; // a single node always admits one color
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> nodes;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v))
                nodes.push_back(v);
        const int k = static_cast<int>(nodes.size());

        std::vector<int> rank(n, -1);
        for (int i = 0; i < k; ++i)
            rank[nodes[i]] = i;
        std::vector<std::vector<int>> nb(k);
        int min_nb = k + 1;
        for (int i = 0; i < k; ++i) {
            nb[i].push_back(i);
            for (int w : g.out_neighbors(nodes[i]))
                if (rank[w] >= 0)
                    nb[i].push_back(rank[w]);
            min_nb = std::min(min_nb, static_cast<int>(nb[i].size()));
        }

        for (int ell = min_nb; ell > best; --ell) {
            const std::uint32_t full = (1u << ell) - 1;
            std::vector<int> a(k, 1);
            bool found = false;
            for (;;) {
                bool valid = true;
                for (int s = 0; s < k && valid; ++s) {
                    std::uint32_t present = 0;
                    for (int j : nb[s])
                        present |= 1u << (a[j] - 1);
                    valid = present == full;
                }
                if (valid) {
                    found = true;
                    break;
                }
                int pos = k - 1;
                while (pos >= 0 && a[pos] == ell)
                    a[pos--] = 1;
                if (pos < 0)
                    break;
                ++a[pos];
            }
            if (found) {
                best = ell;
                break;
            }
        }
    }
    return best;
}

} // namespace subdp
