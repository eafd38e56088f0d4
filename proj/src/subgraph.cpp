#include "subdp/subgraph.hpp"

#include <vector>

namespace subdp {

namespace {

struct MutableDegrees {
    std::vector<char> alive;
    std::vector<int> out_deg;
    std::vector<int> in_deg;
    int live_nodes;
    std::int64_t live_arcs;

    explicit MutableDegrees(const DirectedGraph& g)
        : alive(g.node_count(), 1),
          out_deg(g.node_count()),
          in_deg(g.node_count()),
          live_nodes(g.node_count()),
          live_arcs(g.arc_count()) {
        for (int v = 0; v < g.node_count(); ++v) {
            out_deg[v] = g.out_degree(v);
            in_deg[v] = g.in_degree(v);
        }
    }

    void remove(const DirectedGraph& g, int v) {
        alive[v] = 0;
        --live_nodes;
        for (int w : g.out_neighbors(v))
            if (alive[w]) {
                --in_deg[w];
                --live_arcs;
            }
        for (int w : g.in_neighbors(v))
            if (alive[w]) {
                --out_deg[w];
                --live_arcs;
            }
    }

    std::vector<int> live() const {
        std::vector<int> nodes;
        nodes.reserve(live_nodes);
        for (int v = 0; v < static_cast<int>(alive.size()); ++v)
            if (alive[v])
                nodes.push_back(v);
        return nodes;
    }
};

} // namespace

PeelTrace peel_half_average(const DirectedGraph& input) {
    auto snapshot = std::make_shared<const DirectedGraph>(input);
    const DirectedGraph& g = *snapshot;
    MutableDegrees st(g);
    std::vector<PeelStep> removed;
    bool degenerate = false;

    for (;;) {
        // eps_out/2 >= d_out(v)  <=>  live_arcs >= 2 * d_out(v) * live_nodes
        int victim = -1;
        for (int v = 0; v < g.node_count(); ++v) {
            if (!st.alive[v])
                continue;
            if (st.live_arcs >= 2LL * st.out_deg[v] * st.live_nodes) {
                victim = v;
                break;
            }
        }
        if (victim < 0)
            break;
        if (st.live_nodes == 1) {
            // removing the last node would empty the graph
            degenerate = true;
            break;
        }
        removed.push_back(
            PeelStep{victim, st.out_deg[victim], make_rational(st.live_arcs, st.live_nodes)});
        st.remove(g, victim);
    }

    SubgraphSelection terminal(g, st.live());
    return PeelTrace{std::move(snapshot), std::move(removed), std::move(terminal), degenerate};
}

CoreResult max_core(const DirectedGraph& input) {
    auto snapshot = std::make_shared<const DirectedGraph>(input);
    const DirectedGraph& g = *snapshot;
    MutableDegrees st(g);
    int best_k = -1;
    std::vector<int> witness;

    while (st.live_nodes > 0) {
        int victim = -1;
        int min_deg = g.node_count();
        for (int v = 0; v < g.node_count(); ++v) {
            if (st.alive[v] && st.out_deg[v] < min_deg) {
                min_deg = st.out_deg[v];
                victim = v;
            }
        }
        if (min_deg > best_k) {
            best_k = min_deg;
            witness = st.live(); // live set the first time this minimum holds
        }
        st.remove(g, victim);
    }

    SubgraphSelection sub(g, witness);
    return CoreResult{std::move(snapshot), best_k, std::move(sub)};
}

} // namespace subdp
