#include "subdp/lll.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "subdp/bounds.hpp"
#include "subdp/subgraph.hpp"

namespace subdp {

namespace {

int uniform_color(Rng& rng, int ell) {
    return 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(ell));
}

Coloring random_coloring_impl(const SubgraphSelection& sel, int ell, Rng& rng) {
    std::vector<int> colors(sel.nodes().size());
    for (auto& c : colors)
        c = uniform_color(rng, ell);
    return make_coloring(sel.nodes(), std::move(colors), ell);
}

// Shared scratch for violation checks over a fixed selection.
struct NeighborhoodChecker {
    const SubgraphSelection& sel;
    std::vector<int> color_at; // parent-indexed, 0 when unselected
    std::vector<int> seen;
    int stamp = 0;

    NeighborhoodChecker(const SubgraphSelection& s, const Coloring& col)
        : sel(s), color_at(s.parent().node_count(), 0), seen(col.ell + 1, -1) {
        for (size_t i = 0; i < col.domain.size(); ++i)
            color_at[col.domain[i]] = col.colors[i];
    }

    void set_color(int v, int c) { color_at[v] = c; }

    bool misses_color(int v, int ell) {
        ++stamp;
        int distinct = 0;
        seen[color_at[v]] = stamp;
        ++distinct;
        for (int w : sel.parent().out_neighbors(v)) {
            if (!sel.contains(w))
                continue;
            if (seen[color_at[w]] != stamp) {
                seen[color_at[w]] = stamp;
                ++distinct;
            }
        }
        return distinct != ell;
    }
};

} // namespace

Coloring random_coloring(const SubgraphSelection& sel, int ell, std::uint64_t seed) {
    if (ell < 1)
        throw input_error("color count must be at least 1");
    Rng rng(seed);
    return random_coloring_impl(sel, ell, rng);
}

std::vector<int> find_violations(const SubgraphSelection& sel, const Coloring& col) {
    if (col.domain != sel.nodes())
        throw input_error("coloring domain does not match the selection");
    NeighborhoodChecker check(sel, col);
    std::vector<int> bad;
    for (int v : sel.nodes())
        if (check.misses_color(v, col.ell))
            bad.push_back(v);
    return bad;
}

void resample_neighborhood(const SubgraphSelection& sel, Coloring& col, int v, Rng& rng) {
    if (col.domain != sel.nodes())
        throw input_error("coloring domain does not match the selection");
    for (int w : closed_out_neighborhood(sel, v)) {
        auto it = std::lower_bound(col.domain.begin(), col.domain.end(), w);
        col.colors[static_cast<size_t>(it - col.domain.begin())] = uniform_color(rng, col.ell);
    }
}

MoserTardosResult moser_tardos(const SubgraphSelection& sel, int ell, std::uint64_t seed,
                               std::int64_t max_rounds) {
    if (ell < 1)
        throw input_error("color count must be at least 1");
    if (max_rounds < 1)
        throw input_error("max_rounds must be at least 1");

    Rng rng(seed);
    Coloring col = random_coloring_impl(sel, ell, rng);
    NeighborhoodChecker check(sel, col);

    ResampleLog log;
    log.seed = seed;

    std::set<int> violated;
    for (int v : sel.nodes())
        if (check.misses_color(v, ell))
            violated.insert(v);

    std::vector<int> touched;
    while (!violated.empty() && log.rounds < max_rounds) {
        int v = *violated.begin();
        log.violated_history.emplace_back(log.rounds, v);

        // redraw N(v); only nodes whose neighborhood meets N(v) can change state
        touched.clear();
        for (int w : closed_out_neighborhood(sel, v)) {
            int c = uniform_color(rng, ell);
            check.set_color(w, c);
            auto it = std::lower_bound(col.domain.begin(), col.domain.end(), w);
            col.colors[static_cast<size_t>(it - col.domain.begin())] = c;
            touched.push_back(w);
            for (int u : sel.parent().in_neighbors(w))
                if (sel.contains(u))
                    touched.push_back(u);
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (int u : touched) {
            if (check.misses_color(u, ell))
                violated.insert(u);
            else
                violated.erase(u);
        }
        ++log.rounds;
    }

    log.succeeded = violated.empty();
    if (!log.succeeded)
        return MoserTardosResult{std::nullopt, std::move(log)};
    return MoserTardosResult{std::move(col), std::move(log)};
}

CapacityReport approx_capacity(const DirectedGraph& g, std::uint64_t seed) {
    CapacityBracket bracket = capacity_bracket(g);
    CoreResult core = max_core(g); // carries its own graph snapshot
    DegreeStats gs = degree_stats(g);
    int target = lll_color_count(core.k, gs.max_out + gs.max_in);

    Rng seeder(seed);
    int ell = target;
    bool degraded = false;
    for (;;) {
        for (int attempt = 0; attempt < 8; ++attempt) {
            std::int64_t budget = 10LL * core.subgraph.size() * ell;
            auto mt = moser_tardos(core.subgraph, ell, seeder(), budget);
            if (mt.log.succeeded)
                return CapacityReport{core.graph,              ell,     core.subgraph,
                                      std::move(*mt.coloring), bracket, false,
                                      target,                  degraded};
        }
        if (ell == 1)
            throw internal_error("resampling failed at one color"); // can't: no bad events
        --ell;
        degraded = true;
    }
}

} // namespace subdp
