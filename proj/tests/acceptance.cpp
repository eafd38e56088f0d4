// Acceptance suite: runs every acceptance criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "subdp/bounds.hpp"
#include "subdp/codec.hpp"
#include "subdp/exact.hpp"
#include "subdp/io.hpp"
#include "subdp/lll.hpp"
#include "subdp/subgraph.hpp"

using namespace subdp;

namespace {

int failures = 0;

void report(int idx, const std::string& desc, bool ok, const std::string& detail) {
    std::printf("%s  criterion %2d: %s  [%s]\n", ok ? "PASS" : "FAIL", idx, desc.c_str(),
                detail.c_str());
    if (!ok)
        ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string asset_path(const std::string& name) {
    return std::string(SUBDP_ASSET_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// stdout of a CLI run, parsed as key:value lines
std::map<std::string, std::string> run_cli_kv(const std::string& args, int& exit_code) {
    std::string cmd = std::string(SUBDP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::map<std::string, std::string> kv;
    if (!pipe) {
        exit_code = -1;
        return kv;
    }
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    exit_code = WEXITSTATUS(pclose(pipe));
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find(": ");
        if (pos != std::string::npos)
            kv[line.substr(0, pos)] = line.substr(pos + 2);
    }
    return kv;
}

DirectedGraph complete(int n) {
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v)
                arcs.emplace_back(u, v);
    return DirectedGraph(n, arcs);
}

DirectedGraph random_digraph(int n, int per_mille, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && static_cast<int>(rng() % 1000) < per_mille)
                arcs.emplace_back(u, v);
    return DirectedGraph(n, arcs);
}

DirectedGraph random_bidirectional(int n, int per_mille, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 1000) < per_mille) {
                arcs.emplace_back(u, v);
                arcs.emplace_back(v, u);
            }
    return DirectedGraph(n, arcs);
}

// witnesses carried into the codec round-trip criterion
struct WitnessCase {
    std::shared_ptr<DirectedGraph> graph;
    std::vector<int> nodes;
    Coloring coloring;
};

std::vector<WitnessCase> collected;

void collect(const DirectedGraph& g, const SubgraphSelection& sel, const Coloring& col) {
    collected.push_back(WitnessCase{std::make_shared<DirectedGraph>(g), sel.nodes(), col});
}

void criterion_1_hypercube() {
    auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    auto kv = run_cli_kv("exact " + asset_path("q3.g"), code);
    double secs = seconds_since(t0);
    bool ok = code == 0 && kv["capacity"] == "4" && kv["exact"] == "true" && secs < 60.0;

    CapacityReport rep = exact_capacity(parse_graph(slurp(asset_path("q3.g"))));
    ok = ok && rep.value == 4;
    collect(parse_graph(slurp(asset_path("q3.g"))), rep.witness_subgraph, rep.witness_coloring);

    char detail[64];
    std::snprintf(detail, sizeof detail, "capacity=%s in %.2fs", kv["capacity"].c_str(), secs);
    report(1, "hypercube capacity via `exact q3.g` is 4", ok, detail);
}

void criterion_2_petersen() {
    auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    auto kv = run_cli_kv("exact " + asset_path("petersen.g"), code);
    double secs = seconds_since(t0);
    bool ok = code == 0 && kv["capacity"] == "3" && kv["exact"] == "true" && secs < 600.0;

    CapacityReport rep = exact_capacity(parse_graph(slurp(asset_path("petersen.g"))));
    ok = ok && rep.value == 3;
    collect(parse_graph(slurp(asset_path("petersen.g"))), rep.witness_subgraph,
            rep.witness_coloring);

    char detail[64];
    std::snprintf(detail, sizeof detail, "capacity=%s in %.2fs", kv["capacity"].c_str(), secs);
    report(2, "petersen capacity via `exact petersen.g` is 3", ok, detail);
}

void criterion_3_complete_graphs() {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 6; ++n) {
        DirectedGraph g = complete(n);
        CapacityReport rep = exact_capacity(g);
        if (rep.value != n)
            ok = false;
        collect(g, rep.witness_subgraph, rep.witness_coloring);
        detail += (n > 2 ? " " : "") + std::to_string(rep.value);
    }
    CapacityBracket b6 = capacity_bracket(complete(6));
    bool bracket_ok = b6.lower == 6 && b6.upper == 6;
    report(3, "C(K_n)=n for n=2..6 and bracket(K_6)=(6,6)", ok && bracket_ok,
           "values " + detail + (bracket_ok ? ", bracket (6,6)" : ", bracket wrong"));
}

// criteria 4 and 5 share the 200-graph ensemble
void criteria_4_5_oracle_and_sandwich() {
    int mismatches = 0, sandwich_violations = 0, count = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        for (int kind = 0; kind < 2; ++kind) {
            int n = 2 + static_cast<int>((seed * 7 + kind * 3) % 6); // 2..7
            int density = 150 + static_cast<int>((seed * 37) % 700);
            DirectedGraph g = kind == 0 ? random_digraph(n, density, seed)
                                        : random_bidirectional(n, density, seed + 1000);
            CapacityReport rep = exact_capacity(g);
            int oracle = brute_force_capacity(g);
            if (rep.value != oracle)
                ++mismatches;
            if (!(rep.bracket.lower <= rep.value && rep.value <= rep.bracket.upper))
                ++sandwich_violations;
            collect(g, rep.witness_subgraph, rep.witness_coloring);
            ++count;
        }
    }
    report(4, "exact matches the brute-force oracle on 200 random graphs", mismatches == 0,
           std::to_string(count) + " graphs, " + std::to_string(mismatches) + " mismatches");
    report(5, "bounds sandwich the exact value on the same ensemble", sandwich_violations == 0,
           std::to_string(sandwich_violations) + " violations");
}

void criterion_6_peeling_lemma() {
    int violations = 0, tested = 0;
    std::uint64_t seed = 1;
    while (tested < 100) {
        int n = 10 + static_cast<int>((seed * 13) % 51); // 10..60
        int density = 50 + static_cast<int>((seed * 29) % 800);
        DirectedGraph g = random_bidirectional(n, density, seed++);
        if (g.arc_count() == 0)
            continue;
        ++tested;
        PeelTrace t = peel_half_average(g);
        // delta_out(G_K) > eps_out(G)/2, exactly
        if (!(2LL * degree_stats(t.terminal).min_out * g.node_count() > g.arc_count()))
            ++violations;
    }
    report(6, "peel terminal min degree exceeds half the average degree", violations == 0,
           std::to_string(tested) + " bidirectional graphs, " + std::to_string(violations) +
               " violations");
}

void criterion_7_lll_soundness() {
    int runs = 0, invalid = 0;
    std::vector<DirectedGraph> graphs;
    for (const char* name : {"q3.g", "petersen.g", "k5.g", "c4bi.g", "c5di.g"})
        graphs.push_back(parse_graph(slurp(asset_path(name))));
    for (std::uint64_t s = 1; s <= 5; ++s)
        graphs.push_back(gen_dense_bidirectional({12 + 4 * static_cast<int>(s), 0.4, s, 1}));

    std::uint64_t seed = 1;
    while (runs < 1000) {
        const DirectedGraph& g = graphs[seed % graphs.size()];
        auto sel = full_selection(g);
        int ell = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(
                                                  degree_stats(g).max_out + 1));
        auto mt = moser_tardos(sel, ell, seed, 10LL * sel.size() * ell);
        ++runs;
        ++seed;
        if (mt.log.succeeded) {
            if (!validate_coloring(sel, *mt.coloring))
                ++invalid;
            else if (runs % 97 == 0) // keep a sample for the codec criterion
                collect(g, sel, *mt.coloring);
        }
    }

    // K_200: the formula pins nine colors; nearly every seed must land it
    DirectedGraph k200 = complete(200);
    CoreResult core = max_core(k200);
    DegreeStats ds = degree_stats(k200);
    int ell_star = lll_color_count(core.k, ds.max_out + ds.max_in);
    bool ell_ok = ell_star == 9;
    int successes = 0;
    for (std::uint64_t s = 1; s <= 100; ++s) {
        auto mt = moser_tardos(core.subgraph, ell_star, s, 10LL * core.subgraph.size() * ell_star);
        if (mt.log.succeeded) {
            if (!validate_coloring(core.subgraph, *mt.coloring))
                ++invalid;
            ++successes;
            if (s == 1)
                collect(k200, core.subgraph, *mt.coloring);
        }
    }
    bool ok = invalid == 0 && ell_ok && successes >= 99;
    report(7, "resampling soundness and K_200 at nine colors",
           ok,
           std::to_string(runs + 100) + " runs, " + std::to_string(invalid) +
               " invalid, ell*=" + std::to_string(ell_star) + ", K200 successes " +
               std::to_string(successes) + "/100");
}

void criterion_8_dense_trend() {
    auto t0 = std::chrono::steady_clock::now();
    auto rows = bench_asymptotics(BenchMode::Dense, {64, 128, 256, 512}, 0.25, 5, 1);
    double secs = seconds_since(t0);

    double at64 = rows.front().stat;
    double min_stat = at64;
    std::string detail = "stats";
    for (const auto& row : rows) {
        min_stat = std::min(min_stat, row.stat);
        char buf[32];
        std::snprintf(buf, sizeof buf, " %.4f", row.stat);
        detail += buf;
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, " in %.1fs", secs);
    detail += buf;
    report(8, "normalized dense-ensemble statistic does not vanish",
           min_stat >= 0.5 * at64 && secs < 600.0, detail);
}

void criterion_9_near_complete_trend() {
    auto rows = bench_asymptotics(BenchMode::NearComplete, {32, 64, 128}, 0.25, 5, 1);
    double c = rows.front().stat; // recorded at n = 32
    bool ok = c > 0.0;
    std::string detail = "ratios";
    for (const auto& row : rows) {
        if (row.stat < c / 2.0)
            ok = false;
        char buf[32];
        std::snprintf(buf, sizeof buf, " %.4f", row.stat);
        detail += buf;
    }
    report(9, "near-complete Turan ratio holds up across the grid", ok, detail);
}

void criterion_10_codec_round_trip() {
    int bad = 0;
    std::int64_t steps = 0;
    for (size_t i = 0; i < collected.size(); ++i) {
        const WitnessCase& wc = collected[i];
        try {
            SubgraphSelection sel(*wc.graph, wc.nodes);
            Codec codec = Codec::build(sel, wc.coloring);
            std::mt19937_64 rng(9000 + i);
            std::vector<int> messages(10000);
            for (auto& m : messages)
                m = 1 + static_cast<int>(rng() % codec.alphabet_size());
            Trajectory t = simulate(codec, codec.states().front(), messages);
            // re-check the walk against the graph itself
            int prev = t.initial_state;
            for (size_t j = 0; j < t.steps.size(); ++j) {
                const auto& step = t.steps[j];
                if (step.read_back != messages[j] ||
                    (step.state != prev && !wc.graph->has_arc(prev, step.state))) {
                    ++bad;
                    break;
                }
                prev = step.state;
            }
            steps += static_cast<std::int64_t>(t.steps.size());
        } catch (const std::exception&) {
            ++bad;
        }
    }
    report(10, "every collected witness yields a clean 10^4-step codec run", bad == 0,
           std::to_string(collected.size()) + " witnesses, " + std::to_string(steps) +
               " steps, " + std::to_string(bad) + " failures");
}

void criterion_11_monotonicity() {
    int violations = 0, pairs = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        int n = 4 + static_cast<int>(seed % 4); // 4..7
        DirectedGraph g = seed % 2 ? random_digraph(n, 400, seed)
                                   : random_bidirectional(n, 400, seed);
        int whole = exact_capacity(g).value;
        std::mt19937_64 rng(seed * 101);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<int> nodes;
            for (int v = 0; v < n; ++v)
                if (rng() % 2 == 0)
                    nodes.push_back(v);
            if (nodes.empty())
                nodes.push_back(static_cast<int>(rng() % n));
            DirectedGraph sub = materialize(induced_subgraph(g, nodes));
            if (exact_capacity(sub).value > whole)
                ++violations;
            ++pairs;
        }
    }
    report(11, "capacity is monotone under induced subgraphs", violations == 0,
           std::to_string(pairs) + " pairs, " + std::to_string(violations) + " violations");
}

} // namespace

int main() {
    criterion_1_hypercube();
    criterion_2_petersen();
    criterion_3_complete_graphs();
    criteria_4_5_oracle_and_sandwich();
    criterion_6_peeling_lemma();
    criterion_7_lll_soundness();
    criterion_8_dense_trend();
    criterion_9_near_complete_trend();
    criterion_10_codec_round_trip();
    criterion_11_monotonicity();

    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
