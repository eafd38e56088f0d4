// Command-line front end for the subdp library. Talks to the shared
// library strictly through the C interface in subdp.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <subdp.h>

namespace {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

int fail_with(subdp_status status) {
    std::cerr << "error: " << subdp_last_error() << "\n";
    switch (status) {
    case SUBDP_ERR_REFUSED: return 1;
    case SUBDP_ERR_INPUT: return 2;
    case SUBDP_ERR_FAILED: return 3;
    default: return 4;
    }
}

#define CHECK(call)                                                                              \
    do {                                                                                         \
        subdp_status status_ = (call);                                                           \
        if (status_ != SUBDP_OK)                                                                 \
            return fail_with(status_);                                                           \
    } while (0)

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        std::exit(2);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string join(const std::vector<int32_t>& xs) {
    std::ostringstream out;
    for (size_t i = 0; i < xs.size(); ++i)
        out << (i ? " " : "") << xs[i];
    return out.str();
}

void print_kv(const KeyValues& kv) {
    for (const auto& [k, v] : kv)
        std::cout << k << ": " << v << "\n";
}

// Machine-readable run report: one self-describing key/value document.
void write_report(const std::string& path, const std::string& command, const KeyValues& kv) {
    if (path.empty())
        return;
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write report '" << path << "'\n";
        std::exit(2);
    }
    out << "subdp_report: 1\n";
    out << "command: " << command << "\n";
    for (const auto& [k, v] : kv)
        out << k << ": " << v << "\n";
}

struct GraphHandle {
    subdp_graph* g = nullptr;
    ~GraphHandle() { subdp_graph_free(g); }
};

int load_graph(const std::string& path, GraphHandle& gh, KeyValues& kv) {
    std::string text = read_file(path);
    CHECK(subdp_graph_parse(text.c_str(), &gh.g));
    kv.emplace_back("graph.n", std::to_string(subdp_graph_n(gh.g)));
    kv.emplace_back("graph.arcs", std::to_string(subdp_graph_arc_count(gh.g)));
    kv.emplace_back("graph.bidirectional",
                    subdp_graph_is_bidirectional(gh.g) ? "true" : "false");
    return -1; // keep going
}

const char* lower_witness_name(int32_t w) {
    switch (w) {
    case SUBDP_LOWER_LLL: return "lll";
    case SUBDP_LOWER_TURAN: return "turan";
    default: return "trivial";
    }
}

const char* upper_witness_name(int32_t w) {
    return w == SUBDP_UPPER_KCORE ? "kcore" : "degree";
}

void append_bracket(KeyValues& kv, const subdp_bracket& b) {
    kv.emplace_back("bracket.lower", std::to_string(b.lower));
    kv.emplace_back("bracket.upper", std::to_string(b.upper));
    kv.emplace_back("bracket.lower_witness", lower_witness_name(b.lower_witness));
    kv.emplace_back("bracket.upper_witness", upper_witness_name(b.upper_witness));
}

int append_report_fields(subdp_report* rep, KeyValues& kv) {
    kv.emplace_back("capacity", std::to_string(subdp_report_value(rep)));
    kv.emplace_back("exact", subdp_report_is_exact(rep) ? "true" : "false");
    subdp_bracket b;
    CHECK(subdp_report_bracket(rep, &b));
    append_bracket(kv, b);
    size_t len = subdp_report_witness_size(rep);
    std::vector<int32_t> nodes(len), colors(len);
    CHECK(subdp_report_witness(rep, nodes.data(), colors.data(), len, &len));
    kv.emplace_back("witness.size", std::to_string(len));
    kv.emplace_back("witness.nodes", join(nodes));
    kv.emplace_back("witness.colors", join(colors));
    return -1;
}

int cmd_bounds(const std::string& file, const std::string& report) {
    KeyValues kv;
    GraphHandle gh;
    if (int rc = load_graph(file, gh, kv); rc >= 0)
        return rc;

    int32_t deg = 0, core = 0;
    CHECK(subdp_degree_upper_bound(gh.g, &deg));
    CHECK(subdp_kcore_upper_bound(gh.g, &core));
    kv.emplace_back("upper(degree)", std::to_string(deg));
    kv.emplace_back("upper(kcore)", std::to_string(core));

    if (subdp_graph_is_bidirectional(gh.g)) {
        int32_t turan = 0;
        CHECK(subdp_turan_lower_bound(gh.g, &turan));
        kv.emplace_back("lower(turan)", std::to_string(turan));
    }

    size_t len = 0;
    subdp_peel* peel = nullptr;
    CHECK(subdp_peel_run(gh.g, &peel));
    subdp_peel_terminal(peel, nullptr, 0, &len);
    std::vector<int32_t> terminal(len);
    CHECK(subdp_peel_terminal(peel, terminal.data(), len, &len));
    subdp_peel_free(peel);
    int32_t lll_peel = 0;
    CHECK(subdp_lll_lower_bound(gh.g, terminal.data(), terminal.size(), &lll_peel));
    kv.emplace_back("lower(lll.peel)", std::to_string(lll_peel));

    int32_t k = 0;
    CHECK(subdp_max_core(gh.g, &k, nullptr, 0, &len));
    std::vector<int32_t> core_nodes(len);
    CHECK(subdp_max_core(gh.g, &k, core_nodes.data(), len, &len));
    int32_t lll_core = 0;
    CHECK(subdp_lll_lower_bound(gh.g, core_nodes.data(), core_nodes.size(), &lll_core));
    kv.emplace_back("lower(lll.core)", std::to_string(lll_core));

    subdp_bracket b;
    CHECK(subdp_capacity_bracket(gh.g, &b));
    kv.emplace_back("lower", std::to_string(b.lower));
    kv.emplace_back("upper", std::to_string(b.upper));
    kv.emplace_back("lower_witness", lower_witness_name(b.lower_witness));
    kv.emplace_back("upper_witness", upper_witness_name(b.upper_witness));

    print_kv(kv);
    write_report(report, "bounds", kv);
    return 0;
}

int cmd_exact(const std::string& file, int limit, const std::string& report) {
    KeyValues kv;
    GraphHandle gh;
    if (int rc = load_graph(file, gh, kv); rc >= 0)
        return rc;
    subdp_report* rep = nullptr;
    CHECK(subdp_exact_capacity(gh.g, limit, &rep));
    if (int rc = append_report_fields(rep, kv); rc >= 0) {
        subdp_report_free(rep);
        return rc;
    }
    subdp_report_free(rep);
    print_kv(kv);
    write_report(report, "exact", kv);
    return 0;
}

int cmd_approx(const std::string& file, std::uint64_t seed, const std::string& report) {
    KeyValues kv;
    GraphHandle gh;
    if (int rc = load_graph(file, gh, kv); rc >= 0)
        return rc;
    subdp_report* rep = nullptr;
    CHECK(subdp_approx_capacity(gh.g, seed, &rep));
    kv.emplace_back("seed", std::to_string(seed));
    kv.emplace_back("target_ell", std::to_string(subdp_report_target_ell(rep)));
    kv.emplace_back("target_degraded", subdp_report_target_degraded(rep) ? "true" : "false");
    if (int rc = append_report_fields(rep, kv); rc >= 0) {
        subdp_report_free(rep);
        return rc;
    }
    subdp_report_free(rep);
    print_kv(kv);
    write_report(report, "approx", kv);
    return 0;
}

int cmd_peel(const std::string& file, const std::string& report) {
    KeyValues kv;
    GraphHandle gh;
    if (int rc = load_graph(file, gh, kv); rc >= 0)
        return rc;

    int64_t num = 0, den = 1;
    CHECK(subdp_graph_avg_out_degree(gh.g, &num, &den));
    kv.emplace_back("eps_out", std::to_string(num) + "/" + std::to_string(den));

    subdp_peel* peel = nullptr;
    CHECK(subdp_peel_run(gh.g, &peel));
    size_t steps = subdp_peel_step_count(peel);
    kv.emplace_back("steps", std::to_string(steps));
    for (size_t i = 0; i < steps; ++i) {
        int32_t node = 0, dout = 0;
        int64_t en = 0, ed = 1;
        subdp_peel_step(peel, i, &node, &dout, &en, &ed);
        std::ostringstream line;
        line << "node=" << node << " d_out=" << dout << " eps=" << en << "/" << ed;
        kv.emplace_back("step." + std::to_string(i), line.str());
    }
    size_t len = 0;
    subdp_peel_terminal(peel, nullptr, 0, &len);
    std::vector<int32_t> terminal(len);
    CHECK(subdp_peel_terminal(peel, terminal.data(), len, &len));
    kv.emplace_back("terminal.size", std::to_string(len));
    kv.emplace_back("terminal.nodes", join(terminal));
    kv.emplace_back("degenerate", subdp_peel_degenerate(peel) ? "true" : "false");
    subdp_peel_free(peel);

    print_kv(kv);
    write_report(report, "peel", kv);
    return 0;
}

int cmd_color(const std::string& file, int colors, std::uint64_t seed, std::int64_t max_rounds,
              const std::string& report) {
    KeyValues kv;
    GraphHandle gh;
    std::string text = read_file(file);
    CHECK(subdp_graph_parse(text.c_str(), &gh.g));

    subdp_coloring* col = nullptr;
    subdp_mt_log log{};
    subdp_status status =
        subdp_moser_tardos(gh.g, nullptr, 0, colors, seed, max_rounds, &col, &log);
    if (status != SUBDP_OK && status != SUBDP_ERR_FAILED)
        return fail_with(status);

    kv.emplace_back("ell", std::to_string(colors));
    kv.emplace_back("seed", std::to_string(seed));
    kv.emplace_back("rounds", std::to_string(log.rounds));
    kv.emplace_back("succeeded", log.succeeded ? "true" : "false");

    // metadata as comments so stdout stays a loadable coloring file
    for (const auto& [k, v] : kv)
        std::cout << "# " << k << ": " << v << "\n";
    if (status == SUBDP_ERR_FAILED) {
        write_report(report, "color", kv);
        std::cerr << "error: " << subdp_last_error() << "\n";
        return 3;
    }

    char* doc = nullptr;
    CHECK(subdp_coloring_serialize(col, &doc));
    std::cout << doc;
    subdp_string_free(doc);

    size_t len = 0;
    subdp_coloring_entries(col, nullptr, nullptr, 0, &len);
    std::vector<int32_t> nodes(len), cs(len);
    CHECK(subdp_coloring_entries(col, nodes.data(), cs.data(), len, &len));
    kv.emplace_back("coloring.nodes", join(nodes));
    kv.emplace_back("coloring.colors", join(cs));
    subdp_coloring_free(col);

    write_report(report, "color", kv);
    return 0;
}

int cmd_codec(const std::string& file, const std::string& coloring_file,
              const std::string& report) {
    KeyValues kv;
    GraphHandle gh;
    std::string text = read_file(file);
    CHECK(subdp_graph_parse(text.c_str(), &gh.g));

    std::string col_text = read_file(coloring_file);
    subdp_coloring* col = nullptr;
    CHECK(subdp_coloring_parse(gh.g, col_text.c_str(), &col));

    subdp_codec* codec = nullptr;
    subdp_status status = subdp_codec_build(gh.g, col, &codec);
    subdp_coloring_free(col);
    if (status != SUBDP_OK)
        return fail_with(status);

    kv.emplace_back("states", std::to_string(subdp_codec_state_count(codec)));
    kv.emplace_back("ell", std::to_string(subdp_codec_alphabet(codec)));
    for (const auto& [k, v] : kv)
        std::cout << "# " << k << ": " << v << "\n";

    char* doc = nullptr;
    CHECK(subdp_codec_serialize(codec, &doc));
    std::cout << doc;
    subdp_string_free(doc);
    subdp_codec_free(codec);

    write_report(report, "codec", kv);
    return 0;
}

int cmd_simulate(const std::string& codec_file, int start, bool start_set,
                 const std::vector<std::string>& messages_spec, std::uint64_t seed,
                 const std::string& report) {
    KeyValues kv;
    std::string text = read_file(codec_file);
    subdp_codec* codec = nullptr;
    CHECK(subdp_codec_parse(text.c_str(), &codec));

    size_t n_states = 0;
    subdp_codec_states(codec, nullptr, 0, &n_states);
    std::vector<int32_t> states(n_states);
    CHECK(subdp_codec_states(codec, states.data(), n_states, &n_states));
    int32_t ell = subdp_codec_alphabet(codec);

    if (!start_set)
        start = states.front();

    std::vector<int32_t> messages;
    if (!messages_spec.empty() && messages_spec[0] == "random") {
        long count = 10000;
        if (messages_spec.size() > 1)
            count = std::stol(messages_spec[1]);
        std::mt19937_64 rng(seed);
        messages.reserve(count);
        for (long i = 0; i < count; ++i)
            messages.push_back(1 + static_cast<int32_t>(rng() % ell));
    } else {
        std::istringstream in(read_file(messages_spec[0]));
        long m = 0;
        while (in >> m)
            messages.push_back(static_cast<int32_t>(m));
    }

    std::vector<int32_t> trajectory(messages.size());
    subdp_status status = subdp_codec_simulate(codec, start, messages.data(), messages.size(),
                                               trajectory.data());
    subdp_codec_free(codec);
    if (status != SUBDP_OK)
        return fail_with(status);

    kv.emplace_back("start", std::to_string(start));
    kv.emplace_back("steps", std::to_string(messages.size()));
    kv.emplace_back("decode_errors", "0");
    kv.emplace_back("illegal_transitions", "0");
    kv.emplace_back("final_state", std::to_string(messages.empty() ? start : trajectory.back()));

    print_kv(kv);
    write_report(report, "simulate", kv);
    return 0;
}

int cmd_bench(const std::string& n_list, double alpha, int seeds, std::uint64_t base_seed,
              const std::string& mode, const std::string& report) {
    std::vector<int32_t> ns;
    std::istringstream in(n_list);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty())
            ns.push_back(std::stoi(tok));
    if (ns.empty()) {
        std::cerr << "error: empty --n-list\n";
        return 2;
    }

    int mode_id = mode == "near-complete" ? 1 : 0;
    std::vector<subdp_bench_row> rows(ns.size());
    CHECK(subdp_bench(mode_id, ns.data(), ns.size(), alpha, seeds, base_seed, rows.data()));

    KeyValues kv;
    kv.emplace_back("mode", mode);
    kv.emplace_back("alpha", fmt_double(alpha));
    kv.emplace_back("seeds", std::to_string(seeds));
    kv.emplace_back("base_seed", std::to_string(base_seed));
    for (const auto& row : rows) {
        std::string p = "row." + std::to_string(row.n) + ".";
        kv.emplace_back(p + "mean_ell", fmt_double(row.mean_ell));
        kv.emplace_back(p + "mean_lower", fmt_double(row.mean_lower));
        kv.emplace_back(p + "stat", fmt_double(row.stat));
    }

    print_kv(kv);
    write_report(report, "bench", kv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"writing capacity of state-transition graphs (subgraph domatic partition)"};
    app.require_subcommand(1);

    std::string file, report, coloring_file, codec_file;
    std::string n_list = "64,128,256";
    std::string mode = "dense";
    std::vector<std::string> messages_spec;
    int limit = 0;
    int colors = 1;
    int start = 0;
    int seeds = 5;
    std::uint64_t seed = 1;
    std::int64_t max_rounds = 0;
    double alpha = 0.25;

    auto* bounds = app.add_subcommand("bounds", "closed-form capacity bracket");
    bounds->add_option("file", file, "graph file")->required();
    bounds->add_option("--report", report, "write machine-readable report");

    auto* exact = app.add_subcommand("exact", "exact capacity by subgraph search");
    exact->add_option("file", file, "graph file")->required();
    exact->add_option("--limit", limit, "node-count guard override (default 16)");
    exact->add_option("--report", report, "write machine-readable report");

    auto* approx = app.add_subcommand("approx", "randomized local-lemma approximation");
    approx->add_option("file", file, "graph file")->required();
    approx->add_option("--seed", seed, "RNG seed");
    approx->add_option("--report", report, "write machine-readable report");

    auto* peel = app.add_subcommand("peel", "half-average-degree peeling sequence");
    peel->add_option("file", file, "graph file")->required();
    peel->add_option("--report", report, "write machine-readable report");

    auto* color = app.add_subcommand("color", "resampling search for a valid coloring");
    color->add_option("file", file, "graph file")->required();
    color->add_option("--colors", colors, "number of colors")->required();
    color->add_option("--seed", seed, "RNG seed");
    color->add_option("--max-rounds", max_rounds, "resampling budget (default 10*n*colors)");
    color->add_option("--report", report, "write machine-readable report");

    auto* codec = app.add_subcommand("codec", "build encoder/decoder tables from a coloring");
    codec->add_option("file", file, "graph file")->required();
    codec->add_option("--coloring", coloring_file, "coloring file")->required();
    codec->add_option("--report", report, "write machine-readable report");

    auto* simulate = app.add_subcommand("simulate", "drive a codec over a message sequence");
    simulate->add_option("codec", codec_file, "codec file")->required();
    auto* start_opt = simulate->add_option("--start", start, "initial state (default: lowest)");
    simulate->add_option("--messages", messages_spec,
                         "message file, or 'random N' for N seeded uniform messages")
        ->required()
        ->expected(1, 2);
    simulate->add_option("--seed", seed, "RNG seed for random messages");
    simulate->add_option("--report", report, "write machine-readable report");

    auto* bench = app.add_subcommand("bench", "seeded ensemble sweep");
    bench->add_option("--n-list", n_list, "comma-separated node counts");
    bench->add_option("--alpha", alpha, "edge-density constant (dense mode)");
    bench->add_option("--seeds", seeds, "graphs per point");
    bench->add_option("--seed", seed, "base seed");
    bench->add_option("--mode", mode, "dense | near-complete")
        ->check(CLI::IsMember({"dense", "near-complete"}));
    bench->add_option("--report", report, "write machine-readable report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bounds->parsed())
            return cmd_bounds(file, report);
        if (exact->parsed())
            return cmd_exact(file, limit, report);
        if (approx->parsed())
            return cmd_approx(file, seed, report);
        if (peel->parsed())
            return cmd_peel(file, report);
        if (color->parsed())
            return cmd_color(file, colors, seed, max_rounds, report);
        if (codec->parsed())
            return cmd_codec(file, coloring_file, report);
        if (simulate->parsed())
            return cmd_simulate(codec_file, start, start_opt->count() > 0, messages_spec, seed,
                                report);
        if (bench->parsed())
            return cmd_bench(n_list, alpha, seeds, seed, mode, report);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
