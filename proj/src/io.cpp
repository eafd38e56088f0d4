#include "subdp/io.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "subdp/bounds.hpp"
#include "subdp/lll.hpp"

namespace subdp {

namespace {

struct Line {
    int number; // 1-based position in the original text
    std::string text;
};

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw input_error("line " + std::to_string(line) + ": " + msg);
}

// Content lines with comments and blanks stripped.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++number;
        std::string_view raw = text.substr(pos, end - pos);
        if (size_t hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        size_t a = raw.find_first_not_of(" \t\r");
        if (a != std::string_view::npos) {
            size_t b = raw.find_last_not_of(" \t\r");
            lines.push_back(Line{number, std::string(raw.substr(a, b - a + 1))});
        }
        if (end == text.size())
            break;
        pos = end + 1;
    }
    return lines;
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t)
        out.push_back(t);
    return out;
}

long long parse_int(const std::string& tok, int line, const char* what) {
    try {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size())
            parse_fail(line, std::string("bad ") + what + " '" + tok + "'");
        return v;
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        parse_fail(line, std::string("bad ") + what + " '" + tok + "'");
    }
}

// All undirected pairs u < v in lexicographic order.
std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    return pairs;
}

// Partial Fisher-Yates: after the call the first `take` entries are a
// uniform sample without replacement.
void sample_prefix(std::vector<std::pair<int, int>>& pairs, size_t take, Rng& rng) {
    for (size_t i = 0; i < take; ++i) {
        size_t j = i + static_cast<size_t>(rng() % (pairs.size() - i));
        std::swap(pairs[i], pairs[j]);
    }
}

DirectedGraph from_undirected(int n, std::span<const std::pair<int, int>> pairs) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(pairs.size() * 2);
    for (const auto& [u, v] : pairs) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return DirectedGraph(n, arcs);
}

} // namespace

DirectedGraph parse_graph(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty())
        throw input_error("line 1: empty graph file");

    auto header = tokens(lines[0].text);
    if (header.size() != 3 || (header[0] != "digraph" && header[0] != "bigraph"))
        parse_fail(lines[0].number, "expected header '<digraph|bigraph> <n> <lines>'");
    bool both_directions = header[0] == "bigraph";
    long long n = parse_int(header[1], lines[0].number, "node count");
    long long declared = parse_int(header[2], lines[0].number, "edge line count");
    if (n < 1 || n > 1'000'000)
        parse_fail(lines[0].number, "node count " + header[1] + " out of range");
    if (declared < 0)
        parse_fail(lines[0].number, "negative edge line count");
    if (static_cast<long long>(lines.size()) - 1 != declared)
        parse_fail(lines[0].number, "header declares " + std::to_string(declared) +
                                        " edge lines, file has " +
                                        std::to_string(lines.size() - 1));

    std::vector<std::pair<int, int>> arcs;
    for (size_t i = 1; i < lines.size(); ++i) {
        auto toks = tokens(lines[i].text);
        if (toks.size() != 2)
            parse_fail(lines[i].number, "expected 'u v'");
        long long u = parse_int(toks[0], lines[i].number, "node id");
        long long v = parse_int(toks[1], lines[i].number, "node id");
        if (u < 0 || u >= n || v < 0 || v >= n)
            parse_fail(lines[i].number, "node id out of range");
        if (u == v)
            parse_fail(lines[i].number, "self-loop on node " + toks[0]);
        arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
        if (both_directions)
            arcs.emplace_back(static_cast<int>(v), static_cast<int>(u));
    }
    return DirectedGraph(static_cast<int>(n), arcs);
}

std::string serialize_graph(const DirectedGraph& g) {
    std::ostringstream out;
    if (is_bidirectional(g)) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& [u, v] : g.arcs())
            if (u < v)
                pairs.emplace_back(u, v);
        out << "bigraph " << g.node_count() << ' ' << pairs.size() << '\n';
        for (const auto& [u, v] : pairs)
            out << u << ' ' << v << '\n';
    } else {
        auto arcs = g.arcs();
        out << "digraph " << g.node_count() << ' ' << arcs.size() << '\n';
        for (const auto& [u, v] : arcs)
            out << u << ' ' << v << '\n';
    }
    return out.str();
}

DirectedGraph gen_dense_bidirectional(const EnsembleConfig& cfg) {
    if (cfg.n < 1)
        throw input_error("ensemble needs at least one node");
    if (!(cfg.alpha > 0.0) || cfg.alpha > 1.0)
        throw input_error("alpha must lie in (0, 1]");

    auto max_pairs = static_cast<long long>(cfg.n) * (cfg.n - 1) / 2;
    auto want = static_cast<long long>(
        std::floor(cfg.alpha * static_cast<double>(cfg.n) * cfg.n / 2.0));
    auto take = std::min(want, max_pairs); // capped at the complete graph

    auto pairs = all_pairs(cfg.n);
    Rng rng(cfg.seed);
    sample_prefix(pairs, static_cast<size_t>(take), rng);
    pairs.resize(static_cast<size_t>(take));
    return from_undirected(cfg.n, pairs);
}

DirectedGraph gen_near_complete_bidirectional(int n, int removed, std::uint64_t seed) {
    if (n < 1)
        throw input_error("ensemble needs at least one node");
    auto max_pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (removed < 0 || removed > max_pairs)
        throw input_error("cannot remove " + std::to_string(removed) + " of " +
                          std::to_string(max_pairs) + " edges");

    auto pairs = all_pairs(n);
    Rng rng(seed);
    sample_prefix(pairs, static_cast<size_t>(removed), rng);
    pairs.erase(pairs.begin(), pairs.begin() + removed);
    return from_undirected(n, pairs);
}

std::string serialize_codec(const Codec& codec) {
    std::ostringstream out;
    out << "codec " << codec.states().size() << ' ' << codec.alphabet_size() << '\n';
    for (size_t i = 0; i < codec.states().size(); ++i) {
        out << codec.states()[i] << ' ' << codec.decode_by_index(static_cast<int>(i));
        const auto& row = codec.next_by_index(static_cast<int>(i));
        for (int m = 1; m <= codec.alphabet_size(); ++m)
            out << ' ' << m << "->" << row[m - 1];
        out << '\n';
    }
    return out.str();
}

Codec parse_codec(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty())
        throw input_error("line 1: empty codec file");

    auto header = tokens(lines[0].text);
    if (header.size() != 3 || header[0] != "codec")
        parse_fail(lines[0].number, "expected header 'codec <n-states> <ell>'");
    long long n_states = parse_int(header[1], lines[0].number, "state count");
    long long ell = parse_int(header[2], lines[0].number, "alphabet size");
    if (n_states < 1 || ell < 1)
        parse_fail(lines[0].number, "state count and alphabet must be positive");
    if (static_cast<long long>(lines.size()) - 1 != n_states)
        parse_fail(lines[0].number, "header declares " + std::to_string(n_states) +
                                        " states, file has " + std::to_string(lines.size() - 1));

    std::vector<int> states, decode;
    std::vector<std::vector<int>> next;
    for (size_t i = 1; i < lines.size(); ++i) {
        auto toks = tokens(lines[i].text);
        if (static_cast<long long>(toks.size()) != 2 + ell)
            parse_fail(lines[i].number, "expected 'state decode' plus " + std::to_string(ell) +
                                            " transitions");
        states.push_back(static_cast<int>(parse_int(toks[0], lines[i].number, "state id")));
        decode.push_back(static_cast<int>(parse_int(toks[1], lines[i].number, "decode value")));
        std::vector<int> row;
        for (int m = 1; m <= ell; ++m) {
            const std::string& t = toks[1 + m];
            size_t arrow = t.find("->");
            if (arrow == std::string::npos)
                parse_fail(lines[i].number, "expected 'm->s', got '" + t + "'");
            long long msg = parse_int(t.substr(0, arrow), lines[i].number, "message");
            if (msg != m)
                parse_fail(lines[i].number, "transitions out of order: expected message " +
                                                std::to_string(m));
            row.push_back(
                static_cast<int>(parse_int(t.substr(arrow + 2), lines[i].number, "state id")));
        }
        next.push_back(std::move(row));
    }

    // sort rows by state id so from_tables sees its canonical order
    std::vector<size_t> idx(states.size());
    for (size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return states[a] < states[b]; });
    std::vector<int> s2, d2;
    std::vector<std::vector<int>> n2;
    for (size_t i : idx) {
        s2.push_back(states[i]);
        d2.push_back(decode[i]);
        n2.push_back(std::move(next[i]));
    }
    return Codec::from_tables(std::move(s2), static_cast<int>(ell), std::move(d2),
                              std::move(n2));
}

std::string serialize_coloring(const Coloring& col) {
    std::ostringstream out;
    out << "coloring " << col.domain.size() << ' ' << col.ell << '\n';
    for (size_t i = 0; i < col.domain.size(); ++i)
        out << col.domain[i] << ' ' << col.colors[i] << '\n';
    return out.str();
}

Coloring parse_coloring(const DirectedGraph& g, std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty())
        throw input_error("line 1: empty coloring file");

    auto header = tokens(lines[0].text);
    if (header.size() != 3 || header[0] != "coloring")
        parse_fail(lines[0].number, "expected header 'coloring <entries> <ell>'");
    long long entries = parse_int(header[1], lines[0].number, "entry count");
    long long ell = parse_int(header[2], lines[0].number, "color count");
    if (entries < 1 || ell < 1)
        parse_fail(lines[0].number, "entry count and colors must be positive");
    if (static_cast<long long>(lines.size()) - 1 != entries)
        parse_fail(lines[0].number, "header declares " + std::to_string(entries) +
                                        " entries, file has " + std::to_string(lines.size() - 1));

    std::vector<int> domain, colors;
    for (size_t i = 1; i < lines.size(); ++i) {
        auto toks = tokens(lines[i].text);
        if (toks.size() != 2)
            parse_fail(lines[i].number, "expected 'node color'");
        long long v = parse_int(toks[0], lines[i].number, "node id");
        long long c = parse_int(toks[1], lines[i].number, "color");
        if (v < 0 || v >= g.node_count())
            parse_fail(lines[i].number, "node id out of range for the graph");
        domain.push_back(static_cast<int>(v));
        colors.push_back(static_cast<int>(c));
    }
    return make_coloring(std::move(domain), std::move(colors), static_cast<int>(ell));
}

std::vector<BenchRow> bench_asymptotics(BenchMode mode, const std::vector<int>& n_list,
                                        double alpha, int seeds, std::uint64_t base_seed) {
    if (seeds < 1)
        throw input_error("need at least one seed per point");
    if (n_list.empty())
        throw input_error("empty n list");

    std::vector<BenchRow> rows;
    for (int n : n_list) {
        double sum_ell = 0.0;
        double sum_lower = 0.0;
        for (int i = 0; i < seeds; ++i) {
            std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
            DirectedGraph g = mode == BenchMode::Dense
                                  ? gen_dense_bidirectional({n, alpha, seed, 1})
                                  : gen_near_complete_bidirectional(n, (n + 1) / 2, seed);
            CapacityReport rep = approx_capacity(g, seed);
            sum_ell += rep.value;
            sum_lower += turan_clique_lower_bound(g);
        }
        BenchRow row;
        row.n = n;
        row.mean_ell = sum_ell / seeds;
        row.mean_lower = sum_lower / seeds;
        row.stat = mode == BenchMode::Dense ? row.mean_ell * std::log(n) / n
                                            : row.mean_lower / n;
        rows.push_back(row);
    }
    return rows;
}

} // namespace subdp
