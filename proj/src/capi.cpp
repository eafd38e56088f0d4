#include "subdp.h"

#include <cstring>
#include <string>
#include <vector>

#include "subdp/bounds.hpp"
#include "subdp/codec.hpp"
#include "subdp/coloring.hpp"
#include "subdp/exact.hpp"
#include "subdp/graph.hpp"
#include "subdp/io.hpp"
#include "subdp/lll.hpp"
#include "subdp/subgraph.hpp"

struct subdp_graph {
    subdp::DirectedGraph g;
};

struct subdp_peel {
    std::vector<subdp::PeelStep> removed;
    std::vector<int> terminal;
    bool degenerate;
};

struct subdp_report {
    int value;
    bool exact;
    subdp::CapacityBracket bracket;
    int target_ell;
    bool target_degraded;
    std::vector<int> witness_nodes;
    std::vector<int> witness_colors;
};

struct subdp_coloring {
    subdp::Coloring c;
};

struct subdp_codec {
    subdp::Codec c;
};

namespace {

thread_local std::string t_last_error;

subdp_status set_error(subdp_status s, const char* what) {
    t_last_error = what;
    return s;
}

template <typename F>
subdp_status guarded(F&& body) {
    try {
        return body();
    } catch (const subdp::refusal_error& e) {
        return set_error(SUBDP_ERR_REFUSED, e.what());
    } catch (const subdp::input_error& e) {
        return set_error(SUBDP_ERR_INPUT, e.what());
    } catch (const subdp::internal_error& e) {
        return set_error(SUBDP_ERR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return set_error(SUBDP_ERR_INTERNAL, e.what());
    }
}

subdp_status copy_out(const std::vector<int>& src, int32_t* dst, size_t cap, size_t* len) {
    if (!len)
        return set_error(SUBDP_ERR_INPUT, "null length pointer");
    *len = src.size();
    if (!dst || cap < src.size())
        return cap == 0 && !dst ? SUBDP_OK
                                : set_error(SUBDP_ERR_INPUT, "buffer too small");
    for (size_t i = 0; i < src.size(); ++i)
        dst[i] = src[i];
    return SUBDP_OK;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// subset == NULL with len == 0 means "whole graph"
subdp::SubgraphSelection make_selection(const subdp::DirectedGraph& g, const int32_t* subset,
                                        size_t len) {
    if (!subset && len == 0)
        return subdp::full_selection(g);
    if (!subset)
        throw subdp::input_error("null subset with nonzero length");
    std::vector<int> nodes(subset, subset + len);
    return subdp::SubgraphSelection(g, nodes);
}

subdp_report* report_from(const subdp::CapacityReport& rep) {
    auto* out = new subdp_report;
    out->value = rep.value;
    out->exact = rep.exact;
    out->bracket = rep.bracket;
    out->target_ell = rep.target_ell;
    out->target_degraded = rep.target_degraded;
    out->witness_nodes = rep.witness_coloring.domain;
    out->witness_colors = rep.witness_coloring.colors;
    return out;
}

void fill_bracket(const subdp::CapacityBracket& b, subdp_bracket* out) {
    out->lower = b.lower;
    out->upper = b.upper;
    switch (b.lower_witness) {
    case subdp::LowerWitness::Trivial: out->lower_witness = SUBDP_LOWER_TRIVIAL; break;
    case subdp::LowerWitness::Lll: out->lower_witness = SUBDP_LOWER_LLL; break;
    case subdp::LowerWitness::Turan: out->lower_witness = SUBDP_LOWER_TURAN; break;
    }
    out->upper_witness =
        b.upper_witness == subdp::UpperWitness::Degree ? SUBDP_UPPER_DEGREE : SUBDP_UPPER_KCORE;
}

} // namespace

extern "C" {

const char* subdp_version(void) {
    return "0.1.0";
}

const char* subdp_last_error(void) {
    return t_last_error.c_str();
}

void subdp_string_free(char* s) {
    delete[] s;
}

/* ---- graphs ------------------------------------------------------- */

subdp_status subdp_graph_build(int32_t n, const int32_t* arcs, size_t arc_count,
                               subdp_graph** out) {
    if (!out || (arc_count > 0 && !arcs))
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        std::vector<std::pair<int, int>> pairs(arc_count);
        for (size_t i = 0; i < arc_count; ++i)
            pairs[i] = {arcs[2 * i], arcs[2 * i + 1]};
        *out = new subdp_graph{subdp::DirectedGraph(n, pairs)};
        return SUBDP_OK;
    });
}

subdp_status subdp_graph_parse(const char* text, subdp_graph** out) {
    if (!text || !out)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        *out = new subdp_graph{subdp::parse_graph(text)};
        return SUBDP_OK;
    });
}

subdp_status subdp_graph_serialize(const subdp_graph* g, char** out_text) {
    if (!g || !out_text)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        *out_text = dup_string(subdp::serialize_graph(g->g));
        return SUBDP_OK;
    });
}

subdp_status subdp_graph_gen_dense(int32_t n, double alpha, uint64_t seed, subdp_graph** out) {
    if (!out)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        *out = new subdp_graph{subdp::gen_dense_bidirectional({n, alpha, seed, 1})};
        return SUBDP_OK;
    });
}

subdp_status subdp_graph_gen_near_complete(int32_t n, int32_t removed_edges, uint64_t seed,
                                           subdp_graph** out) {
    if (!out)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        *out = new subdp_graph{subdp::gen_near_complete_bidirectional(n, removed_edges, seed)};
        return SUBDP_OK;
    });
}

void subdp_graph_free(subdp_graph* g) {
    delete g;
}

int32_t subdp_graph_n(const subdp_graph* g) {
    return g ? g->g.node_count() : 0;
}

int64_t subdp_graph_arc_count(const subdp_graph* g) {
    return g ? g->g.arc_count() : 0;
}

int subdp_graph_is_bidirectional(const subdp_graph* g) {
    return g && subdp::is_bidirectional(g->g) ? 1 : 0;
}

subdp_status subdp_graph_degree_stats(const subdp_graph* g, int32_t stats[4]) {
    if (!g || !stats)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        subdp::DegreeStats s = subdp::degree_stats(g->g);
        stats[0] = s.min_out;
        stats[1] = s.max_out;
        stats[2] = s.min_in;
        stats[3] = s.max_in;
        return SUBDP_OK;
    });
}

subdp_status subdp_graph_avg_out_degree(const subdp_graph* g, int64_t* num, int64_t* den) {
    if (!g || !num || !den)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        subdp::Rational r = subdp::avg_out_degree(g->g);
        *num = r.num;
        *den = r.den;
        return SUBDP_OK;
    });
}

/* ---- subgraph selection ------------------------------------------- */

subdp_status subdp_peel_run(const subdp_graph* g, subdp_peel** out) {
    if (!g || !out)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        subdp::PeelTrace trace = subdp::peel_half_average(g->g);
        *out = new subdp_peel{std::move(trace.removed), trace.terminal.nodes(),
                              trace.degenerate};
        return SUBDP_OK;
    });
}

void subdp_peel_free(subdp_peel* p) {
    delete p;
}

size_t subdp_peel_step_count(const subdp_peel* p) {
    return p ? p->removed.size() : 0;
}

subdp_status subdp_peel_step(const subdp_peel* p, size_t i, int32_t* node, int32_t* out_degree,
                             int64_t* eps_num, int64_t* eps_den) {
    if (!p || !node || !out_degree || !eps_num || !eps_den)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    if (i >= p->removed.size())
        return set_error(SUBDP_ERR_INPUT, "peel step index out of range");
    *node = p->removed[i].node;
    *out_degree = p->removed[i].out_degree;
    *eps_num = p->removed[i].eps_out.num;
    *eps_den = p->removed[i].eps_out.den;
    return SUBDP_OK;
}

int subdp_peel_degenerate(const subdp_peel* p) {
    return p && p->degenerate ? 1 : 0;
}

subdp_status subdp_peel_terminal(const subdp_peel* p, int32_t* nodes, size_t cap, size_t* len) {
    if (!p)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return copy_out(p->terminal, nodes, cap, len);
}

subdp_status subdp_max_core(const subdp_graph* g, int32_t* k, int32_t* nodes, size_t cap,
                            size_t* len) {
    if (!g || !k)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        subdp::CoreResult core = subdp::max_core(g->g);
        *k = core.k;
        return copy_out(core.subgraph.nodes(), nodes, cap, len);
    });
}

/* ---- bounds -------------------------------------------------------- */

subdp_status subdp_degree_upper_bound(const subdp_graph* g, int32_t* out) {
    if (!g || !out)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        *out = subdp::degree_upper_bound(g->g);
        return SUBDP_OK;
    });
}

subdp_status subdp_kcore_upper_bound(const subdp_graph* g, int32_t* out) {
    if (!g || !out)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        *out = subdp::kcore_upper_bound(g->g);
        return SUBDP_OK;
    });
}

subdp_status subdp_turan_lower_bound(const subdp_graph* g, int32_t* out) {
    if (!g || !out)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        *out = subdp::turan_clique_lower_bound(g->g);
        return SUBDP_OK;
    });
}

subdp_status subdp_lll_lower_bound(const subdp_graph* g, const int32_t* subset,
                                   size_t subset_len, int32_t* out) {
    if (!g || !out)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        *out = subdp::lll_lower_bound(g->g, make_selection(g->g, subset, subset_len));
        return SUBDP_OK;
    });
}

subdp_status subdp_capacity_bracket(const subdp_graph* g, subdp_bracket* out) {
    if (!g || !out)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        fill_bracket(subdp::capacity_bracket(g->g), out);
        return SUBDP_OK;
    });
}

/* ---- capacity ------------------------------------------------------ */

subdp_status subdp_exact_capacity(const subdp_graph* g, int32_t node_limit, subdp_report** out) {
    if (!g || !out)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        *out = report_from(subdp::exact_capacity(g->g, node_limit));
        return SUBDP_OK;
    });
}

subdp_status subdp_approx_capacity(const subdp_graph* g, uint64_t seed, subdp_report** out) {
    if (!g || !out)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        *out = report_from(subdp::approx_capacity(g->g, seed));
        return SUBDP_OK;
    });
}

void subdp_report_free(subdp_report* r) {
    delete r;
}

int32_t subdp_report_value(const subdp_report* r) {
    return r ? r->value : 0;
}

int subdp_report_is_exact(const subdp_report* r) {
    return r && r->exact ? 1 : 0;
}

subdp_status subdp_report_bracket(const subdp_report* r, subdp_bracket* out) {
    if (!r || !out)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    fill_bracket(r->bracket, out);
    return SUBDP_OK;
}

int32_t subdp_report_target_ell(const subdp_report* r) {
    return r ? r->target_ell : 0;
}

int subdp_report_target_degraded(const subdp_report* r) {
    return r && r->target_degraded ? 1 : 0;
}

size_t subdp_report_witness_size(const subdp_report* r) {
    return r ? r->witness_nodes.size() : 0;
}

subdp_status subdp_report_witness(const subdp_report* r, int32_t* nodes, int32_t* colors,
                                  size_t cap, size_t* len) {
    if (!r)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    if (!len)
        return set_error(SUBDP_ERR_INPUT, "null length pointer");
    *len = r->witness_nodes.size();
    if (!nodes && !colors && cap == 0)
        return SUBDP_OK;
    if (!nodes || !colors || cap < r->witness_nodes.size())
        return set_error(SUBDP_ERR_INPUT, "buffer too small");
    for (size_t i = 0; i < r->witness_nodes.size(); ++i) {
        nodes[i] = r->witness_nodes[i];
        colors[i] = r->witness_colors[i];
    }
    return SUBDP_OK;
}

/* ---- colorings ----------------------------------------------------- */

subdp_status subdp_random_coloring(const subdp_graph* g, const int32_t* subset,
                                   size_t subset_len, int32_t ell, uint64_t seed,
                                   subdp_coloring** out) {
    if (!g || !out)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        auto sel = make_selection(g->g, subset, subset_len);
        *out = new subdp_coloring{subdp::random_coloring(sel, ell, seed)};
        return SUBDP_OK;
    });
}

subdp_status subdp_moser_tardos(const subdp_graph* g, const int32_t* subset, size_t subset_len,
                                int32_t ell, uint64_t seed, int64_t max_rounds,
                                subdp_coloring** out, subdp_mt_log* log) {
    if (!g || !out)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto sel = make_selection(g->g, subset, subset_len);
        if (max_rounds <= 0)
            max_rounds = 10LL * sel.size() * (ell > 0 ? ell : 1);
        auto mt = subdp::moser_tardos(sel, ell, seed, max_rounds);
        if (log) {
            log->rounds = mt.log.rounds;
            log->succeeded = mt.log.succeeded ? 1 : 0;
        }
        if (!mt.log.succeeded)
            return set_error(SUBDP_ERR_FAILED, "resampling exhausted its round budget");
        *out = new subdp_coloring{std::move(*mt.coloring)};
        return SUBDP_OK;
    });
}

subdp_status subdp_coloring_build(const subdp_graph* g, const int32_t* nodes,
                                  const int32_t* colors, size_t len, int32_t ell,
                                  subdp_coloring** out) {
    if (!g || !nodes || !colors || !out)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        std::vector<int> d(nodes, nodes + len);
        std::vector<int> c(colors, colors + len);
        for (int v : d)
            if (v < 0 || v >= g->g.node_count())
                throw subdp::input_error("node " + std::to_string(v) + " out of range");
        *out = new subdp_coloring{subdp::make_coloring(std::move(d), std::move(c), ell)};
        return SUBDP_OK;
    });
}

subdp_status subdp_coloring_parse(const subdp_graph* g, const char* text, subdp_coloring** out) {
    if (!g || !text || !out)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        *out = new subdp_coloring{subdp::parse_coloring(g->g, text)};
        return SUBDP_OK;
    });
}

subdp_status subdp_coloring_serialize(const subdp_coloring* c, char** out_text) {
    if (!c || !out_text)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        *out_text = dup_string(subdp::serialize_coloring(c->c));
        return SUBDP_OK;
    });
}

void subdp_coloring_free(subdp_coloring* c) {
    delete c;
}

size_t subdp_coloring_size(const subdp_coloring* c) {
    return c ? c->c.domain.size() : 0;
}

int32_t subdp_coloring_ell(const subdp_coloring* c) {
    return c ? c->c.ell : 0;
}

subdp_status subdp_coloring_entries(const subdp_coloring* c, int32_t* nodes, int32_t* colors,
                                    size_t cap, size_t* len) {
    if (!c || !len)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    *len = c->c.domain.size();
    if (!nodes && !colors && cap == 0)
        return SUBDP_OK;
    if (!nodes || !colors || cap < c->c.domain.size())
        return set_error(SUBDP_ERR_INPUT, "buffer too small");
    for (size_t i = 0; i < c->c.domain.size(); ++i) {
        nodes[i] = c->c.domain[i];
        colors[i] = c->c.colors[i];
    }
    return SUBDP_OK;
}

subdp_status subdp_validate_coloring(const subdp_graph* g, const subdp_coloring* c, int* valid) {
    if (!g || !c || !valid)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        subdp::SubgraphSelection sel(g->g, c->c.domain);
        *valid = subdp::validate_coloring(sel, c->c) ? 1 : 0;
        return SUBDP_OK;
    });
}

subdp_status subdp_find_violations(const subdp_graph* g, const subdp_coloring* c, int32_t* nodes,
                                   size_t cap, size_t* len) {
    if (!g || !c)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        subdp::SubgraphSelection sel(g->g, c->c.domain);
        return copy_out(subdp::find_violations(sel, c->c), nodes, cap, len);
    });
}

/* ---- codecs -------------------------------------------------------- */

subdp_status subdp_codec_build(const subdp_graph* g, const subdp_coloring* c, subdp_codec** out) {
    if (!g || !c || !out)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        subdp::SubgraphSelection sel(g->g, c->c.domain);
        *out = new subdp_codec{subdp::Codec::build(sel, c->c)};
        return SUBDP_OK;
    });
}

subdp_status subdp_codec_parse(const char* text, subdp_codec** out) {
    if (!text || !out)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        *out = new subdp_codec{subdp::parse_codec(text)};
        return SUBDP_OK;
    });
}

subdp_status subdp_codec_serialize(const subdp_codec* c, char** out_text) {
    if (!c || !out_text)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        *out_text = dup_string(subdp::serialize_codec(c->c));
        return SUBDP_OK;
    });
}

void subdp_codec_free(subdp_codec* c) {
    delete c;
}

int32_t subdp_codec_alphabet(const subdp_codec* c) {
    return c ? c->c.alphabet_size() : 0;
}

size_t subdp_codec_state_count(const subdp_codec* c) {
    return c ? c->c.states().size() : 0;
}

subdp_status subdp_codec_states(const subdp_codec* c, int32_t* states, size_t cap, size_t* len) {
    if (!c)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return copy_out(c->c.states(), states, cap, len);
}

subdp_status subdp_codec_encode(const subdp_codec* c, int32_t state, int32_t message,
                                int32_t* next) {
    if (!c || !next)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        *next = c->c.encode_step(state, message);
        return SUBDP_OK;
    });
}

subdp_status subdp_codec_decode(const subdp_codec* c, int32_t state, int32_t* message) {
    if (!c || !message)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        *message = c->c.decode_state(state);
        return SUBDP_OK;
    });
}

subdp_status subdp_codec_simulate(const subdp_codec* c, int32_t start, const int32_t* messages,
                                  size_t count, int32_t* states_out) {
    if (!c || (count > 0 && !messages))
        return set_error(SUBDP_ERR_INPUT, "null argument");
    return guarded([&] {
        std::vector<int> msgs(messages, messages + count);
        subdp::Trajectory traj = subdp::simulate(c->c, start, msgs);
        if (states_out)
            for (size_t i = 0; i < traj.steps.size(); ++i)
                states_out[i] = traj.steps[i].state;
        return SUBDP_OK;
    });
}

/* ---- benchmarks ----------------------------------------------------- */

subdp_status subdp_bench(int mode, const int32_t* ns, size_t n_count, double alpha,
                         int32_t seeds, uint64_t base_seed, subdp_bench_row* rows) {
    if (!ns || !rows || n_count == 0)
        return set_error(SUBDP_ERR_INPUT, "null argument");
    if (mode != 0 && mode != 1)
        return set_error(SUBDP_ERR_INPUT, "mode must be 0 (dense) or 1 (near-complete)");
    return guarded([&] {
        std::vector<int> n_list(ns, ns + n_count);
        auto result = subdp::bench_asymptotics(
            mode == 0 ? subdp::BenchMode::Dense : subdp::BenchMode::NearComplete, n_list, alpha,
            seeds, base_seed);
        for (size_t i = 0; i < result.size(); ++i) {
            rows[i].n = result[i].n;
            rows[i].mean_ell = result[i].mean_ell;
            rows[i].mean_lower = result[i].mean_lower;
            rows[i].stat = result[i].stat;
        }
        return SUBDP_OK;
    });
}

} /* extern "C" */
