#pragma once

#include <span>
#include <vector>

#include "subdp/coloring.hpp"
#include "subdp/graph.hpp"

namespace subdp {

/// Encoder/decoder table pair built from a valid coloring: writing message
/// m from state s moves to the lowest-id node of N(s) colored m; reading a
/// state returns its color. Both tables are exhaustively checked at build
/// time.
class Codec {
public:
    static Codec build(const SubgraphSelection& sel, const Coloring& col);

    /// Rebuild from bare tables (deserialization). Transition legality
    /// cannot be checked without the graph, but the decode condition is.
    static Codec from_tables(std::vector<int> states, int ell, std::vector<int> decode,
                             std::vector<std::vector<int>> next);

    int alphabet_size() const { return ell_; }
    const std::vector<int>& states() const { return states_; }
    bool has_transition_info() const { return !neighborhoods_.empty(); }

    int encode_step(int state, int message) const;
    int decode_state(int state) const;

    /// Closed out-neighborhood recorded at build time; empty vector set if
    /// the codec came from tables only.
    const std::vector<int>& neighborhood(int state) const;

    int decode_by_index(int idx) const { return decode_[idx]; }
    const std::vector<int>& next_by_index(int idx) const { return next_[idx]; }

private:
    Codec() = default;
    int index_of(int state) const;

    std::vector<int> states_; // sorted ascending
    int ell_ = 1;
    std::vector<int> decode_;            // per state index
    std::vector<std::vector<int>> next_; // per state index, ell_ entries (message m at m-1)
    std::vector<std::vector<int>> neighborhoods_;
};

struct TrajectoryStep {
    int message = 0;
    int state = -1;    // state after the write
    int read_back = 0; // decoded message after the write
};

struct Trajectory {
    int initial_state = -1;
    std::vector<TrajectoryStep> steps;
};

/// Folds encode_step over the message sequence, reading back after every
/// write and asserting both codec invariants at each step.
Trajectory simulate(const Codec& codec, int start_state, std::span<const int> messages);

} // namespace subdp
