#include "subdp/codec.hpp"

#include <algorithm>
#include <string>

#include "subdp/exact.hpp"

namespace subdp {

Codec Codec::build(const SubgraphSelection& sel, const Coloring& col) {
    if (!validate_coloring(sel, col))
        throw input_error("codec requires a valid coloring");

    Codec codec;
    codec.states_ = sel.nodes();
    codec.ell_ = col.ell;
    codec.decode_ = col.colors;
    codec.next_.resize(codec.states_.size());
    codec.neighborhoods_.resize(codec.states_.size());

    for (size_t i = 0; i < codec.states_.size(); ++i) {
        int s = codec.states_[i];
        auto nb = closed_out_neighborhood(sel, s);
        auto& row = codec.next_[i];
        row.assign(codec.ell_, -1);
        for (int w : nb) { // ascending, so the first hit is the lowest id
            int c = col.color_of(w);
            if (row[c - 1] < 0)
                row[c - 1] = w;
        }
        codec.neighborhoods_[i] = std::move(nb);
    }

    // the tables are small; verify both conditions outright so a
    // construction bug surfaces here and not mid-simulation
    for (size_t i = 0; i < codec.states_.size(); ++i) {
        for (int m = 1; m <= codec.ell_; ++m) {
            int next = codec.next_[i][m - 1];
            if (next < 0)
                throw internal_error("missing transition despite valid coloring");
            if (!std::binary_search(codec.neighborhoods_[i].begin(),
                                    codec.neighborhoods_[i].end(), next))
                throw internal_error("encoder left the closed neighborhood");
            if (codec.decode_state(next) != m)
                throw internal_error("decode does not invert encode");
        }
    }
    return codec;
}

Codec Codec::from_tables(std::vector<int> states, int ell, std::vector<int> decode,
                         std::vector<std::vector<int>> next) {
    if (states.empty())
        throw input_error("codec needs at least one state");
    if (ell < 1)
        throw input_error("codec alphabet must be at least 1");
    if (decode.size() != states.size() || next.size() != states.size())
        throw input_error("codec table sizes disagree");
    if (!std::is_sorted(states.begin(), states.end()) ||
        std::adjacent_find(states.begin(), states.end()) != states.end())
        throw input_error("codec states must be distinct and sorted");

    Codec codec;
    codec.states_ = std::move(states);
    codec.ell_ = ell;
    codec.decode_ = std::move(decode);
    codec.next_ = std::move(next);

    for (size_t i = 0; i < codec.states_.size(); ++i) {
        if (codec.decode_[i] < 1 || codec.decode_[i] > ell)
            throw input_error("decode value out of range at state " +
                              std::to_string(codec.states_[i]));
        if (static_cast<int>(codec.next_[i].size()) != ell)
            throw input_error("transition row has wrong arity at state " +
                              std::to_string(codec.states_[i]));
        for (int m = 1; m <= ell; ++m) {
            int nxt = codec.next_[i][m - 1];
            if (!std::binary_search(codec.states_.begin(), codec.states_.end(), nxt))
                throw input_error("transition target " + std::to_string(nxt) +
                                  " is not a codec state");
            if (codec.decode_state(nxt) != m)
                throw input_error("decode does not invert encode at state " +
                                  std::to_string(codec.states_[i]));
        }
    }
    return codec;
}

int Codec::index_of(int state) const {
    auto it = std::lower_bound(states_.begin(), states_.end(), state);
    if (it == states_.end() || *it != state)
        throw input_error("unknown codec state " + std::to_string(state));
    return static_cast<int>(it - states_.begin());
}

int Codec::encode_step(int state, int message) const {
    if (message < 1 || message > ell_)
        throw input_error("message " + std::to_string(message) + " outside [1, " +
                          std::to_string(ell_) + "]");
    return next_[index_of(state)][message - 1];
}

int Codec::decode_state(int state) const {
    return decode_[index_of(state)];
}

const std::vector<int>& Codec::neighborhood(int state) const {
    static const std::vector<int> empty;
    if (neighborhoods_.empty())
        return empty;
    return neighborhoods_[index_of(state)];
}

Trajectory simulate(const Codec& codec, int start_state, std::span<const int> messages) {
    codec.decode_state(start_state); // membership check

    Trajectory traj;
    traj.initial_state = start_state;
    traj.steps.reserve(messages.size());

    int s = start_state;
    for (int m : messages) {
        int next = codec.encode_step(s, m);
        if (codec.has_transition_info()) {
            const auto& nb = codec.neighborhood(s);
            if (!std::binary_search(nb.begin(), nb.end(), next))
                throw internal_error("illegal transition " + std::to_string(s) + " -> " +
                                     std::to_string(next));
        }
        int read = codec.decode_state(next);
        if (read != m)
            throw internal_error("read back " + std::to_string(read) + " after writing " +
                                 std::to_string(m));
        traj.steps.push_back(TrajectoryStep{m, next, read});
        s = next;
    }
    return traj;
}

} // namespace subdp
