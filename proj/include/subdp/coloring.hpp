#pragma once

#include <vector>

#include "subdp/errors.hpp"

namespace subdp {

/// Total map from a node subset to colors 1..ell.
struct Coloring {
    int ell = 1;
    std::vector<int> domain; // sorted ascending
    std::vector<int> colors; // parallel to domain, values in [1, ell]

    int color_of(int v) const; // input_error if v is not in the domain
    bool in_domain(int v) const;
};

/// Validates and normalizes (sorts by node, rejects duplicates and
/// out-of-range colors).
Coloring make_coloring(std::vector<int> domain, std::vector<int> colors, int ell);

} // namespace subdp
