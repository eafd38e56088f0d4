#include "subdp/coloring.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace subdp {

bool Coloring::in_domain(int v) const {
    return std::binary_search(domain.begin(), domain.end(), v);
}

int Coloring::color_of(int v) const {
    auto it = std::lower_bound(domain.begin(), domain.end(), v);
    if (it == domain.end() || *it != v)
        throw input_error("node " + std::to_string(v) + " not in coloring domain");
    return colors[static_cast<size_t>(it - domain.begin())];
}

Coloring make_coloring(std::vector<int> domain, std::vector<int> colors, int ell) {
    if (ell < 1)
        throw input_error("color count must be at least 1");
    if (domain.size() != colors.size())
        throw input_error("coloring domain and color list differ in length");
    if (domain.empty())
        throw input_error("coloring domain must be nonempty");

    std::vector<std::pair<int, int>> entries(domain.size());
    for (size_t i = 0; i < domain.size(); ++i)
        entries[i] = {domain[i], colors[i]};
    std::sort(entries.begin(), entries.end());

    Coloring col;
    col.ell = ell;
    col.domain.reserve(entries.size());
    col.colors.reserve(entries.size());
    for (const auto& [v, c] : entries) {
        if (!col.domain.empty() && col.domain.back() == v)
            throw input_error("node " + std::to_string(v) + " colored twice");
        if (c < 1 || c > ell)
            throw input_error("color " + std::to_string(c) + " outside [1, " +
                              std::to_string(ell) + "]");
        col.domain.push_back(v);
        col.colors.push_back(c);
    }
    return col;
}

} // namespace subdp
