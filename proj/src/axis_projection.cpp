#include "mapcanon/axis_projection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mapcanon/errors.hpp"

namespace mapcanon {

std::vector<double> AxisGrouping::summary(int i) const {
    std::vector<double> x(static_cast<std::size_t>(n), c);
    for (int axis : groups[static_cast<std::size_t>(i)])
        x[static_cast<std::size_t>(axis)] += 1.0;
    return x;
}

std::vector<std::vector<double>> AxisGrouping::summaries() const {
    std::vector<std::vector<double>> all;
    all.reserve(groups.size());
    for (int i = 0; i < k_groups(); ++i) all.push_back(summary(i));
    return all;
}

AxisGrouping group_magnitudes(std::span<const double> alpha, double eps_group,
                              double c) {
    const int n = static_cast<int>(alpha.size());
    std::vector<int> order(alpha.size());
    std::iota(order.begin(), order.end(), 0);
    // Magnitude descending; the index tie-break only matters after the merge,
    // where it keeps each group's member list deterministic.
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (alpha[a] != alpha[b]) return alpha[a] > alpha[b];
        return a < b;
    });

    AxisGrouping g;
    g.n = n;
    g.c = c;
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == n || alpha[order[i - 1]] - alpha[order[i]] > eps_group) {
            std::vector<int> members(order.begin() + start, order.begin() + i);
            std::sort(members.begin(), members.end());
            g.magnitudes.push_back(alpha[order[start]]);
            g.groups.push_back(std::move(members));
            start = i;
        }
    }
    return g;
}

AxisGrouping project_axes(const Matrix& u, const CanonConfig& cfg) {
    if (orthonormality_error(u) > 1e-8)
        throw DomainError("project_axes: columns are not orthonormal");
    std::vector<double> alpha(u.rows());
    for (std::size_t i = 0; i < u.rows(); ++i) alpha[i] = norm(u.row(i));
    return group_magnitudes(alpha, cfg.eps_group, cfg.c);
}

}  // namespace mapcanon
