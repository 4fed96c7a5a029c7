#include "mapcanon/canon_sign.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <numeric>

#include "mapcanon/errors.hpp"

namespace mapcanon {

namespace {

void require_unit(std::span<const double> u) {
    if (std::abs(norm(u) - 1.0) > 1e-6)
        throw DomainError("sign canonizer expects a unit vector");
}

/// u.x_i for every group without materializing the summaries:
/// u.x_i = sum_{j in B_i} u_j + c * sum_j u_j.
std::vector<double> group_dots(std::span<const double> u, const AxisGrouping& g) {
    double total = 0.0;
    for (double v : u) total += v;
    std::vector<double> dots(g.groups.size());
    for (std::size_t i = 0; i < g.groups.size(); ++i) {
        double s = 0.0;
        for (int axis : g.groups[i]) s += u[static_cast<std::size_t>(axis)];
        dots[i] = s + g.c * total;
    }
    return dots;
}

SignOutcome scan_summaries(std::span<const double> u, const AxisGrouping& grouping,
                           const CanonConfig& cfg, SignAlgorithm algo) {
    const std::vector<double> dots = group_dots(u, grouping);
    for (std::size_t i = 0; i < dots.size(); ++i) {
        if (std::abs(dots[i]) > cfg.eps_zero) {
            SignOutcome out;
            out.vector.assign(u.begin(), u.end());
            if (dots[i] < 0.0)
                for (double& v : out.vector) v = -v;
            out.canonized = true;
            out.h = static_cast<int>(i) + 1;
            out.algorithm = algo;
            return out;
        }
    }
    SignOutcome out;
    out.vector.assign(u.begin(), u.end());
    out.algorithm = algo;
    return out;
}

}  // namespace

namespace {

SignOutcome sign_decision(std::span<const double> u, double dot, int group) {
    SignOutcome out;
    out.vector.assign(u.begin(), u.end());
    if (dot < 0.0)
        for (double& v : out.vector) v = -v;
    out.canonized = true;
    out.h = group;
    return out;
}

}  // namespace

SignOutcome map_sign(std::span<const double> u, const CanonConfig& cfg) {
    require_unit(u);
    const int n = static_cast<int>(u.size());
    double total = 0.0;
    double top = 0.0;
    for (int i = 0; i < n; ++i) {
        total += u[i];
        top = std::max(top, std::abs(u[i]));
    }

    // Fast path: if the leading magnitude group is provably chain-complete
    // (a gap wider than eps_group separates it from the rest) and its sum
    // decides the sign, no sorting is needed. Continuous-spectrum vectors
    // take this O(n) route; ties and zero sums fall back to the full scan.
    double runner_up = -1.0;
    double group_sum = cfg.c * total;
    for (int i = 0; i < n; ++i) {
        const double a = std::abs(u[i]);
        if (top - a <= cfg.eps_group)
            group_sum += u[i];
        else
            runner_up = std::max(runner_up, a);
    }
    if (runner_up < 0.0 || (top - cfg.eps_group) - runner_up > cfg.eps_group) {
        if (std::abs(group_sum) > cfg.eps_zero) return sign_decision(u, group_sum, 1);
        if (runner_up < 0.0) {
            // Single group covering every axis and its sum vanished.
            SignOutcome out;
            out.vector.assign(u.begin(), u.end());
            return out;
        }
    }

    // Full scan: stream the chained magnitude grouping in sorted order; the
    // groups themselves are never materialized.
    std::vector<double> alpha(u.size());
    for (int i = 0; i < n; ++i) alpha[i] = std::abs(u[i]);
    std::vector<int> order(u.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (alpha[a] != alpha[b]) return alpha[a] > alpha[b];
        return a < b;
    });

    int group = 0;
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        if (i != n && alpha[order[i - 1]] - alpha[order[i]] <= cfg.eps_group)
            continue;
        ++group;
        double dot = cfg.c * total;
        for (int t = start; t < i; ++t) dot += u[static_cast<std::size_t>(order[t])];
        if (std::abs(dot) > cfg.eps_zero) return sign_decision(u, dot, group);
        start = i;
    }
    SignOutcome out;
    out.vector.assign(u.begin(), u.end());
    return out;
}

SignOutcome polynomial_sign(std::span<const double> u, const CanonConfig& cfg) {
    require_unit(u);
    const int n = static_cast<int>(u.size());
    std::vector<double> powers(u.begin(), u.end());  // u_i^h, updated in steps of 2
    std::vector<double> terms(u.size());
    for (int h = 1; h <= n; h += 2) {
        if (h > 1)
            for (int i = 0; i < n; ++i) powers[i] *= u[i] * u[i];
        terms.assign(powers.begin(), powers.end());
        const double sum = pairwise_sum(terms);
        if (std::abs(sum) > cfg.eps_zero) {
            SignOutcome out;
            out.vector.assign(u.begin(), u.end());
            if (sum < 0.0)
                for (double& v : out.vector) v = -v;
            out.canonized = true;
            out.h = h;
            out.algorithm = SignAlgorithm::polynomial;
            return out;
        }
    }
    SignOutcome out;
    out.vector.assign(u.begin(), u.end());
    out.algorithm = SignAlgorithm::polynomial;
    return out;
}

std::vector<double> hash_rows(const Matrix& m, int digits) {
    const double scale = std::pow(10.0, digits);
    std::vector<double> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        // FNV-1a 64 over the row's entries quantized to `digits` decimal
        // digits, each serialized as 8 little-endian bytes.
        std::uint64_t hash = 1469598103934665603ULL;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto q = static_cast<std::int64_t>(std::llround(m(i, j) * scale));
            auto bits = static_cast<std::uint64_t>(q);
            for (int b = 0; b < 8; ++b) {
                hash ^= (bits >> (8 * b)) & 0xFFULL;
                hash *= 1099511628211ULL;
            }
        }
        out[i] = static_cast<double>(hash) * 0x1.0p-64;
    }
    return out;
}

std::vector<SignOutcome> hash_propagate_sign(
    const std::vector<std::vector<double>>& uncanonized, const Matrix& canonized,
    const CanonConfig& cfg) {
    const std::vector<double> fingerprint = hash_rows(canonized, cfg.hash_digits);
    const AxisGrouping grouping =
        group_magnitudes(fingerprint, cfg.eps_group, cfg.c);
    std::vector<SignOutcome> outcomes;
    outcomes.reserve(uncanonized.size());
    for (const auto& u : uncanonized) {
        require_unit(u);
        outcomes.push_back(
            scan_summaries(u, grouping, cfg, SignAlgorithm::hash_propagated));
    }
    return outcomes;
}

}  // namespace mapcanon
