#include "mapcanon/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mapcanon/errors.hpp"

namespace mapcanon {

namespace {
constexpr double kTol = 1e-9;
}

OracleVerdict sign_canonizable_bruteforce(std::span<const double> u) {
    const int n = static_cast<int>(u.size());
    if (n > 10) throw SizeError("sign oracle limited to n <= 10");

    // Necessary condition: the entry multisets of u and -u must match.
    std::vector<double> a(u.begin(), u.end()), b(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) b[i] = -u[i];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > kTol) return {};

    std::vector<int> sigma(u.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        bool obstruction = true;
        for (int i = 0; i < n && obstruction; ++i)
            obstruction = std::abs(u[i] + u[static_cast<std::size_t>(sigma[i])]) <= kTol;
        if (obstruction) {
            OracleVerdict v;
            v.canonizable = false;
            v.witness = sigma;
            return v;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return {};
}

OracleVerdict basis_canonizable_bruteforce(const Matrix& u) {
    const int n = static_cast<int>(u.rows());
    if (n > 8) throw SizeError("basis oracle limited to n <= 8");
    const int d = static_cast<int>(u.cols());

    // Projector of span(U); permutations act on it by conjugation.
    Matrix proj(u.rows(), u.rows());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int t = 0; t < d; ++t) s += u(i, t) * u(j, t);
            proj(i, j) = s;
        }

    std::vector<int> sigma(u.rows());
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        // Rows of PU: row i of PU is row sigma(i) of U.
        double moved = 0.0;
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < d; ++t) {
                const double diff =
                    u(static_cast<std::size_t>(sigma[i]), t) - u(i, t);
                moved += diff * diff;
            }
        if (std::sqrt(moved) <= kTol) continue;
        double span_drift = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double diff = proj(static_cast<std::size_t>(sigma[i]),
                                         static_cast<std::size_t>(sigma[j])) -
                                    proj(i, j);
                span_drift += diff * diff;
            }
        if (std::sqrt(span_drift) <= kTol) {
            OracleVerdict v;
            v.canonizable = false;
            v.witness = sigma;
            return v;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return {};
}

}  // namespace mapcanon
