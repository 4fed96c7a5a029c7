#include "mapcanon/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mapcanon/errors.hpp"

namespace mapcanon {

void CanonConfig::validate() const {
    if (!(eps_eig > 0.0) || !(eps_zero > 0.0) || !(eps_group > 0.0))
        throw DomainError("all tolerances must be positive");
    if (k_pe && *k_pe < 1) throw DomainError("k must be >= 1");
    if (hash_digits < 1 || hash_digits > 15)
        throw DomainError("hash_digits must be in [1, 15]");
}

namespace {

double hypot2(double a, double b) { return std::sqrt(a * a + b * b); }

// Householder reduction to symmetric tridiagonal form. Classic EISPACK
// tred2 as ported in the Jama family of solvers: d receives the diagonal,
// e the subdiagonal, z the accumulated transformation.
void tred2(Matrix& z, std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(z.rows());
    for (int j = 0; j < n; ++j) d[j] = z(n - 1, j);

    for (int i = n - 1; i > 0; --i) {
        double scale = 0.0, h = 0.0;
        for (int k = 0; k < i; ++k) scale += std::abs(d[k]);
        if (scale == 0.0) {
            e[i] = d[i - 1];
            for (int j = 0; j < i; ++j) {
                d[j] = z(i - 1, j);
                z(i, j) = 0.0;
                z(j, i) = 0.0;
            }
        } else {
            for (int k = 0; k < i; ++k) {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            double f = d[i - 1];
            double g = std::sqrt(h);
            if (f > 0) g = -g;
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for (int j = 0; j < i; ++j) e[j] = 0.0;

            for (int j = 0; j < i; ++j) {
                f = d[j];
                z(j, i) = f;
                g = e[j] + z(j, j) * f;
                for (int k = j + 1; k <= i - 1; ++k) {
                    g += z(k, j) * d[k];
                    e[k] += z(k, j) * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for (int j = 0; j < i; ++j) {
                e[j] /= h;
                f += e[j] * d[j];
            }
            const double hh = f / (h + h);
            for (int j = 0; j < i; ++j) e[j] -= hh * d[j];
            for (int j = 0; j < i; ++j) {
                f = d[j];
                g = e[j];
                for (int k = j; k <= i - 1; ++k) z(k, j) -= f * e[k] + g * d[k];
                d[j] = z(i - 1, j);
                z(i, j) = 0.0;
            }
        }
        d[i] = h;
    }

    // Accumulate transformations.
    for (int i = 0; i < n - 1; ++i) {
        z(n - 1, i) = z(i, i);
        z(i, i) = 1.0;
        const double h = d[i + 1];
        if (h != 0.0) {
            for (int k = 0; k <= i; ++k) d[k] = z(k, i + 1) / h;
            for (int j = 0; j <= i; ++j) {
                double g = 0.0;
                for (int k = 0; k <= i; ++k) g += z(k, i + 1) * z(k, j);
                for (int k = 0; k <= i; ++k) z(k, j) -= g * d[k];
            }
        }
        for (int k = 0; k <= i; ++k) z(k, i + 1) = 0.0;
    }
    for (int j = 0; j < n; ++j) {
        d[j] = z(n - 1, j);
        z(n - 1, j) = 0.0;
    }
    z(n - 1, n - 1) = 1.0;
    e[0] = 0.0;
}

constexpr int kSweepsPerEigenvalue = 30;

// Implicitly shifted QL on the tridiagonal (d, e), eigenvectors accumulated
// into z. Ascending order on return. Budget of 30 sweeps per eigenvalue,
// 30*n overall.
void tql2(Matrix& z, std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(z.rows());
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    double f = 0.0, tst1 = 0.0;
    const double eps = std::pow(2.0, -52.0);
    for (int l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        int m = l;
        while (m < n) {
            if (std::abs(e[m]) <= eps * tst1) break;
            ++m;
        }
        if (m > l) {
            int iter = 0;
            do {
                if (++iter > kSweepsPerEigenvalue)
                    throw ConvergenceError("QL sweep budget exhausted at eigenvalue " +
                                           std::to_string(l));
                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = hypot2(p, 1.0);
                if (p < 0) r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                const double dl1 = d[l + 1];
                double h = g - d[l];
                for (int i = l + 2; i < n; ++i) d[i] -= h;
                f += h;

                p = d[m];
                double c = 1.0, c2 = c, c3 = c;
                const double el1 = e[l + 1];
                double s = 0.0, s2 = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = hypot2(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for (int k = 0; k < n; ++k) {
                        h = z(k, i + 1);
                        z(k, i + 1) = s * z(k, i) + c * h;
                        z(k, i) = c * z(k, i) - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0.0;
    }
}

}  // namespace

void symmetric_eigen(const Matrix& a, std::vector<double>& values, Matrix& vectors) {
    const std::size_t n = a.rows();
    if (n == 0 || a.cols() != n) throw DomainError("eigensolver needs a square matrix");
    vectors = a;
    values.assign(n, 0.0);
    if (n == 1) {
        values[0] = a(0, 0);
        vectors(0, 0) = 1.0;
        return;
    }
    std::vector<double> e(n, 0.0);
    tred2(vectors, values, e);
    tql2(vectors, values, e);
}

Spectrum eigendecompose(const Matrix& adj, const CanonConfig& cfg) {
    cfg.validate();
    std::vector<double> values;
    Matrix vectors;
    symmetric_eigen(adj, values, vectors);

    const int n = static_cast<int>(values.size());
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return values[a] > values[b]; });

    Spectrum s;
    s.eigenvalues.resize(values.size());
    s.vectors = Matrix(vectors.rows(), vectors.cols());
    for (int j = 0; j < n; ++j) {
        s.eigenvalues[j] = values[static_cast<std::size_t>(order[j])];
        for (int i = 0; i < n; ++i)
            s.vectors(i, j) = vectors(i, static_cast<std::size_t>(order[j]));
    }
    // The self-loop-augmented normalized adjacency has spectrum in (-1, 1],
    // equivalently Laplacian frequencies 1 - lambda in [0, 2).
    for (double lambda : s.eigenvalues)
        if (lambda < -1.0 - cfg.eps_eig || lambda > 1.0 + cfg.eps_eig)
            throw DomainError("eigenvalue " + std::to_string(lambda) +
                              " outside (-1, 1]; input is not a normalized adjacency");
    s.groups = group_eigenspaces(s.eigenvalues, cfg.eps_eig);
    return s;
}

std::vector<EigenGroup> group_eigenspaces(std::span<const double> descending,
                                          double eps_eig) {
    std::vector<EigenGroup> groups;
    const int n = static_cast<int>(descending.size());
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == n || descending[i - 1] - descending[i] > eps_eig) {
            groups.push_back({start, i - start});
            start = i;
        }
    }
    return groups;
}

Matrix rse(const Spectrum& spectrum, const CanonConfig& cfg) {
    const int n = spectrum.n();
    const int k = cfg.k_pe.value_or(n);
    if (k < 1 || k > n) throw DomainError("k must be in [1, n]");
    Matrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        const double lambda = std::clamp(spectrum.eigenvalues[j], 0.0, 2.0);
        const double scale = std::sqrt(lambda);
        for (int i = 0; i < n; ++i) out(i, j) = spectrum.vectors(i, j) * scale;
    }
    return out;
}

}  // namespace mapcanon
