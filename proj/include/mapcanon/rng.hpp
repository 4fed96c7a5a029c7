#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "mapcanon/linalg.hpp"

namespace mapcanon {

/// Deterministic PRNG (SplitMix64 core). Hand-rolled instead of <random>
/// so that streams are bit-reproducible across platforms and standard
/// library versions. Per-trial streams derive from (seed, trial index),
/// which makes serial and parallel runs agree.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
        // Decorrelate the two inputs with one splitmix step each.
        Rng r(mix(seed) ^ mix(trial * 0x9E3779B97F4A7C15ULL + 1));
        r.next_u64();
        return r;
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    /// Uniform integer in [lo, hi] inclusive (Lemire reduction).
    int uniform_int(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const auto wide = static_cast<unsigned __int128>(next_u64()) * span;
        return lo + static_cast<int>(static_cast<std::uint64_t>(wide >> 64));
    }

    /// Standard normal via Box-Muller.
    double gaussian() {
        double u1 = uniform01();
        if (u1 < 1e-300) u1 = 1e-300;
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    double sign() { return (next_u64() & 1) ? 1.0 : -1.0; }

    /// Random permutation: perm[i] is the new index of element i.
    std::vector<int> permutation(int n) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        for (int i = n - 1; i > 0; --i) {
            const int j = uniform_int(0, i);
            std::swap(p[i], p[j]);
        }
        return p;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

/// Haar-distributed n x d matrix with orthonormal columns: QR of a standard
/// normal matrix, taking the unique Q whose R has a positive diagonal.
/// Modified Gram-Schmidt with one re-orthogonalization pass produces exactly
/// that representative.
Matrix haar_orthonormal(int n, int d, Rng& rng);

}  // namespace mapcanon
