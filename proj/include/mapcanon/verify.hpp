#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "mapcanon/canon_sign.hpp"
#include "mapcanon/spectral.hpp"

namespace mapcanon {

/// Counters from a randomized invariance/equivariance simulation. The run
/// passes when every counter equals `total`. `max_deviation` records the
/// largest observed discrepancy across all successful comparisons, i.e. the
/// headroom under `eps`. `regenerated` counts discarded basis trials whose
/// random subspace violated an assumption (expected 0).
struct SimulationReport {
    long long p_correct = 0;   ///< permutation equivariance
    long long q_correct = 0;   ///< sign/basis invariance
    long long pq_correct = 0;  ///< combined transform
    long long total = 0;
    std::uint64_t seed = 0;
    double eps = 0.0;
    long long regenerated = 0;
    double max_deviation = 0.0;

    bool all_passed() const {
        return p_correct == total && q_correct == total && pq_correct == total;
    }
};

/// Injectable column canonizer; defaults to map_sign. The negative-control
/// test passes a broken one to confirm the harness can fail.
using SignCanonizer =
    std::function<SignOutcome(std::span<const double>, const CanonConfig&)>;

/// Sign simulation: per trial draw a Haar orthonormal U (n x n), a random
/// permutation P and a random diagonal sign matrix S; canonize U, PU, US and
/// PUS column-wise and count trials where P canon(U) = canon(PU) (p),
/// canon(U) = canon(US) (q) and P canon(U) = canon(PUS) (pq) within eps.
/// Columns flagged uncanonizable in both runs are skipped; disagreeing flags
/// fail the trial. Trial streams derive from (seed, trial index).
SimulationReport verify_sign(long long trials, int n_min, int n_max,
                             std::uint64_t seed, double eps,
                             const CanonConfig& cfg = {},
                             const SignCanonizer& canonizer = {});

/// Basis simulation: per trial draw n, 2 <= d < n, Haar U (n x d), random P
/// and Haar Q (d x d); compare map_basis on U, PU, UQ, PUQ the same way.
/// Trials whose subspace violates an assumption are regenerated and counted.
SimulationReport verify_basis(long long trials, int n_min, int n_max,
                              std::uint64_t seed, double eps,
                              const CanonConfig& cfg = {});

}  // namespace mapcanon
