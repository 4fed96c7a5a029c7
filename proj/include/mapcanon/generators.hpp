#pragma once

#include <cstdint>
#include <vector>

#include "mapcanon/graph.hpp"

namespace mapcanon {

/// Erdos-Renyi graphs: each unordered pair is an edge independently with
/// probability p. Weighted graphs draw weights uniformly from (0, 1].
/// Graph i uses the stream (seed, i), so extending `count` keeps prefixes.
std::vector<Graph> gen_er(int n, double p, bool weighted, int count,
                          std::uint64_t seed);

/// One random weighted graph whose top eigenspace of the normalized
/// adjacency has dimension exactly 3: three disjoint, pairwise distinct,
/// connected random weighted components (the eigenvalue-1 multiplicity of a
/// graph equals its component count). The construction is verified
/// spectrally and retried; GeneratorError after the retry budget.
Graph gen_basis_ambiguous(std::uint64_t seed, std::uint64_t index);

std::vector<Graph> gen_basis_ambiguous_set(int count, std::uint64_t seed);

}  // namespace mapcanon
