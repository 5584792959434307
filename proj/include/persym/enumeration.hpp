#pragma once

#include <cstdint>

#include "persym/rank_distribution.hpp"

namespace persym {

struct EnumerationLimits {
    /// Sweeps above this many index bits need `allow_huge`.
    int soft_bits = 32;
    /// Never exceeded, even with `allow_huge`.
    int hard_bits = 40;
    bool allow_huge = false;
};

/// Rank histogram of the stacked matrices for every tuple index in [begin, end).
/// The result is tagged exact; it is a partial count unless the range is full.
RankDistribution enumerate_range(int n, int k, std::uint64_t begin, std::uint64_t end);

/// Exhaustive rank distribution over all 2^{n(k+1)} tuples.
///
/// The index space is cut into `workers` contiguous ranges, each tallied into a
/// private 64-bit histogram and merged in range order, so the result does not
/// depend on the worker count. Throws SearchSpaceTooLarge above the limits.
RankDistribution enumerate_exact(int n, int k, int workers, const EnumerationLimits& limits = {});

/// Monte Carlo tallies over `samples` uniformly drawn tuples. Reproducible for a
/// given seed: tuples come from the raw output of std::mt19937_64, one word per
/// sequence, masked to k+1 bits.
RankDistribution enumerate_sampled(int n, int k, std::uint64_t samples, std::uint64_t seed);

}  // namespace persym
