#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace persym {

enum class Method { Exact, Sampled };

std::string_view to_string(Method m) noexcept;
Method method_from_string(std::string_view s);

struct SampleMeta {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;

    friend bool operator==(const SampleMeta&, const SampleMeta&) = default;
};

/// counts[i] = number of tuples whose stacked matrix has rank i, for i = 0..min(2n, k).
/// For sampled runs the counts are raw tallies over `sample_meta->samples` draws.
struct RankDistribution {
    int n = 0;
    int k = 0;
    std::vector<mpz_class> counts;
    Method method = Method::Exact;
    std::optional<SampleMeta> sample_meta;

    static std::size_t length_for(int n, int k);
    static RankDistribution zeros(int n, int k, Method method = Method::Exact);

    mpz_class total() const;
    /// counts[i], or 0 when i is past the stored ranks.
    mpz_class count(int i) const;

    friend bool operator==(const RankDistribution&, const RankDistribution&) = default;
};

/// Entrywise sum of exact partial sweeps over disjoint index ranges.
RankDistribution merge(std::span<const RankDistribution> parts);

struct RankFrequency {
    int rank = 0;
    double frequency = 0.0;
    double standard_error = 0.0;
};

/// Per-rank relative frequency with the binomial standard error sqrt(p(1-p)/N).
std::vector<RankFrequency> frequencies(const RankDistribution& d);

}  // namespace persym
