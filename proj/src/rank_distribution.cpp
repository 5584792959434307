#include "persym/rank_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace persym {

std::string_view to_string(Method m) noexcept {
    return m == Method::Exact ? "exact" : "sampled";
}

Method method_from_string(std::string_view s) {
    if (s == "exact") {
        return Method::Exact;
    }
    if (s == "sampled") {
        return Method::Sampled;
    }
    throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

std::size_t RankDistribution::length_for(int n, int k) {
    if (n < 0 || k < 0) {
        throw std::invalid_argument("n and k must be non-negative");
    }
    return static_cast<std::size_t>(std::min(2 * n, k)) + 1;
}

RankDistribution RankDistribution::zeros(int n, int k, Method method) {
    RankDistribution d;
    d.n = n;
    d.k = k;
    d.method = method;
    d.counts.assign(length_for(n, k), mpz_class(0));
    return d;
}

mpz_class RankDistribution::total() const {
    mpz_class sum = 0;
    for (const auto& c : counts) {
        sum += c;
    }
    return sum;
}

mpz_class RankDistribution::count(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= counts.size()) {
        return 0;
    }
    return counts[static_cast<std::size_t>(i)];
}

RankDistribution merge(std::span<const RankDistribution> parts) {
    if (parts.empty()) {
        throw std::invalid_argument("merge needs at least one part");
    }
    RankDistribution out = RankDistribution::zeros(parts.front().n, parts.front().k);
    for (const auto& p : parts) {
        if (p.n != out.n || p.k != out.k) {
            throw std::invalid_argument("cannot merge (n,k) = (" + std::to_string(p.n) + "," +
                                        std::to_string(p.k) + ") into (" +
                                        std::to_string(out.n) + "," + std::to_string(out.k) +
                                        ")");
        }
        if (p.method != Method::Exact) {
            throw std::invalid_argument("only exact partial sweeps can be merged");
        }
        if (p.counts.size() != out.counts.size()) {
            throw std::invalid_argument("part has " + std::to_string(p.counts.size()) +
                                        " rank entries, expected " +
                                        std::to_string(out.counts.size()));
        }
        for (std::size_t i = 0; i < p.counts.size(); ++i) {
            out.counts[i] += p.counts[i];
        }
    }
    return out;
}

std::vector<RankFrequency> frequencies(const RankDistribution& d) {
    const mpz_class total = d.total();
    std::vector<RankFrequency> out;
    out.reserve(d.counts.size());
    const double n = total.get_d();
    for (std::size_t i = 0; i < d.counts.size(); ++i) {
        RankFrequency f;
        f.rank = static_cast<int>(i);
        if (n > 0) {
            mpq_class p(d.counts[i], total);
            p.canonicalize();
            f.frequency = p.get_d();
            f.standard_error = std::sqrt(f.frequency * (1.0 - f.frequency) / n);
        }
        out.push_back(f);
    }
    return out;
}

}  // namespace persym
