#include "persym/enumeration.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "persym/bigint.hpp"
#include "persym/errors.hpp"
#include "persym/persymmetric.hpp"

namespace persym {

namespace {

using gf2::Word;
using Histogram = std::array<std::uint64_t, gf2::kMaxRows + 1>;

// Reduced row echelon basis keyed by pivot bit. Reduction against it is a
// linear map, which lets the sweep precompute it as a lookup table.
struct EchelonBasis {
    std::array<Word, 64> vecs{};
    std::array<Word, 64> pivots{};
    int size = 0;

    Word reduce(Word v) const noexcept {
        for (int i = 0; i < size; ++i) {
            if (v & pivots[i]) {
                v ^= vecs[i];
            }
        }
        return v;
    }

    void insert(Word v) noexcept {
        v = reduce(v);
        if (v == 0) {
            return;
        }
        const Word p = v & (~v + 1);
        for (int i = 0; i < size; ++i) {
            if (vecs[i] & p) {
                vecs[i] ^= v;
            }
        }
        vecs[size] = v;
        pivots[size] = p;
        ++size;
    }
};

constexpr int kTableMaxBits = 16;

// The low k+1 index bits are the first sequence; everything above fixes the
// other n-1 blocks. Per value of the high part, the row space of those blocks
// is reduced once, and each low value then costs two table lookups.
void sweep(int n, int k, std::uint64_t begin, std::uint64_t end, Histogram& hist) {
    const int width = k + 1;
    const Word mask = gf2::low_mask(static_cast<std::size_t>(k));
    const Word seq_mask = gf2::low_mask(static_cast<std::size_t>(width));
    const bool use_table = k <= kTableMaxBits;
    std::vector<Word> table(use_table ? (std::size_t{1} << k) : 0);

    std::uint64_t idx = begin;
    while (idx < end) {
        const std::uint64_t high = idx >> width;
        const std::uint64_t group_end =
            width >= 64 ? end : std::min(end, (high + 1) << width);

        EchelonBasis basis;
        for (int j = 0; j + 1 < n; ++j) {
            const Word seq = (high >> (j * width)) & seq_mask;
            basis.insert(seq & mask);
            basis.insert((seq >> 1) & mask);
        }
        const int base = basis.size;

        if (use_table) {
            table[0] = 0;
            for (std::size_t v = 1; v < table.size(); ++v) {
                const Word low_bit = v & (~v + 1);
                table[v] = table[v ^ low_bit] ^ basis.reduce(low_bit);
            }
            for (; idx < group_end; ++idx) {
                const Word seq = idx & seq_mask;
                const Word a = table[seq & mask];
                const Word b = table[(seq >> 1) & mask];
                ++hist[static_cast<std::size_t>(base + (a != 0) + (b != 0 && b != a))];
            }
        } else {
            for (; idx < group_end; ++idx) {
                const Word seq = idx & seq_mask;
                const Word a = basis.reduce(seq & mask);
                const Word b = basis.reduce((seq >> 1) & mask);
                ++hist[static_cast<std::size_t>(base + (a != 0) + (b != 0 && b != a))];
            }
        }
    }
}

RankDistribution widen(int n, int k, const Histogram& hist) {
    RankDistribution d = RankDistribution::zeros(n, k);
    for (std::size_t i = 0; i < hist.size(); ++i) {
        if (hist[i] == 0) {
            continue;
        }
        if (i >= d.counts.size()) {
            throw std::logic_error("rank " + std::to_string(i) + " exceeds min(2n,k)");
        }
        d.counts[i] = from_u64(hist[i]);
    }
    return d;
}

}  // namespace

RankDistribution enumerate_range(int n, int k, std::uint64_t begin, std::uint64_t end) {
    const int bits = index_bits(n, k);
    if (bits > 63) {
        throw SearchSpaceTooLarge("n(k+1) = " + std::to_string(bits) +
                                      " bits does not fit a 64-bit sweep index",
                                  bits);
    }
    const std::uint64_t total = std::uint64_t{1} << bits;
    if (begin > end || end > total) {
        throw std::out_of_range("range [" + std::to_string(begin) + ", " + std::to_string(end) +
                                ") is not inside [0, 2^" + std::to_string(bits) + ")");
    }
    Histogram hist{};
    sweep(n, k, begin, end, hist);
    return widen(n, k, hist);
}

RankDistribution enumerate_exact(int n, int k, int workers, const EnumerationLimits& limits) {
    if (workers < 1) {
        throw std::invalid_argument("worker_count must be >= 1");
    }
    const int bits = index_bits(n, k);
    if (bits > limits.hard_bits) {
        throw SearchSpaceTooLarge("search space too large: n(k+1) = " + std::to_string(bits) +
                                      " bits exceeds the hard cap of " +
                                      std::to_string(limits.hard_bits) + " bits",
                                  bits);
    }
    if (bits > limits.soft_bits && !limits.allow_huge) {
        throw SearchSpaceTooLarge("search space too large: n(k+1) = " + std::to_string(bits) +
                                      " bits needs --allow-huge (default budget " +
                                      std::to_string(limits.soft_bits) + " bits)",
                                  bits);
    }
    const std::uint64_t total = std::uint64_t{1} << bits;
    const auto w = static_cast<std::uint64_t>(workers);

    std::vector<Histogram> hists(static_cast<std::size_t>(workers), Histogram{});
    {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (std::uint64_t i = 0; i < w; ++i) {
            // total <= 2^40 and w is small, so the products stay in range.
            const std::uint64_t lo = total / w * i + std::min(i, total % w);
            const std::uint64_t hi = total / w * (i + 1) + std::min(i + 1, total % w);
            pool.emplace_back([n, k, lo, hi, &h = hists[i]] { sweep(n, k, lo, hi, h); });
        }
    }

    std::vector<RankDistribution> parts;
    parts.reserve(hists.size());
    for (const auto& h : hists) {
        parts.push_back(widen(n, k, h));
    }
    return merge(parts);
}

RankDistribution enumerate_sampled(int n, int k, std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) {
        throw std::invalid_argument("samples must be >= 1");
    }
    index_bits(n, k);  // validates n and k
    std::mt19937_64 gen(seed);
    const Word seq_mask = gf2::low_mask(static_cast<std::size_t>(k) + 1);
    SequenceTuple t{n, k, std::vector<Word>(static_cast<std::size_t>(n))};
    Histogram hist{};
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (auto& seq : t.seqs) {
            seq = gen() & seq_mask;
        }
        ++hist[static_cast<std::size_t>(gf2::rank(build_stacked(t)))];
    }
    RankDistribution d = widen(n, k, hist);
    d.method = Method::Sampled;
    d.sample_meta = SampleMeta{samples, seed};
    return d;
}

}  // namespace persym
