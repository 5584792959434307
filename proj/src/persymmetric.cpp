#include "persym/persymmetric.hpp"

#include <stdexcept>
#include <string>

namespace persym {

namespace {

void check_k(int k) {
    if (k < 1 || k > static_cast<int>(gf2::kMaxCols)) {
        throw std::invalid_argument("k must lie in [1, " + std::to_string(gf2::kMaxCols) +
                                    "], got " + std::to_string(k));
    }
}

void check_n(int n) {
    if (n < 1 || 2 * n > static_cast<int>(gf2::kMaxRows)) {
        throw std::invalid_argument("n must lie in [1, " + std::to_string(gf2::kMaxRows / 2) +
                                    "], got " + std::to_string(n));
    }
}

}  // namespace

SequenceTuple SequenceTuple::make(int k, std::vector<Word> seqs) {
    check_k(k);
    check_n(static_cast<int>(seqs.size()));
    const Word allowed = gf2::low_mask(static_cast<std::size_t>(k) + 1);
    for (std::size_t j = 0; j < seqs.size(); ++j) {
        if (seqs[j] & ~allowed) {
            throw std::invalid_argument("sequence " + std::to_string(j + 1) +
                                        " has coefficients beyond alpha_" + std::to_string(k + 1));
        }
    }
    return SequenceTuple{static_cast<int>(seqs.size()), k, std::move(seqs)};
}

Word sequence_from_coefficients(std::initializer_list<int> alphas) {
    if (alphas.size() > 64) {
        throw std::invalid_argument("at most 64 coefficients fit one sequence word");
    }
    Word w = 0;
    int bit = 0;
    for (int a : alphas) {
        if (a != 0 && a != 1) {
            throw std::invalid_argument("coefficients must be 0 or 1");
        }
        w |= static_cast<Word>(a) << bit++;
    }
    return w;
}

gf2::BitMatrix build_block(Word seq, int k) {
    check_k(k);
    if (seq & ~gf2::low_mask(static_cast<std::size_t>(k) + 1)) {
        throw std::invalid_argument("sequence does not fit in k+1 = " + std::to_string(k + 1) +
                                    " bits");
    }
    const Word mask = gf2::low_mask(static_cast<std::size_t>(k));
    const Word rows[2] = {seq & mask, (seq >> 1) & mask};
    return gf2::BitMatrix::from_rows(rows, static_cast<std::size_t>(k));
}

gf2::BitMatrix build_stacked(const SequenceTuple& t) {
    check_k(t.k);
    check_n(t.n);
    if (static_cast<int>(t.seqs.size()) != t.n) {
        throw std::invalid_argument("tuple holds " + std::to_string(t.seqs.size()) +
                                    " sequences, expected n = " + std::to_string(t.n));
    }
    const Word mask = gf2::low_mask(static_cast<std::size_t>(t.k));
    gf2::BitMatrix m(2 * static_cast<std::size_t>(t.n), static_cast<std::size_t>(t.k));
    for (int j = 0; j < t.n; ++j) {
        const Word seq = t.seqs[static_cast<std::size_t>(j)];
        m.set_row(2 * static_cast<std::size_t>(j), seq & mask);
        m.set_row(2 * static_cast<std::size_t>(j) + 1, (seq >> 1) & mask);
    }
    return m;
}

int index_bits(int n, int k) {
    check_n(n);
    check_k(k);
    return n * (k + 1);
}

SequenceTuple tuple_from_index(std::uint64_t idx, int n, int k) {
    const int bits = index_bits(n, k);
    if (bits > 64) {
        throw std::out_of_range("n(k+1) = " + std::to_string(bits) +
                                " exceeds the 64-bit index space");
    }
    if (bits < 64 && (idx >> bits) != 0) {
        throw std::out_of_range("index " + std::to_string(idx) + " >= 2^" + std::to_string(bits));
    }
    const int width = k + 1;
    const Word mask = gf2::low_mask(static_cast<std::size_t>(width));
    std::vector<Word> seqs(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        seqs[static_cast<std::size_t>(j)] = (idx >> (j * width)) & mask;
    }
    return SequenceTuple{n, k, std::move(seqs)};
}

std::uint64_t index_from_tuple(const SequenceTuple& t) {
    const int bits = index_bits(t.n, t.k);
    if (bits > 64) {
        throw std::out_of_range("n(k+1) = " + std::to_string(bits) +
                                " exceeds the 64-bit index space");
    }
    const int width = t.k + 1;
    std::uint64_t idx = 0;
    for (int j = 0; j < t.n; ++j) {
        idx |= static_cast<std::uint64_t>(t.seqs[static_cast<std::size_t>(j)]) << (j * width);
    }
    return idx;
}

}  // namespace persym
