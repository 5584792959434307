#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "persym/gf2_matrix.hpp"

namespace persym {

using gf2::Word;

/// n coefficient sequences alpha_1..alpha_{k+1}; bit (i-1) of seqs[j] holds alpha_i of block j+1.
struct SequenceTuple {
    int n = 0;
    int k = 0;
    std::vector<Word> seqs;

    /// Validates n >= 1, 1 <= k <= 63 and that every sequence fits in k+1 bits.
    static SequenceTuple make(int k, std::vector<Word> seqs);

    friend bool operator==(const SequenceTuple&, const SequenceTuple&) = default;
};

/// Packs (alpha_1, alpha_2, ...) into a sequence word, alpha_i at bit i-1.
Word sequence_from_coefficients(std::initializer_list<int> alphas);

/// 2 x k block: first row alpha_1..alpha_k, second row alpha_2..alpha_{k+1}.
gf2::BitMatrix build_block(Word seq, int k);

/// Vertical stack of the n blocks of `t`, 2n x k.
gf2::BitMatrix build_stacked(const SequenceTuple& t);

/// Number of index bits n(k+1) of the enumeration bijection.
int index_bits(int n, int k);

/// Sequence-major, little-endian: bit (j-1)(k+1)+(i-1) of idx is alpha_i of sequence j.
SequenceTuple tuple_from_index(std::uint64_t idx, int n, int k);
std::uint64_t index_from_tuple(const SequenceTuple& t);

}  // namespace persym
