#include <gtest/gtest.h>

#include <random>

#include "persym/persymmetric.hpp"

using namespace persym;

TEST(Persymmetric, BlockRowsAreShifted) {
    // alpha = 1,0,1,1 with k = 3: rows (1,0,1) and (0,1,1).
    const Word seq = sequence_from_coefficients({1, 0, 1, 1});
    const auto b = build_block(seq, 3);
    ASSERT_EQ(b.rows(), 2u);
    ASSERT_EQ(b.cols(), 3u);
    EXPECT_EQ(b.row(0), 0b101u);
    EXPECT_EQ(b.row(1), 0b110u);
    for (std::size_t c = 0; c + 1 < 3; ++c) {
        EXPECT_EQ(b.get(1, c), b.get(0, c + 1));
    }
}

TEST(Persymmetric, BlockRejectsBadInput) {
    EXPECT_THROW(build_block(0, 0), std::invalid_argument);
    EXPECT_THROW(build_block(0b10000, 3), std::invalid_argument);
    EXPECT_THROW(sequence_from_coefficients({1, 2}), std::invalid_argument);
}

TEST(Persymmetric, StackedShape) {
    const auto t = SequenceTuple::make(4, {0b10101, 0b00011, 0b11111});
    const auto m = build_stacked(t);
    EXPECT_EQ(m.rows(), 6u);
    EXPECT_EQ(m.cols(), 4u);
    EXPECT_EQ(m.row(2), 0b0011u);
    EXPECT_EQ(m.row(3), 0b0001u);
}

TEST(Persymmetric, MakeValidates) {
    EXPECT_THROW(SequenceTuple::make(3, {}), std::invalid_argument);
    EXPECT_THROW(SequenceTuple::make(0, {0}), std::invalid_argument);
    EXPECT_THROW(SequenceTuple::make(2, {0b1000}), std::invalid_argument);
}

TEST(Persymmetric, IndexBijectionLayout) {
    // Bit (j-1)(k+1)+(i-1) is alpha_i of sequence j.
    const int n = 3;
    const int k = 2;
    const auto t = tuple_from_index(std::uint64_t{1} << (1 * 3 + 2), n, k);
    EXPECT_EQ(t.seqs, (std::vector<Word>{0, 0b100, 0}));
    EXPECT_EQ(index_bits(n, k), 9);
    EXPECT_THROW(tuple_from_index(std::uint64_t{1} << 9, n, k), std::out_of_range);
}

TEST(Persymmetric, IndexRoundTrip) {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 3; ++k) {
            const std::uint64_t size = std::uint64_t{1} << index_bits(n, k);
            for (std::uint64_t idx = 0; idx < size; ++idx) {
                const auto t = tuple_from_index(idx, n, k);
                ASSERT_EQ(index_from_tuple(t), idx);
            }
        }
    }
    std::mt19937_64 gen(3);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t idx = gen() & gf2::low_mask(6 * 7);
        EXPECT_EQ(index_from_tuple(tuple_from_index(idx, 6, 6)), idx);
    }
}

TEST(Persymmetric, RankOfSingleBlock) {
    // alpha = 1,0,0: rows (1,0),(0,0) rank 1; alpha = 1,0,1 rows (1,0),(0,1) rank 2.
    EXPECT_EQ(gf2::rank(build_block(0b001, 2)), 1);
    EXPECT_EQ(gf2::rank(build_block(0b101, 2)), 2);
    EXPECT_EQ(gf2::rank(build_block(0b000, 2)), 0);
}
