#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "persym/gf2_matrix.hpp"

using persym::gf2::BitMatrix;
using persym::gf2::Word;
using persym::gf2::rank;

namespace {

// Rank as log2 of the row-space size, found by closing the span under XOR.
int rank_by_span(const std::vector<Word>& rows) {
    std::set<Word> span = {0};
    for (Word r : rows) {
        std::set<Word> next = span;
        for (Word s : span) {
            next.insert(s ^ r);
        }
        span = std::move(next);
    }
    int r = 0;
    while ((std::size_t{1} << r) < span.size()) {
        ++r;
    }
    return r;
}

// Textbook elimination on a vector<vector<int>>, pivoting left to right.
int rank_naive(std::vector<std::vector<int>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != r && m[i][c]) {
                for (std::size_t j = 0; j < cols; ++j) {
                    m[i][j] ^= m[r][j];
                }
            }
        }
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace

TEST(Gf2Matrix, Identity) {
    std::vector<Word> rows = {0b001, 0b010, 0b100};
    EXPECT_EQ(rank(BitMatrix::from_rows(rows, 3)), 3);
}

TEST(Gf2Matrix, ZeroAndDuplicateRows) {
    std::vector<Word> zero = {0, 0, 0, 0};
    EXPECT_EQ(rank(BitMatrix::from_rows(zero, 5)), 0);
    std::vector<Word> dup = {0b1011, 0b1011, 0b0110, 0b1101};
    EXPECT_EQ(rank(BitMatrix::from_rows(dup, 4)), 2);
}

TEST(Gf2Matrix, RejectsBitsOutsideColumns) {
    std::vector<Word> rows = {0b1000};
    EXPECT_THROW(BitMatrix::from_rows(rows, 3), std::invalid_argument);
    std::vector<Word> tall(65, 0);
    EXPECT_THROW(BitMatrix::from_rows(tall, 3), std::invalid_argument);
}

TEST(Gf2Matrix, AllTwoByTwoAndTwoByThree) {
    for (std::size_t cols : {2u, 3u}) {
        const Word lim = Word{1} << cols;
        for (Word a = 0; a < lim; ++a) {
            for (Word b = 0; b < lim; ++b) {
                std::vector<Word> rows = {a, b};
                EXPECT_EQ(rank(BitMatrix::from_rows(rows, cols)), rank_by_span(rows)) << a << " " << b;
            }
        }
    }
}

TEST(Gf2Matrix, RandomSmallAgainstNaive) {
    std::mt19937_64 gen(12345);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t rows = 1 + gen() % 8;
        const std::size_t cols = 1 + gen() % 8;
        std::vector<Word> words(rows);
        std::vector<std::vector<int>> dense(rows, std::vector<int>(cols));
        for (std::size_t r = 0; r < rows; ++r) {
            words[r] = gen() & persym::gf2::low_mask(cols);
            for (std::size_t c = 0; c < cols; ++c) {
                dense[r][c] = static_cast<int>((words[r] >> c) & 1u);
            }
        }
        const int got = rank(BitMatrix::from_rows(words, cols));
        EXPECT_EQ(got, rank_naive(dense));
        EXPECT_EQ(got, rank_by_span(words));
        EXPECT_LE(got, static_cast<int>(std::min(rows, cols)));
    }
}

TEST(Gf2Matrix, RowOperationsPreserveRank) {
    std::mt19937_64 gen(99);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Word> words(12);
        for (auto& w : words) {
            w = gen() & persym::gf2::low_mask(10);
        }
        BitMatrix m = BitMatrix::from_rows(words, 10);
        const int before = rank(m);
        for (int op = 0; op < 20; ++op) {
            const std::size_t a = gen() % 12;
            const std::size_t b = gen() % 12;
            if (gen() & 1u) {
                m.swap_rows(a, b);
            } else if (a != b) {
                m.add_row(a, b);
            }
            ASSERT_EQ(rank(m), before);
        }
    }
}

TEST(Gf2Matrix, AccessorsAndEquality) {
    BitMatrix m(2, 4);
    m.set_row(1, 0b1010);
    EXPECT_TRUE(m.get(1, 1));
    EXPECT_FALSE(m.get(1, 0));
    EXPECT_EQ(m.rows(), 2u);
    EXPECT_EQ(m.cols(), 4u);
    std::vector<Word> rows = {0, 0b1010};
    EXPECT_EQ(m, BitMatrix::from_rows(rows, 4));
    EXPECT_THROW(m.set_row(0, 0b10000), std::invalid_argument);
}

TEST(Gf2Matrix, RankInPlaceWideWords) {
    std::vector<Word> rows = {Word{1} << 62, (Word{1} << 62) | 1, 1};
    EXPECT_EQ(persym::gf2::rank_in_place(rows), 2);
}
