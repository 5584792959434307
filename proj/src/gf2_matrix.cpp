#include "persym/gf2_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace persym::gf2 {

namespace {

void check_shape(std::size_t rows, std::size_t cols) {
    if (rows > kMaxRows || cols > kMaxCols) {
        throw std::invalid_argument("BitMatrix shape " + std::to_string(rows) + "x" +
                                    std::to_string(cols) + " exceeds " +
                                    std::to_string(kMaxRows) + "x" + std::to_string(kMaxCols));
    }
}

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    check_shape(rows, cols);
}

BitMatrix BitMatrix::from_rows(std::span<const Word> row_bits, std::size_t cols) {
    BitMatrix m(row_bits.size(), cols);
    for (std::size_t r = 0; r < row_bits.size(); ++r) {
        m.set_row(r, row_bits[r]);
    }
    return m;
}

void BitMatrix::set_row(std::size_t r, Word bits) {
    if (r >= rows_) {
        throw std::out_of_range("row index " + std::to_string(r) + " out of range");
    }
    if (bits & ~low_mask(cols_)) {
        throw std::invalid_argument("row " + std::to_string(r) + " has a set bit at column >= " +
                                    std::to_string(cols_));
    }
    data_[r] = bits;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a >= rows_ || b >= rows_) {
        throw std::out_of_range("row index out of range");
    }
    std::swap(data_[a], data_[b]);
}

void BitMatrix::add_row(std::size_t dst, std::size_t src) {
    if (dst >= rows_ || src >= rows_) {
        throw std::out_of_range("row index out of range");
    }
    data_[dst] ^= data_[src];
}

bool operator==(const BitMatrix& a, const BitMatrix& b) noexcept {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        return false;
    }
    for (std::size_t r = 0; r < a.rows_; ++r) {
        if (a.data_[r] != b.data_[r]) {
            return false;
        }
    }
    return true;
}

// Each nonzero row pivots on its lowest set bit and clears that bit from every
// later row. A row that survives nonzero cannot contain an earlier pivot, so the
// surviving rows are independent.
int rank_in_place(std::span<Word> rows) noexcept {
    int r = 0;
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Word v = rows[i];
        if (v == 0) {
            continue;
        }
        ++r;
        const Word pivot = v & (~v + 1);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rows[j] & pivot) {
                rows[j] ^= v;
            }
        }
    }
    return r;
}

int rank(const BitMatrix& m) noexcept {
    std::array<Word, kMaxRows> scratch;
    const auto src = m.row_bits();
    std::copy(src.begin(), src.end(), scratch.begin());
    return rank_in_place(std::span<Word>(scratch.data(), src.size()));
}

}  // namespace persym::gf2
