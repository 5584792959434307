#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace persym::gf2 {

using Word = std::uint64_t;

inline constexpr std::size_t kMaxRows = 64;
inline constexpr std::size_t kMaxCols = 63;

inline constexpr Word low_mask(std::size_t bits) noexcept {
    return bits >= 64 ? ~Word{0} : (Word{1} << bits) - 1;
}

/// Dense F_2 matrix, one word per row; bit j of a row is the entry in column j.
///
/// Storage is a fixed inline array so copies never allocate; this keeps the
/// rank computation usable inside the enumeration hot loop.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    /// Throws std::invalid_argument if a row has a bit at position >= cols,
    /// or if the shape exceeds kMaxRows x kMaxCols.
    static BitMatrix from_rows(std::span<const Word> row_bits, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Word row(std::size_t r) const { return data_.at(r); }
    std::span<const Word> row_bits() const noexcept { return {data_.data(), rows_}; }
    bool get(std::size_t r, std::size_t c) const { return (row(r) >> c) & 1u; }

    void set_row(std::size_t r, Word bits);
    void swap_rows(std::size_t a, std::size_t b);
    /// row[dst] ^= row[src]
    void add_row(std::size_t dst, std::size_t src);

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) noexcept;

private:
    std::array<Word, kMaxRows> data_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
};

/// Row rank of the words in `rows`, which are used as scratch and left reduced.
/// Allocation-free; the caller owns the buffer.
int rank_in_place(std::span<Word> rows) noexcept;

int rank(const BitMatrix& m) noexcept;

}  // namespace persym::gf2
