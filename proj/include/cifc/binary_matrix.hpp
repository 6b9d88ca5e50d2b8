#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cifc {

/// Dense matrix over GF(2), rows packed into 64-bit words (column c of a row
/// lives in bit c % 64 of word c / 64).
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols);

    static BinaryMatrix identity(std::size_t n);
    /// Each string is one row, leftmost character = column 0. All rows must
    /// have equal length; `cols` disambiguates the empty-row case.
    static BinaryMatrix from_rows(std::span<const std::string> rows, std::size_t cols);
    static BinaryMatrix from_rows(std::span<const std::string> rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    [[nodiscard]] bool get(std::size_t r, std::size_t c) const {
        return ((words_[r * stride_ + c / 64] >> (c % 64)) & 1U) != 0;
    }
    void set(std::size_t r, std::size_t c, bool value);
    void flip(std::size_t r, std::size_t c) { words_[r * stride_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

    /// Adds row `src` into row `dst` (GF(2) row operation).
    void add_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);
    [[nodiscard]] bool row_is_zero(std::size_t r) const;
    [[nodiscard]] bool is_zero() const;

    [[nodiscard]] std::size_t rank() const;

    [[nodiscard]] BinaryMatrix transpose() const;
    [[nodiscard]] BinaryMatrix columns(std::size_t first, std::size_t count) const;
    [[nodiscard]] BinaryMatrix row_block(std::size_t first, std::size_t count) const;

    /// Basis of {x : A x = 0}, one basis vector per column.
    [[nodiscard]] BinaryMatrix kernel() const;

    [[nodiscard]] std::vector<std::string> to_rows() const;

    friend BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b);
    friend BinaryMatrix operator+(const BinaryMatrix& a, const BinaryMatrix& b);
    BinaryMatrix& operator+=(const BinaryMatrix& rhs);
    friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;  // words per row
    std::vector<std::uint64_t> words_;
};

BinaryMatrix hstack(std::span<const BinaryMatrix> blocks);
BinaryMatrix vstack(std::span<const BinaryMatrix> blocks);

/// Some X with A X = B, or nullopt when B has a column outside the column
/// space of A. Free variables are set to zero.
std::optional<BinaryMatrix> solve(const BinaryMatrix& a, const BinaryMatrix& b);

}  // namespace cifc
