#include "cifc/binary_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace cifc {

namespace {

std::size_t words_for(std::size_t cols) { return (cols + 63) / 64; }

// Reduced row echelon form restricted to the first `pivot_cols` columns.
// Returns pivot column per echelon row.
std::vector<std::size_t> reduce(BinaryMatrix& m, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < pivot_cols && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(rank, p);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != rank && m.get(r, c)) m.add_row(r, rank);
        }
        pivots.push_back(c);
        ++rank;
    }
    return pivots;
}

}  // namespace

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), words_(rows * words_for(cols), 0) {}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(std::span<const std::string> rows, std::size_t cols) {
    BinaryMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                        " entries, expected " + std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const char ch = rows[r][c];
            if (ch != '0' && ch != '1') throw std::invalid_argument("row entries must be '0' or '1'");
            m.set(r, c, ch == '1');
        }
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(std::span<const std::string> rows) {
    return from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool value) {
    auto& w = words_[r * stride_ + c / 64];
    const auto bit = std::uint64_t{1} << (c % 64);
    w = value ? (w | bit) : (w & ~bit);
}

void BinaryMatrix::add_row(std::size_t dst, std::size_t src) {
    for (std::size_t k = 0; k < stride_; ++k) words_[dst * stride_ + k] ^= words_[src * stride_ + k];
}

void BinaryMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(words_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                     words_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                     words_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

bool BinaryMatrix::row_is_zero(std::size_t r) const {
    for (std::size_t k = 0; k < stride_; ++k) {
        if (words_[r * stride_ + k] != 0) return false;
    }
    return true;
}

bool BinaryMatrix::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BinaryMatrix::rank() const {
    // Forward elimination; the pivot for each column is the lowest-index
    // remaining row that has the bit set.
    BinaryMatrix m = *this;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t p = rank;
        while (p < rows_ && !m.get(p, c)) ++p;
        if (p == rows_) continue;
        m.swap_rows(rank, p);
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            if (m.get(r, c)) m.add_row(r, rank);
        }
        ++rank;
    }
    return rank;
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) t.set(c, r, true);
        }
    }
    return t;
}

BinaryMatrix BinaryMatrix::columns(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw std::out_of_range("column block out of range");
    BinaryMatrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < count; ++c) {
            if (get(r, first + c)) out.set(r, c, true);
        }
    }
    return out;
}

BinaryMatrix BinaryMatrix::row_block(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw std::out_of_range("row block out of range");
    BinaryMatrix out(count, cols_);
    std::copy_n(words_.begin() + static_cast<std::ptrdiff_t>(first * stride_), count * stride_, out.words_.begin());
    return out;
}

BinaryMatrix BinaryMatrix::kernel() const {
    BinaryMatrix m = *this;
    const auto pivots = reduce(m, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;

    const std::size_t nullity = cols_ - pivots.size();
    BinaryMatrix basis(cols_, nullity);
    std::size_t k = 0;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        basis.set(f, k, true);
        for (std::size_t row = 0; row < pivots.size(); ++row) {
            if (m.get(row, f)) basis.set(pivots[row], k, true);
        }
        ++k;
    }
    return basis;
}

std::vector<std::string> BinaryMatrix::to_rows() const {
    std::vector<std::string> out(rows_, std::string(cols_, '0'));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) out[r][c] = '1';
        }
    }
    return out;
}

BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("dimension mismatch in product: " + std::to_string(a.rows_) + "x" +
                                    std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                    std::to_string(b.cols_));
    }
    BinaryMatrix c(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (!a.get(r, k)) continue;
            for (std::size_t w = 0; w < c.stride_; ++w) c.words_[r * c.stride_ + w] ^= b.words_[k * b.stride_ + w];
        }
    }
    return c;
}

BinaryMatrix& BinaryMatrix::operator+=(const BinaryMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("dimension mismatch in sum");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
    return *this;
}

BinaryMatrix operator+(const BinaryMatrix& a, const BinaryMatrix& b) {
    BinaryMatrix c = a;
    c += b;
    return c;
}

bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.words_ == b.words_;
}

BinaryMatrix hstack(std::span<const BinaryMatrix> blocks) {
    if (blocks.empty()) return {};
    const std::size_t rows = blocks.front().rows();
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw std::invalid_argument("hstack: row count mismatch");
        cols += b.cols();
    }
    BinaryMatrix out(rows, cols);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < b.cols(); ++c) {
                if (b.get(r, c)) out.set(r, offset + c, true);
            }
        }
        offset += b.cols();
    }
    return out;
}

BinaryMatrix vstack(std::span<const BinaryMatrix> blocks) {
    if (blocks.empty()) return {};
    const std::size_t cols = blocks.front().cols();
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw std::invalid_argument("vstack: column count mismatch");
        rows += b.rows();
    }
    BinaryMatrix out(rows, cols);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                if (b.get(r, c)) out.set(offset + r, c, true);
            }
        }
        offset += b.rows();
    }
    return out;
}

std::optional<BinaryMatrix> solve(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
    const BinaryMatrix parts[] = {a, b};
    BinaryMatrix aug = hstack(parts);
    const auto pivots = reduce(aug, a.cols());

    for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            if (aug.get(r, a.cols() + c)) return std::nullopt;
        }
    }
    BinaryMatrix x(a.cols(), b.cols());
    for (std::size_t row = 0; row < pivots.size(); ++row) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            if (aug.get(row, a.cols() + c)) x.set(pivots[row], c, true);
        }
    }
    return x;
}

}  // namespace cifc
