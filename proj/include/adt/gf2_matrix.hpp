#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace adt {

/// Dense bit matrix over GF(2). Rows are packed into 64-bit words.
/// All operations return new values; a matrix is never mutated after it has
/// been handed out.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows_ * wpr_, 0) {}

    static Gf2Matrix identity(std::size_t n);
    static Gf2Matrix zero(std::size_t rows, std::size_t cols) { return Gf2Matrix(rows, cols); }

    /// G^power for the q-by-q down-shift matrix G with [G]_{ij} = 1{i = j+1}.
    /// G^0 is the identity; G^p vanishes for p >= q.
    static Gf2Matrix shift_matrix(std::size_t q, std::size_t power);

    /// Build from one '0'/'1' string per row (test and JSON convenience).
    static Gf2Matrix from_rows(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    int get(std::size_t i, std::size_t j) const {
        return static_cast<int>((bits_[i * wpr_ + j / 64] >> (j % 64)) & 1u);
    }
    void set(std::size_t i, std::size_t j, int bit) {
        uint64_t mask = uint64_t{1} << (j % 64);
        if (bit)
            bits_[i * wpr_ + j / 64] |= mask;
        else
            bits_[i * wpr_ + j / 64] &= ~mask;
    }

    bool operator==(const Gf2Matrix& o) const = default;

    Gf2Matrix operator*(const Gf2Matrix& rhs) const;  // mod-2 product
    Gf2Matrix operator+(const Gf2Matrix& rhs) const;  // XOR
    Gf2Matrix transpose() const;
    bool is_zero() const;

    std::size_t rank() const;

    /// Canonical reduced row-echelon form (pivots left-to-right, full
    /// elimination above and below).
    Gf2Matrix rref() const;

    std::string row_string(std::size_t i) const;

    /// Columns [begin, end) as a new matrix.
    Gf2Matrix col_slice(std::size_t begin, std::size_t end) const;

    /// Solve D * A = B for D. Exists iff row-space(A) contains row-space(B).
    /// Free variables are set to zero, so the result is deterministic.
    static std::optional<Gf2Matrix> solve_left(const Gf2Matrix& a, const Gf2Matrix& b);

private:
    void xor_row_from(std::size_t dst, const Gf2Matrix& src, std::size_t src_row);
    void swap_rows(std::size_t i, std::size_t j);
    bool row_is_zero(std::size_t i) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpr_ = 0;  // words per row
    std::vector<uint64_t> bits_;
};

Gf2Matrix kron(const Gf2Matrix& a, const Gf2Matrix& b);
Gf2Matrix hconcat(const std::vector<Gf2Matrix>& blocks);
Gf2Matrix vconcat(const std::vector<Gf2Matrix>& blocks);

}  // namespace adt
