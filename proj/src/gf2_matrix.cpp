#include "adt/gf2_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace adt {

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Gf2Matrix Gf2Matrix::shift_matrix(std::size_t q, std::size_t power) {
    Gf2Matrix m(q, q);
    for (std::size_t i = power; i < q; ++i) m.set(i, i - power, 1);
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::string>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    Gf2Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged row strings");
        for (std::size_t j = 0; j < c; ++j) {
            if (rows[i][j] == '1')
                m.set(i, j, 1);
            else if (rows[i][j] != '0')
                throw std::invalid_argument("row strings must be 0/1");
        }
    }
    return m;
}

void Gf2Matrix::xor_row_from(std::size_t dst, const Gf2Matrix& src, std::size_t src_row) {
    for (std::size_t w = 0; w < wpr_; ++w) bits_[dst * wpr_ + w] ^= src.bits_[src_row * wpr_ + w];
}

void Gf2Matrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t w = 0; w < wpr_; ++w) std::swap(bits_[i * wpr_ + w], bits_[j * wpr_ + w]);
}

bool Gf2Matrix::row_is_zero(std::size_t i) const {
    for (std::size_t w = 0; w < wpr_; ++w)
        if (bits_[i * wpr_ + w]) return false;
    return true;
}

bool Gf2Matrix::is_zero() const {
    for (uint64_t w : bits_)
        if (w) return false;
    return true;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("mat_mul: dimension mismatch");
    Gf2Matrix c(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t w = 0; w < wpr_; ++w) {
            uint64_t word = bits_[i * wpr_ + w];
            while (word) {
                std::size_t k = w * 64 + static_cast<std::size_t>(__builtin_ctzll(word));
                word &= word - 1;
                c.xor_row_from(i, rhs, k);
            }
        }
    }
    return c;
}

Gf2Matrix Gf2Matrix::operator+(const Gf2Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("add: dimension mismatch");
    Gf2Matrix c = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i) c.bits_[i] ^= rhs.bits_[i];
    return c;
}

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t w = 0; w < wpr_; ++w) {
            uint64_t word = bits_[i * wpr_ + w];
            while (word) {
                std::size_t j = w * 64 + static_cast<std::size_t>(__builtin_ctzll(word));
                word &= word - 1;
                t.set(j, i, 1);
            }
        }
    return t;
}

std::size_t Gf2Matrix::rank() const {
    Gf2Matrix a = *this;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t piv = r;
        while (piv < rows_ && !a.get(piv, col)) ++piv;
        if (piv == rows_) continue;
        a.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < rows_; ++i)
            if (a.get(i, col)) a.xor_row_from(i, a, r);
        ++r;
    }
    return r;
}

Gf2Matrix Gf2Matrix::rref() const {
    Gf2Matrix a = *this;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t piv = r;
        while (piv < rows_ && !a.get(piv, col)) ++piv;
        if (piv == rows_) continue;
        a.swap_rows(r, piv);
        for (std::size_t i = 0; i < rows_; ++i)
            if (i != r && a.get(i, col)) a.xor_row_from(i, a, r);
        ++r;
    }
    return a;
}

std::string Gf2Matrix::row_string(std::size_t i) const {
    std::string s(cols_, '0');
    for (std::size_t j = 0; j < cols_; ++j)
        if (get(i, j)) s[j] = '1';
    return s;
}

Gf2Matrix Gf2Matrix::col_slice(std::size_t begin, std::size_t end) const {
    if (begin > end || end > cols_) throw std::invalid_argument("col_slice: bad range");
    Gf2Matrix c(rows_, end - begin);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = begin; j < end; ++j)
            if (get(i, j)) c.set(i, j - begin, 1);
    return c;
}

std::optional<Gf2Matrix> Gf2Matrix::solve_left(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("solve_left: dimension mismatch");
    // Row-reduce a while tracking the transform e, so e*a is in echelon form.
    Gf2Matrix r = a;
    Gf2Matrix e = identity(a.rows_);
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (col, row)
    std::size_t rk = 0;
    for (std::size_t col = 0; col < a.cols_ && rk < a.rows_; ++col) {
        std::size_t piv = rk;
        while (piv < a.rows_ && !r.get(piv, col)) ++piv;
        if (piv == a.rows_) continue;
        r.swap_rows(rk, piv);
        e.swap_rows(rk, piv);
        for (std::size_t i = 0; i < a.rows_; ++i)
            if (i != rk && r.get(i, col)) {
                r.xor_row_from(i, r, rk);
                e.xor_row_from(i, e, rk);
            }
        pivots.emplace_back(col, rk);
        ++rk;
    }
    Gf2Matrix d(b.rows_, a.rows_);
    Gf2Matrix res(1, a.cols_);
    for (std::size_t k = 0; k < b.rows_; ++k) {
        for (std::size_t j = 0; j < a.cols_; ++j) res.set(0, j, b.get(k, j));
        for (auto [col, prow] : pivots)
            if (res.get(0, col)) {
                res.xor_row_from(0, r, prow);
                d.xor_row_from(k, e, prow);
            }
        if (!res.row_is_zero(0)) return std::nullopt;
    }
    return d;
}

Gf2Matrix kron(const Gf2Matrix& a, const Gf2Matrix& b) {
    Gf2Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a.get(i, j)) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    if (b.get(p, q)) c.set(i * b.rows() + p, j * b.cols() + q, 1);
        }
    return c;
}

Gf2Matrix hconcat(const std::vector<Gf2Matrix>& blocks) {
    if (blocks.empty()) return {};
    std::size_t rows = blocks[0].rows(), cols = 0;
    for (const auto& m : blocks) {
        if (m.rows() != rows) throw std::invalid_argument("hconcat: row mismatch");
        cols += m.cols();
    }
    Gf2Matrix c(rows, cols);
    std::size_t off = 0;
    for (const auto& m : blocks) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (m.get(i, j)) c.set(i, off + j, 1);
        off += m.cols();
    }
    return c;
}

Gf2Matrix vconcat(const std::vector<Gf2Matrix>& blocks) {
    if (blocks.empty()) return {};
    std::size_t cols = blocks[0].cols(), rows = 0;
    for (const auto& m : blocks) {
        if (m.cols() != cols) throw std::invalid_argument("vconcat: column mismatch");
        rows += m.rows();
    }
    Gf2Matrix c(rows, cols);
    std::size_t off = 0;
    for (const auto& m : blocks) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (m.get(i, j)) c.set(off + i, j, 1);
        off += m.rows();
    }
    return c;
}

}  // namespace adt
