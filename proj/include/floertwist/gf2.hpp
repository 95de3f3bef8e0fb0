#pragma once

#include <cstdint>
#include <vector>

#include "floertwist/errors.hpp"

namespace floertwist::gf2 {

// Dense GF(2) matrix, one bit per entry, rows packed into 64-bit words.
// All sizes in this project are tiny (tens of basis elements), so the only
// thing that matters here is determinism: elimination always picks the first
// nonzero pivot in row-major order.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          data_(rows * words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t& w = data_[r * words_ + c / 64];
        std::uint64_t m = std::uint64_t{1} << (c % 64);
        if (v)
            w |= m;
        else
            w &= ~m;
    }
    void flip(std::size_t r, std::size_t c) {
        data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64);
    }

    bool is_zero() const {
        for (auto w : data_)
            if (w) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        require_shape(o, "matrix sum");
        Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] ^= o.data_[i];
        return out;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    // this * o, where columns index the source basis.
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_)
            throw InvalidParameter("gf2: inner dimensions do not match");
        Matrix out(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k)
                if (get(r, k))
                    for (std::size_t w = 0; w < out.words_; ++w)
                        out.data_[r * out.words_ + w] ^= o.data_[k * o.words_ + w];
        return out;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    // Rank by Gaussian elimination on a copy.
    std::size_t rank() const {
        Matrix m = *this;
        return m.eliminate();
    }

    // Columns spanning ker(this); each kernel vector is a column of the result.
    Matrix kernel_basis() const {
        Matrix m = *this;
        std::vector<std::size_t> pivot_of_col(cols_, npos);
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = npos;
            for (std::size_t i = r; i < rows_; ++i)
                if (m.get(i, c)) {
                    p = i;
                    break;
                }
            if (p == npos) continue;
            m.swap_rows(r, p);
            for (std::size_t i = 0; i < rows_; ++i)
                if (i != r && m.get(i, c)) m.xor_row(i, r);
            pivot_of_col[c] = r;
            ++r;
        }
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < cols_; ++c)
            if (pivot_of_col[c] == npos) free_cols.push_back(c);
        Matrix out(cols_, free_cols.size());
        for (std::size_t j = 0; j < free_cols.size(); ++j) {
            std::size_t fc = free_cols[j];
            out.set(fc, j, true);
            for (std::size_t c = 0; c < cols_; ++c)
                if (pivot_of_col[c] != npos && m.get(pivot_of_col[c], fc))
                    out.set(c, j, true);
        }
        return out;
    }

    // One solution x of (this) x = b, if any.  b has rows() entries.
    // Returns empty vector if the system is inconsistent.
    std::vector<bool> solve(const std::vector<bool>& b) const {
        if (b.size() != rows_)
            throw InvalidParameter("gf2: rhs size does not match row count");
        Matrix m(rows_, cols_ + 1);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t w = 0; w < words_; ++w)
                m.data_[r * m.words_ + w] = data_[r * words_ + w];
            if (b[r]) m.set(r, cols_, true);
        }
        std::vector<std::size_t> pivot_col;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = npos;
            for (std::size_t i = r; i < rows_; ++i)
                if (m.get(i, c)) {
                    p = i;
                    break;
                }
            if (p == npos) continue;
            m.swap_rows(r, p);
            for (std::size_t i = 0; i < rows_; ++i)
                if (i != r && m.get(i, c)) m.xor_row(i, r);
            pivot_col.push_back(c);
            ++r;
        }
        for (std::size_t i = r; i < rows_; ++i)
            if (m.get(i, cols_)) return {};
        std::vector<bool> x(cols_, false);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            x[pivot_col[i]] = m.get(i, cols_);
        return x;
    }

    std::vector<bool> apply(const std::vector<bool>& x) const {
        if (x.size() != cols_)
            throw InvalidParameter("gf2: vector size does not match column count");
        std::vector<bool> y(rows_, false);
        for (std::size_t r = 0; r < rows_; ++r) {
            bool acc = false;
            for (std::size_t c = 0; c < cols_; ++c)
                if (x[c] && get(r, c)) acc = !acc;
            y[r] = acc;
        }
        return y;
    }

    // Horizontal concatenation [this | o].
    Matrix concat_cols(const Matrix& o) const {
        if (rows_ != o.rows_)
            throw InvalidParameter("gf2: row counts differ in concat");
        Matrix out(rows_, cols_ + o.cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c)) out.set(r, c, true);
            for (std::size_t c = 0; c < o.cols_; ++c)
                if (o.get(r, c)) out.set(r, cols_ + c, true);
        }
        return out;
    }

    Matrix column(std::size_t c) const {
        Matrix out(rows_, 1);
        for (std::size_t r = 0; r < rows_; ++r)
            if (get(r, c)) out.set(r, 0, true);
        return out;
    }

  private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    void require_shape(const Matrix& o, const char* what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw InvalidParameter(std::string("gf2: shape mismatch in ") + what);
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t w = 0; w < words_; ++w)
            std::swap(data_[a * words_ + w], data_[b * words_ + w]);
    }
    void xor_row(std::size_t dst, std::size_t src) {
        for (std::size_t w = 0; w < words_; ++w)
            data_[dst * words_ + w] ^= data_[src * words_ + w];
    }
    // In-place row echelon; returns rank.
    std::size_t eliminate() {
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = npos;
            for (std::size_t i = r; i < rows_; ++i)
                if (get(i, c)) {
                    p = i;
                    break;
                }
            if (p == npos) continue;
            swap_rows(r, p);
            for (std::size_t i = r + 1; i < rows_; ++i)
                if (get(i, c)) xor_row(i, r);
            ++r;
        }
        return r;
    }

    std::size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<std::uint64_t> data_;
};

} // namespace floertwist::gf2
