#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gencore/context.hpp"
#include "gencore/errors.hpp"
#include "gencore/scalar.hpp"

namespace gencore {

/// Dense matrix over the exact field Q(i), tagged with a ring context.
/// Values are immutable in spirit: every operation returns a fresh matrix.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, RingContext ctx)
        : rows_(rows), cols_(cols), ctx_(ctx), data_(rows * cols) {}

    static Matrix identity(std::size_t n, RingContext ctx) {
        Matrix m(n, n, ctx);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
        return m;
    }

    static Matrix zero(std::size_t rows, std::size_t cols, RingContext ctx) {
        return Matrix(rows, cols, ctx);
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<GaussianRational>> rows,
                            RingContext ctx) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.begin()->size();
        Matrix m(r, c, ctx);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw DimensionMismatch("ragged row list");
            std::size_t j = 0;
            for (const auto& e : row) m(i, j++) = e;
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const RingContext& context() const { return ctx_; }
    bool is_square() const { return rows_ == cols_; }

    GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    bool is_zero() const {
        for (const auto& e : data_)
            if (!e.is_zero()) return false;
        return true;
    }

    /// A* per the context involution.
    Matrix adjoint() const {
        Matrix out(cols_, rows_, ctx_);
        const bool conj = ctx_.involution == Involution::conjugate_transpose;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                out(c, r) = conj ? (*this)(r, c).conj() : (*this)(r, c);
        return out;
    }

    /// Plain transpose, independent of the involution.
    Matrix transpose() const {
        Matrix out(cols_, rows_, ctx_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    Matrix conjugated() const {
        Matrix out = *this;
        for (auto& e : out.data_) e = e.conj();
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_context(b);
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("add: shape mismatch");
        Matrix out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_context(b);
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("sub: shape mismatch");
        Matrix out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
        return out;
    }

    Matrix operator-() const {
        Matrix out = *this;
        for (auto& e : out.data_) e = -e;
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.require_same_context(b);
        if (a.cols_ != b.rows_) throw DimensionMismatch("mul: inner dimensions differ");
        Matrix out(a.rows_, b.cols_, a.ctx_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const GaussianRational& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const GaussianRational& bkj = b(k, j);
                    if (!bkj.is_zero()) out(i, j) += aik * bkj;
                }
            }
        return out;
    }

    friend Matrix operator*(const GaussianRational& s, const Matrix& a) {
        Matrix out = a;
        for (auto& e : out.data_) e = s * e;
        return out;
    }

    /// A^k by repeated squaring, k >= 0 (k = 0 gives the identity).
    Matrix power(std::size_t k) const {
        if (!is_square()) throw NonSquare("power: matrix is not square");
        Matrix result = identity(rows_, ctx_);
        Matrix base = *this;
        while (k > 0) {
            if (k & 1u) result = result * base;
            base = (k >>= 1) > 0 ? base * base : base;
        }
        return result;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        a.require_same_context(b);
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    void require_same_context(const Matrix& other) const {
        if (!(ctx_ == other.ctx_))
            throw ContextMismatch("operands carry different ring contexts");
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    RingContext ctx_;
    std::vector<GaussianRational> data_;
};

inline Matrix block_diag(const Matrix& a, const Matrix& b) {
    a.require_same_context(b);
    Matrix out(a.rows() + b.rows(), a.cols() + b.cols(), a.context());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
    return out;
}

/// [A | B] side by side.
inline Matrix hconcat(const Matrix& a, const Matrix& b) {
    a.require_same_context(b);
    if (a.rows() != b.rows()) throw DimensionMismatch("hconcat: row counts differ");
    Matrix out(a.rows(), a.cols() + b.cols(), a.context());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
    }
    return out;
}

} // namespace gencore
