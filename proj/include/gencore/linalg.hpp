#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gencore/matrix.hpp"

namespace gencore {

struct RowEchelon {
    Matrix reduced;                  // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column per nonzero row, in order
};

/// Exact Gauss-Jordan elimination. Pivot choice: first row with a nonzero
/// entry in the leftmost unresolved column.
inline RowEchelon reduced_row_echelon(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t piv = lead;
        while (piv < rows && m(piv, col).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != lead)
            for (std::size_t c = 0; c < cols; ++c) std::swap(m(lead, c), m(piv, c));
        GaussianRational inv = GaussianRational(1) / m(lead, col);
        for (std::size_t c = col; c < cols; ++c) m(lead, c) = inv * m(lead, c);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || m(r, col).is_zero()) continue;
            GaussianRational f = m(r, col);
            for (std::size_t c = col; c < cols; ++c) m(r, c) -= f * m(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& a) { return reduced_row_echelon(a).pivots.size(); }

/// Smallest positive k with rank(A^k) = rank(A^{k+1}); invertible matrices
/// report 1.
inline std::size_t drazin_index(const Matrix& a) {
    if (!a.is_square()) throw NonSquare("drazin_index: matrix is not square");
    std::size_t prev = rank(a);
    Matrix p = a;
    for (std::size_t k = 1;; ++k) {
        p = p * a;
        std::size_t next = rank(p);
        if (next == prev) return k;
        prev = next;
    }
}

/// Any X with A X = B, free variables set to zero; nullopt when inconsistent.
inline std::optional<Matrix> solve_columns(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve_columns: row counts differ");
    RowEchelon re = reduced_row_echelon(hconcat(a, b));
    const std::size_t n = a.cols();
    // pivot landing in the B block means an inconsistent row
    for (std::size_t piv : re.pivots)
        if (piv >= n) return std::nullopt;
    Matrix x(n, b.cols(), a.context());
    for (std::size_t r = 0; r < re.pivots.size(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            x(re.pivots[r], c) = re.reduced(r, n + c);
    return x;
}

/// Inverse of a square matrix; nullopt when singular.
inline std::optional<Matrix> try_inverse(const Matrix& a) {
    if (!a.is_square()) throw NonSquare("inverse: matrix is not square");
    auto x = solve_columns(a, Matrix::identity(a.rows(), a.context()));
    if (!x) return std::nullopt;
    return x;
}

inline Matrix inverse(const Matrix& a) {
    auto x = try_inverse(a);
    if (!x) throw SingularBlock("inverse: matrix is singular");
    return *x;
}

/// Pivot columns of A as an n x rank(A) basis of the column space.
inline Matrix column_space_basis(const Matrix& a) {
    RowEchelon re = reduced_row_echelon(a);
    Matrix out(a.rows(), re.pivots.size(), a.context());
    for (std::size_t j = 0; j < re.pivots.size(); ++j)
        for (std::size_t r = 0; r < a.rows(); ++r) out(r, j) = a(r, re.pivots[j]);
    return out;
}

/// Basis of {v : A v = 0} as a cols(A) x (cols(A) - rank(A)) matrix.
inline Matrix null_space_basis(const Matrix& a) {
    RowEchelon re = reduced_row_echelon(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : re.pivots) is_pivot[p] = true;
    Matrix out(n, n - re.pivots.size(), a.context());
    std::size_t j = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        out(free, j) = GaussianRational(1);
        for (std::size_t r = 0; r < re.pivots.size(); ++r)
            out(re.pivots[r], j) = -re.reduced(r, free);
        ++j;
    }
    return out;
}

/// True iff every column of A lies in the column space of B.
inline bool column_space_contained(const Matrix& a, const Matrix& b) {
    return solve_columns(b, a).has_value();
}

inline bool same_column_space(const Matrix& a, const Matrix& b) {
    return column_space_contained(a, b) && column_space_contained(b, a);
}

/// True iff {Y : Y M = 0} is contained in {Y : Y N = 0}; for matrices this
/// is column-space containment of N in M.
inline bool left_annihilator_contained(const Matrix& m, const Matrix& n) {
    return column_space_contained(n, m);
}

/// Row-space containment, i.e. A in R B (exists Y with Y B = A).
inline bool row_space_contained(const Matrix& a, const Matrix& b) {
    return column_space_contained(a.transpose(), b.transpose());
}

} // namespace gencore
