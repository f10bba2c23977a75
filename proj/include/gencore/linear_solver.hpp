#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gencore/linalg.hpp"
#include "gencore/matrix.hpp"

namespace gencore {

/// One term P . X . Q (or P . X* . Q when adjoint_unknown) of a linear
/// matrix constraint.
struct ConstraintTerm {
    Matrix left;
    Matrix right;
    bool adjoint_unknown = false;
};

/// sum_j P_j . X_or_Xadj . Q_j = R
struct LinearConstraint {
    std::vector<ConstraintTerm> terms;
    Matrix rhs;
};

namespace detail {

/// Dense rational row reduction of an augmented system rows x (vars + 1).
/// Returns the particular solution with free variables zero, or nullopt
/// when inconsistent.
inline std::optional<std::vector<Rational>>
solve_rational_system(std::vector<std::vector<Rational>>& m, std::size_t vars) {
    const std::size_t rows = m.size();
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
    std::size_t lead = 0;
    for (std::size_t col = 0; col < vars && lead < rows; ++col) {
        std::size_t piv = lead;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != lead) std::swap(m[piv], m[lead]);
        Rational inv = 1 / m[lead][col];
        for (std::size_t c = col; c <= vars; ++c) m[lead][c] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t c = col; c <= vars; ++c) m[r][c] -= f * m[lead][c];
        }
        pivots.emplace_back(lead, col);
        ++lead;
    }
    for (std::size_t r = lead; r < rows; ++r)
        if (m[r][vars] != 0) return std::nullopt;
    std::vector<Rational> x(vars, Rational(0));
    for (auto [r, c] : pivots) x[c] = m[r][vars];
    return x;
}

} // namespace detail

/// Solves the simultaneous constraints for an unknown of the given shape by
/// splitting every scalar into rational real/imaginary parts, so that terms
/// carrying X* stay linear over Q, then vectorizing and row-reducing.
/// Returns the deterministic particular solution (free variables zero), or
/// nullopt when the system is inconsistent.
inline std::optional<Matrix> solve_linear_system(std::span<const LinearConstraint> constraints,
                                                 std::pair<std::size_t, std::size_t> unknown_shape,
                                                 RingContext ctx) {
    const auto [p, q] = unknown_shape;
    const std::size_t vars = 2 * p * q;
    const bool conj = ctx.involution == Involution::conjugate_transpose;

    std::size_t eq_rows = 0;
    for (const auto& c : constraints) eq_rows += 2 * c.rhs.rows() * c.rhs.cols();

    std::vector<std::vector<Rational>> sys(eq_rows, std::vector<Rational>(vars + 1, Rational(0)));
    auto var_re = [q = q](std::size_t k, std::size_t l) { return 2 * (k * q + l); };

    std::size_t row0 = 0;
    for (const auto& constraint : constraints) {
        const Matrix& rhs = constraint.rhs;
        for (const auto& term : constraint.terms) {
            const std::size_t inner_rows = term.adjoint_unknown ? q : p;
            const std::size_t inner_cols = term.adjoint_unknown ? p : q;
            if (term.left.rows() != rhs.rows() || term.left.cols() != inner_rows ||
                term.right.rows() != inner_cols || term.right.cols() != rhs.cols())
                throw DimensionMismatch("solve_linear_system: term shape mismatch");
        }
        for (std::size_t r = 0; r < rhs.rows(); ++r) {
            for (std::size_t c = 0; c < rhs.cols(); ++c) {
                const std::size_t re_eq = row0 + 2 * (r * rhs.cols() + c);
                const std::size_t im_eq = re_eq + 1;
                sys[re_eq][vars] = rhs(r, c).re;
                sys[im_eq][vars] = rhs(r, c).im;
                for (const auto& term : constraint.terms) {
                    const std::size_t inner_rows = term.adjoint_unknown ? q : p;
                    const std::size_t inner_cols = term.adjoint_unknown ? p : q;
                    for (std::size_t s = 0; s < inner_rows; ++s) {
                        const GaussianRational& ls = term.left(r, s);
                        if (ls.is_zero()) continue;
                        for (std::size_t t = 0; t < inner_cols; ++t) {
                            const GaussianRational& rt = term.right(t, c);
                            if (rt.is_zero()) continue;
                            GaussianRational alpha = ls * rt;
                            // unknown entry touched by this coefficient
                            std::size_t k = term.adjoint_unknown ? t : s;
                            std::size_t l = term.adjoint_unknown ? s : t;
                            const std::size_t vr = var_re(k, l);
                            const std::size_t vi = vr + 1;
                            const bool conj_entry = term.adjoint_unknown && conj;
                            if (conj_entry) {
                                // alpha * conj(x): re = ar*xr + ai*xi, im = ai*xr - ar*xi
                                sys[re_eq][vr] += alpha.re;
                                sys[re_eq][vi] += alpha.im;
                                sys[im_eq][vr] += alpha.im;
                                sys[im_eq][vi] -= alpha.re;
                            } else {
                                // alpha * x: re = ar*xr - ai*xi, im = ai*xr + ar*xi
                                sys[re_eq][vr] += alpha.re;
                                sys[re_eq][vi] -= alpha.im;
                                sys[im_eq][vr] += alpha.im;
                                sys[im_eq][vi] += alpha.re;
                            }
                        }
                    }
                }
            }
        }
        row0 += 2 * rhs.rows() * rhs.cols();
    }

    auto sol = detail::solve_rational_system(sys, vars);
    if (!sol) return std::nullopt;
    Matrix x(p, q, ctx);
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < q; ++l)
            x(k, l) = GaussianRational((*sol)[var_re(k, l)], (*sol)[var_re(k, l) + 1]);
    return x;
}

inline std::optional<Matrix> solve_linear_system(const std::vector<LinearConstraint>& constraints,
                                                 std::pair<std::size_t, std::size_t> unknown_shape,
                                                 RingContext ctx) {
    return solve_linear_system(std::span<const LinearConstraint>(constraints), unknown_shape, ctx);
}

} // namespace gencore
