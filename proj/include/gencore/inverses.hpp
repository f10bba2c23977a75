#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gencore/linalg.hpp"
#include "gencore/linear_solver.hpp"
#include "gencore/matrix.hpp"

namespace gencore {

enum class InverseKind { inner, one_three, one_four, moore_penrose, group, drazin, core, dual_core };

inline std::string to_string(InverseKind k) {
    switch (k) {
        case InverseKind::inner: return "inner";
        case InverseKind::one_three: return "one_three";
        case InverseKind::one_four: return "one_four";
        case InverseKind::moore_penrose: return "moore_penrose";
        case InverseKind::group: return "group";
        case InverseKind::drazin: return "drazin";
        case InverseKind::core: return "core";
        case InverseKind::dual_core: return "dual_core";
    }
    return "?";
}

struct Certificate {
    std::string equation;
    Matrix residual;
};

struct InverseResult {
    Matrix value;
    InverseKind kind;
    std::optional<std::size_t> index; // Drazin only
    std::vector<Certificate> certificates;

    bool residuals_zero() const {
        for (const auto& c : certificates)
            if (!c.residual.is_zero()) return false;
        return true;
    }
};

namespace detail {

inline LinearConstraint eq_axa(const Matrix& a) {
    return {{{a, a, false}}, a};
}

/// AX - X*A* = 0
inline LinearConstraint eq_ax_hermitian(const Matrix& a) {
    Matrix idr = Matrix::identity(a.rows(), a.context());
    return {{{a, idr, false}, {-idr, a.adjoint(), true}},
            Matrix::zero(a.rows(), a.rows(), a.context())};
}

/// XA - A*X* = 0
inline LinearConstraint eq_xa_hermitian(const Matrix& a) {
    Matrix idc = Matrix::identity(a.cols(), a.context());
    return {{{idc, a, false}, {-a.adjoint(), idc, true}},
            Matrix::zero(a.cols(), a.cols(), a.context())};
}

/// AX - XA = 0 (square)
inline LinearConstraint eq_commute(const Matrix& a) {
    Matrix id = Matrix::identity(a.rows(), a.context());
    return {{{a, id, false}, {-id, a, false}},
            Matrix::zero(a.rows(), a.rows(), a.context())};
}

/// X A^2 = A (square)
inline LinearConstraint eq_xa2(const Matrix& a) {
    return {{{Matrix::identity(a.rows(), a.context()), a * a, false}}, a};
}

/// A^2 X = A (square)
inline LinearConstraint eq_a2x(const Matrix& a) {
    return {{{a * a, Matrix::identity(a.rows(), a.context()), false}}, a};
}

inline void require_square(const Matrix& a, const char* what) {
    if (!a.is_square()) throw NonSquare(std::string(what) + ": matrix is not square");
}

} // namespace detail

inline InverseResult drazin_inverse(const Matrix& a);

/// Solves the defining equation set of the requested inverse kind through the
/// exact linear-system oracle. Equation sets containing the quadratic
/// condition x a x = x are handled by solving the linear subset and passing
/// the solution through x -> x a x, which lands on the unique inverse.
inline std::optional<InverseResult> equation_inverse(const Matrix& a, InverseKind kind) {
    using namespace detail;
    const auto shape = std::make_pair(a.cols(), a.rows());
    const RingContext ctx = a.context();
    auto certify = [&](const Matrix& x, InverseKind k,
                       std::vector<Certificate> certs) -> InverseResult {
        return {x, k, std::nullopt, std::move(certs)};
    };

    switch (kind) {
        case InverseKind::inner: {
            auto x = solve_linear_system({eq_axa(a)}, shape, ctx);
            if (!x) return std::nullopt;
            return certify(*x, kind, {{"axa=a", a * *x * a - a}});
        }
        case InverseKind::one_three: {
            auto x = solve_linear_system({eq_axa(a), eq_ax_hermitian(a)}, shape, ctx);
            if (!x) return std::nullopt;
            return certify(*x, kind,
                           {{"axa=a", a * *x * a - a},
                            {"(ax)*=ax", (a * *x).adjoint() - a * *x}});
        }
        case InverseKind::one_four: {
            auto x = solve_linear_system({eq_axa(a), eq_xa_hermitian(a)}, shape, ctx);
            if (!x) return std::nullopt;
            return certify(*x, kind,
                           {{"axa=a", a * *x * a - a},
                            {"(xa)*=xa", (*x * a).adjoint() - *x * a}});
        }
        case InverseKind::moore_penrose: {
            auto y = solve_linear_system({eq_axa(a), eq_ax_hermitian(a), eq_xa_hermitian(a)},
                                         shape, ctx);
            if (!y) return std::nullopt;
            Matrix x = *y * a * *y;
            return certify(x, kind,
                           {{"axa=a", a * x * a - a},
                            {"xax=x", x * a * x - x},
                            {"(ax)*=ax", (a * x).adjoint() - a * x},
                            {"(xa)*=xa", (x * a).adjoint() - x * a}});
        }
        case InverseKind::group: {
            require_square(a, "group inverse");
            auto y = solve_linear_system({eq_axa(a), eq_commute(a)}, shape, ctx);
            if (!y) return std::nullopt;
            Matrix x = *y * a * *y;
            return certify(x, kind,
                           {{"axa=a", a * x * a - a},
                            {"xax=x", x * a * x - x},
                            {"ax=xa", a * x - x * a}});
        }
        case InverseKind::drazin:
            return drazin_inverse(a);
        case InverseKind::core: {
            require_square(a, "core inverse");
            // Solvability of the linear subset forces rank(a) = rank(a^2),
            // hence group invertibility, and hands back a {1,3}-inverse.
            auto y = solve_linear_system({eq_xa2(a), eq_axa(a), eq_ax_hermitian(a)}, shape, ctx);
            if (!y) return std::nullopt;
            auto g = equation_inverse(a, InverseKind::group);
            if (!g) return std::nullopt;
            Matrix x = g->value * a * *y; // a# a a^{(1,3)}
            InverseResult res = certify(x, kind,
                                        {{"xa^2=a", x * (a * a) - a},
                                         {"ax^2=x", a * (x * x) - x},
                                         {"(ax)*=ax", (a * x).adjoint() - a * x}});
            if (!res.residuals_zero()) throw Error("core inverse construction failed to verify");
            return res;
        }
        case InverseKind::dual_core: {
            require_square(a, "dual core inverse");
            auto y = solve_linear_system({eq_a2x(a), eq_axa(a), eq_xa_hermitian(a)}, shape, ctx);
            if (!y) return std::nullopt;
            auto g = equation_inverse(a, InverseKind::group);
            if (!g) return std::nullopt;
            Matrix x = *y * a * g->value; // a^{(1,4)} a a#
            InverseResult res = certify(x, kind,
                                        {{"a^2x=a", (a * a) * x - a},
                                         {"x^2a=x", (x * x) * a - x},
                                         {"(xa)*=xa", (x * a).adjoint() - x * a}});
            if (!res.residuals_zero()) throw Error("dual core inverse construction failed to verify");
            return res;
        }
    }
    return std::nullopt;
}

/// Group inverse; exists iff the Drazin index is 1.
inline std::optional<InverseResult> group_inverse(const Matrix& a) {
    return equation_inverse(a, InverseKind::group);
}

/// Drazin inverse through the core-nilpotent similarity: with m the index,
/// Q1 a column-space basis of A^m and Q2 a null-space basis of A^m,
/// A = [Q1 Q2] blockdiag(D, N) [Q1 Q2]^{-1} and A^D = Q1 D^{-1} P1.
inline InverseResult drazin_inverse(const Matrix& a) {
    detail::require_square(a, "drazin inverse");
    const std::size_t n = a.rows();
    const std::size_t m = drazin_index(a);
    Matrix am = a.power(m);
    Matrix q1 = column_space_basis(am);
    const std::size_t r = q1.cols();
    Matrix ad = Matrix::zero(n, n, a.context());
    if (r > 0) {
        Matrix q2 = null_space_basis(am);
        Matrix pinv_basis = inverse(hconcat(q1, q2));
        Matrix p1(r, n, a.context());
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j) p1(i, j) = pinv_basis(i, j);
        Matrix d = p1 * a * q1;
        ad = q1 * inverse(d) * p1;
    }
    InverseResult res{ad, InverseKind::drazin, m,
                      {{"a^m x a = a^m", am * ad * a - am},
                       {"xax=x", ad * a * ad - ad},
                       {"ax=xa", a * ad - ad * a}}};
    if (!res.residuals_zero()) throw Error("drazin inverse construction failed to verify");
    return res;
}

/// Moore-Penrose inverse through a full-rank factorization A = F G:
/// A^+ = G* (F* A G*)^{-1} F*. Conjugate-transpose involution only.
inline Matrix moore_penrose_closed_form(const Matrix& a) {
    if (a.context().involution != Involution::conjugate_transpose)
        throw ContextMismatch("moore_penrose_closed_form needs conjugate-transpose involution");
    RowEchelon re = reduced_row_echelon(a);
    const std::size_t r = re.pivots.size();
    if (r == 0) return Matrix::zero(a.cols(), a.rows(), a.context());
    Matrix f = column_space_basis(a);
    Matrix g(r, a.cols(), a.context());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) g(i, j) = re.reduced(i, j);
    Matrix fs = f.adjoint();
    Matrix gs = g.adjoint();
    return gs * inverse(fs * a * gs) * fs;
}

} // namespace gencore
