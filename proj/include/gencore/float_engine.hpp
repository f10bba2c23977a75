#pragma once

#include <complex>
#include <limits>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "gencore/errors.hpp"
#include "gencore/matrix.hpp"

namespace gencore::fp {

using CMat = Eigen::MatrixXcd;

inline CMat to_float(const Matrix& a) {
    CMat out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c).to_complex();
    return out;
}

inline double default_rank_tol(const CMat& a) {
    if (a.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMat> svd(a);
    double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    return static_cast<double>(std::max(a.rows(), a.cols())) *
           std::numeric_limits<double>::epsilon() * smax;
}

/// Count of singular values above tol; tol < 0 selects n*eps*sigma_max.
inline Eigen::Index numeric_rank(const CMat& a, double tol = -1.0) {
    if (a.size() == 0) return 0;
    Eigen::JacobiSVD<CMat> svd(a);
    const auto& sv = svd.singularValues();
    if (tol < 0)
        tol = static_cast<double>(std::max(a.rows(), a.cols())) *
              std::numeric_limits<double>::epsilon() * (sv.size() ? sv(0) : 0.0);
    Eigen::Index r = 0;
    while (r < sv.size() && sv(r) > tol) ++r;
    return r;
}

/// Moore-Penrose inverse through the SVD.
inline CMat pinv(const CMat& a, double tol = -1.0) {
    Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (tol < 0)
        tol = static_cast<double>(std::max(a.rows(), a.cols())) *
              std::numeric_limits<double>::epsilon() * (sv.size() ? sv(0) : 0.0);
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol) inv(i) = 1.0 / sv(i);
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

struct HSDecomposition {
    CMat U;                // n x n unitary
    Eigen::VectorXd sigma; // r positive singular values, non-increasing
    CMat K;                // r x r
    CMat L;                // r x (n - r)
    Eigen::Index r;
};

/// A = U [Sigma K, Sigma L; 0 0] U* from the SVD A = W diag(Sigma, 0) V*:
/// U = W and [K L] are the first r rows of V* U.
inline HSDecomposition hartwig_spindelbock(const CMat& a, double tol = -1.0) {
    if (a.rows() != a.cols()) throw NonSquare("hartwig_spindelbock: matrix is not square");
    const Eigen::Index n = a.rows();
    Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (tol < 0)
        tol = static_cast<double>(n) * std::numeric_limits<double>::epsilon() *
              (sv.size() ? sv(0) : 0.0);
    Eigen::Index r = 0;
    while (r < sv.size() && sv(r) > tol) ++r;
    if (r == 0) throw RankZero("hartwig_spindelbock: zero matrix has no decomposition");
    HSDecomposition hs;
    hs.U = svd.matrixU();
    hs.sigma = sv.head(r);
    CMat kl = (svd.matrixV().adjoint() * hs.U).topRows(r);
    hs.K = kl.leftCols(r);
    hs.L = kl.rightCols(n - r);
    hs.r = r;
    return hs;
}

namespace detail {

/// Decomposition with the rank supplied by the caller instead of a
/// tolerance decision. Requires 0 < r < n.
inline HSDecomposition hs_with_rank(const CMat& a, Eigen::Index r) {
    const Eigen::Index n = a.rows();
    Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    HSDecomposition hs;
    hs.U = svd.matrixU();
    hs.sigma = svd.singularValues().head(r);
    CMat kl = (svd.matrixV().adjoint() * hs.U).topRows(r);
    hs.K = kl.leftCols(r);
    hs.L = kl.rightCols(n - r);
    hs.r = r;
    return hs;
}

/// The block at depth d has exact rank equal to rank(A^{d+1}) of the original
/// matrix, so the rank profile of the powers drives every level.
inline CMat pseudo_core_hs_rec(const CMat& a, const std::vector<Eigen::Index>& ranks,
                               std::size_t depth) {
    const Eigen::Index n = a.rows();
    Eigen::Index r = depth < ranks.size() ? ranks[depth] : ranks.back();
    if (r > n) r = n;
    if (r == 0) return CMat::Zero(n, n);
    if (r == n) return a.inverse();
    HSDecomposition hs = hs_with_rank(a, r);
    CMat block = hs.sigma.asDiagonal() * hs.K;
    CMat inner = pseudo_core_hs_rec(block, ranks, depth + 1);
    CMat padded = CMat::Zero(n, n);
    padded.topLeftCorner(r, r) = inner;
    return hs.U * padded * hs.U.adjoint();
}

} // namespace detail

/// Recursion A_pc = U [ (Sigma K)_pc 0; 0 0 ] U*, re-decomposing the leading
/// block until it is zero or numerically invertible. Rank decisions for every
/// level come from the rank profile of the powers of A computed up front:
/// deep blocks are dominated by accumulated rounding noise, so a tolerance
/// test against the block itself would mistake noise for full rank.
inline CMat pseudo_core_hs(const CMat& a, double tol = -1.0) {
    const Eigen::Index n = a.rows();
    if (a.rows() != a.cols()) throw NonSquare("pseudo_core_hs: matrix is not square");
    if (n == 0) return a;
    std::vector<Eigen::Index> ranks;
    CMat p = a;
    Eigen::Index prev = n;
    for (Eigen::Index k = 0; k <= n; ++k) {
        Eigen::Index r = std::min(numeric_rank(p, tol), prev);
        ranks.push_back(r);
        if (r == prev || r == 0) break;
        prev = r;
        p = p * a;
    }
    return detail::pseudo_core_hs_rec(a, ranks, 0);
}

struct CNFactors {
    CMat Q1, Q2; // column-space / null-space bases of A^m
    CMat P1, P2; // rows of [Q1 Q2]^{-1}
    CMat D;      // invertible r x r
    CMat N;      // nilpotent (n-r) x (n-r)
    Eigen::Index index;
    Eigen::Index r;
};

inline Eigen::Index float_index(const CMat& a, double tol = -1.0) {
    Eigen::Index prev = numeric_rank(a, tol);
    CMat p = a;
    for (Eigen::Index k = 1; k <= a.rows() + 1; ++k) {
        p = p * a;
        Eigen::Index next = numeric_rank(p, tol);
        if (next == prev) return k;
        prev = next;
    }
    return a.rows();
}

inline CNFactors cn_factors(const CMat& a, double tol = -1.0) {
    if (a.rows() != a.cols()) throw NonSquare("cn_factors: matrix is not square");
    const Eigen::Index n = a.rows();
    CNFactors f;
    f.index = float_index(a, tol);
    CMat am = CMat::Identity(n, n);
    for (Eigen::Index k = 0; k < f.index; ++k) am = am * a;
    Eigen::JacobiSVD<CMat> svd(am, Eigen::ComputeFullU | Eigen::ComputeFullV);
    f.r = numeric_rank(am, tol);
    f.Q1 = svd.matrixU().leftCols(f.r);
    f.Q2 = svd.matrixV().rightCols(n - f.r);
    CMat basis(n, n);
    basis << f.Q1, f.Q2;
    CMat basis_inv = basis.inverse();
    f.P1 = basis_inv.topRows(f.r);
    f.P2 = basis_inv.bottomRows(n - f.r);
    f.D = f.P1 * a * f.Q1;
    f.N = f.P2 * a * f.Q2;
    if (f.r > 0 && numeric_rank(f.D, tol) < f.r)
        throw SingularBlock("cn_factors: core block is singular (rank misestimated)");
    return f;
}

/// Drazin inverse Q1 D^{-1} P1 from the core-nilpotent similarity.
inline CMat drazin(const CMat& a, double tol = -1.0) {
    CNFactors f = cn_factors(a, tol);
    if (f.r == 0) return CMat::Zero(a.rows(), a.cols());
    return f.Q1 * f.D.inverse() * f.P1;
}

/// Column-space formula Q1 D^{-1} (Q1* Q1)^{-1} Q1*.
inline CMat pseudo_core_cn(const CMat& a, double tol = -1.0) {
    CNFactors f = cn_factors(a, tol);
    if (f.r == 0) return CMat::Zero(a.rows(), a.cols());
    CMat gram = f.Q1.adjoint() * f.Q1;
    return f.Q1 * f.D.inverse() * gram.inverse() * f.Q1.adjoint();
}

/// A^D A^m (A^m)^+ with the Moore-Penrose inverse as the {1,3}-inverse.
inline CMat pseudo_core_direct(const CMat& a, double tol = -1.0) {
    CNFactors f = cn_factors(a, tol);
    const Eigen::Index n = a.rows();
    if (f.r == 0) return CMat::Zero(n, n);
    CMat ad = f.Q1 * f.D.inverse() * f.P1;
    CMat am = CMat::Identity(n, n);
    for (Eigen::Index k = 0; k < f.index; ++k) am = am * a;
    return ad * am * pinv(am, tol);
}

inline double relative_diff(const CMat& a, const CMat& b) {
    double scale = std::max({a.norm(), b.norm(), 1e-300});
    return (a - b).norm() / scale;
}

} // namespace gencore::fp
