#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "gencore/matrix.hpp"

namespace gencore {

struct GenOptions {
    std::size_t min_dim = 2;
    std::size_t max_dim = 6;
    Involution involution = Involution::conjugate_transpose;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t case_no, std::uint64_t salt) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(case_no * 0x100000001b3ull) ^
                                      salt));
}

inline GaussianRational random_gaussian_int(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    return {Rational(d(rng)), Rational(d(rng))};
}

/// Unit-triangular product L U with small Gaussian-integer off-diagonal
/// entries; determinant 1, so exactly invertible.
inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n, RingContext ctx) {
    Matrix l = Matrix::identity(n, ctx);
    Matrix u = Matrix::identity(n, ctx);
    std::uniform_int_distribution<int> d(-2, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            l(i, j) = GaussianRational(Rational(d(rng)), Rational(d(rng) / 2));
            u(j, i) = GaussianRational(Rational(d(rng)), Rational(d(rng) / 2));
        }
    return l * u;
}

inline Matrix random_nilpotent(std::mt19937_64& rng, std::size_t n, RingContext ctx) {
    Matrix m(n, n, ctx);
    std::uniform_int_distribution<int> d(-2, 2);
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m(i, j) = GaussianRational(Rational(d(rng)));
    // bias toward a full Jordan chain so indices >= 2 actually occur
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (coin(rng)) m(i, i + 1) = GaussianRational(1);
    return m;
}

inline void conjugate_by_shears(std::mt19937_64& rng, Matrix& m, std::size_t count) {
    const std::size_t n = m.rows();
    if (n < 2) return;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> d(-2, 2);
    for (std::size_t s = 0; s < count; ++s) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        GaussianRational c(Rational(d(rng)), Rational(d(rng) / 2));
        Matrix e = Matrix::identity(n, m.context());
        Matrix einv = Matrix::identity(n, m.context());
        e(i, j) = c;
        einv(i, j) = -c;
        m = e * m * einv;
    }
}

inline Matrix structured_block(std::mt19937_64& rng, std::size_t n, RingContext ctx,
                               bool conjugate) {
    std::uniform_int_distribution<std::size_t> rdist(0, n);
    std::size_t r = rdist(rng);
    Matrix m =
        (r == 0)   ? random_nilpotent(rng, n, ctx)
        : (r == n) ? random_invertible(rng, n, ctx)
                   : block_diag(random_invertible(rng, r, ctx),
                                random_nilpotent(rng, n - r, ctx));
    if (conjugate) conjugate_by_shears(rng, m, 2);
    return m;
}

} // namespace detail

/// Deterministic instance for (seed, case): block-diagonal invertible plus
/// nilpotent parts conjugated by unimodular shears, giving a spread of
/// Drazin indices beyond 1.
inline Matrix random_instance(std::uint64_t seed, std::uint64_t case_no, const GenOptions& opt) {
    auto rng = detail::case_rng(seed, case_no, 0x51u);
    std::uniform_int_distribution<std::size_t> ndist(opt.min_dim, opt.max_dim);
    return detail::structured_block(rng, ndist(rng), exact_context(opt.involution), true);
}

/// Float-friendly structured instance: block-diagonal composition of small
/// unit-triangular invertible blocks and Jordan-chain nilpotent blocks with
/// entries in {-1, 0, 1}, finished by one mild integer shear. Indices stay
/// small and condition numbers low, so double precision can resolve the
/// exact pseudo core inverse to 1e-10 even at n = 12.
inline Matrix random_float_instance(std::uint64_t seed, std::uint64_t case_no,
                                    const GenOptions& opt) {
    auto rng = detail::case_rng(seed, case_no, 0x55u);
    std::uniform_int_distribution<std::size_t> ndist(opt.min_dim, opt.max_dim);
    const std::size_t n = ndist(rng);
    RingContext ctx = exact_context(opt.involution);
    std::uniform_int_distribution<int> small(-1, 1);
    std::uniform_int_distribution<int> coin(0, 1);

    std::optional<Matrix> m;
    std::size_t remaining = n;
    while (remaining > 0) {
        std::uniform_int_distribution<std::size_t> bdist(1, std::min<std::size_t>(3, remaining));
        const std::size_t b = bdist(rng);
        Matrix blk(b, b, ctx);
        if (coin(rng)) {
            Matrix l = Matrix::identity(b, ctx);
            Matrix u = Matrix::identity(b, ctx);
            for (std::size_t i = 0; i < b; ++i)
                for (std::size_t j = 0; j < i; ++j) {
                    l(i, j) = GaussianRational(Rational(small(rng)), Rational(small(rng)));
                    u(j, i) = GaussianRational(Rational(small(rng)), Rational(small(rng)));
                }
            blk = l * u;
        } else {
            for (std::size_t i = 0; i + 1 < b; ++i)
                blk(i, i + 1) = coin(rng) ? GaussianRational(1) : GaussianRational::i();
        }
        m = m ? block_diag(*m, blk) : blk;
        remaining -= b;
    }
    if (n >= 2) {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::size_t i = pick(rng), j = pick(rng);
        int c = small(rng);
        if (i != j && c != 0) {
            Matrix e = Matrix::identity(n, ctx);
            Matrix einv = Matrix::identity(n, ctx);
            e(i, j) = GaussianRational(Rational(c));
            einv(i, j) = GaussianRational(Rational(-c));
            *m = e * *m * einv;
        }
    }
    return *m;
}

/// Pair with ab = ba and ab* = b*a by construction: either (A, c I) with a
/// nonzero scalar c, or a pair of diagonal matrices.
inline std::pair<Matrix, Matrix> random_product_pair(std::uint64_t seed, std::uint64_t case_no,
                                                     const GenOptions& opt) {
    auto rng = detail::case_rng(seed, case_no, 0x52u);
    std::uniform_int_distribution<std::size_t> ndist(opt.min_dim, opt.max_dim);
    const std::size_t n = ndist(rng);
    RingContext ctx = exact_context(opt.involution);
    if (case_no % 2 == 0) {
        Matrix a = detail::structured_block(rng, n, ctx, true);
        GaussianRational c;
        while (c.is_zero()) c = detail::random_gaussian_int(rng, 2);
        Matrix b = c * Matrix::identity(n, ctx);
        return {a, b};
    }
    Matrix a(n, n, ctx), b(n, n, ctx);
    std::uniform_int_distribution<int> d(-2, 2);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = GaussianRational(Rational(d(rng)), Rational(d(rng)));
        b(i, i) = GaussianRational(Rational(d(rng)), Rational(d(rng)));
    }
    return {a, b};
}

/// Pair with ab = ba = 0 and a*b = 0: disjoint diagonal block supports.
inline std::pair<Matrix, Matrix> random_sum_pair(std::uint64_t seed, std::uint64_t case_no,
                                                 const GenOptions& opt) {
    auto rng = detail::case_rng(seed, case_no, 0x53u);
    std::size_t max_dim = std::max<std::size_t>(opt.max_dim, 2);
    std::uniform_int_distribution<std::size_t> ndist(2, max_dim);
    const std::size_t n = ndist(rng);
    std::uniform_int_distribution<std::size_t> split(1, n - 1);
    const std::size_t na = split(rng);
    RingContext ctx = exact_context(opt.involution);
    Matrix block_a = detail::structured_block(rng, na, ctx, true);
    Matrix block_b = detail::structured_block(rng, n - na, ctx, true);
    Matrix a = block_diag(block_a, Matrix::zero(n - na, n - na, ctx));
    Matrix b = block_diag(Matrix::zero(na, na, ctx), block_b);
    return {a, b};
}

/// (A, X) with AX = XA and A*X = XA*: both diagonal.
inline std::pair<Matrix, Matrix> random_commuting_pair(std::uint64_t seed, std::uint64_t case_no,
                                                       const GenOptions& opt) {
    auto rng = detail::case_rng(seed, case_no, 0x54u);
    std::uniform_int_distribution<std::size_t> ndist(opt.min_dim, opt.max_dim);
    const std::size_t n = ndist(rng);
    RingContext ctx = exact_context(opt.involution);
    Matrix a(n, n, ctx), x(n, n, ctx);
    std::uniform_int_distribution<int> d(-2, 2);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = GaussianRational(Rational(d(rng)), Rational(d(rng)));
        x(i, i) = GaussianRational(Rational(d(rng)), Rational(d(rng)));
    }
    return {a, x};
}

} // namespace gencore
