#include <catch2/catch_amalgamated.hpp>

#include "gencore/generator.hpp"
#include "gencore/inverses.hpp"
#include "gencore/linear_solver.hpp"

using namespace gencore;

namespace {
const GaussianRational I = GaussianRational::i();

Matrix constraint_residual(const LinearConstraint& c, const Matrix& x) {
    Matrix acc = -c.rhs;
    for (const auto& t : c.terms)
        acc = acc + t.left * (t.adjoint_unknown ? x.adjoint() : x) * t.right;
    return acc;
}
} // namespace

TEST_CASE("axa=a with the identity pins x to the identity") {
    auto ctx = exact_context(Involution::transpose);
    Matrix id = Matrix::identity(2, ctx);
    auto x = solve_linear_system({LinearConstraint{{{id, id, false}}, id}}, {2, 2}, ctx);
    REQUIRE(x);
    REQUIRE(*x == id);
}

TEST_CASE("the sum counterexample admits no {1,3}-inverse") {
    auto ctx = exact_context(Involution::transpose);
    Matrix a = Matrix::from_rows({{I, 0}, {-1, 0}}, ctx);
    auto x = solve_linear_system(
        {detail::eq_axa(a), detail::eq_ax_hermitian(a)}, {2, 2}, ctx);
    REQUIRE_FALSE(x.has_value());
}

TEST_CASE("four Penrose equations solved exactly under conjugate transpose") {
    auto ctx = exact_context(Involution::conjugate_transpose);
    Matrix a = Matrix::from_rows({{1, I}, {0, 0}}, ctx);
    auto mp = equation_inverse(a, InverseKind::moore_penrose);
    REQUIRE(mp);
    Matrix expected = Matrix::from_rows(
        {{GaussianRational(Rational(1, 2)), 0},
         {GaussianRational(Rational(0), Rational(-1, 2)), 0}},
        ctx);
    REQUIRE(mp->value == expected);
    // independent substitution check of all four equations
    const Matrix& x = mp->value;
    REQUIRE(a * x * a == a);
    REQUIRE(x * a * x == x);
    REQUIRE((a * x).adjoint() == a * x);
    REQUIRE((x * a).adjoint() == x * a);
}

TEST_CASE("adjoint-bearing terms stay exact in both involutions") {
    for (Involution inv : {Involution::transpose, Involution::conjugate_transpose}) {
        auto ctx = exact_context(inv);
        // X + X* = B with B self-adjoint: X = B/2 is the free-zero solution
        Matrix b = Matrix::from_rows({{2, 0}, {0, 4}}, ctx);
        Matrix id = Matrix::identity(2, ctx);
        LinearConstraint c{{{id, id, false}, {id, id, true}}, b};
        auto x = solve_linear_system({c}, {2, 2}, ctx);
        REQUIRE(x);
        REQUIRE(constraint_residual(c, *x).is_zero());
    }
}

TEST_CASE("returned solutions satisfy every constraint with zero residual") {
    for (Involution inv : {Involution::transpose, Involution::conjugate_transpose}) {
        GenOptions opt{2, 5, inv};
        std::size_t solved = 0;
        for (std::uint64_t k = 0; k < 60; ++k) {
            Matrix a = random_instance(31, k, opt);
            std::vector<LinearConstraint> sys = {detail::eq_axa(a),
                                                 detail::eq_ax_hermitian(a)};
            auto x = solve_linear_system(sys, {a.cols(), a.rows()}, a.context());
            if (!x) continue;
            ++solved;
            for (const auto& c : sys) REQUIRE(constraint_residual(c, *x).is_zero());
        }
        REQUIRE(solved > 10); // the generator must not starve the property
    }
}

TEST_CASE("inconsistent systems report no solution") {
    auto ctx = exact_context(Involution::transpose);
    Matrix zero = Matrix::zero(2, 2, ctx);
    Matrix id = Matrix::identity(2, ctx);
    // 0 . X . 0 = I is inconsistent
    auto x = solve_linear_system({LinearConstraint{{{zero, zero, false}}, id}}, {2, 2}, ctx);
    REQUIRE_FALSE(x.has_value());
}

TEST_CASE("term shape validation") {
    auto ctx = exact_context(Involution::transpose);
    Matrix id2 = Matrix::identity(2, ctx);
    Matrix id3 = Matrix::identity(3, ctx);
    REQUIRE_THROWS_AS(
        solve_linear_system({LinearConstraint{{{id3, id2, false}}, id2}}, {2, 2}, ctx),
        DimensionMismatch);
}
