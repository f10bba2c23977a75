#include <catch2/catch_amalgamated.hpp>

#include "gencore/float_engine.hpp"
#include "gencore/generator.hpp"
#include "gencore/pseudo_core.hpp"

using namespace gencore;
using fp::CMat;

namespace {
const std::complex<double> J(0.0, 1.0);

CMat float_instance(std::uint64_t seed, std::uint64_t case_no, std::size_t max_dim) {
    GenOptions opt{2, max_dim, Involution::conjugate_transpose};
    return fp::to_float(random_instance(seed, case_no, opt));
}

double residual_norms(const CMat& a, const CMat& x, Eigen::Index m) {
    const Eigen::Index n = a.rows();
    CMat am = CMat::Identity(n, n), am1 = CMat::Identity(n, n);
    for (Eigen::Index k = 0; k < m; ++k) am = am * a;
    am1 = am * a;
    double r1 = (x * am1 - am).norm();
    double r2 = (a * x * x - x).norm();
    CMat ax = a * x;
    double r3 = (ax.adjoint() - ax).norm();
    return std::max({r1, r2, r3});
}
} // namespace

TEST_CASE("numeric rank with the default tolerance") {
    CMat a(2, 2);
    a << 1.0, 0.0, 0.0, 1e-16;
    REQUIRE(fp::numeric_rank(a) == 1);
    REQUIRE(fp::numeric_rank(a, 1e-17) == 2);
    REQUIRE(fp::numeric_rank(CMat::Zero(3, 3)) == 0);
    REQUIRE(fp::numeric_rank(CMat::Identity(4, 4)) == 4);
}

TEST_CASE("pinv matches the known exact value") {
    CMat a(2, 2);
    a << 1.0, J, 0.0, 0.0;
    CMat expect(2, 2);
    expect << 0.5, 0.0, -0.5 * J, 0.0;
    REQUIRE((fp::pinv(a) - expect).norm() < 1e-12);
}

TEST_CASE("hartwig-spindelbock reconstruction invariants") {
    for (std::uint64_t k = 0; k < 60; ++k) {
        CMat a = float_instance(211, k, 8);
        if (fp::numeric_rank(a) == 0) continue;
        fp::HSDecomposition hs = fp::hartwig_spindelbock(a);
        const Eigen::Index n = a.rows();
        // unitarity
        REQUIRE((hs.U.adjoint() * hs.U - CMat::Identity(n, n)).norm() < 1e-10);
        // K K* + L L* = I_r
        CMat gram = hs.K * hs.K.adjoint() + hs.L * hs.L.adjoint();
        REQUIRE((gram - CMat::Identity(hs.r, hs.r)).norm() < 1e-10);
        // reconstruction
        CMat top(hs.r, n);
        top << hs.sigma.asDiagonal() * hs.K, hs.sigma.asDiagonal() * hs.L;
        CMat inner = CMat::Zero(n, n);
        inner.topRows(hs.r) = top;
        REQUIRE(fp::relative_diff(hs.U * inner * hs.U.adjoint(), a) < 1e-10);
    }
    REQUIRE_THROWS_AS(fp::hartwig_spindelbock(CMat::Zero(2, 2)), RankZero);
    REQUIRE_THROWS_AS(fp::hartwig_spindelbock(CMat::Zero(2, 3)), NonSquare);
}

TEST_CASE("three float methods agree on generic structured instances") {
    std::size_t done = 0;
    for (std::uint64_t k = 0; k < 80 && done < 60; ++k) {
        CMat a = float_instance(223, k, 8);
        CMat hs, cn, direct;
        try {
            hs = fp::pseudo_core_hs(a);
            cn = fp::pseudo_core_cn(a);
            direct = fp::pseudo_core_direct(a);
        } catch (const SingularBlock&) {
            continue; // rank borderline under the float tolerance
        }
        ++done;
        REQUIRE(fp::relative_diff(hs, cn) < 1e-8);
        REQUIRE(fp::relative_diff(hs, direct) < 1e-8);
        REQUIRE(fp::relative_diff(cn, direct) < 1e-8);
    }
    REQUIRE(done >= 50);
}

TEST_CASE("float results satisfy the defining equations to 1e-9 relative") {
    GenOptions opt{2, 12, Involution::conjugate_transpose};
    for (std::uint64_t k = 0; k < 60; ++k) {
        Matrix m = random_float_instance(229, k, opt);
        CMat a = fp::to_float(m);
        CMat x = fp::pseudo_core_cn(a);
        Eigen::Index idx = fp::float_index(a);
        double scale = std::max(1.0, a.norm());
        REQUIRE(residual_norms(a, x, idx) / scale < 1e-9);
        REQUIRE(fp::relative_diff(fp::pseudo_core_hs(a), x) < 1e-9);
    }
}

TEST_CASE("float methods track the exact pseudo core inverse") {
    GenOptions opt{2, 6, Involution::conjugate_transpose};
    std::size_t done = 0;
    for (std::uint64_t k = 0; k < 50 && done < 40; ++k) {
        Matrix a = random_instance(227, k, opt);
        auto pc = pseudo_core_inverse(a);
        REQUIRE(pc);
        CMat exact = fp::to_float(pc->value);
        CMat fa = fp::to_float(a);
        try {
            REQUIRE(fp::relative_diff(fp::pseudo_core_hs(fa), exact) < 1e-10);
            REQUIRE(fp::relative_diff(fp::pseudo_core_cn(fa), exact) < 1e-10);
            REQUIRE(fp::relative_diff(fp::pseudo_core_direct(fa), exact) < 1e-10);
        } catch (const SingularBlock&) {
            continue;
        }
        ++done;
    }
    REQUIRE(done >= 30);
}

TEST_CASE("float drazin inverse on the block witness") {
    CMat a = CMat::Zero(3, 3);
    a(0, 0) = 2.0;
    a(1, 2) = 1.0;
    CMat d = fp::drazin(a);
    CMat expect = CMat::Zero(3, 3);
    expect(0, 0) = 0.5;
    REQUIRE((d - expect).norm() < 1e-12);
    REQUIRE(fp::float_index(a) == 2);
}

TEST_CASE("base cases of the recursion") {
    REQUIRE(fp::pseudo_core_hs(CMat::Zero(3, 3)).norm() == 0.0);
    CMat inv(2, 2);
    inv << 1.0, J, 0.0, 2.0;
    REQUIRE(fp::relative_diff(fp::pseudo_core_hs(inv), inv.inverse()) < 1e-12);
}
