#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gencore/inverses.hpp"
#include "gencore/linalg.hpp"
#include "gencore/linear_solver.hpp"
#include "gencore/matrix.hpp"

namespace gencore {

struct PseudoCoreResult {
    Matrix value;       // a with circled-D
    std::size_t index;  // I(a), equals the Drazin index
    Matrix drazin_part; // a^D
    Matrix projector;   // a . a_pc, self-adjoint idempotent
    std::vector<Certificate> certificates;
};

struct DefiningResiduals {
    Matrix cond1; // x a^{m+1} - a^m
    Matrix cond2; // a x^2 - x
    Matrix cond3; // (a x)* - a x
    bool all_zero() const { return cond1.is_zero() && cond2.is_zero() && cond3.is_zero(); }
};

inline DefiningResiduals verify_defining_equations(const Matrix& a, const Matrix& x,
                                                   std::size_t m) {
    Matrix ax = a * x;
    return {x * a.power(m + 1) - a.power(m), a * (x * x) - x, ax.adjoint() - ax};
}

/// Mirrored system (I')(II')(III') of the dual pseudo core inverse.
inline DefiningResiduals verify_dual_defining_equations(const Matrix& a, const Matrix& x,
                                                        std::size_t m) {
    Matrix xa = x * a;
    return {a.power(m + 1) * x - a.power(m), (x * x) * a - x, xa.adjoint() - xa};
}

/// Complete decision procedure: with m the Drazin index, a is pseudo core
/// invertible iff a^m has a {1,3}-inverse, in which case the inverse is
/// a^D a^m (a^m)^{(1,3)}.
inline std::optional<PseudoCoreResult> pseudo_core_inverse(const Matrix& a) {
    if (!a.is_square()) throw NonSquare("pseudo_core_inverse: matrix is not square");
    if (a.context().mode != ScalarMode::exact)
        throw ContextMismatch("pseudo_core_inverse: exact mode required");
    const std::size_t m = drazin_index(a);
    Matrix am = a.power(m);
    auto y13 = equation_inverse(am, InverseKind::one_three);
    if (!y13) return std::nullopt;
    InverseResult ad = drazin_inverse(a);
    Matrix x = ad.value * am * y13->value;
    DefiningResiduals res = verify_defining_equations(a, x, m);
    if (!res.all_zero()) throw Error("pseudo core inverse failed its defining equations");
    return PseudoCoreResult{x, m, ad.value, a * x,
                            {{"x a^{m+1} = a^m", res.cond1},
                             {"a x^2 = x", res.cond2},
                             {"(ax)* = ax", res.cond3}}};
}

/// (pseudo_core_inverse(a*))*, verified against the mirrored equations.
inline std::optional<PseudoCoreResult> dual_pseudo_core_inverse(const Matrix& a) {
    auto dual = pseudo_core_inverse(a.adjoint());
    if (!dual) return std::nullopt;
    Matrix x = dual->value.adjoint();
    const std::size_t m = dual->index;
    DefiningResiduals res = verify_dual_defining_equations(a, x, m);
    if (!res.all_zero()) throw Error("dual pseudo core inverse failed its defining equations");
    return PseudoCoreResult{x, m, drazin_inverse(a).value, x * a,
                            {{"a^{m+1} x = a^m", res.cond1},
                             {"x^2 a = x", res.cond2},
                             {"(xa)* = xa", res.cond3}}};
}

struct CoreNilpotentRecord {
    Matrix core_part;      // c_a = a a^D a
    Matrix nilpotent_part; // n_a = (1 - a a^D) a
    std::size_t index;
};

inline CoreNilpotentRecord core_nilpotent(const Matrix& a) {
    if (!a.is_square()) throw NonSquare("core_nilpotent: matrix is not square");
    InverseResult ad = drazin_inverse(a);
    Matrix c = a * ad.value * a;
    Matrix n = a - c;
    CoreNilpotentRecord rec{c, n, *ad.index};
    if (!(c * n).is_zero() || !(n * c).is_zero() || !n.power(rec.index).is_zero())
        throw Error("core-nilpotent decomposition failed to verify");
    return rec;
}

/// Exact instantiation of the column-space formula Q1 D^{-1} (Q1* Q1)^{-1} Q1*.
/// Conjugate-transpose involution only: Q1* Q1 must be invertible.
inline std::optional<Matrix> pseudo_core_cn_exact(const Matrix& a) {
    if (a.context().involution != Involution::conjugate_transpose)
        throw ContextMismatch("pseudo_core_cn_exact needs conjugate-transpose involution");
    const std::size_t n = a.rows();
    const std::size_t m = drazin_index(a);
    Matrix am = a.power(m);
    Matrix q1 = column_space_basis(am);
    const std::size_t r = q1.cols();
    if (r == 0) return Matrix::zero(n, n, a.context());
    Matrix q2 = null_space_basis(am);
    Matrix basis_inv = inverse(hconcat(q1, q2));
    Matrix p1(r, n, a.context());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) p1(i, j) = basis_inv(i, j);
    Matrix d = p1 * a * q1;
    Matrix gram = q1.adjoint() * q1;
    return q1 * inverse(d) * inverse(gram) * q1.adjoint();
}

struct RegularityCertificate {
    Matrix u;
    std::size_t p;
    Matrix v;
    std::size_t q;
    bool two_sided_membership = false; // a^m in a^m (a*)^{m+1} R  and  R (a*)^{m+1} a^m
    std::size_t membership_m = 0;
};

/// Witnesses u, v with a^p = u (a*)^{p+1} a^p and a^q = v a^{q+1}, searched
/// from exponent 1 up to the matrix dimension. Nonexistence of u for every
/// p <= n certifies that a is not pseudo core invertible.
inline std::optional<RegularityCertificate> regularity_certificates(const Matrix& a) {
    if (!a.is_square()) throw NonSquare("regularity_certificates: matrix is not square");
    const std::size_t n = a.rows();
    const RingContext ctx = a.context();
    Matrix id = Matrix::identity(n, ctx);
    Matrix as = a.adjoint();

    std::optional<Matrix> u;
    std::size_t p = 0;
    for (std::size_t cand = 1; cand <= n && !u; ++cand) {
        Matrix b = as.power(cand + 1) * a.power(cand);
        u = solve_linear_system({LinearConstraint{{{id, b, false}}, a.power(cand)}}, {n, n}, ctx);
        if (u) p = cand;
    }
    if (!u) return std::nullopt;

    std::optional<Matrix> v;
    std::size_t q = 0;
    for (std::size_t cand = 1; cand <= n && !v; ++cand) {
        v = solve_linear_system({LinearConstraint{{{id, a.power(cand + 1), false}}, a.power(cand)}},
                                {n, n}, ctx);
        if (v) q = cand;
    }
    if (!v) throw Error("strongly pi-regular right witness missing for a square matrix");

    RegularityCertificate cert{*u, p, *v, q, false, 0};
    for (std::size_t m = 1; m <= n && !cert.two_sided_membership; ++m) {
        Matrix am = a.power(m);
        Matrix left_factor = am * as.power(m + 1);
        Matrix right_factor = as.power(m + 1) * am;
        bool in_left = solve_linear_system({LinearConstraint{{{left_factor, id, false}}, am}},
                                           {n, n}, ctx)
                           .has_value();
        bool in_right = solve_linear_system({LinearConstraint{{{id, right_factor, false}}, am}},
                                            {n, n}, ctx)
                            .has_value();
        if (in_left && in_right) {
            cert.two_sided_membership = true;
            cert.membership_m = m;
        }
    }
    return cert;
}

/// Hypotheses ax = xa and a*x = xa* transfer to the pseudo core inverse:
/// a_pc x = x a_pc. Returns nullopt when the hypotheses (or pseudo core
/// invertibility) fail.
inline std::optional<bool> commute_transfer_check(const Matrix& a, const Matrix& x) {
    if (a * x != x * a) return std::nullopt;
    if (a.adjoint() * x != x * a.adjoint()) return std::nullopt;
    auto pc = pseudo_core_inverse(a);
    if (!pc) return std::nullopt;
    return pc->value * x == x * pc->value;
}

/// (ab)_pc = a_pc b_pc = b_pc a_pc under ab = ba and ab* = b*a.
inline PseudoCoreResult reverse_order_product(const Matrix& a, const Matrix& b) {
    auto pa = pseudo_core_inverse(a);
    auto pb = pseudo_core_inverse(b);
    if (!pa || !pb)
        throw HypothesisViolated("reverse_order_product: operand not pseudo core invertible");
    if (a * b != b * a || a * b.adjoint() != b.adjoint() * a)
        throw HypothesisViolated("reverse_order_product: ab=ba / ab*=b*a violated");
    auto pab = pseudo_core_inverse(a * b);
    if (!pab) throw Error("product of pseudo core invertible commuting pair lost invertibility");
    if (pab->value != pa->value * pb->value || pab->value != pb->value * pa->value)
        throw Error("reverse order law failed");
    return *pab;
}

/// (a+b)_pc = a_pc + b_pc under ab = ba = 0 and a*b = 0.
inline std::optional<PseudoCoreResult> additive_sum(const Matrix& a, const Matrix& b) {
    auto pa = pseudo_core_inverse(a);
    auto pb = pseudo_core_inverse(b);
    if (!pa || !pb) throw HypothesisViolated("additive_sum: operand not pseudo core invertible");
    if (!(a * b).is_zero() || !(b * a).is_zero() || !(a.adjoint() * b).is_zero())
        throw HypothesisViolated("additive_sum: ab=ba=0 / a*b=0 violated");
    auto psum = pseudo_core_inverse(a + b);
    if (!psum) return std::nullopt;
    if (psum->value != pa->value + pb->value) throw Error("additive law failed");
    return psum;
}

struct LawCheck {
    std::string law;
    bool applicable = true;
    bool holds = false;
    std::vector<std::string> notes;
};

namespace detail {

inline std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

inline LawCheck not_applicable(std::string law, std::string why) {
    LawCheck c{std::move(law), false, false, {std::move(why)}};
    return c;
}

inline void check_eq(LawCheck& c, bool ok, const std::string& what) {
    if (!ok) {
        c.holds = false;
        c.notes.push_back("FAILED: " + what);
    } else {
        c.notes.push_back("ok: " + what);
    }
}

} // namespace detail

/// Mechanical check of one named law against a single matrix. Laws needing a
/// partner matrix have dedicated entry points (commute_transfer_check,
/// reverse_order_product, additive_sum).
inline LawCheck identity_check(const Matrix& a, const std::string& law) {
    using detail::check_eq;
    using detail::not_applicable;
    LawCheck c{law, true, true, {}};
    auto pc = pseudo_core_inverse(a);

    if (law == "T2.12") {
        auto cert = regularity_certificates(a);
        check_eq(c, cert.has_value() == pc.has_value(),
                 "certificate existence matches pseudo core invertibility");
        if (cert && pc) {
            Matrix as = a.adjoint();
            check_eq(c, cert->u * as.power(cert->p + 1) * a.power(cert->p) == a.power(cert->p),
                     "a^p = u (a*)^{p+1} a^p");
            check_eq(c, cert->v * a.power(cert->q + 1) == a.power(cert->q), "a^q = v a^{q+1}");
            check_eq(c, pc->value == a.power(cert->p) * cert->u.adjoint(),
                     "reconstruction a_pc = a^p u*");
        }
        return c;
    }
    if (law == "T2.13") {
        const std::size_t n = a.rows();
        const std::size_t idx = drazin_index(a);
        bool cond1 = false;
        for (std::size_t m = idx; m <= n && !cond1; ++m)
            cond1 = equation_inverse(a.power(m), InverseKind::moore_penrose).has_value();
        bool cond2 = pc.has_value() && dual_pseudo_core_inverse(a).has_value();
        bool cond3 = false;
        {
            auto cert = regularity_certificates(a);
            cond3 = cert && cert->two_sided_membership;
        }
        check_eq(c, cond1 == cond2, "(1) <=> (2)");
        check_eq(c, cond2 == cond3, "(2) <=> (3)");
        return c;
    }
    if (law == "T2.2") {
        // every applicable computation path returns the same matrix
        Matrix c_a = a * drazin_inverse(a).value * a;
        auto core_route = equation_inverse(c_a, InverseKind::core);
        check_eq(c, core_route.has_value() == pc.has_value(),
                 "existence agrees between direct and core-part routes");
        if (!pc) return c;
        std::size_t paths = 1;
        if (core_route) {
            ++paths;
            check_eq(c, core_route->value == pc->value, "core-part route matches direct route");
        }
        if (a.context().involution == Involution::conjugate_transpose) {
            auto cn = pseudo_core_cn_exact(a);
            if (cn) {
                ++paths;
                check_eq(c, *cn == pc->value, "column-space formula matches direct route");
            }
        }
        c.notes.push_back("paths compared: " + std::to_string(paths));
        return c;
    }

    if (!pc) return not_applicable(law, "matrix is not pseudo core invertible");
    const Matrix& x = pc->value;
    const std::size_t m = pc->index;

    if (law == "DEF") {
        DefiningResiduals res = verify_defining_equations(a, x, m);
        check_eq(c, res.all_zero(), "zero residuals at the reported index");
        if (m >= 2) {
            check_eq(c, x * a.power(m) != a.power(m - 1), "condition (I) fails at index-1");
        } else {
            bool invertible = rank(a) == a.rows();
            check_eq(c, invertible || x * a != Matrix::identity(a.rows(), a.context()),
                     "index 1 is minimal");
        }
        return c;
    }
    if (law == "L2.1") {
        Matrix ax = a * x;
        for (std::size_t k = 1; k <= 2 * m; ++k)
            check_eq(c, ax == a.power(k) * x.power(k), "ax = a^k x^k, k=" + std::to_string(k));
        check_eq(c, x * a * x == x, "xax = x");
        for (std::size_t k = m; k <= m + 2; ++k)
            check_eq(c, a.power(k) * x.power(k) * a.power(k) == a.power(k),
                     "a^k x^k a^k = a^k, k=" + std::to_string(k));
        check_eq(c, x.power(m + 1) * a.power(m) == drazin_inverse(a).value,
                 "x^{m+1} a^m = a^D");
        return c;
    }
    if (law == "R2.4") {
        check_eq(c, m == drazin_index(a), "I(a) = i(a)");
        return c;
    }
    if (law == "T2.5") {
        auto core_am = equation_inverse(a.power(m), InverseKind::core);
        check_eq(c, core_am.has_value(), "a^m is core invertible");
        if (core_am) {
            check_eq(c, core_am->value == x.power(m), "(a^m)_core = (a_pc)^m");
            check_eq(c, x == a.power(m - 1) * core_am->value, "a_pc = a^{m-1} (a^m)_core");
        }
        return c;
    }
    if (law == "T2.6") {
        for (std::size_t k = 1; k <= 3; ++k) {
            auto pck = pseudo_core_inverse(a.power(k));
            check_eq(c, pck.has_value(), "a^k pseudo core invertible, k=" + std::to_string(k));
            if (!pck) continue;
            check_eq(c, pck->value == x.power(k), "(a^k)_pc = (a_pc)^k, k=" + std::to_string(k));
            check_eq(c, pck->index == detail::ceil_div(m, k),
                     "I(a^k) = ceil(I(a)/k), k=" + std::to_string(k));
            check_eq(c, x == a.power(k - 1) * pck->value,
                     "a_pc = a^{k-1} (a^k)_pc, k=" + std::to_string(k));
        }
        return c;
    }
    if (law == "T2.7") {
        Matrix expect = (a * a) * x;
        auto pcx = pseudo_core_inverse(x);
        auto corex = equation_inverse(x, InverseKind::core);
        check_eq(c, pcx.has_value() && corex.has_value(), "a_pc is core invertible");
        if (pcx && corex) {
            check_eq(c, pcx->value == expect, "(a_pc)_pc = a^2 a_pc");
            check_eq(c, corex->value == expect, "(a_pc)_core = a^2 a_pc");
        }
        return c;
    }
    if (law == "P2.8") {
        auto p2 = pseudo_core_inverse(x);
        auto p3 = p2 ? pseudo_core_inverse(p2->value) : std::nullopt;
        check_eq(c, p2.has_value() && p3.has_value(), "iterated pseudo core inverses exist");
        if (p3) check_eq(c, p3->value == x, "((a_pc)_pc)_pc = a_pc");
        return c;
    }
    if (law == "T2.9") {
        CoreNilpotentRecord rec = core_nilpotent(a);
        auto core_c = equation_inverse(rec.core_part, InverseKind::core);
        check_eq(c, core_c.has_value(), "core part is core invertible");
        if (core_c) check_eq(c, core_c->value == x, "a_pc = (c_a)_core");
        check_eq(c, rec.index == m, "core-nilpotent index = I(a)");
        return c;
    }
    if (law == "T2.10") {
        Matrix am = a.power(m);
        Matrix xs = x.adjoint();
        check_eq(c, x * a * x == x, "xax = x");
        check_eq(c, same_column_space(x, xs) && same_column_space(x, am),
                 "(2) xR = x*R = a^mR");
        check_eq(c, same_column_space(x, am) && column_space_contained(am, xs),
                 "(3) xR = a^mR and a^mR in x*R");
        check_eq(c, same_column_space(x, am) && left_annihilator_contained(xs, am),
                 "(4) xR = a^mR and ann(x*) in ann(a^m)");
        check_eq(c,
                 same_column_space(am, x) && left_annihilator_contained(xs, am),
                 "(5) ann(x) = ann(a^m) and ann(x*) in ann(a^m)");
        for (std::size_t smaller = 1; smaller < m; ++smaller) {
            if (same_column_space(x, xs) && same_column_space(x, a.power(smaller)))
                c.notes.push_back("note: condition (2) also holds at m=" +
                                  std::to_string(smaller));
        }
        return c;
    }
    if (law == "P2.14") {
        bool axa = (a * x * a == a);
        auto core = equation_inverse(a, InverseKind::core);
        bool a2x = ((a * a) * x == a);
        c.notes.push_back(std::string("condition axa=a: ") + (axa ? "holds" : "fails"));
        c.notes.push_back(std::string("condition a^2x=a: ") + (a2x ? "holds" : "fails"));
        c.notes.push_back(std::string("core invertible: ") + (core ? "yes" : "no"));
        check_eq(c, axa == core.has_value(), "(1) <=> (2): axa=a iff a is core invertible");
        if (axa && core) check_eq(c, core->value == x, "a_core = a_pc");
        if (a2x) check_eq(c, axa, "(3) => (1)");
        return c;
    }
    if (law == "T3.3") {
        Matrix am = a.power(m);
        if (!equation_inverse(am, InverseKind::one_four))
            return not_applicable(law, "a^m has no {1,4}-inverse");
        Matrix d = am * am.adjoint();
        check_eq(c, x * a * d == d, "xad = d");
        check_eq(c, d * a * x == d, "dax = d");
        check_eq(c, row_space_contained(x, d), "Rx in Rd");
        check_eq(c, column_space_contained(x, d), "xR in dR");
        return c;
    }
    if (law == "T3.4") {
        Matrix b = a.power(m);
        Matrix cc = b.adjoint();
        const std::size_t n = a.rows();
        bool in_brx = solve_linear_system({LinearConstraint{{{b, x, false}}, x}},
                                          {n, n}, a.context())
                          .has_value();
        bool in_xrc = solve_linear_system({LinearConstraint{{{x, cc, false}}, x}},
                                          {n, n}, a.context())
                          .has_value();
        check_eq(c, in_brx, "x in bRx");
        check_eq(c, in_xrc, "x in xRc");
        check_eq(c, x * a * b == b, "xab = b");
        check_eq(c, cc * a * x == cc, "cax = c");
        return c;
    }
    if (law == "PROJ") {
        Matrix proj = pc->projector;
        check_eq(c, proj.adjoint() == proj, "a a_pc self-adjoint");
        check_eq(c, proj * proj == proj, "a a_pc idempotent");
        return c;
    }
    return not_applicable(law, "unknown law id");
}

inline const std::vector<std::string>& single_matrix_laws() {
    static const std::vector<std::string> laws = {
        "DEF",  "L2.1", "T2.2", "R2.4", "T2.5",  "T2.6", "T2.7", "P2.8",
        "T2.9", "T2.10", "T2.12", "T2.13", "P2.14", "T3.3", "T3.4", "PROJ"};
    return laws;
}

inline const std::vector<std::string>& pair_laws() {
    static const std::vector<std::string> laws = {"P4.2", "T4.3", "T4.4"};
    return laws;
}

} // namespace gencore
