// Command-line surface for the generalized-inverse library: compute any
// inverse from JSON matrix input, verify the identity laws, compare the
// floating-point methods, replay the two counterexample demos, and run the
// seeded randomized suites.
//
// Exit codes: 0 success / all-pass, 1 usage or I/O error, 2 mathematically
// meaningful nonexistence or a failed check.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gencore/generator.hpp"
#include "gencore/json_io.hpp"

using namespace gencore;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoSolution = 2;

double env_tolerance() {
    if (const char* t = std::getenv("GENCORE_TOL")) {
        try {
            return std::stod(t);
        } catch (...) {
            throw ParseError("GENCORE_TOL is not a number");
        }
    }
    return -1.0;
}

void emit(const json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

struct KindSpec {
    bool pseudo_family;
    InverseKind kind;       // when !pseudo_family
    bool dual_pseudo;       // when pseudo_family
};

std::optional<KindSpec> parse_kind(const std::string& s) {
    static const std::map<std::string, KindSpec> kinds = {
        {"inner", {false, InverseKind::inner, false}},
        {"one-three", {false, InverseKind::one_three, false}},
        {"one-four", {false, InverseKind::one_four, false}},
        {"moore-penrose", {false, InverseKind::moore_penrose, false}},
        {"group", {false, InverseKind::group, false}},
        {"drazin", {false, InverseKind::drazin, false}},
        {"core", {false, InverseKind::core, false}},
        {"dual-core", {false, InverseKind::dual_core, false}},
        {"pseudo-core", {true, InverseKind::inner, false}},
        {"dual-pseudo-core", {true, InverseKind::inner, true}},
    };
    auto it = kinds.find(s);
    if (it == kinds.end()) return std::nullopt;
    return it->second;
}

Matrix apply_overrides(Matrix m, const std::optional<std::string>& involution) {
    if (!involution) return m;
    RingContext ctx = exact_context(involution_from_string(*involution));
    Matrix out(m.rows(), m.cols(), ctx);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
    return out;
}

int run_compute(const std::string& input, const std::string& kind_name,
                const std::optional<std::string>& involution,
                const std::optional<std::string>& mode, bool pretty) {
    auto kind = parse_kind(kind_name);
    if (!kind) {
        std::cerr << "unknown inverse kind '" << kind_name << "'\n";
        return kExitUsage;
    }
    json j = load_json_file(input);
    Matrix a = apply_overrides(exact_matrix_from_json(j), involution);
    std::string eff_mode = mode ? *mode : j.at("mode").get<std::string>();

    if (eff_mode == "float") {
        if (a.context().involution != Involution::conjugate_transpose) {
            std::cerr << "float mode requires the conjugate-transpose involution\n";
            return kExitUsage;
        }
        double tol = env_tolerance();
        fp::CMat af = fp::to_float(a);
        fp::CMat x;
        if (kind_name == "pseudo-core")
            x = fp::pseudo_core_hs(af, tol);
        else if (kind_name == "dual-pseudo-core")
            x = fp::pseudo_core_hs(af.adjoint(), tol).adjoint();
        else if (kind_name == "moore-penrose")
            x = fp::pinv(af, tol);
        else if (kind_name == "drazin")
            x = fp::drazin(af, tol);
        else {
            std::cerr << "inverse kind '" << kind_name << "' is exact-only\n";
            return kExitUsage;
        }
        emit({{"kind", kind_name}, {"value", matrix_to_json(x, a.context().involution)}}, pretty);
        return kExitOk;
    }

    if (kind->pseudo_family) {
        auto res = kind->dual_pseudo ? dual_pseudo_core_inverse(a) : pseudo_core_inverse(a);
        if (!res) {
            emit({{"result", "no_solution"},
                  {"kind", kind_name},
                  {"reason", "{1,3}-inverse of A^m nonexistent for all m <= n"}},
                 pretty);
            return kExitNoSolution;
        }
        json out = pseudo_core_result_to_json(*res);
        out["kind"] = kind_name;
        emit(out, pretty);
        return kExitOk;
    }

    auto res = equation_inverse(a, kind->kind);
    if (!res) {
        emit({{"result", "no_solution"},
              {"kind", kind_name},
              {"reason", "defining equation system is inconsistent"}},
             pretty);
        return kExitNoSolution;
    }
    emit(inverse_result_to_json(*res), pretty);
    return kExitOk;
}

LawCheck run_pair_law(const Matrix& a, const std::string& law) {
    // Single-input surface: pair laws run against a canonical partner.
    LawCheck c{law, true, true, {}};
    if (law == "P4.2") {
        auto r = commute_transfer_check(a, Matrix::identity(a.rows(), a.context()));
        if (!r) return {law, false, false, {"hypotheses not applicable"}};
        c.holds = *r;
        c.notes.push_back("partner X = identity");
        return c;
    }
    try {
        if (law == "T4.3") {
            reverse_order_product(a, Matrix::identity(a.rows(), a.context()));
            c.notes.push_back("partner B = identity");
            return c;
        }
        if (law == "T4.4") {
            auto r = additive_sum(a, Matrix::zero(a.rows(), a.cols(), a.context()));
            c.holds = r.has_value();
            c.notes.push_back("partner B = zero");
            return c;
        }
    } catch (const HypothesisViolated& e) {
        return {law, false, false, {e.what()}};
    }
    return {law, false, false, {"unknown law id"}};
}

int run_verify(const std::string& input, const std::string& law,
               const std::optional<std::string>& involution, bool pretty) {
    json j = load_json_file(input);
    Matrix a = apply_overrides(exact_matrix_from_json(j), involution);
    std::vector<std::string> laws;
    if (law == "all") {
        laws = single_matrix_laws();
        for (const auto& l : pair_laws()) laws.push_back(l);
    } else {
        laws.push_back(law);
    }
    json report = json::array();
    bool all_pass = true;
    for (const auto& l : laws) {
        bool is_pair = false;
        for (const auto& p : pair_laws()) is_pair = is_pair || p == l;
        LawCheck c = is_pair ? run_pair_law(a, l) : identity_check(a, l);
        if (!is_pair && !c.applicable && law != "all" && c.notes.size() == 1 &&
            c.notes[0] == "unknown law id") {
            std::cerr << "unknown law id '" << l << "'\n";
            return kExitUsage;
        }
        if (c.applicable && !c.holds) all_pass = false;
        report.push_back(law_check_to_json(c));
    }
    emit({{"laws", report}, {"all_pass", all_pass}}, pretty);
    return all_pass ? kExitOk : kExitNoSolution;
}

int run_compare(const std::string& input, std::vector<std::string> methods, bool pretty) {
    json j = load_json_file(input);
    Matrix a = exact_matrix_from_json(j);
    if (methods.empty()) methods = {"hs", "cn", "direct", "exact"};
    const bool conj = a.context().involution == Involution::conjugate_transpose;
    double tol = env_tolerance();
    fp::CMat af = fp::to_float(a);
    std::map<std::string, fp::CMat> results;
    for (const auto& m : methods) {
        if ((m == "hs" || m == "cn") && !conj) {
            std::cerr << "method '" << m
                      << "' needs the conjugate-transpose involution; the input is in "
                         "transpose mode\n";
            return kExitUsage;
        }
        if (m == "hs")
            results[m] = fp::pseudo_core_hs(af, tol);
        else if (m == "cn")
            results[m] = fp::pseudo_core_cn(af, tol);
        else if (m == "direct")
            results[m] = fp::pseudo_core_direct(af, tol);
        else if (m == "exact") {
            auto pc = pseudo_core_inverse(a);
            if (!pc) {
                emit({{"result", "no_solution"},
                      {"reason", "matrix is not pseudo core invertible in exact arithmetic"}},
                     pretty);
                return kExitNoSolution;
            }
            results[m] = fp::to_float(pc->value);
        } else {
            std::cerr << "unknown method '" << m << "'\n";
            return kExitUsage;
        }
    }
    json diffs = json::array();
    for (auto it = results.begin(); it != results.end(); ++it)
        for (auto jt = std::next(it); jt != results.end(); ++jt)
            diffs.push_back({{"a", it->first},
                             {"b", jt->first},
                             {"relative_difference", fp::relative_diff(it->second, jt->second)}});
    Eigen::Index idx = fp::float_index(af, tol);
    json residuals = json::object();
    for (const auto& [name, x] : results) {
        fp::CMat am = fp::CMat::Identity(af.rows(), af.cols());
        for (Eigen::Index k = 0; k < idx; ++k) am = am * af;
        fp::CMat ax = af * x;
        double scale = std::max(1.0, af.norm());
        residuals[name] = {{"cond1", (x * am * af - am).norm() / std::max(1.0, am.norm())},
                           {"cond2", (af * x * x - x).norm() / std::max(1.0, x.norm())},
                           {"cond3", (ax.adjoint() - ax).norm() / scale}};
    }
    emit({{"index", idx}, {"pairwise", diffs}, {"residuals", residuals}}, pretty);
    return kExitOk;
}

int run_demo(const std::string& name, bool pretty) {
    const GaussianRational I = GaussianRational::i();
    auto ctx = exact_context(Involution::transpose);
    if (name == "remark-2.15") {
        Matrix a = Matrix::from_rows({{1, I}, {0, 0}}, ctx);
        auto core = equation_inverse(a, InverseKind::core);
        Matrix x = core->value;
        json out = {{"demo", "remark-2.15"},
                    {"a", matrix_to_json(a)},
                    {"core_inverse", matrix_to_json(x)},
                    {"a2_times_core", matrix_to_json((a * a) * x)},
                    {"a2_core_equals_a", (a * a) * x == a},
                    {"conclusion", "a_core exists but a^2 a_core != a: Prop 2.14 condition (3) "
                                   "is strictly stronger"}};
        emit(out, pretty);
        return kExitOk;
    }
    if (name == "remark-4.5") {
        Matrix a = Matrix::from_rows({{I, 0}, {0, 0}}, ctx);
        Matrix b = Matrix::from_rows({{0, 0}, {-1, 0}}, ctx);
        Matrix sum = a + b;
        auto pa = pseudo_core_inverse(a);
        auto pb = pseudo_core_inverse(b);
        json powers = json::array();
        for (std::size_t m = 1; m <= 2; ++m)
            powers.push_back(
                {{"m", m},
                 {"one_three_exists",
                  equation_inverse(sum.power(m), InverseKind::one_three).has_value()}});
        json out = {{"demo", "remark-4.5"},
                    {"a", matrix_to_json(a)},
                    {"b", matrix_to_json(b)},
                    {"ab_zero", (a * b).is_zero()},
                    {"astar_b_zero", (a.adjoint() * b).is_zero()},
                    {"ba", matrix_to_json(b * a)},
                    {"ba_zero", (b * a).is_zero()},
                    {"a_pseudo_core", matrix_to_json(pa->value)},
                    {"b_pseudo_core", matrix_to_json(pb->value)},
                    {"sum", matrix_to_json(sum)},
                    {"sum_one_three_by_power", powers},
                    {"power_periodicity",
                     "(a+b)^m = +-(a+b) for odd m and +-(a+b)^2 for even m, so nonexistence "
                     "for m in {1,2} covers every m"},
                    {"sum_pseudo_core_exists", pseudo_core_inverse(sum).has_value()}};
        emit(out, pretty);
        return kExitOk;
    }
    std::cerr << "unknown demo '" << name << "'\n";
    return kExitUsage;
}

int run_suite(std::uint64_t seed, std::uint64_t cases, std::vector<std::string> scope,
              bool pretty) {
    if (cases < 1) {
        std::cerr << "suite needs --cases >= 1\n";
        return kExitUsage;
    }
    std::vector<std::string> laws;
    if (scope.empty() || (scope.size() == 1 && scope[0] == "all")) {
        laws = single_matrix_laws();
        for (const auto& l : pair_laws()) laws.push_back(l);
    } else {
        for (const auto& s : scope) {
            bool known = false;
            for (const auto& l : single_matrix_laws()) known = known || l == s;
            for (const auto& l : pair_laws()) known = known || l == s;
            if (!known) {
                std::cerr << "unknown law id '" << s << "' in scope\n";
                return kExitUsage;
            }
            laws.push_back(s);
        }
    }
    std::size_t pass = 0, fail = 0, na = 0;
    json failures = json::array();
    for (std::uint64_t c = 0; c < cases; ++c) {
        GenOptions opt{2, 6,
                       c % 2 == 0 ? Involution::conjugate_transpose : Involution::transpose};
        for (const auto& law : laws) {
            bool is_pair = false;
            for (const auto& p : pair_laws()) is_pair = is_pair || p == law;
            LawCheck check{law, true, true, {}};
            try {
                if (!is_pair) {
                    Matrix a = random_instance(seed, c, opt);
                    check = identity_check(a, law);
                } else if (law == "P4.2") {
                    auto [a, x] = random_commuting_pair(seed, c, opt);
                    auto r = commute_transfer_check(a, x);
                    if (!r)
                        check.applicable = false;
                    else
                        check.holds = *r;
                } else if (law == "T4.3") {
                    auto [a, b] = random_product_pair(seed, c, opt);
                    try {
                        reverse_order_product(a, b);
                    } catch (const HypothesisViolated&) {
                        check.applicable = false;
                    }
                } else if (law == "T4.4") {
                    auto [a, b] = random_sum_pair(seed, c, opt);
                    try {
                        check.holds = additive_sum(a, b).has_value();
                    } catch (const HypothesisViolated&) {
                        check.applicable = false;
                    }
                }
            } catch (const Error& e) {
                check.holds = false;
                check.notes.push_back(e.what());
            }
            if (!check.applicable)
                ++na;
            else if (check.holds)
                ++pass;
            else {
                ++fail;
                failures.push_back({{"case", c}, {"report", law_check_to_json(check)}});
            }
        }
    }
    emit({{"seed", seed},
          {"cases", cases},
          {"summary", {{"pass", pass}, {"fail", fail}, {"not_applicable", na}}},
          {"failures", failures}},
         pretty);
    return fail == 0 ? kExitOk : kExitNoSolution;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized-inverse toolkit: pseudo core / core-EP inverses and friends"};
    app.require_subcommand(1);
    app.fallthrough(true);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    std::string input, kind_name, law = "all", demo_name;
    std::optional<std::string> involution, mode;
    std::vector<std::string> methods, scope;
    std::uint64_t seed = 0, cases = 1;

    auto* compute = app.add_subcommand("compute", "compute a generalized inverse");
    compute->add_option("--input", input, "matrix JSON file")->required();
    compute->add_option("--inverse", kind_name,
                        "inner|one-three|one-four|moore-penrose|group|drazin|core|dual-core|"
                        "pseudo-core|dual-pseudo-core")
        ->required();
    compute->add_option("--involution", involution, "transpose|conjugate-transpose override");
    compute->add_option("--mode", mode, "exact|float override");

    auto* verify = app.add_subcommand("verify", "check the identity laws on an input matrix");
    verify->add_option("--input", input, "matrix JSON file")->required();
    verify->add_option("--law", law,
                       "law id (DEF, L2.1, T2.2, R2.4, T2.5, T2.6, T2.7, P2.8, T2.9, T2.10, "
                       "T2.12, T2.13, P2.14, T3.3, T3.4, PROJ, P4.2, T4.3, T4.4) or 'all'");
    verify->add_option("--involution", involution, "involution override");

    auto* compare = app.add_subcommand("compare", "cross-check the computation methods");
    compare->add_option("--input", input, "matrix JSON file")->required();
    compare->add_option("--methods", methods, "subset of hs,cn,direct,exact")->delimiter(',');

    auto* demo = app.add_subcommand("demo", "replay a counterexample from start to finish");
    demo->add_option("name", demo_name, "remark-2.15 | remark-4.5")->required();

    auto* suite = app.add_subcommand("suite", "seeded randomized law suite");
    suite->add_option("--seed", seed, "generator seed")->required();
    suite->add_option("--cases", cases, "number of generated cases")->required();
    suite->add_option("--scope", scope, "law ids or 'all'")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (compute->parsed()) return run_compute(input, kind_name, involution, mode, pretty);
        if (verify->parsed()) return run_verify(input, law, involution, pretty);
        if (compare->parsed()) return run_compare(input, methods, pretty);
        if (demo->parsed()) return run_demo(demo_name, pretty);
        if (suite->parsed()) return run_suite(seed, cases, scope, pretty);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
