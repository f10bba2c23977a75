#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "gencore/float_engine.hpp"
#include "gencore/inverses.hpp"
#include "gencore/matrix.hpp"
#include "gencore/pseudo_core.hpp"

namespace gencore {

using nlohmann::json;

inline json matrix_to_json(const Matrix& a) {
    json entries = json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < a.cols(); ++c)
            row.push_back({{"re", rational_to_string(a(r, c).re)},
                           {"im", rational_to_string(a(r, c).im)}});
        entries.push_back(row);
    }
    return {{"rows", a.rows()},
            {"cols", a.cols()},
            {"involution", to_string(a.context().involution)},
            {"mode", "exact"},
            {"entries", entries}};
}

inline json matrix_to_json(const fp::CMat& a, Involution inv) {
    json entries = json::array();
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            row.push_back({{"re", a(r, c).real()}, {"im", a(r, c).imag()}});
        entries.push_back(row);
    }
    return {{"rows", a.rows()},
            {"cols", a.cols()},
            {"involution", to_string(inv)},
            {"mode", "float"},
            {"entries", entries}};
}

namespace detail {

inline Rational rational_from_json(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number_float()) {
        Rational q(v.get<double>()); // exact binary-rational conversion
        q.canonicalize();
        return q;
    }
    throw ParseError("matrix entry component must be a string or number");
}

inline void validate_matrix_json(const json& j) {
    for (const char* key : {"rows", "cols", "involution", "mode", "entries"})
        if (!j.contains(key)) throw ParseError(std::string("matrix JSON missing '") + key + "'");
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows)
        throw ParseError("entries row count does not match 'rows'");
    for (const auto& row : entries)
        if (!row.is_array() || row.size() != cols)
            throw ParseError("entries column count does not match 'cols'");
}

} // namespace detail

inline RingContext context_from_json(const json& j) {
    detail::validate_matrix_json(j);
    return {mode_from_string(j.at("mode").get<std::string>()),
            involution_from_string(j.at("involution").get<std::string>())};
}

/// Reads a matrix into exact representation. Float-mode numeric entries are
/// converted through their exact binary-rational value.
inline Matrix exact_matrix_from_json(const json& j) {
    detail::validate_matrix_json(j);
    RingContext ctx = exact_context(involution_from_string(j.at("involution").get<std::string>()));
    Matrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(), ctx);
    const json& entries = j.at("entries");
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const json& e = entries[r][c];
            if (!e.contains("re") || !e.contains("im"))
                throw ParseError("matrix entry must carry 're' and 'im'");
            m(r, c) = GaussianRational(detail::rational_from_json(e.at("re")),
                                       detail::rational_from_json(e.at("im")));
        }
    return m;
}

inline fp::CMat float_matrix_from_json(const json& j) {
    return fp::to_float(exact_matrix_from_json(j));
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError("JSON parse error in '" + path + "': " + e.what());
    }
    return j;
}

inline json certificates_to_json(const std::vector<Certificate>& certs) {
    json out = json::array();
    for (const auto& c : certs)
        out.push_back({{"equation", c.equation},
                       {"residual_zero", c.residual.is_zero()},
                       {"residual", matrix_to_json(c.residual)}});
    return out;
}

inline json inverse_result_to_json(const InverseResult& r) {
    json out = {{"kind", to_string(r.kind)},
                {"value", matrix_to_json(r.value)},
                {"certificates", certificates_to_json(r.certificates)}};
    if (r.index) out["index"] = *r.index;
    return out;
}

inline json pseudo_core_result_to_json(const PseudoCoreResult& r) {
    return {{"value", matrix_to_json(r.value)},
            {"index", r.index},
            {"drazin_part", matrix_to_json(r.drazin_part)},
            {"projector", matrix_to_json(r.projector)},
            {"certificates", certificates_to_json(r.certificates)}};
}

inline json law_check_to_json(const LawCheck& c) {
    return {{"law", c.law},
            {"applicable", c.applicable},
            {"holds", c.applicable ? json(c.holds) : json(nullptr)},
            {"notes", c.notes}};
}

} // namespace gencore
