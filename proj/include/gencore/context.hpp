#pragma once

#include <string>

#include "gencore/errors.hpp"

namespace gencore {

enum class ScalarMode { exact, floating };
enum class Involution { transpose, conjugate_transpose };

/// Scalar mode plus the involution the ring is equipped with. The involution
/// acts on scalars as the identity (transpose) or complex conjugation
/// (conjugate-transpose).
struct RingContext {
    ScalarMode mode = ScalarMode::exact;
    Involution involution = Involution::conjugate_transpose;

    friend bool operator==(const RingContext&, const RingContext&) = default;
};

inline RingContext exact_context(Involution inv) { return {ScalarMode::exact, inv}; }

inline std::string to_string(Involution inv) {
    return inv == Involution::transpose ? "transpose" : "conjugate_transpose";
}

inline std::string to_string(ScalarMode mode) {
    return mode == ScalarMode::exact ? "exact" : "float";
}

inline Involution involution_from_string(const std::string& s) {
    if (s == "transpose") return Involution::transpose;
    if (s == "conjugate_transpose" || s == "conjugate-transpose")
        return Involution::conjugate_transpose;
    throw ParseError("unknown involution '" + s + "'");
}

inline ScalarMode mode_from_string(const std::string& s) {
    if (s == "exact") return ScalarMode::exact;
    if (s == "float") return ScalarMode::floating;
    throw ParseError("unknown scalar mode '" + s + "'");
}

} // namespace gencore
