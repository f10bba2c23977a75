#pragma once

#include <stdexcept>
#include <string>

namespace gencore {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NonSquare : Error {
    using Error::Error;
};

struct ContextMismatch : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct RankZero : Error {
    using Error::Error;
};

struct SingularBlock : Error {
    using Error::Error;
};

struct HypothesisViolated : Error {
    using Error::Error;
};

} // namespace gencore
