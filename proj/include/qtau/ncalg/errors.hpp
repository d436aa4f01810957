#pragma once

#include <stdexcept>
#include <string>

namespace qtau {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotDivisible : Error {
    using Error::Error;
};

struct OrderingObstruction : Error {
    using Error::Error;
};

struct TruncationNotNilpotent : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct NotUnipotent : Error {
    using Error::Error;
};

struct SingularFactorization : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct InexactDivision : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace qtau
