#pragma once

#include <stdexcept>
#include <string>

namespace specmatch {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidMatrix : Error {
    using Error::Error;
};
struct NumericalFailure : Error {
    using Error::Error;
};
struct SingularShift : Error {
    using Error::Error;
};
struct BranchCutViolation : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct ModelParamError : Error {
    using Error::Error;
};
struct DimensionError : Error {
    using Error::Error;
};
struct ParamError : Error {
    using Error::Error;
};
struct NormBoundViolated : Error {
    using Error::Error;
};
struct SizeError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace specmatch
