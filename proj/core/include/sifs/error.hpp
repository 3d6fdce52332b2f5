#pragma once

#include <stdexcept>
#include <string>

namespace sifs {

enum class ErrorCode {
    kDimensionMismatch,
    kInvalidInput,
    kCapExceeded,
    kNotRegular,
    kNotExpansive,
    kIndeterminate,
    kBasisNotClosed,
    kNotInLambda,
    kNotInDualLattice,
    kBoxNotInvariant,
    kOutOfRange,
    kBadDyadic,
    kUnsupportedParameter,
    kNotMinimal,
    kIo,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace sifs
