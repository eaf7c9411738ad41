#ifndef AWREL_ERROR_HPP
#define AWREL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace awrel {

enum class ErrorCode {
    DivisionByZero,
    ParseError,
    DimensionMismatch,
    IndexOutOfRange,
    DiameterTooSmall,
    InconsistentFormulas,
    ZeroScale,
    Underdetermined,
    Inconsistent,
    DegenerateParameters,
    NotCovered,
    FieldTooSmall,
    InvalidSquareRoot,
    SingularMatrix,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace awrel

#endif
