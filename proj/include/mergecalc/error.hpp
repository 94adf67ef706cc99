#pragma once

#include <stdexcept>
#include <string>

namespace mergecalc {

enum class ErrorKind {
    CycleDetected,
    UnknownVertex,
    NoPath,
    BudgetExceeded,
    NotCovered,
    MalformedNetwork,
    GraphTooLarge,
    RerouteDetected,
    PhiWalkUnsupported,
    NotTwoGroup,
    NotTwoByN,
    MultiwayMerging,
    IncomparablePairs,
    InvalidStroke,
    IncompatibleInterface,
    MismatchedN,
    NonMonotoneCuts,
    ParamTooSmall,
    UnknownFixture,
    ParseError,
};

const char* error_kind_name(ErrorKind kind);

class MergeError : public std::runtime_error {
public:
    MergeError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Stroke position (1-based) is carried so callers can point at the offending entry.
class InvalidStrokeError : public MergeError {
public:
    InvalidStrokeError(int position, const std::string& what)
        : MergeError(ErrorKind::InvalidStroke, "position " + std::to_string(position) + ": " + what),
          position_(position) {}

    int position() const { return position_; }

private:
    int position_;
};

}  // namespace mergecalc
