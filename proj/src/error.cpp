#include "mergecalc/error.hpp"

namespace mergecalc {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::CycleDetected: return "CycleDetected";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::NoPath: return "NoPath";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::NotCovered: return "NotCovered";
        case ErrorKind::MalformedNetwork: return "MalformedNetwork";
        case ErrorKind::GraphTooLarge: return "GraphTooLarge";
        case ErrorKind::RerouteDetected: return "RerouteDetected";
        case ErrorKind::PhiWalkUnsupported: return "PhiWalkUnsupported";
        case ErrorKind::NotTwoGroup: return "NotTwoGroup";
        case ErrorKind::NotTwoByN: return "NotTwoByN";
        case ErrorKind::MultiwayMerging: return "MultiwayMerging";
        case ErrorKind::IncomparablePairs: return "IncomparablePairs";
        case ErrorKind::InvalidStroke: return "InvalidStroke";
        case ErrorKind::IncompatibleInterface: return "IncompatibleInterface";
        case ErrorKind::MismatchedN: return "MismatchedN";
        case ErrorKind::NonMonotoneCuts: return "NonMonotoneCuts";
        case ErrorKind::ParamTooSmall: return "ParamTooSmall";
        case ErrorKind::UnknownFixture: return "UnknownFixture";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace mergecalc
