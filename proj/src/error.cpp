#include "rankrep/error.hpp"

namespace rankrep {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::EmptyTable: return "EmptyTable";
        case ErrorKind::RejectedTie: return "RejectedTie";
        case ErrorKind::MissingScore: return "MissingScore";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NotAPermutation: return "NotAPermutation";
        case ErrorKind::EmptySubset: return "EmptySubset";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NotMonotone: return "NotMonotone";
        case ErrorKind::DegenerateConstantVector: return "DegenerateConstantVector";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::NoFeasibleAtCap: return "NoFeasibleAtCap";
        case ErrorKind::Exhausted: return "Exhausted";
        case ErrorKind::UnknownMetricName: return "UnknownMetricName";
        case ErrorKind::IncompatibleMethod: return "IncompatibleMethod";
    }
    return "Unknown";
}

}  // namespace rankrep
