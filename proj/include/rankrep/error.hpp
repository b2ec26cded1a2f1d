#pragma once

#include <stdexcept>
#include <string>

namespace rankrep {

enum class ErrorKind {
    EmptyTable,
    RejectedTie,
    MissingScore,
    ParseError,
    NotAPermutation,
    EmptySubset,
    IndexOutOfRange,
    InvalidArgument,
    NotMonotone,
    DegenerateConstantVector,
    BudgetExceeded,
    NoFeasibleAtCap,
    Exhausted,
    UnknownMetricName,
    IncompatibleMethod,
};

[[nodiscard]] const char* to_string(ErrorKind kind) noexcept;

// Every domain failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
    // Message without the kind prefix.
    [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace rankrep
