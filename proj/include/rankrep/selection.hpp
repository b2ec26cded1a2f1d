#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rankrep/properties.hpp"

namespace rankrep {

enum class SolveStatus {
    Optimal,     // verified and proven minimum
    Feasible,    // verified, minimality not claimed
    Infeasible,  // no subset within the requested cap
    TimedOut,    // search stopped at the time limit; members hold the incumbent if any
};

[[nodiscard]] const char* to_string(SolveStatus status) noexcept;

// A chosen subset K with the checker's certificate for it.
struct Selection {
    std::string method;
    PropertySpec spec;
    MetricSet members;
    SolveStatus status = SolveStatus::Feasible;
    Certificate certificate;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> attempts;
};

}  // namespace rankrep
