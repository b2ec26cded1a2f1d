#pragma once

// JSON views of certificates, selections, solver results and colorings, plus
// the RunReport envelope every CLI command emits.

#include <optional>
#include <string>

#include <json.hpp>

#include "rankrep/exact.hpp"
#include "rankrep/greedy.hpp"
#include "rankrep/properties.hpp"
#include "rankrep/selection.hpp"

namespace rankrep {

inline constexpr const char* kToolName = "rankrep";
inline constexpr const char* kToolVersion = "0.1.0";

// Resolves indices to labels. Either pointer may be null; indices are then
// printed as numbers.
struct Names {
    const PreferenceProfile* profile = nullptr;
    const GroupCollection* groups = nullptr;

    [[nodiscard]] nlohmann::json metric(MetricIndex i) const;
    [[nodiscard]] nlohmann::json metrics(const MetricSet& set) const;
    [[nodiscard]] nlohmann::json alternative(AltIndex a) const;
    [[nodiscard]] nlohmann::json group(std::size_t k) const;
};

nlohmann::json to_json(const Certificate& cert, const Names& names);
nlohmann::json to_json(const Selection& selection, const Names& names);
nlohmann::json to_json(const SolveResult& result, const Names& names, bool include_timing = false);
nlohmann::json to_json(const Coloring& coloring, const Names& names);

struct RunReport {
    std::string tool = kToolName;
    std::string version = kToolVersion;
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json result = nlohmann::json::object();
    // Wall time is opt-in so that reruns stay byte-identical by default.
    std::optional<double> wall_time_seconds;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

nlohmann::json to_json(const RunReport& report);
RunReport run_report_from_json(const nlohmann::json& j);

}  // namespace rankrep
