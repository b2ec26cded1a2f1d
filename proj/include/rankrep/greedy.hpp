#pragma once

// Coloring construction and greedy cover for (generalized) positional
// representation.
//
// The profile is scanned position by position, metrics in index order within
// a position. Each alternative keeps a pending list of the metrics that placed
// it so far; once the list holds g metrics they receive a fresh color and the
// list restarts. Any subset touching every color satisfies representation for
// group size g, because the first floor(C(N,r,a)/g) blocks of alternative a
// all lie within the top r. The greedy cover then repeatedly adds the metric
// holding the most still-uncovered colors (lowest index on ties).

#include <optional>
#include <span>
#include <vector>

#include "rankrep/properties.hpp"
#include "rankrep/selection.hpp"

namespace rankrep {

struct Color {
    std::optional<AltIndex> alternative;  // profile coloring
    std::optional<std::size_t> group;     // group coloring
    std::size_t block = 0;                // 1-based block number within its alternative or group
    Position first_position = 0;          // rank range of the block (profile coloring only)
    Position last_position = 0;
    MetricSet members;                    // exactly g metrics
};

struct Coloring {
    std::size_t g = 0;
    std::vector<Color> colors;
    std::vector<std::vector<std::size_t>> colors_of_metric;  // color ids held by each metric

    [[nodiscard]] std::size_t color_count() const noexcept { return colors.size(); }
};

Coloring color_profile(const PreferenceProfile& profile, std::size_t g);

// Each group is blocked independently in ascending metric order; a group of
// size s yields floor(s/g) colors.
Coloring color_groups(const GroupCollection& groups, std::size_t g);

// Greedy cover of all colors, starting from `existing` (which stays in K).
MetricSet greedy_cover(const Coloring& coloring, std::size_t num_metrics, std::span<const MetricIndex> existing = {});

Selection greedy_select(const PreferenceProfile& profile, std::size_t g, std::span<const MetricIndex> existing = {});
Selection generalized_greedy(const GroupCollection& groups, std::size_t g,
                             std::span<const MetricIndex> existing = {});

// ceil((n/g) * (1 + ln(count))) + 1, the size guarantee of the greedy cover
// when at most count * floor(n/g) colors exist: count = m for a profile,
// max(number of groups, 2) for a group collection.
std::size_t greedy_size_bound(std::size_t n, std::size_t g, std::size_t count);

}  // namespace rankrep
