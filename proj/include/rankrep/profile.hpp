#pragma once

// Preference profiles: n metrics, each ranking the same m alternatives.
//
// Metric and alternative identifiers are 0-based indices. Positions are
// 1-based everywhere (position 1 is the best), so rank(i, a) is in [1, m].

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rankrep/rational.hpp"

namespace rankrep {

using MetricIndex = std::size_t;
using AltIndex = std::size_t;
using Position = std::size_t;

// Sorted, duplicate-free list of metric indices.
using MetricSet = std::vector<MetricIndex>;

class PreferenceProfile {
public:
    // rankings[i][a] = position of alternative a under metric i (1-based).
    // Throws Error(NotAPermutation) if a row is not a permutation of 1..m and
    // Error(InvalidArgument) for empty or duplicate names.
    PreferenceProfile(std::vector<std::string> metric_names, std::vector<std::string> alt_names,
                      const std::vector<std::vector<Position>>& rankings);

    // orders[i] = alternatives of metric i from best to worst.
    static PreferenceProfile from_orders(std::vector<std::string> metric_names,
                                         std::vector<std::string> alt_names,
                                         const std::vector<std::vector<AltIndex>>& orders);

    [[nodiscard]] std::size_t num_metrics() const noexcept { return n_; }
    [[nodiscard]] std::size_t num_alternatives() const noexcept { return m_; }

    [[nodiscard]] Position rank(MetricIndex i, AltIndex a) const { return rank_of_[i * m_ + a]; }
    [[nodiscard]] AltIndex alternative_at(MetricIndex i, Position r) const { return alt_at_[i * m_ + (r - 1)]; }

    // Alternatives of metric i ordered best to worst.
    [[nodiscard]] std::span<const AltIndex> order(MetricIndex i) const {
        return {alt_at_.data() + i * m_, m_};
    }

    [[nodiscard]] const std::vector<std::string>& metric_names() const noexcept { return metric_names_; }
    [[nodiscard]] const std::vector<std::string>& alt_names() const noexcept { return alt_names_; }

    [[nodiscard]] std::optional<MetricIndex> find_metric(std::string_view name) const;
    [[nodiscard]] std::optional<AltIndex> find_alternative(std::string_view name) const;

    [[nodiscard]] MetricSet all_metrics() const;

    friend bool operator==(const PreferenceProfile&, const PreferenceProfile&) = default;

private:
    PreferenceProfile() = default;

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<Position> rank_of_;  // n x m, row-major
    std::vector<AltIndex> alt_at_;   // n x m, column r-1 holds sigma_{ir}
    std::vector<std::string> metric_names_;
    std::vector<std::string> alt_names_;
};

enum class Orientation { HigherIsBetter, LowerIsBetter };
enum class TiePolicy { ByAlternativeId, Reject };
enum class MissingPolicy { Reject, TieForLast };

// Raw per-metric scores. scores[i][a] is empty when the value is missing.
struct ScoreTable {
    std::vector<std::string> metric_names;
    std::vector<std::string> alt_names;
    std::vector<std::vector<std::optional<Rational>>> scores;
    Orientation orientation = Orientation::HigherIsBetter;
};

// Sort each metric's alternatives by score. Equal scores are broken by
// ascending alternative index (or rejected). Missing scores either raise
// MissingScore or take the worst positions in ascending alternative order.
PreferenceProfile build_profile(const ScoreTable& table, TiePolicy ties = TiePolicy::ByAlternativeId,
                                MissingPolicy missing = MissingPolicy::Reject);

// Rank-matrix CSV: header "metric,<alt1>,...,<altm>", one row per metric
// holding the 1-based position of each alternative.
PreferenceProfile parse_profile_csv(std::istream& in);
void write_profile_csv(const PreferenceProfile& profile, std::ostream& out);
PreferenceProfile read_profile(const std::filesystem::path& path);
void write_profile(const PreferenceProfile& profile, const std::filesystem::path& path);

// Score CSV: same header; cells are decimal scores or empty.
ScoreTable parse_score_csv(std::istream& in, Orientation orientation);
ScoreTable read_score_table(const std::filesystem::path& path, Orientation orientation);

// Validates and normalizes a subset against a universe of n metrics
// (sorts, rejects duplicates and out-of-range indices).
MetricSet make_metric_set(std::vector<MetricIndex> members, std::size_t universe);

}  // namespace rankrep
