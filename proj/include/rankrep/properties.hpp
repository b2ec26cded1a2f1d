#pragma once

// Cumulative rank counts and exact verification of the four subset
// properties: positional representation, positional proportionality and
// their generalized (arbitrary metric group) forms. Also positional scoring
// rules, whose averages a proportional subset approximates.
//
// All comparisons are exact. Proportionality is decided by cross-multiplying
// integers, so no verdict depends on floating point rounding.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rankrep/profile.hpp"
#include "rankrep/rational.hpp"

namespace rankrep {

// C(S, r, a): how many metrics of S rank alternative a within the top r.
class CumulativeCounts {
public:
    CumulativeCounts(std::size_t num_alternatives, std::size_t set_size, std::vector<std::size_t> counts)
        : m_(num_alternatives), set_size_(set_size), counts_(std::move(counts)) {}

    [[nodiscard]] std::size_t at(Position r, AltIndex a) const { return counts_[(r - 1) * m_ + a]; }
    [[nodiscard]] std::size_t set_size() const noexcept { return set_size_; }
    [[nodiscard]] std::size_t num_alternatives() const noexcept { return m_; }

private:
    std::size_t m_;
    std::size_t set_size_;
    std::vector<std::size_t> counts_;  // m x m, row r-1
};

// Throws Error(EmptySubset) for an empty subset, Error(IndexOutOfRange) or
// Error(InvalidArgument) for bad or repeated indices.
CumulativeCounts cumulative_counts(const PreferenceProfile& profile, std::span<const MetricIndex> subset);

struct Group {
    std::string label;
    MetricSet members;
};

// Named metric groups over a universe of n metrics. Labels are unique; the
// same member set may appear under several labels.
class GroupCollection {
public:
    explicit GroupCollection(std::size_t universe_size, std::vector<Group> groups = {});

    [[nodiscard]] std::size_t universe_size() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return groups_.size(); }
    [[nodiscard]] bool empty() const noexcept { return groups_.empty(); }
    [[nodiscard]] const std::vector<Group>& groups() const noexcept { return groups_; }
    [[nodiscard]] const Group& operator[](std::size_t k) const { return groups_[k]; }

private:
    std::size_t n_;
    std::vector<Group> groups_;
};

// One group per (alternative a, position r), labeled "<alt>@<r>", holding the
// metrics that rank a within the top r. Ordered by alternative, then position.
GroupCollection groups_from_profile(const PreferenceProfile& profile);

enum class PropertyKind {
    Representation,       // C(K,r,a) >= floor(C(N,r,a)/g)
    Proportionality,      // |C(N,r,a)/n - C(K,r,a)/|K|| <= eps
    GeneralRepresentation,
    GeneralProportionality,
};

struct PropertySpec {
    PropertyKind kind = PropertyKind::Representation;
    std::size_t g = 1;
    Rational eps;

    static PropertySpec representation(std::size_t g) { return {PropertyKind::Representation, g, {}}; }
    static PropertySpec proportionality(Rational eps) { return {PropertyKind::Proportionality, 0, eps}; }
    static PropertySpec general_representation(std::size_t g) {
        return {PropertyKind::GeneralRepresentation, g, {}};
    }
    static PropertySpec general_proportionality(Rational eps) {
        return {PropertyKind::GeneralProportionality, 0, eps};
    }

    [[nodiscard]] bool uses_group_size() const noexcept {
        return kind == PropertyKind::Representation || kind == PropertyKind::GeneralRepresentation;
    }
    [[nodiscard]] bool uses_groups() const noexcept {
        return kind == PropertyKind::GeneralRepresentation || kind == PropertyKind::GeneralProportionality;
    }
    // "pr", "pp", "gen-rep", "gen-prop".
    [[nodiscard]] const char* name() const noexcept;
    // g or eps, as text.
    [[nodiscard]] std::string parameter() const;

    friend bool operator==(const PropertySpec&, const PropertySpec&) = default;
};

enum class Bound { Lower, Upper };

// A failed constraint: either (alternative, position) or a group index.
struct Violation {
    std::optional<AltIndex> alternative;
    Position position = 0;
    std::optional<std::size_t> group;
    Bound bound = Bound::Lower;
    Rational required;  // count (representation) or fraction bound (proportionality)
    Rational achieved;
};

struct Certificate {
    PropertySpec spec;
    bool ok = false;
    std::vector<Violation> violations;  // every failing constraint
    std::size_t constraints = 0;        // constraints examined
    // Smallest slack over all constraints (negative when violated); absent
    // when there are no constraints.
    std::optional<Rational> min_slack;
};

Certificate check_pr(const PreferenceProfile& profile, std::span<const MetricIndex> subset, std::size_t g);
Certificate check_pp(const PreferenceProfile& profile, std::span<const MetricIndex> subset, const Rational& eps);
Certificate check_gen_rep(const GroupCollection& groups, std::span<const MetricIndex> subset, std::size_t g);
Certificate check_gen_prop(const GroupCollection& groups, std::span<const MetricIndex> subset, const Rational& eps);

// Dispatch on spec.kind; the group forms require `groups`.
Certificate check(const PreferenceProfile* profile, const GroupCollection* groups,
                  std::span<const MetricIndex> subset, const PropertySpec& spec);

// Normalized positional scoring rule: s_1 = 1 >= ... >= s_m = 0.
class ScoreVector {
public:
    // Throws NotMonotone or DegenerateConstantVector.
    explicit ScoreVector(std::vector<Rational> values);

    // s_r = (raw_r - raw_m) / (raw_1 - raw_m).
    static ScoreVector normalize(std::span<const Rational> raw);
    static ScoreVector borda(std::size_t m);
    static ScoreVector plurality(std::size_t m);

    [[nodiscard]] std::size_t size() const noexcept { return s_.size(); }
    // 1-based position.
    [[nodiscard]] const Rational& at(Position r) const { return s_[r - 1]; }
    [[nodiscard]] const std::vector<Rational>& values() const noexcept { return s_; }

private:
    std::vector<Rational> s_;
};

// f_s(a) = (1/|S|) * sum over i in S of s_{sigma_i(a)}, per alternative.
// Also evaluates the cumulative form sum_r C(S,r,a)/|S| * (s_r - s_{r+1})
// and throws std::logic_error should the two ever differ.
std::vector<Rational> score_alternatives(const PreferenceProfile& profile, std::span<const MetricIndex> subset,
                                         const ScoreVector& s);

// The cumulative-count form on its own.
std::vector<Rational> score_alternatives_cumulative(const PreferenceProfile& profile,
                                                    std::span<const MetricIndex> subset, const ScoreVector& s);

}  // namespace rankrep
