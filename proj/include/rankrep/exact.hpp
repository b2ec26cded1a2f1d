#pragma once

// Minimum-cardinality subsets satisfying a representation or proportionality
// property, optionally containing a fixed set of metrics (augmentation).
//
// The 0-1 programs min sum x_i subject to
//     sum_{i in S} x_i >= floor(|S|/g)                          (representation)
//     (|S|/n - eps) * k <= sum_{i in S} x_i <= (|S|/n + eps) * k (proportionality)
// with k = sum_i x_i are solved by iterative deepening on k. Once k is fixed
// every constraint is an integer window [lo, hi] on |K cap S|, and a depth
// first search with window propagation and a covering lower bound either
// finds a subset of size exactly k or proves none exists. The first feasible
// k is the optimum.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>

#include "rankrep/properties.hpp"
#include "rankrep/selection.hpp"

namespace rankrep {

inline constexpr std::chrono::milliseconds kDefaultTimeLimit{600'000};

struct SolveOptions {
    MetricSet must_include;
    std::optional<std::chrono::milliseconds> time_limit = kDefaultTimeLimit;
    std::optional<std::size_t> size_cap;
};

struct SolveResult {
    PropertySpec spec;
    SolveStatus status = SolveStatus::Infeasible;
    MetricSet members;                    // optimum, or the incumbent when timed out
    std::optional<Certificate> certificate;  // present whenever members is a verified answer
    std::uint64_t nodes = 0;              // search nodes over all k levels
    std::size_t lower_bound = 0;          // every k below this was proven infeasible
    std::chrono::nanoseconds wall_time{0};

    [[nodiscard]] std::size_t objective() const noexcept { return members.size(); }
    [[nodiscard]] bool has_answer() const noexcept { return certificate.has_value(); }
};

SolveResult exact_min_pr(const PreferenceProfile& profile, std::size_t g, const SolveOptions& options = {});
SolveResult exact_min_pp(const PreferenceProfile& profile, const Rational& eps, const SolveOptions& options = {});
SolveResult exact_min_groups(const GroupCollection& groups, const PropertySpec& spec,
                             const SolveOptions& options = {});

// Exact solve with `existing` added to options.must_include.
SolveResult augment(const PreferenceProfile& profile, std::span<const MetricIndex> existing,
                    const PropertySpec& spec, SolveOptions options = {});
SolveResult augment(const GroupCollection& groups, std::span<const MetricIndex> existing, const PropertySpec& spec,
                    SolveOptions options = {});

}  // namespace rankrep
