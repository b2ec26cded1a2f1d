#pragma once

// Proportional subsets by uniform sampling without replacement.
//
// Drawing k = ceil(ln(2m) / eps^2) metrics keeps every cutoff fraction within
// eps of the full profile with probability at least 1/2 (Hoeffding without
// replacement plus a union bound over the m^2 (a, r) pairs), so a handful of
// independent attempts almost surely succeeds. For a group collection the
// union bound runs over the groups: k = ceil(ln(4|G|) / (2 eps^2)).

#include <cstdint>

#include "rankrep/error.hpp"
#include "rankrep/properties.hpp"
#include "rankrep/selection.hpp"

namespace rankrep {

inline constexpr std::size_t kDefaultMaxAttempts = 20;

// Raised when every attempt failed; carries the number of failures.
class SamplingExhausted : public Error {
public:
    explicit SamplingExhausted(std::size_t failures)
        : Error(ErrorKind::Exhausted, "no proportional sample in " + std::to_string(failures) + " attempts"),
          failures_(failures) {}
    [[nodiscard]] std::size_t failures() const noexcept { return failures_; }

private:
    std::size_t failures_;
};

std::size_t pp_sample_size(std::size_t n, std::size_t m, const Rational& eps);
std::size_t gen_prop_sample_size(std::size_t n, std::size_t num_groups, const Rational& eps);

// k distinct metrics out of n, uniformly; attempt t of a run seeded with
// `seed` uses the sub-seed mix_seed(seed, t). Sorted.
MetricSet draw_sample(std::size_t n, std::size_t k, std::uint64_t seed, std::size_t attempt);

// Attempts are tried in order 0, 1, ...; the first verified sample is
// returned with attempts = index + 1.
Selection sample_pp(const PreferenceProfile& profile, const Rational& eps, std::uint64_t seed,
                    std::size_t max_attempts = kDefaultMaxAttempts);
Selection sample_gen_prop(const GroupCollection& groups, const Rational& eps, std::uint64_t seed,
                          std::size_t max_attempts = kDefaultMaxAttempts);

}  // namespace rankrep
