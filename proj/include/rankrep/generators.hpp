#pragma once

// Instance generators: the 4 x 6 example where representation for g = 2
// needs three metrics, the worst-case families behind the size lower bounds,
// and uniform random profiles.

#include <cstdint>
#include <functional>

#include "rankrep/profile.hpp"

namespace rankrep {

// Metrics b1..b4 over alternatives u, v, w, x, y, z (in that index order).
// Columns best to worst: b1 = x y u z v w, b2 = x z v y u w,
// b3 = w y v z u x, b4 = w z u y v x.
PreferenceProfile gen_table2();

inline constexpr std::size_t kDefaultAlternativeBudget = 20'000;

// For every g-subset G_r of the metrics (lexicographic order, r = 1..C(n,g))
// position r holds a_r for metrics in G_r and b_r for the rest; positions
// after C(n,g) list each metric's unused alternatives by ascending index.
// Alternatives a_1..a_M take indices 0..M-1 and b_1..b_M indices M..2M-1.
// Any subset satisfying representation for g must meet every G_r, hence has
// at least n - g + 1 metrics.
// Requires g >= 2 and n = alpha * g with alpha >= 3; throws BudgetExceeded
// when 2 * C(n,g) exceeds max_alternatives.
PreferenceProfile gen_pr_lower_bound(std::size_t n, std::size_t g,
                                     std::size_t max_alternatives = kDefaultAlternativeBudget);

// Alternatives come in pairs (2j-1, 2j), 1-based. Each metric keeps each pair
// in positions (2j-1, 2j), in order when its coin lands heads and swapped
// otherwise. Coins are independent and fair. Requires m even, n >= 1.
PreferenceProfile gen_pp_lower_bound(std::size_t n, std::size_t m, std::uint64_t seed);

// Same construction with caller-supplied coins: heads(i, j) for metric i and
// 0-based pair j.
PreferenceProfile gen_pp_lower_bound(std::size_t n, std::size_t m,
                                     const std::function<bool(MetricIndex, std::size_t)>& heads);

// Independent uniform permutations (Fisher-Yates on seeded draws).
PreferenceProfile gen_random(std::size_t n, std::size_t m, std::uint64_t seed);

// Default labels "m1".."mn" and "a1".."am".
std::vector<std::string> numbered_names(const std::string& prefix, std::size_t count);

}  // namespace rankrep
