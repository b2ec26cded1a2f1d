#include "rankrep/generators.hpp"

#include <numeric>

#include "rankrep/error.hpp"
#include "rankrep/random.hpp"

namespace rankrep {

std::vector<std::string> numbered_names(const std::string& prefix, std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t k = 1; k <= count; ++k) names.push_back(prefix + std::to_string(k));
    return names;
}

PreferenceProfile gen_table2() {
    enum : AltIndex { u, v, w, x, y, z };
    return PreferenceProfile::from_orders({"b1", "b2", "b3", "b4"}, {"u", "v", "w", "x", "y", "z"},
                                          {
                                              {x, y, u, z, v, w},
                                              {x, z, v, y, u, w},
                                              {w, y, v, z, u, x},
                                              {w, z, u, y, v, x},
                                          });
}

PreferenceProfile gen_pr_lower_bound(std::size_t n, std::size_t g, std::size_t max_alternatives) {
    if (g < 2) throw Error(ErrorKind::InvalidArgument, "lower-bound construction needs g >= 2");
    if (n % g != 0 || n / g < 3) {
        throw Error(ErrorKind::InvalidArgument, "lower-bound construction needs n/g to be an integer >= 3");
    }
    // M = C(n, g), stopping as soon as the budget is exceeded.
    std::size_t subsets = 1;
    for (std::size_t t = 1; t <= g; ++t) {
        subsets = subsets * (n - g + t) / t;
        if (2 * subsets > max_alternatives) {
            throw Error(ErrorKind::BudgetExceeded, "2*C(" + std::to_string(n) + "," + std::to_string(g) +
                                                       ") alternatives exceed the budget of " +
                                                       std::to_string(max_alternatives));
        }
    }
    if (2 * subsets > max_alternatives) {
        throw Error(ErrorKind::BudgetExceeded, "alternatives exceed the budget");
    }

    const std::size_t m = 2 * subsets;
    std::vector<std::vector<AltIndex>> orders(n);
    for (auto& order : orders) order.reserve(m);

    std::vector<std::size_t> combo(g);
    std::iota(combo.begin(), combo.end(), std::size_t{0});
    for (std::size_t r = 0; r < subsets; ++r) {
        std::vector<bool> in_group(n, false);
        for (const std::size_t i : combo) in_group[i] = true;
        for (MetricIndex i = 0; i < n; ++i) orders[i].push_back(in_group[i] ? r : subsets + r);

        // Next combination in lexicographic order.
        std::size_t t = g;
        while (t > 0 && combo[t - 1] == n - g + (t - 1)) --t;
        if (t == 0) break;
        ++combo[t - 1];
        for (std::size_t s = t; s < g; ++s) combo[s] = combo[s - 1] + 1;
    }
    for (auto& order : orders) {
        std::vector<bool> used(m, false);
        for (const AltIndex a : order) used[a] = true;
        for (AltIndex a = 0; a < m; ++a) {
            if (!used[a]) order.push_back(a);
        }
    }

    std::vector<std::string> alts = numbered_names("a", subsets);
    for (auto& name : numbered_names("b", subsets)) alts.push_back(std::move(name));
    return PreferenceProfile::from_orders(numbered_names("m", n), std::move(alts), orders);
}

PreferenceProfile gen_pp_lower_bound(std::size_t n, std::size_t m,
                                     const std::function<bool(MetricIndex, std::size_t)>& heads) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "need at least one metric");
    if (m < 2 || m % 2 != 0) throw Error(ErrorKind::InvalidArgument, "pair construction needs an even m >= 2");
    std::vector<std::vector<AltIndex>> orders(n, std::vector<AltIndex>(m));
    for (MetricIndex i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m / 2; ++j) {
            const bool keep = heads(i, j);
            orders[i][2 * j] = keep ? 2 * j : 2 * j + 1;
            orders[i][2 * j + 1] = keep ? 2 * j + 1 : 2 * j;
        }
    }
    return PreferenceProfile::from_orders(numbered_names("m", n), numbered_names("a", m), orders);
}

PreferenceProfile gen_pp_lower_bound(std::size_t n, std::size_t m, std::uint64_t seed) {
    Rng rng(seed);
    // Coins are drawn metric by metric, pair by pair.
    std::vector<bool> coins;
    coins.reserve(n * (m / 2));
    for (std::size_t t = 0; t < n * (m / 2); ++t) coins.push_back(rng.coin());
    return gen_pp_lower_bound(n, m, [&](MetricIndex i, std::size_t j) { return coins[i * (m / 2) + j]; });
}

PreferenceProfile gen_random(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n < 1 || m < 1) throw Error(ErrorKind::InvalidArgument, "need n >= 1 and m >= 1");
    Rng rng(seed);
    std::vector<std::vector<AltIndex>> orders(n);
    for (auto& order : orders) {
        order.resize(m);
        std::iota(order.begin(), order.end(), AltIndex{0});
        for (std::size_t t = m; t > 1; --t) {
            const auto j = static_cast<std::size_t>(rng.below(t));
            std::swap(order[t - 1], order[j]);
        }
    }
    return PreferenceProfile::from_orders(numbered_names("m", n), numbered_names("a", m), orders);
}

}  // namespace rankrep
