#include "rankrep/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rankrep/error.hpp"

namespace rankrep {

namespace {

void check_group_size(std::size_t g, std::size_t n) {
    if (g < 1 || g > n) {
        throw Error(ErrorKind::InvalidArgument,
                    "group size g=" + std::to_string(g) + " outside [1, " + std::to_string(n) + "]");
    }
}

void add_color(Coloring& coloring, Color color) {
    const std::size_t id = coloring.colors.size();
    for (const MetricIndex i : color.members) coloring.colors_of_metric[i].push_back(id);
    coloring.colors.push_back(std::move(color));
}

Selection finish(std::string method, Certificate cert, MetricSet members) {
    if (!cert.ok) throw std::logic_error("greedy cover failed verification");
    Selection sel;
    sel.method = std::move(method);
    sel.spec = cert.spec;
    sel.members = std::move(members);
    sel.status = SolveStatus::Feasible;
    sel.certificate = std::move(cert);
    return sel;
}

}  // namespace

const char* to_string(SolveStatus status) noexcept {
    switch (status) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Feasible: return "feasible";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::TimedOut: return "timed-out";
    }
    return "?";
}

Coloring color_profile(const PreferenceProfile& profile, std::size_t g) {
    const std::size_t n = profile.num_metrics();
    const std::size_t m = profile.num_alternatives();
    check_group_size(g, n);

    Coloring coloring;
    coloring.g = g;
    coloring.colors_of_metric.resize(n);
    std::vector<MetricSet> pending(m);
    std::vector<Position> pending_first(m, 0);
    std::vector<std::size_t> blocks(m, 0);
    for (Position r = 1; r <= m; ++r) {
        for (MetricIndex i = 0; i < n; ++i) {
            const AltIndex a = profile.alternative_at(i, r);
            if (pending[a].empty()) pending_first[a] = r;
            pending[a].push_back(i);
            if (pending[a].size() == g) {
                Color color;
                color.alternative = a;
                color.block = ++blocks[a];
                color.first_position = pending_first[a];
                color.last_position = r;
                color.members = std::move(pending[a]);
                std::sort(color.members.begin(), color.members.end());
                pending[a].clear();
                add_color(coloring, std::move(color));
            }
        }
    }
    return coloring;
}

Coloring color_groups(const GroupCollection& groups, std::size_t g) {
    const std::size_t n = groups.universe_size();
    check_group_size(g, n);

    Coloring coloring;
    coloring.g = g;
    coloring.colors_of_metric.resize(n);
    for (std::size_t k = 0; k < groups.size(); ++k) {
        const auto& members = groups[k].members;
        std::size_t block = 0;
        for (std::size_t start = 0; start + g <= members.size(); start += g) {
            Color color;
            color.group = k;
            color.block = ++block;
            color.members.assign(members.begin() + static_cast<std::ptrdiff_t>(start),
                                 members.begin() + static_cast<std::ptrdiff_t>(start + g));
            add_color(coloring, std::move(color));
        }
    }
    return coloring;
}

MetricSet greedy_cover(const Coloring& coloring, std::size_t num_metrics, std::span<const MetricIndex> existing) {
    MetricSet chosen_set = make_metric_set(MetricSet(existing.begin(), existing.end()), num_metrics);
    std::vector<bool> chosen(num_metrics, false);
    std::vector<bool> covered(coloring.color_count(), false);
    for (const MetricIndex i : chosen_set) {
        chosen[i] = true;
        for (const std::size_t c : coloring.colors_of_metric[i]) covered[c] = true;
    }

    while (true) {
        std::size_t best_gain = 0;
        MetricIndex best = 0;
        for (MetricIndex i = 0; i < num_metrics; ++i) {
            if (chosen[i]) continue;
            std::size_t gain = 0;
            for (const std::size_t c : coloring.colors_of_metric[i]) gain += covered[c] ? 0 : 1;
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        if (best_gain == 0) break;
        chosen[best] = true;
        chosen_set.push_back(best);
        for (const std::size_t c : coloring.colors_of_metric[best]) covered[c] = true;
    }
    std::sort(chosen_set.begin(), chosen_set.end());
    return chosen_set;
}

Selection greedy_select(const PreferenceProfile& profile, std::size_t g, std::span<const MetricIndex> existing) {
    const Coloring coloring = color_profile(profile, g);
    MetricSet members = greedy_cover(coloring, profile.num_metrics(), existing);
    Certificate cert = check_pr(profile, members, g);
    return finish(existing.empty() ? "greedy" : "greedy-augment", std::move(cert), std::move(members));
}

Selection generalized_greedy(const GroupCollection& groups, std::size_t g, std::span<const MetricIndex> existing) {
    const Coloring coloring = color_groups(groups, g);
    MetricSet members = greedy_cover(coloring, groups.universe_size(), existing);
    Certificate cert = check_gen_rep(groups, members, g);
    return finish(existing.empty() ? "greedy" : "greedy-augment", std::move(cert), std::move(members));
}

std::size_t greedy_size_bound(std::size_t n, std::size_t g, std::size_t count) {
    const double alpha = static_cast<double>(n) / static_cast<double>(g);
    const double logarithm = std::log(static_cast<double>(std::max<std::size_t>(count, 1)));
    return static_cast<std::size_t>(std::ceil(alpha * (1.0 + logarithm))) + 1;
}

}  // namespace rankrep
