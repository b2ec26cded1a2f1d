#include "rankrep/properties.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rankrep/error.hpp"

namespace rankrep {

namespace {

MetricSet validated(std::span<const MetricIndex> subset, std::size_t n, bool allow_empty = false) {
    if (subset.empty() && !allow_empty) throw Error(ErrorKind::EmptySubset, "subset of metrics is empty");
    return make_metric_set(MetricSet(subset.begin(), subset.end()), n);
}

void check_group_size(std::size_t g, std::size_t n) {
    if (g < 1 || g > n) {
        throw Error(ErrorKind::InvalidArgument,
                    "group size g=" + std::to_string(g) + " outside [1, " + std::to_string(n) + "]");
    }
}

void check_eps(const Rational& eps) {
    if (eps.is_negative()) throw Error(ErrorKind::InvalidArgument, "eps must be >= 0, got " + eps.to_string());
}

// Position counts per alternative: hist[(r-1)*m + a] = metrics of S placing a at r.
CumulativeCounts counts_of(const PreferenceProfile& profile, const MetricSet& set) {
    const std::size_t m = profile.num_alternatives();
    std::vector<std::size_t> counts(m * m, 0);
    for (const MetricIndex i : set) {
        for (Position r = 1; r <= m; ++r) ++counts[(r - 1) * m + profile.alternative_at(i, r)];
    }
    for (std::size_t row = 1; row < m; ++row) {
        for (AltIndex a = 0; a < m; ++a) counts[row * m + a] += counts[(row - 1) * m + a];
    }
    return {m, set.size(), std::move(counts)};
}

void track_slack(Certificate& cert, const Rational& slack) {
    if (!cert.min_slack || slack < *cert.min_slack) cert.min_slack = slack;
}

// Shared proportionality test for one constraint. Returns false and appends a
// violation when |base/n - in_k/k| > eps, decided on
// q * |base*k - in_k*n| <= p * n * k for eps = p/q.
bool proportional(Certificate& cert, Violation where, std::size_t base, std::size_t n, std::size_t in_k,
                  std::size_t k, const Rational& eps) {
    const __int128 diff = static_cast<__int128>(base) * k - static_cast<__int128>(in_k) * n;
    const __int128 lhs = static_cast<__int128>(eps.denominator()) * (diff < 0 ? -diff : diff);
    const __int128 rhs = static_cast<__int128>(eps.numerator()) * n * k;
    const Rational target(static_cast<Rational::int_type>(base), static_cast<Rational::int_type>(n));
    const Rational achieved(static_cast<Rational::int_type>(in_k), static_cast<Rational::int_type>(k));
    track_slack(cert, eps - abs(target - achieved));
    if (lhs <= rhs) return true;
    where.bound = diff > 0 ? Bound::Lower : Bound::Upper;
    where.required = diff > 0 ? target - eps : target + eps;
    where.achieved = achieved;
    cert.violations.push_back(std::move(where));
    return false;
}

}  // namespace

CumulativeCounts cumulative_counts(const PreferenceProfile& profile, std::span<const MetricIndex> subset) {
    return counts_of(profile, validated(subset, profile.num_metrics()));
}

GroupCollection::GroupCollection(std::size_t universe_size, std::vector<Group> groups)
    : n_(universe_size), groups_(std::move(groups)) {
    if (n_ == 0) throw Error(ErrorKind::InvalidArgument, "group universe must hold at least one metric");
    std::set<std::string_view> labels;
    for (auto& group : groups_) {
        if (!labels.insert(group.label).second) {
            throw Error(ErrorKind::InvalidArgument, "duplicate group label '" + group.label + "'");
        }
        group.members = make_metric_set(std::move(group.members), n_);
    }
}

GroupCollection groups_from_profile(const PreferenceProfile& profile) {
    const std::size_t n = profile.num_metrics();
    const std::size_t m = profile.num_alternatives();
    std::vector<Group> groups;
    groups.reserve(m * m);
    for (AltIndex a = 0; a < m; ++a) {
        for (Position r = 1; r <= m; ++r) {
            Group group{profile.alt_names()[a] + "@" + std::to_string(r), {}};
            for (MetricIndex i = 0; i < n; ++i) {
                if (profile.rank(i, a) <= r) group.members.push_back(i);
            }
            groups.push_back(std::move(group));
        }
    }
    return GroupCollection(n, std::move(groups));
}

const char* PropertySpec::name() const noexcept {
    switch (kind) {
        case PropertyKind::Representation: return "pr";
        case PropertyKind::Proportionality: return "pp";
        case PropertyKind::GeneralRepresentation: return "gen-rep";
        case PropertyKind::GeneralProportionality: return "gen-prop";
    }
    return "?";
}

std::string PropertySpec::parameter() const {
    return uses_group_size() ? std::to_string(g) : eps.to_string();
}

Certificate check_pr(const PreferenceProfile& profile, std::span<const MetricIndex> subset, std::size_t g) {
    const MetricSet k_set = validated(subset, profile.num_metrics());
    check_group_size(g, profile.num_metrics());
    const std::size_t m = profile.num_alternatives();
    const auto all = counts_of(profile, profile.all_metrics());
    const auto in_k = counts_of(profile, k_set);

    Certificate cert{PropertySpec::representation(g), true, {}, m * m, std::nullopt};
    for (Position r = 1; r <= m; ++r) {
        for (AltIndex a = 0; a < m; ++a) {
            const auto required = static_cast<Rational::int_type>(all.at(r, a) / g);
            const auto achieved = static_cast<Rational::int_type>(in_k.at(r, a));
            track_slack(cert, Rational(achieved - required));
            if (achieved < required) {
                cert.violations.push_back({a, r, std::nullopt, Bound::Lower, required, achieved});
            }
        }
    }
    cert.ok = cert.violations.empty();
    return cert;
}

Certificate check_pp(const PreferenceProfile& profile, std::span<const MetricIndex> subset, const Rational& eps) {
    const MetricSet k_set = validated(subset, profile.num_metrics());
    check_eps(eps);
    const std::size_t n = profile.num_metrics();
    const std::size_t m = profile.num_alternatives();
    const auto all = counts_of(profile, profile.all_metrics());
    const auto in_k = counts_of(profile, k_set);

    Certificate cert{PropertySpec::proportionality(eps), true, {}, m * m, std::nullopt};
    for (Position r = 1; r <= m; ++r) {
        for (AltIndex a = 0; a < m; ++a) {
            proportional(cert, Violation{a, r, std::nullopt, Bound::Lower, {}, {}}, all.at(r, a), n, in_k.at(r, a),
                         k_set.size(), eps);
        }
    }
    cert.ok = cert.violations.empty();
    return cert;
}

namespace {

std::vector<std::size_t> intersection_sizes(const GroupCollection& groups, const MetricSet& k_set) {
    std::vector<bool> chosen(groups.universe_size(), false);
    for (const MetricIndex i : k_set) chosen[i] = true;
    std::vector<std::size_t> sizes;
    sizes.reserve(groups.size());
    for (const auto& group : groups.groups()) {
        std::size_t hits = 0;
        for (const MetricIndex i : group.members) hits += chosen[i] ? 1 : 0;
        sizes.push_back(hits);
    }
    return sizes;
}

}  // namespace

Certificate check_gen_rep(const GroupCollection& groups, std::span<const MetricIndex> subset, std::size_t g) {
    // An empty K is meaningful here: it satisfies every group smaller than g.
    const MetricSet k_set = validated(subset, groups.universe_size(), /*allow_empty=*/true);
    check_group_size(g, groups.universe_size());
    const auto hits = intersection_sizes(groups, k_set);

    Certificate cert{PropertySpec::general_representation(g), true, {}, groups.size(), std::nullopt};
    for (std::size_t k = 0; k < groups.size(); ++k) {
        const auto required = static_cast<Rational::int_type>(groups[k].members.size() / g);
        const auto achieved = static_cast<Rational::int_type>(hits[k]);
        track_slack(cert, Rational(achieved - required));
        if (achieved < required) cert.violations.push_back({std::nullopt, 0, k, Bound::Lower, required, achieved});
    }
    cert.ok = cert.violations.empty();
    return cert;
}

Certificate check_gen_prop(const GroupCollection& groups, std::span<const MetricIndex> subset, const Rational& eps) {
    const MetricSet k_set = validated(subset, groups.universe_size());
    check_eps(eps);
    const auto hits = intersection_sizes(groups, k_set);

    Certificate cert{PropertySpec::general_proportionality(eps), true, {}, groups.size(), std::nullopt};
    for (std::size_t k = 0; k < groups.size(); ++k) {
        proportional(cert, Violation{std::nullopt, 0, k, Bound::Lower, {}, {}}, groups[k].members.size(),
                     groups.universe_size(), hits[k], k_set.size(), eps);
    }
    cert.ok = cert.violations.empty();
    return cert;
}

Certificate check(const PreferenceProfile* profile, const GroupCollection* groups,
                  std::span<const MetricIndex> subset, const PropertySpec& spec) {
    if (spec.uses_groups() ? groups == nullptr : profile == nullptr) {
        throw Error(ErrorKind::InvalidArgument, std::string("property '") + spec.name() + "' needs " +
                                                    (spec.uses_groups() ? "groups" : "a profile"));
    }
    switch (spec.kind) {
        case PropertyKind::Representation: return check_pr(*profile, subset, spec.g);
        case PropertyKind::Proportionality: return check_pp(*profile, subset, spec.eps);
        case PropertyKind::GeneralRepresentation: return check_gen_rep(*groups, subset, spec.g);
        case PropertyKind::GeneralProportionality: return check_gen_prop(*groups, subset, spec.eps);
    }
    throw std::logic_error("unhandled property kind");
}

ScoreVector::ScoreVector(std::vector<Rational> values) : s_(std::move(values)) {
    if (s_.size() < 2 || s_.front() == s_.back()) {
        throw Error(ErrorKind::DegenerateConstantVector, "score vector needs s_1 > s_m");
    }
    if (s_.front() != Rational(1) || s_.back() != Rational(0)) {
        throw Error(ErrorKind::InvalidArgument, "score vector must satisfy s_1 = 1 and s_m = 0");
    }
    for (std::size_t r = 1; r < s_.size(); ++r) {
        if (s_[r] > s_[r - 1]) throw Error(ErrorKind::NotMonotone, "score vector increases at position " +
                                                                       std::to_string(r + 1));
    }
}

ScoreVector ScoreVector::normalize(std::span<const Rational> raw) {
    for (std::size_t r = 1; r < raw.size(); ++r) {
        if (raw[r] > raw[r - 1]) {
            throw Error(ErrorKind::NotMonotone, "raw scores increase at position " + std::to_string(r + 1));
        }
    }
    if (raw.size() < 2 || raw.front() == raw.back()) {
        throw Error(ErrorKind::DegenerateConstantVector, "raw scores are constant");
    }
    const Rational low = raw.back();
    const Rational span = raw.front() - low;
    std::vector<Rational> s;
    s.reserve(raw.size());
    for (const auto& v : raw) s.push_back((v - low) / span);
    return ScoreVector(std::move(s));
}

ScoreVector ScoreVector::borda(std::size_t m) {
    std::vector<Rational> raw;
    for (std::size_t r = 0; r < m; ++r) raw.emplace_back(static_cast<Rational::int_type>(m - 1 - r));
    return normalize(raw);
}

ScoreVector ScoreVector::plurality(std::size_t m) {
    std::vector<Rational> raw(m, Rational(0));
    if (m > 0) raw.front() = Rational(1);
    return normalize(raw);
}

std::vector<Rational> score_alternatives_cumulative(const PreferenceProfile& profile,
                                                    std::span<const MetricIndex> subset, const ScoreVector& s) {
    const std::size_t m = profile.num_alternatives();
    if (s.size() != m) throw Error(ErrorKind::InvalidArgument, "score vector length differs from m");
    const auto counts = cumulative_counts(profile, subset);
    const auto size = static_cast<Rational::int_type>(counts.set_size());
    std::vector<Rational> scores(m);
    for (AltIndex a = 0; a < m; ++a) {
        Rational total;
        for (Position r = 1; r <= m; ++r) {
            const Rational next = r < m ? s.at(r + 1) : Rational(0);
            total += Rational(static_cast<Rational::int_type>(counts.at(r, a)), size) * (s.at(r) - next);
        }
        scores[a] = total;
    }
    return scores;
}

std::vector<Rational> score_alternatives(const PreferenceProfile& profile, std::span<const MetricIndex> subset,
                                         const ScoreVector& s) {
    const MetricSet set = validated(subset, profile.num_metrics());
    const std::size_t m = profile.num_alternatives();
    if (s.size() != m) throw Error(ErrorKind::InvalidArgument, "score vector length differs from m");
    std::vector<Rational> scores(m);
    for (AltIndex a = 0; a < m; ++a) {
        Rational total;
        for (const MetricIndex i : set) total += s.at(profile.rank(i, a));
        scores[a] = total / Rational(static_cast<Rational::int_type>(set.size()));
    }
    if (scores != score_alternatives_cumulative(profile, set, s)) {
        throw std::logic_error("scoring rule forms disagree");
    }
    return scores;
}

}  // namespace rankrep
