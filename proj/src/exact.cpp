#include "rankrep/exact.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "rankrep/error.hpp"
#include "rankrep/greedy.hpp"

namespace rankrep {

namespace {

using Clock = std::chrono::steady_clock;

// Constraint sets of one instance. Sets equal to the whole universe are not
// stored: under |K| = k they only bound k itself, which `min_size` captures.
struct Problem {
    std::size_t n = 0;
    std::vector<std::vector<MetricIndex>> sets;
    bool proportional = false;
    std::size_t g = 1;
    Rational eps;
    std::size_t min_size = 0;
};

std::int64_t floor_div(__int128 num, __int128 den) {
    __int128 q = num / den;
    if (num % den != 0 && ((num < 0) != (den < 0))) --q;
    return static_cast<std::int64_t>(q);
}

std::int64_t ceil_div(__int128 num, __int128 den) {
    __int128 q = num / den;
    if (num % den != 0 && ((num < 0) == (den < 0))) ++q;
    return static_cast<std::int64_t>(q);
}

// Admissible counts |K cap S| for |S| = size once |K| = k.
std::pair<std::int64_t, std::int64_t> window(const Problem& p, std::size_t size, std::size_t k) {
    const auto cap = static_cast<std::int64_t>(std::min(size, k));
    if (!p.proportional) return {static_cast<std::int64_t>(size / p.g), cap};
    const __int128 q = p.eps.denominator();
    const __int128 num = p.eps.numerator();
    const __int128 n = p.n;
    const __int128 den = n * q;
    const __int128 s = size;
    const __int128 kk = k;
    const std::int64_t lo = ceil_div((s * q - num * n) * kk, den);
    const std::int64_t hi = floor_div((s * q + num * n) * kk, den);
    return {std::max<std::int64_t>(lo, 0), std::min<std::int64_t>(hi, cap)};
}

enum class Outcome { Found, Exhausted, TimedOut };

// Depth-first search for a subset of size exactly k with lo[c] <= |K cap S_c| <= hi[c].
class FixedSizeSearch {
public:
    FixedSizeSearch(std::size_t n, std::size_t k, std::vector<std::vector<MetricIndex>> sets,
                    std::vector<std::int64_t> lo, std::vector<std::int64_t> hi,
                    std::optional<Clock::time_point> deadline, std::uint64_t& nodes)
        : n_(n),
          k_(static_cast<std::int64_t>(k)),
          sets_(std::move(sets)),
          lo_(std::move(lo)),
          hi_(std::move(hi)),
          deadline_(deadline),
          nodes_(nodes) {
        const std::size_t count = sets_.size();
        has_upper_.resize(count);
        for (std::size_t c = 0; c < count; ++c) {
            has_upper_[c] = hi_[c] < static_cast<std::int64_t>(std::min<std::size_t>(sets_[c].size(), k));
        }
        member_of_.resize(n_);
        for (std::size_t c = 0; c < count; ++c) {
            for (const MetricIndex i : sets_[c]) member_of_[i].push_back(c);
        }
        in_count_.assign(count, 0);
        open_count_.resize(count);
        for (std::size_t c = 0; c < count; ++c) open_count_[c] = static_cast<std::int64_t>(sets_[c].size());
        state_.assign(n_, State::Open);
        open_total_ = static_cast<std::int64_t>(n_);
        mark_.assign(n_, false);
        gain_.assign(n_, 0);
        comp_hits_.assign(n_, 0);

        // Metrics with identical constraint membership are interchangeable.
        std::map<std::vector<std::size_t>, std::vector<MetricIndex>> classes;
        for (MetricIndex i = 0; i < n_; ++i) classes[member_of_[i]].push_back(i);
        twins_.resize(n_);
        for (const auto& [signature, members] : classes) {
            for (const MetricIndex i : members) twins_[i] = members;
        }
    }

    Outcome solve(const MetricSet& must, MetricSet& solution) {
        for (const MetricIndex i : must) assign(i, State::In);
        const Outcome outcome = dfs();
        if (outcome == Outcome::Found) solution = solution_;
        return outcome;
    }

private:
    enum class State : unsigned char { Open, In, Out };

    void assign(MetricIndex i, State s) {
        state_[i] = s;
        trail_.push_back(i);
        --open_total_;
        if (s == State::In) ++in_total_;
        for (const std::size_t c : member_of_[i]) {
            --open_count_[c];
            if (s == State::In) ++in_count_[c];
        }
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            const MetricIndex i = trail_.back();
            trail_.pop_back();
            const bool was_in = state_[i] == State::In;
            state_[i] = State::Open;
            ++open_total_;
            if (was_in) --in_total_;
            for (const std::size_t c : member_of_[i]) {
                ++open_count_[c];
                if (was_in) --in_count_[c];
            }
        }
    }

    void assign_open_in(std::size_t c, State s) {
        for (const MetricIndex i : sets_[c]) {
            if (state_[i] == State::Open) assign(i, s);
        }
    }

    void assign_open_outside(std::size_t c, State s) {
        for (const MetricIndex i : sets_[c]) mark_[i] = true;
        for (MetricIndex i = 0; i < n_; ++i) {
            if (!mark_[i] && state_[i] == State::Open) assign(i, s);
        }
        for (const MetricIndex i : sets_[c]) mark_[i] = false;
    }

    // Picks still needed outside S_c to respect its upper bound.
    [[nodiscard]] std::int64_t outside_deficit(std::size_t c) const {
        if (!has_upper_[c]) return 0;
        return (k_ - hi_[c]) - (in_total_ - in_count_[c]);
    }

    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            const std::int64_t remaining = k_ - in_total_;
            if (remaining < 0 || remaining > open_total_) return false;
            if (open_total_ > 0 && (remaining == 0 || remaining == open_total_)) {
                const State s = remaining == 0 ? State::Out : State::In;
                for (MetricIndex i = 0; i < n_; ++i) {
                    if (state_[i] == State::Open) assign(i, s);
                }
                changed = true;
                continue;
            }
            for (std::size_t c = 0; c < sets_.size() && !changed; ++c) {
                const std::int64_t in = in_count_[c];
                const std::int64_t open = open_count_[c];
                if (in > hi_[c] || in + open < lo_[c]) return false;
                const std::int64_t deficit = lo_[c] - in;
                const std::int64_t open_outside = open_total_ - open;
                const std::int64_t out_deficit = outside_deficit(c);
                if (deficit > remaining || out_deficit > remaining || out_deficit > open_outside) return false;

                if (open > 0 && in + open == lo_[c]) {
                    assign_open_in(c, State::In);
                    changed = true;
                } else if (open > 0 && in == hi_[c]) {
                    assign_open_in(c, State::Out);
                    changed = true;
                } else if (deficit > 0 && deficit == remaining && open_outside > 0) {
                    assign_open_outside(c, State::Out);
                    changed = true;
                } else if (out_deficit > 0 && out_deficit == remaining && open > 0) {
                    assign_open_in(c, State::Out);
                    changed = true;
                } else if (out_deficit > 0 && out_deficit == open_outside) {
                    assign_open_outside(c, State::In);
                    changed = true;
                }
            }
        }
        return true;
    }

    // Covering bound plus branching choice. Returns false when the remaining
    // picks cannot close all deficits; otherwise sets `branch`.
    bool choose(MetricIndex& branch) {
        const std::int64_t remaining = k_ - in_total_;
        std::fill(gain_.begin(), gain_.end(), 0);
        std::fill(comp_hits_.begin(), comp_hits_.end(), 0);
        std::int64_t total_deficit = 0;
        std::int64_t comp_deficient = 0;
        std::optional<std::size_t> tight;
        bool tight_outside = false;
        std::int64_t tight_slack = 0;

        for (std::size_t c = 0; c < sets_.size(); ++c) {
            const std::int64_t deficit = lo_[c] - in_count_[c];
            if (deficit > 0) {
                total_deficit += deficit;
                for (const MetricIndex i : sets_[c]) gain_[i] += 1;
                const std::int64_t slack = open_count_[c] - deficit;
                if (!tight || slack < tight_slack) {
                    tight = c;
                    tight_slack = slack;
                    tight_outside = false;
                }
            }
            const std::int64_t out_deficit = outside_deficit(c);
            if (out_deficit > 0) {
                total_deficit += out_deficit;
                ++comp_deficient;
                for (const MetricIndex i : sets_[c]) comp_hits_[i] += 1;
                const std::int64_t slack = (open_total_ - open_count_[c]) - out_deficit;
                if (!tight || slack < tight_slack) {
                    tight = c;
                    tight_slack = slack;
                    tight_outside = true;
                }
            }
        }

        open_gains_.clear();
        for (MetricIndex i = 0; i < n_; ++i) {
            if (state_[i] != State::Open) continue;
            gain_[i] += comp_deficient - comp_hits_[i];
            open_gains_.push_back(gain_[i]);
        }
        if (total_deficit > 0) {
            const auto take = static_cast<std::size_t>(std::min<std::int64_t>(remaining, std::ssize(open_gains_)));
            std::partial_sort(open_gains_.begin(), open_gains_.begin() + static_cast<std::ptrdiff_t>(take),
                              open_gains_.end(), std::greater<>());
            std::int64_t best_sum = 0;
            for (std::size_t t = 0; t < take; ++t) best_sum += open_gains_[t];
            if (best_sum < total_deficit) return false;
        }

        std::optional<MetricIndex> best;
        auto consider = [&](MetricIndex i) {
            if (state_[i] == State::Open && (!best || gain_[i] > gain_[*best] ||
                                             (gain_[i] == gain_[*best] && i < *best))) {
                best = i;
            }
        };
        if (tight && !tight_outside) {
            for (const MetricIndex i : sets_[*tight]) consider(i);
        } else if (tight) {
            for (const MetricIndex i : sets_[*tight]) mark_[i] = true;
            for (MetricIndex i = 0; i < n_; ++i) {
                if (!mark_[i]) consider(i);
            }
            for (const MetricIndex i : sets_[*tight]) mark_[i] = false;
        } else {
            for (MetricIndex i = 0; i < n_; ++i) consider(i);
        }
        if (!best) return false;
        branch = *best;
        return true;
    }

    Outcome dfs() {
        ++nodes_;
        if (deadline_ && (nodes_ & 255U) == 0 && Clock::now() >= *deadline_) return Outcome::TimedOut;

        const std::size_t entry = trail_.size();
        if (!propagate()) {
            undo(entry);
            return Outcome::Exhausted;
        }
        if (open_total_ == 0) {
            solution_.clear();
            for (MetricIndex i = 0; i < n_; ++i) {
                if (state_[i] == State::In) solution_.push_back(i);
            }
            return Outcome::Found;
        }
        MetricIndex branch = 0;
        if (!choose(branch)) {
            undo(entry);
            return Outcome::Exhausted;
        }

        const std::size_t before = trail_.size();
        assign(branch, State::In);
        if (const Outcome o = dfs(); o != Outcome::Exhausted) return o;
        undo(before);

        // Any solution using an open twin of `branch` maps onto one using
        // `branch` itself, which the include branch already covered.
        for (const MetricIndex twin : twins_[branch]) {
            if (state_[twin] == State::Open) assign(twin, State::Out);
        }
        if (const Outcome o = dfs(); o != Outcome::Exhausted) return o;
        undo(entry);
        return Outcome::Exhausted;
    }

    std::size_t n_;
    std::int64_t k_;
    std::vector<std::vector<MetricIndex>> sets_;
    std::vector<std::int64_t> lo_;
    std::vector<std::int64_t> hi_;
    std::vector<bool> has_upper_;
    std::optional<Clock::time_point> deadline_;
    std::uint64_t& nodes_;

    std::vector<std::vector<std::size_t>> member_of_;
    std::vector<std::vector<MetricIndex>> twins_;
    std::vector<State> state_;
    std::vector<std::int64_t> in_count_;
    std::vector<std::int64_t> open_count_;
    std::int64_t in_total_ = 0;
    std::int64_t open_total_ = 0;
    std::vector<MetricIndex> trail_;
    MetricSet solution_;

    std::vector<bool> mark_;
    std::vector<std::int64_t> gain_;
    std::vector<std::int64_t> comp_hits_;
    std::vector<std::int64_t> open_gains_;
};

void add_distinct(std::map<std::vector<MetricIndex>, bool>& seen, Problem& p, std::vector<MetricIndex> set) {
    if (set.size() == p.n || set.empty()) return;
    if (seen.emplace(set, true).second) p.sets.push_back(std::move(set));
}

Problem representation_problem(const PreferenceProfile& profile, std::size_t g) {
    Problem p;
    p.n = profile.num_metrics();
    p.g = g;
    p.min_size = p.n / g;
    const std::size_t m = profile.num_alternatives();
    std::map<std::vector<MetricIndex>, bool> seen;
    for (AltIndex a = 0; a < m; ++a) {
        // S_{r,a} grows with r, so (a, r) is implied by (a, r') for r' < r
        // whenever the requirement did not increase in between.
        std::size_t previous = 0;
        for (Position r = 1; r <= m; ++r) {
            std::vector<MetricIndex> set;
            for (MetricIndex i = 0; i < p.n; ++i) {
                if (profile.rank(i, a) <= r) set.push_back(i);
            }
            const std::size_t required = set.size() / g;
            if (required > previous) add_distinct(seen, p, std::move(set));
            previous = required;
        }
    }
    return p;
}

Problem proportionality_problem(const PreferenceProfile& profile, const Rational& eps) {
    Problem p;
    p.n = profile.num_metrics();
    p.proportional = true;
    p.eps = eps;
    p.min_size = 1;
    const std::size_t m = profile.num_alternatives();
    std::map<std::vector<MetricIndex>, bool> seen;
    for (AltIndex a = 0; a < m; ++a) {
        for (Position r = 1; r <= m; ++r) {
            std::vector<MetricIndex> set;
            for (MetricIndex i = 0; i < p.n; ++i) {
                if (profile.rank(i, a) <= r) set.push_back(i);
            }
            add_distinct(seen, p, std::move(set));
        }
    }
    return p;
}

Problem group_problem(const GroupCollection& groups, const PropertySpec& spec) {
    Problem p;
    p.n = groups.universe_size();
    p.proportional = spec.kind == PropertyKind::GeneralProportionality;
    p.g = spec.g;
    p.eps = spec.eps;
    p.min_size = p.proportional ? 1 : 0;
    std::map<std::vector<MetricIndex>, bool> seen;
    for (const auto& group : groups.groups()) {
        if (!p.proportional) {
            const std::size_t required = group.members.size() / p.g;
            if (required == 0) continue;
            p.min_size = std::max(p.min_size, required);
        }
        add_distinct(seen, p, group.members);
    }
    return p;
}

void check_spec(const PropertySpec& spec, std::size_t n) {
    if (spec.uses_group_size()) {
        if (spec.g < 1 || spec.g > n) {
            throw Error(ErrorKind::InvalidArgument,
                        "group size g=" + std::to_string(spec.g) + " outside [1, " + std::to_string(n) + "]");
        }
    } else if (spec.eps.is_negative()) {
        throw Error(ErrorKind::InvalidArgument, "eps must be >= 0");
    }
}

SolveResult run(const Problem& p, const PropertySpec& spec, const SolveOptions& options,
                const std::function<Certificate(const MetricSet&)>& verify,
                const std::function<std::optional<MetricSet>(const MetricSet&)>& fallback) {
    const auto start = Clock::now();
    check_spec(spec, p.n);
    if (options.time_limit && options.time_limit->count() <= 0) {
        throw Error(ErrorKind::InvalidArgument, "time limit must be positive");
    }
    const MetricSet must = make_metric_set(options.must_include, p.n);
    std::optional<Clock::time_point> deadline;
    if (options.time_limit) deadline = start + *options.time_limit;

    SolveResult result;
    result.spec = spec;
    const std::size_t upper = std::min(p.n, options.size_cap.value_or(p.n));
    std::size_t k = std::max(p.min_size, must.size());
    result.lower_bound = k;

    auto accept = [&](MetricSet members, SolveStatus status) {
        Certificate cert = verify(members);
        if (!cert.ok) throw std::logic_error("exact solver returned a subset that fails verification");
        result.members = std::move(members);
        result.certificate = std::move(cert);
        result.status = status;
    };

    for (; k <= upper; ++k) {
        std::vector<std::vector<MetricIndex>> sets;
        std::vector<std::int64_t> lo;
        std::vector<std::int64_t> hi;
        bool impossible = false;
        for (const auto& set : p.sets) {
            const auto [low, high] = window(p, set.size(), k);
            if (low > high) {
                impossible = true;
                break;
            }
            if (low <= 0 && high >= static_cast<std::int64_t>(std::min(set.size(), k))) continue;
            sets.push_back(set);
            lo.push_back(low);
            hi.push_back(high);
        }
        if (!impossible) {
            FixedSizeSearch search(p.n, k, std::move(sets), std::move(lo), std::move(hi), deadline, result.nodes);
            MetricSet found;
            const Outcome outcome = search.solve(must, found);
            if (outcome == Outcome::Found) {
                accept(std::move(found), SolveStatus::Optimal);
                break;
            }
            if (outcome == Outcome::TimedOut) {
                result.status = SolveStatus::TimedOut;
                if (auto incumbent = fallback(must); incumbent && incumbent->size() <= upper) {
                    accept(std::move(*incumbent), SolveStatus::TimedOut);
                }
                break;
            }
        }
        result.lower_bound = k + 1;
    }
    if (k > upper) {
        if (!options.size_cap) throw std::logic_error("exact solver exhausted every size without a cap");
        result.status = SolveStatus::Infeasible;
    }
    result.wall_time = Clock::now() - start;
    return result;
}

}  // namespace

SolveResult exact_min_pr(const PreferenceProfile& profile, std::size_t g, const SolveOptions& options) {
    const auto spec = PropertySpec::representation(g);
    check_spec(spec, profile.num_metrics());
    return run(
        representation_problem(profile, g), spec, options,
        [&](const MetricSet& k) { return check_pr(profile, k, g); },
        [&](const MetricSet& must) -> std::optional<MetricSet> {
            return greedy_cover(color_profile(profile, g), profile.num_metrics(), must);
        });
}

SolveResult exact_min_pp(const PreferenceProfile& profile, const Rational& eps, const SolveOptions& options) {
    const auto spec = PropertySpec::proportionality(eps);
    check_spec(spec, profile.num_metrics());
    return run(
        proportionality_problem(profile, eps), spec, options,
        [&](const MetricSet& k) { return check_pp(profile, k, eps); },
        [&](const MetricSet&) -> std::optional<MetricSet> { return profile.all_metrics(); });
}

SolveResult exact_min_groups(const GroupCollection& groups, const PropertySpec& spec, const SolveOptions& options) {
    if (!spec.uses_groups()) {
        throw Error(ErrorKind::InvalidArgument, std::string("property '") + spec.name() + "' is not a group property");
    }
    check_spec(spec, groups.universe_size());
    const std::size_t n = groups.universe_size();
    return run(
        group_problem(groups, spec), spec, options,
        [&](const MetricSet& k) { return check(nullptr, &groups, k, spec); },
        [&](const MetricSet& must) -> std::optional<MetricSet> {
            if (spec.kind == PropertyKind::GeneralRepresentation) {
                return greedy_cover(color_groups(groups, spec.g), n, must);
            }
            MetricSet all(n);
            for (MetricIndex i = 0; i < n; ++i) all[i] = i;
            return all;
        });
}

namespace {

SolveOptions with_existing(SolveOptions options, std::span<const MetricIndex> existing) {
    options.must_include.insert(options.must_include.end(), existing.begin(), existing.end());
    std::sort(options.must_include.begin(), options.must_include.end());
    options.must_include.erase(std::unique(options.must_include.begin(), options.must_include.end()),
                               options.must_include.end());
    return options;
}

}  // namespace

SolveResult augment(const PreferenceProfile& profile, std::span<const MetricIndex> existing,
                    const PropertySpec& spec, SolveOptions options) {
    options = with_existing(std::move(options), existing);
    switch (spec.kind) {
        case PropertyKind::Representation: return exact_min_pr(profile, spec.g, options);
        case PropertyKind::Proportionality: return exact_min_pp(profile, spec.eps, options);
        default: return exact_min_groups(groups_from_profile(profile), spec, options);
    }
}

SolveResult augment(const GroupCollection& groups, std::span<const MetricIndex> existing, const PropertySpec& spec,
                    SolveOptions options) {
    return exact_min_groups(groups, spec, with_existing(std::move(options), existing));
}

}  // namespace rankrep
