#include "rankrep/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rankrep/random.hpp"

namespace rankrep {

namespace {

void check_inputs(const Rational& eps, std::size_t max_attempts) {
    if (eps <= Rational(0)) throw Error(ErrorKind::InvalidArgument, "sampling needs eps > 0");
    if (max_attempts < 1) throw Error(ErrorKind::InvalidArgument, "max_attempts must be >= 1");
}

std::size_t capped_ceil(double value, std::size_t n) {
    const double k = std::ceil(value);
    if (k >= static_cast<double>(n)) return n;
    return static_cast<std::size_t>(k);
}

template <typename Verify>
Selection sample_until(std::size_t n, std::size_t k, std::uint64_t seed, std::size_t max_attempts, Verify verify) {
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        MetricSet members = draw_sample(n, k, seed, attempt);
        Certificate cert = verify(members);
        if (!cert.ok) continue;
        Selection sel;
        sel.method = "sample";
        sel.spec = cert.spec;
        sel.members = std::move(members);
        sel.status = SolveStatus::Feasible;
        sel.certificate = std::move(cert);
        sel.seed = seed;
        sel.attempts = attempt + 1;
        return sel;
    }
    throw SamplingExhausted(max_attempts);
}

}  // namespace

std::size_t pp_sample_size(std::size_t n, std::size_t m, const Rational& eps) {
    const double e = eps.to_double();
    return capped_ceil(std::log(2.0 * static_cast<double>(m)) / (e * e), n);
}

std::size_t gen_prop_sample_size(std::size_t n, std::size_t num_groups, const Rational& eps) {
    const double e = eps.to_double();
    const double groups = static_cast<double>(std::max<std::size_t>(num_groups, 1));
    return capped_ceil(std::log(4.0 * groups) / (2.0 * e * e), n);
}

MetricSet draw_sample(std::size_t n, std::size_t k, std::uint64_t seed, std::size_t attempt) {
    if (k > n) throw Error(ErrorKind::InvalidArgument, "sample larger than population");
    Rng rng(mix_seed(seed, attempt));
    std::vector<MetricIndex> pool(n);
    std::iota(pool.begin(), pool.end(), MetricIndex{0});
    // Partial Fisher-Yates: the first k slots become the sample.
    for (std::size_t t = 0; t < k; ++t) {
        const auto j = t + static_cast<std::size_t>(rng.below(n - t));
        std::swap(pool[t], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

Selection sample_pp(const PreferenceProfile& profile, const Rational& eps, std::uint64_t seed,
                    std::size_t max_attempts) {
    check_inputs(eps, max_attempts);
    const std::size_t n = profile.num_metrics();
    const std::size_t k = pp_sample_size(n, profile.num_alternatives(), eps);
    return sample_until(n, k, seed, max_attempts, [&](const MetricSet& s) { return check_pp(profile, s, eps); });
}

Selection sample_gen_prop(const GroupCollection& groups, const Rational& eps, std::uint64_t seed,
                          std::size_t max_attempts) {
    check_inputs(eps, max_attempts);
    const std::size_t n = groups.universe_size();
    const std::size_t k = gen_prop_sample_size(n, groups.size(), eps);
    return sample_until(n, k, seed, max_attempts, [&](const MetricSet& s) { return check_gen_prop(groups, s, eps); });
}

}  // namespace rankrep
