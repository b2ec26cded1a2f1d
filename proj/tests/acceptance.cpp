// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "oracles.hpp"
#include "rankrep/cli.hpp"
#include "rankrep/exact.hpp"
#include "rankrep/generators.hpp"
#include "rankrep/greedy.hpp"
#include "rankrep/random.hpp"
#include "rankrep/sampling.hpp"

using namespace rankrep;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void expect(bool condition, const std::string& what) {
        if (!condition && ok) note = what;
        ok = ok && condition;
    }
};

// PP-verified subsets collected by criteria 2 and 5 for the scoring check.
struct ProportionalCase {
    const PreferenceProfile* profile;
    MetricSet members;
    Rational eps;
};

std::vector<PreferenceProfile> small_profiles;
std::vector<ProportionalCase> proportional_cases;
PreferenceProfile pp_lower_bound = gen_pp_lower_bound(200, 16, 2024);

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome table2_minimum() {
    Outcome out;
    const auto start = Clock::now();
    const auto p = gen_table2();
    const auto result = exact_min_pr(p, 2);
    out.expect(result.status == SolveStatus::Optimal && result.objective() == 3, "objective is not 3");
    for (MetricIndex i = 0; i < 4; ++i) {
        for (MetricIndex j = i + 1; j < 4; ++j) {
            out.expect(!check_pr(p, MetricSet{i, j}, 2).ok, "a 2-subset passed");
            out.expect(!oracle::pr_holds(p, MetricSet{i, j}, 2), "oracle accepted a 2-subset");
        }
    }
    const double t = seconds_since(start);
    out.expect(t < 1.0, "took " + std::to_string(t) + " s");
    out.note = out.ok ? "objective 3, all 6 pairs rejected, " + std::to_string(t) + " s" : out.note;
    return out;
}

Outcome oracle_equivalence() {
    Outcome out;
    const auto start = Clock::now();
    Rng rng(20240601);
    int solves = 0;
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 4 + rng.below(7);
        const std::size_t m = 2 + rng.below(5);
        small_profiles.push_back(gen_random(n, m, mix_seed(77, static_cast<std::uint64_t>(t))));
    }
    for (const auto& p : small_profiles) {
        const std::size_t n = p.num_metrics();
        for (std::size_t g : {2, 3}) {
            const auto result = exact_min_pr(p, g);
            const auto brute = oracle::brute_min(n, [&](const MetricSet& k) { return oracle::pr_holds(p, k, g); });
            out.expect(result.status == SolveStatus::Optimal && brute && result.objective() == brute->size(),
                       "pr mismatch");
            ++solves;
        }
        for (const auto& eps : {Rational(1, 4), Rational(1, 3)}) {
            const auto result = exact_min_pp(p, eps);
            const auto brute = oracle::brute_min(n, [&](const MetricSet& k) { return oracle::pp_holds(p, k, eps); });
            out.expect(result.status == SolveStatus::Optimal && brute && result.objective() == brute->size(),
                       "pp mismatch");
            out.expect(oracle::pp_holds(p, result.members, eps), "pp answer rejected by oracle");
            proportional_cases.push_back({&p, result.members, eps});
            ++solves;
        }
    }
    const double t = seconds_since(start);
    out.expect(t < 120.0, "took " + std::to_string(t) + " s");
    if (out.ok) out.note = std::to_string(solves) + " solves equal exhaustive minimum, " + std::to_string(t) + " s";
    return out;
}

Outcome greedy_guarantee() {
    Outcome out;
    const auto start = Clock::now();
    Rng rng(99);
    std::size_t worst_gap = 0;
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 8 + rng.below(33);
        const std::size_t m = 2 + rng.below(29);
        const std::size_t g = std::min<std::size_t>(2 + rng.below(7), n);
        const auto p = gen_random(n, m, mix_seed(5150, static_cast<std::uint64_t>(t)));
        const auto sel = greedy_select(p, g);
        out.expect(check_pr(p, sel.members, g).ok && oracle::pr_holds(p, sel.members, g), "greedy output rejected");
        const double alpha = static_cast<double>(n) / static_cast<double>(g);
        const auto bound = static_cast<std::size_t>(std::ceil(alpha * (1.0 + std::log(static_cast<double>(m))))) + 1;
        out.expect(sel.members.size() <= bound, "greedy size above bound");
        const auto exact = exact_min_pr(p, g);
        out.expect(exact.status == SolveStatus::Optimal, "exact solve did not finish");
        out.expect(exact.objective() >= n / g, "exact below floor(n/g)");
        out.expect(exact.objective() <= sel.members.size(), "exact above greedy");
        worst_gap = std::max(worst_gap, sel.members.size() - exact.objective());
    }
    const double t = seconds_since(start);
    out.expect(t < 60.0, "took " + std::to_string(t) + " s");
    if (out.ok) {
        out.note = "100 instances, largest greedy-exact gap " + std::to_string(worst_gap) + ", " + std::to_string(t) +
                   " s";
    }
    return out;
}

Outcome lower_bound_construction() {
    Outcome out;
    const auto start = Clock::now();
    const auto p = gen_pr_lower_bound(6, 2);
    const auto result = exact_min_pr(p, 2);
    out.expect(p.num_alternatives() == 30, "m is not 30");
    out.expect(result.status == SolveStatus::Optimal, "solve did not finish");
    out.expect(result.objective() >= 5, "objective below n-g+1");
    const double t = seconds_since(start);
    out.expect(t < 30.0, "took " + std::to_string(t) + " s");
    if (out.ok) out.note = "objective " + std::to_string(result.objective()) + ", " + std::to_string(t) + " s";
    return out;
}

Outcome sampling_success() {
    Outcome out;
    const auto start = Clock::now();
    const Rational eps(1, 5);
    const auto& p = pp_lower_bound;
    const auto k = pp_sample_size(200, 16, eps);
    int successes = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto members = draw_sample(200, k, seed, 0);
        if (check_pp(p, members, eps).ok) {
            out.expect(oracle::pp_holds(p, members, eps), "checker and oracle disagree");
            ++successes;
            proportional_cases.push_back({&p, std::move(members), eps});
        }
    }
    const double rate = successes / 200.0;
    out.expect(rate >= 0.35, "success rate " + std::to_string(rate));
    const double t = seconds_since(start);
    out.expect(t < 60.0, "took " + std::to_string(t) + " s");
    if (out.ok) out.note = "k=" + std::to_string(k) + ", rate " + std::to_string(rate) + ", " + std::to_string(t) + " s";
    return out;
}

std::vector<ScoreVector> random_vectors(std::size_t m, Rng& rng) {
    std::vector<ScoreVector> out;
    while (out.size() < 50) {
        std::vector<Rational> raw(m);
        std::int64_t level = 0;
        for (std::size_t r = m; r-- > 0;) {
            level += static_cast<std::int64_t>(rng.below(10));
            raw[r] = Rational(level);
        }
        if (raw.front() == raw.back()) continue;
        out.push_back(ScoreVector::normalize(raw));
    }
    return out;
}

Outcome scoring_approximation() {
    Outcome out;
    Rng rng(4242);
    std::map<std::size_t, std::vector<ScoreVector>> vectors;
    std::size_t checks = 0;
    for (const auto& c : proportional_cases) {
        const std::size_t m = c.profile->num_alternatives();
        if (!vectors.count(m)) {
            auto list = random_vectors(m, rng);
            list.push_back(ScoreVector::borda(m));
            list.push_back(ScoreVector::plurality(m));
            vectors[m] = std::move(list);
        }
        const auto all = c.profile->all_metrics();
        for (const auto& s : vectors[m]) {
            const auto full = score_alternatives(*c.profile, all, s);
            const auto part = score_alternatives(*c.profile, c.members, s);
            out.expect(full == score_alternatives_cumulative(*c.profile, all, s), "forms differ on N");
            out.expect(part == score_alternatives_cumulative(*c.profile, c.members, s), "forms differ on K");
            for (AltIndex a = 0; a < m; ++a) {
                out.expect(part[a] == oracle::average_score(*c.profile, c.members, s.values(), a),
                           "score differs from the direct average");
                out.expect(abs(full[a] - part[a]) <= c.eps, "discrepancy above eps");
            }
            ++checks;
        }
    }
    out.expect(!proportional_cases.empty(), "no proportional subsets collected");
    if (out.ok) {
        out.note = std::to_string(proportional_cases.size()) + " subsets x 52 rules, " + std::to_string(checks) +
                   " comparisons";
    }
    return out;
}

Outcome generalized_equivalence() {
    Outcome out;
    for (std::uint64_t t = 0; t < 20; ++t) {
        const auto p = gen_random(5 + t % 5, 3 + t % 4, mix_seed(31337, t));
        const auto groups = groups_from_profile(p);
        const std::size_t n = p.num_metrics();
        Rng rng(t);
        for (int s = 0; s < 5; ++s) {
            MetricSet k;
            for (MetricIndex i = 0; i < n; ++i) {
                if (rng.coin()) k.push_back(i);
            }
            if (k.empty()) k.push_back(rng.below(n));
            for (std::size_t g = 1; g <= n; ++g) {
                out.expect(check_gen_rep(groups, k, g).ok == check_pr(p, k, g).ok, "rep verdicts differ");
            }
            for (const auto& eps : {Rational(0), Rational(1, 5), Rational(1, 3), Rational(1, 2)}) {
                out.expect(check_gen_prop(groups, k, eps).ok == check_pp(p, k, eps).ok, "prop verdicts differ");
            }
        }
        for (std::size_t g : {2, 3}) {
            out.expect(exact_min_groups(groups, PropertySpec::general_representation(g)).objective() ==
                           exact_min_pr(p, g).objective(),
                       "rep optima differ");
            const auto general = generalized_greedy(groups, g).members;
            const auto positional = greedy_select(p, g).members;
            out.expect(check_pr(p, general, g).ok, "group greedy fails positional check");
            out.expect(check_gen_rep(groups, positional, g).ok, "positional greedy fails group check");
        }
        for (const auto& eps : {Rational(1, 4), Rational(1, 3)}) {
            out.expect(exact_min_groups(groups, PropertySpec::general_proportionality(eps)).objective() ==
                           exact_min_pp(p, eps).objective(),
                       "prop optima differ");
        }
    }
    if (out.ok) out.note = "20 profiles: verdicts, optima and greedy covers agree";
    return out;
}

struct TempDir {
    fs::path path = fs::temp_directory_path() / ("rankrep_acceptance_" + std::to_string(::getpid()));
    TempDir() { fs::create_directories(path); }
    ~TempDir() { fs::remove_all(path); }
    [[nodiscard]] std::string file(const std::string& name) const { return (path / name).string(); }
};

std::pair<int, std::string> run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str() + err.str()};
}

struct CurveRow {
    std::string parameter;
    std::string method;
    std::optional<std::size_t> size;
};

std::vector<CurveRow> parse_curve(const std::string& csv) {
    std::vector<CurveRow> rows;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream fields(line);
        std::string cell;
        while (std::getline(fields, cell, ',')) cells.push_back(cell);
        CurveRow row{cells.at(1), cells.at(2), std::nullopt};
        if (!cells.at(3).empty()) row.size = std::stoul(cells.at(3));
        rows.push_back(row);
    }
    return rows;
}

Outcome check_curve(const std::vector<CurveRow>& rows, bool with_greedy, std::size_t points) {
    Outcome out;
    std::map<std::string, std::vector<std::size_t>> by_method;
    for (const auto& row : rows) {
        out.expect(row.size.has_value(), "missing size at " + row.parameter + " " + row.method);
        by_method[row.method].push_back(row.size.value_or(0));
    }
    const auto& exact = by_method["exact"];
    out.expect(exact.size() == points, "wrong number of exact points");
    for (std::size_t i = 1; i < exact.size(); ++i) out.expect(exact[i] <= exact[i - 1], "exact sizes increase");
    for (std::size_t i = 0; i < exact.size(); ++i) {
        out.expect(by_method["exact-augment"].at(i) >= exact[i], "augment below exact");
        if (with_greedy) out.expect(by_method["greedy"].at(i) >= exact[i], "greedy below exact");
    }
    return out;
}

Outcome curve_methodology() {
    Outcome out;
    const auto start = Clock::now();
    TempDir dir;
    const auto profile = dir.file("profile.csv");
    write_profile(gen_random(30, 20, 7), profile);
    std::ofstream(dir.file("existing.txt")) << "m1\nm2\nm3\n";

    const auto pr = run_cli({"curve", profile, "--property", "pr", "--params", "2..10", "--methods",
                             "greedy,exact,exact-augment", "--include", dir.file("existing.txt")});
    out.expect(pr.first == cli::kExitOk, "pr curve failed: " + pr.second);
    const auto pr_check = check_curve(parse_curve(pr.second), true, 9);
    out.expect(pr_check.ok, "pr: " + pr_check.note);

    const auto pp = run_cli({"curve", profile, "--property", "pp", "--params",
                             "1/10,1/9,1/8,1/7,1/6,1/5,1/4,3/10,1/3,2/5,1/2", "--methods", "exact,exact-augment",
                             "--include", dir.file("existing.txt")});
    out.expect(pp.first == cli::kExitOk, "pp curve failed: " + pp.second);
    const auto pp_check = check_curve(parse_curve(pp.second), false, 11);
    out.expect(pp_check.ok, "pp: " + pp_check.note);

    if (out.ok) {
        std::string pr_sizes;
        for (const auto& row : parse_curve(pr.second)) {
            if (row.method == "exact") pr_sizes += (pr_sizes.empty() ? "" : " ") + std::to_string(*row.size);
        }
        out.note = "pr exact sizes " + pr_sizes + ", " + std::to_string(seconds_since(start)) + " s";
    }
    return out;
}

Outcome determinism() {
    Outcome out;
    TempDir dir;
    const auto profile = dir.file("profile.csv");
    write_profile(gen_random(14, 8, 3), profile);
    const auto scores = std::string(RANKREP_FIXTURES) + "/scores_missing.csv";
    std::ofstream(dir.file("k.txt")) << "m2\nm5\nm9\n";
    std::ofstream(dir.file("groups.csv")) << "left,m1;m2;m3;m4\nright,m5;m6;m7\n";

    const std::vector<std::vector<std::string>> commands = {
        {"rank", scores, "--orientation", "lower", "--missing", "tie-for-last"},
        {"generate", "random", "--n", "9", "--m", "4", "--seed", "11"},
        {"generate", "pp-lb", "--n", "9", "--m", "4", "--seed", "11"},
        {"generate", "pr-lb", "--n", "6", "--g", "2"},
        {"select", profile, "--property", "pr", "--g", "3", "--method", "greedy"},
        {"select", profile, "--property", "pr", "--g", "3", "--method", "exact", "--include", dir.file("k.txt")},
        {"select", profile, "--property", "pp", "--eps", "1/3", "--method", "exact"},
        {"select", profile, "--property", "pp", "--eps", "0.3", "--method", "sample", "--seed", "19"},
        {"select", profile, "--property", "gen-prop", "--eps", "1/4", "--groups", dir.file("groups.csv"),
         "--method", "sample", "--seed", "2"},
        {"check", profile, dir.file("k.txt"), "--property", "pp", "--eps", "1/5"},
        {"curve", profile, "--property", "pp", "--params", "1/4,1/2", "--seed", "8"},
        {"curve", profile, "--property", "pr", "--params", "2..5"},
        {"score", profile, "--subset", dir.file("k.txt"), "--rule", "borda"},
    };
    for (const auto& args : commands) {
        const auto first = run_cli(args);
        const auto second = run_cli(args);
        out.expect(!first.second.empty(), "empty output for " + args[0]);
        out.expect(first == second, "rerun differs for " + args[0] + " " + args[1]);
    }
    // Artifacts written to an output directory must match too.
    const std::vector<std::string> to_dir = {"select", profile, "--property", "pp", "--eps", "1/4", "--method",
                                             "sample", "--seed", "5", "--out-dir"};
    auto a = to_dir;
    a.push_back(dir.file("run1"));
    auto b = to_dir;
    b.push_back(dir.file("run2"));
    run_cli(a);
    run_cli(b);
    auto slurp = [](const std::string& path) {
        std::ifstream in(path);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    };
    const auto left = slurp(dir.file("run1/selection.json"));
    out.expect(!left.empty() && left == slurp(dir.file("run2/selection.json")), "artifact files differ");
    if (out.ok) out.note = std::to_string(commands.size() + 1) + " commands byte-identical on rerun";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 table-2 minimum", table2_minimum},
        {"2 oracle equivalence", oracle_equivalence},
        {"3 greedy guarantee", greedy_guarantee},
        {"4 lower-bound construction", lower_bound_construction},
        {"5 sampling success", sampling_success},
        {"6 scoring approximation", scoring_approximation},
        {"7 generalized equivalence", generalized_equivalence},
        {"8 curve methodology", curve_methodology},
        {"9 determinism", determinism},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome outcome;
        try {
            outcome = run();
        } catch (const std::exception& e) {
            outcome.ok = false;
            outcome.note = std::string("exception: ") + e.what();
        }
        failures += outcome.ok ? 0 : 1;
        std::cout << (outcome.ok ? "PASS" : "FAIL") << "  criterion " << name << "  (" << outcome.note << ")"
                  << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
