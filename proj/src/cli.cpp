#include "rankrep/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rankrep/error.hpp"
#include "rankrep/exact.hpp"
#include "rankrep/generators.hpp"
#include "rankrep/greedy.hpp"
#include "rankrep/report.hpp"
#include "rankrep/sampling.hpp"

namespace rankrep::cli {

namespace {

using nlohmann::json;

// Bad flags or flag combinations detected after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep)) parts.push_back(trim(part));
    return parts;
}

Rational parse_rational_flag(const std::string& text, const char* flag) {
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError(std::string(flag) + ": '" + text + "' is not a rational (use p/q or a decimal)");
    }
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    return in;
}

struct Output {
    std::string file;
    std::string dir;

    void add_to(CLI::App& cmd) {
        cmd.add_option("-o,--out", file, "Output file (default: stdout)");
        cmd.add_option("--out-dir", dir, "Directory receiving the command's default artifact name");
    }

    void emit(const std::string& default_name, const std::string& content, std::ostream& out) const {
        std::filesystem::path target;
        if (!file.empty()) {
            target = file;
        } else if (!dir.empty()) {
            std::filesystem::create_directories(dir);
            target = std::filesystem::path(dir) / default_name;
        } else {
            out << content;
            return;
        }
        if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
        std::ofstream f(target, std::ios::binary);
        if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + target.string() + "'");
        f << content;
    }
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string format_bound(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", value);
    return buffer;
}

std::chrono::milliseconds time_limit_from(double seconds) {
    if (!(seconds > 0)) throw UsageError("--time-limit must be positive");
    return std::chrono::milliseconds(static_cast<std::int64_t>(std::ceil(seconds * 1000.0)));
}

double default_time_limit_seconds() {
    if (const char* env = std::getenv(kTimeLimitEnv); env != nullptr && *env != '\0') {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            throw UsageError(std::string(kTimeLimitEnv) + " is not a number");
        }
    }
    return std::chrono::duration<double>(kDefaultTimeLimit).count();
}

// Flags shared by select, check and curve for naming the property.
struct PropertyFlags {
    std::string property;
    std::optional<std::size_t> g;
    std::string eps;
    std::string groups_path;

    void add_to(CLI::App& cmd, bool groups_allowed) {
        const std::vector<std::string> kinds = groups_allowed
                                                   ? std::vector<std::string>{"pr", "pp", "gen-rep", "gen-prop"}
                                                   : std::vector<std::string>{"pr", "pp"};
        cmd.add_option("--property", property, "Property to satisfy")->required()->check(CLI::IsMember(kinds));
        cmd.add_option("--g", g, "Group size for pr / gen-rep");
        cmd.add_option("--eps", eps, "Tolerance for pp / gen-prop, as p/q or decimal");
        if (groups_allowed) cmd.add_option("--groups", groups_path, "Group file for gen-rep / gen-prop");
    }

    [[nodiscard]] PropertySpec spec() const {
        PropertySpec spec;
        if (property == "pr" || property == "gen-rep") {
            if (!g) throw UsageError("--property " + property + " needs --g");
            spec = property == "pr" ? PropertySpec::representation(*g) : PropertySpec::general_representation(*g);
        } else {
            if (eps.empty()) throw UsageError("--property " + property + " needs --eps");
            const Rational e = parse_rational_flag(eps, "--eps");
            spec = property == "pp" ? PropertySpec::proportionality(e) : PropertySpec::general_proportionality(e);
        }
        if (spec.uses_groups() && groups_path.empty()) throw UsageError("--property " + property + " needs --groups");
        return spec;
    }

    [[nodiscard]] std::optional<GroupCollection> groups(const PreferenceProfile& profile) const {
        if (groups_path.empty() || !(property == "gen-rep" || property == "gen-prop")) return std::nullopt;
        auto in = open_input(groups_path);
        return parse_groups(in, profile);
    }
};

json spec_inputs(const PropertySpec& spec) {
    return json{{"property", spec.name()}, {"parameter", spec.parameter()}};
}

// ---------------------------------------------------------------- rank

struct RankCommand {
    std::string scores;
    std::string orientation;
    std::string ties = "by-id";
    std::string missing = "reject";
    Output output;

    void add_to(CLI::App& app) {
        auto* cmd = app.add_subcommand("rank", "Convert a score CSV into a rank-matrix CSV");
        cmd->add_option("scores", scores, "Score CSV")->required();
        cmd->add_option("--orientation", orientation, "Which scores are better")
            ->required()
            ->check(CLI::IsMember({"higher", "lower"}));
        cmd->add_option("--ties", ties, "Tie handling")->check(CLI::IsMember({"by-id", "reject"}));
        cmd->add_option("--missing", missing, "Missing score handling")
            ->check(CLI::IsMember({"reject", "tie-for-last"}));
        output.add_to(*cmd);
    }

    int run(std::ostream& out) const {
        const auto table = read_score_table(
            scores, orientation == "higher" ? Orientation::HigherIsBetter : Orientation::LowerIsBetter);
        std::optional<PreferenceProfile> profile;
        try {
            profile = build_profile(table, ties == "by-id" ? TiePolicy::ByAlternativeId : TiePolicy::Reject,
                                    missing == "reject" ? MissingPolicy::Reject : MissingPolicy::TieForLast);
        } catch (const Error& e) {
            throw Error(e.kind(), scores + ": " + e.detail());
        }
        std::ostringstream csv;
        write_profile_csv(*profile, csv);
        output.emit("profile.csv", csv.str(), out);
        return kExitOk;
    }
};

// ---------------------------------------------------------------- select

struct SelectCommand {
    std::string profile_path;
    PropertyFlags property;
    std::string method;
    std::string include_path;
    std::uint64_t seed = 0;
    std::optional<double> time_limit;
    std::optional<std::size_t> size_cap;
    std::size_t max_attempts = kDefaultMaxAttempts;
    std::string coloring_path;
    bool timing = false;
    Output output;

    void add_to(CLI::App& app) {
        auto* cmd = app.add_subcommand("select", "Choose a small subset of metrics satisfying a property");
        cmd->add_option("profile", profile_path, "Rank-matrix CSV")->required();
        property.add_to(*cmd, true);
        cmd->add_option("--method", method, "Selection method")
            ->required()
            ->check(CLI::IsMember({"greedy", "exact", "sample"}));
        cmd->add_option("--include", include_path, "Subset file of metrics that must be kept");
        cmd->add_option("--seed", seed, "Seed for sampling");
        cmd->add_option("--time-limit", time_limit, "Exact solver limit in seconds");
        cmd->add_option("--size-cap", size_cap, "Largest subset the exact solver may return");
        cmd->add_option("--max-attempts", max_attempts, "Sampling attempts before giving up");
        cmd->add_option("--coloring", coloring_path, "Write the greedy coloring as JSON");
        cmd->add_flag("--timing", timing, "Record wall time (reports are then not reproducible byte for byte)");
        output.add_to(*cmd);
    }

    int run(std::ostream& out) const {
        const auto start = std::chrono::steady_clock::now();
        const auto profile = read_profile(profile_path);
        const PropertySpec spec = property.spec();
        const auto groups = property.groups(profile);
        const Names names{&profile, groups ? &*groups : nullptr};

        MetricSet include;
        if (!include_path.empty()) {
            auto in = open_input(include_path);
            include = parse_subset(in, profile);
        }

        RunReport report;
        report.command = "select";
        report.inputs = spec_inputs(spec);
        report.inputs["profile"] = profile_path;
        report.inputs["method"] = method;
        if (!include_path.empty()) report.inputs["include"] = include_path;
        if (!property.groups_path.empty()) report.inputs["groups"] = property.groups_path;

        int code = kExitOk;
        if (method == "greedy") {
            if (!spec.uses_group_size()) {
                throw Error(ErrorKind::IncompatibleMethod, "greedy needs --property pr or gen-rep");
            }
            Selection sel = groups ? generalized_greedy(*groups, spec.g, include)
                                   : greedy_select(profile, spec.g, include);
            report.result = to_json(sel, names);
            if (!coloring_path.empty()) {
                const Coloring coloring = groups ? color_groups(*groups, spec.g) : color_profile(profile, spec.g);
                Output{coloring_path, {}}.emit("coloring.json", dump(to_json(coloring, names)), out);
            }
        } else if (method == "sample") {
            if (spec.uses_group_size()) {
                throw Error(ErrorKind::IncompatibleMethod, "sample needs --property pp or gen-prop");
            }
            if (!include.empty()) throw Error(ErrorKind::IncompatibleMethod, "sample does not support --include");
            report.inputs["seed"] = seed;
            report.inputs["max_attempts"] = max_attempts;
            try {
                Selection sel = groups ? sample_gen_prop(*groups, spec.eps, seed, max_attempts)
                                       : sample_pp(profile, spec.eps, seed, max_attempts);
                report.result = to_json(sel, names);
            } catch (const SamplingExhausted& e) {
                report.result = json{{"method", "sample"},
                                     {"status", "exhausted"},
                                     {"failures", e.failures()},
                                     {"seed", seed}};
                code = kExitVerificationFailed;
            }
        } else {
            SolveOptions options;
            options.time_limit = time_limit_from(time_limit.value_or(default_time_limit_seconds()));
            options.size_cap = size_cap;
            report.inputs["time_limit_seconds"] =
                std::chrono::duration<double>(*options.time_limit).count();
            if (size_cap) report.inputs["size_cap"] = *size_cap;
            const SolveResult result = groups ? augment(*groups, include, spec, options)
                                              : augment(profile, include, spec, options);
            report.result = to_json(result, names, timing);
            report.result["method"] = include.empty() ? "exact" : "exact-augment";
            if (result.status == SolveStatus::Infeasible) {
                code = kExitVerificationFailed;
            } else if (!result.has_answer()) {
                code = kExitTimeout;
            }
        }
        if (timing) {
            report.wall_time_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
        output.emit("selection.json", dump(to_json(report)), out);
        return code;
    }
};

// ---------------------------------------------------------------- check

struct CheckCommand {
    std::string profile_path;
    std::string subset_path;
    PropertyFlags property;
    Output output;

    void add_to(CLI::App& app) {
        auto* cmd = app.add_subcommand("check", "Verify that a subset satisfies a property");
        cmd->add_option("profile", profile_path, "Rank-matrix CSV")->required();
        cmd->add_option("subset", subset_path, "Subset file, one metric name per line")->required();
        property.add_to(*cmd, true);
        output.add_to(*cmd);
    }

    int run(std::ostream& out) const {
        const auto profile = read_profile(profile_path);
        const PropertySpec spec = property.spec();
        const auto groups = property.groups(profile);
        auto in = open_input(subset_path);
        const MetricSet subset = parse_subset(in, profile);

        const Certificate cert = check(&profile, groups ? &*groups : nullptr, subset, spec);
        RunReport report;
        report.command = "check";
        report.inputs = spec_inputs(spec);
        report.inputs["profile"] = profile_path;
        report.inputs["subset"] = subset_path;
        if (!property.groups_path.empty()) report.inputs["groups"] = property.groups_path;
        report.result = to_json(cert, Names{&profile, groups ? &*groups : nullptr});
        report.result["members"] = Names{&profile, nullptr}.metrics(subset);
        output.emit("certificate.json", dump(to_json(report)), out);
        return cert.ok ? kExitOk : kExitVerificationFailed;
    }
};

// ---------------------------------------------------------------- curve

struct CurveCommand {
    std::string profile_path;
    PropertyFlags property;
    std::string params;
    std::string methods;
    std::string include_path;
    std::uint64_t seed = 0;
    std::optional<double> time_limit;
    Output output;

    void add_to(CLI::App& app) {
        auto* cmd = app.add_subcommand("curve", "Subset size per parameter and method");
        cmd->add_option("profile", profile_path, "Rank-matrix CSV")->required();
        property.add_to(*cmd, false);
        cmd->add_option("--params,--param-list", params, "Comma list of g values (ranges a..b allowed) or eps values")
            ->required();
        cmd->add_option("--methods", methods,
                        "Comma list of greedy, exact, exact-augment, sample, existing (default by property)");
        cmd->add_option("--include", include_path, "Existing subset for exact-augment / existing");
        cmd->add_option("--seed", seed, "Seed for sampling");
        cmd->add_option("--time-limit", time_limit, "Exact solver limit per point in seconds");
        output.add_to(*cmd);
    }

    [[nodiscard]] std::vector<Rational> parameters(bool integral) const {
        std::vector<Rational> values;
        for (const auto& token : split(params, ',')) {
            if (token.empty()) continue;
            if (const auto dots = token.find(".."); integral && dots != std::string::npos) {
                const Rational lo = parse_rational_flag(token.substr(0, dots), "--params");
                const Rational hi = parse_rational_flag(token.substr(dots + 2), "--params");
                if (!lo.is_integer() || !hi.is_integer() || hi < lo) throw UsageError("bad range '" + token + "'");
                for (auto v = lo.numerator(); v <= hi.numerator(); ++v) values.emplace_back(v);
            } else {
                values.push_back(parse_rational_flag(token, "--params"));
            }
        }
        if (values.empty()) throw UsageError("--params is empty");
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (const auto& v : values) {
            if (integral && (!v.is_integer() || v < Rational(1))) {
                throw UsageError("group sizes must be positive integers");
            }
            if (!integral && v <= Rational(0)) throw UsageError("eps values must be positive");
        }
        return values;
    }

    int run(std::ostream& out) const {
        const auto profile = read_profile(profile_path);
        const bool representation = property.property == "pr";
        const std::size_t n = profile.num_metrics();
        const std::size_t m = profile.num_alternatives();

        std::vector<std::string> method_list =
            methods.empty() ? (representation ? std::vector<std::string>{"greedy", "exact"}
                                              : std::vector<std::string>{"exact", "sample"})
                            : split(methods, ',');
        if (methods.empty() && !include_path.empty()) {
            method_list.emplace_back("exact-augment");
            method_list.emplace_back("existing");
        }
        for (const auto& method : method_list) {
            const bool known = method == "greedy" || method == "exact" || method == "exact-augment" ||
                               method == "sample" || method == "existing";
            if (!known) throw UsageError("unknown method '" + method + "'");
            if ((method == "greedy" && !representation) || (method == "sample" && representation)) {
                throw Error(ErrorKind::IncompatibleMethod, method + " does not apply to " + property.property);
            }
            if ((method == "exact-augment" || method == "existing") && include_path.empty()) {
                throw UsageError(method + " needs --include");
            }
        }
        MetricSet include;
        if (!include_path.empty()) {
            auto in = open_input(include_path);
            include = parse_subset(in, profile);
        }

        SolveOptions options;
        options.time_limit = time_limit_from(time_limit.value_or(default_time_limit_seconds()));

        std::ostringstream csv;
        csv << "property,parameter,method,size,status,upper_bound,lower_bound\n";
        for (const Rational& value : parameters(representation)) {
            PropertySpec spec;
            std::string upper;
            std::string lower;
            if (representation) {
                const auto g = static_cast<std::size_t>(value.numerator());
                if (g > n) throw UsageError("group size " + value.to_string() + " exceeds n");
                spec = PropertySpec::representation(g);
                const double alpha = static_cast<double>(n) / static_cast<double>(g);
                upper = format_bound(alpha * (1.0 + std::log(static_cast<double>(m))));
                lower = std::to_string(n / g);
            } else {
                spec = PropertySpec::proportionality(value);
                const double e = value.to_double();
                upper = format_bound(std::log(2.0 * static_cast<double>(m)) / (e * e));
                lower = format_bound(std::log(static_cast<double>(m)) / (288.0 * e * e));
            }

            for (const auto& method : method_list) {
                std::string size;
                std::string status;
                if (method == "greedy") {
                    const Selection sel = greedy_select(profile, spec.g);
                    size = std::to_string(sel.members.size());
                    status = to_string(sel.status);
                } else if (method == "exact" || method == "exact-augment") {
                    const MetricSet none;
                    const SolveResult result =
                        augment(profile, method == "exact" ? none : include, spec, options);
                    if (result.has_answer()) size = std::to_string(result.objective());
                    status = to_string(result.status);
                } else if (method == "sample") {
                    try {
                        const Selection sel = sample_pp(profile, spec.eps, seed);
                        size = std::to_string(sel.members.size());
                        status = to_string(sel.status);
                    } catch (const SamplingExhausted&) {
                        status = "exhausted";
                    }
                } else {
                    size = std::to_string(include.size());
                    status = check(&profile, nullptr, include, spec).ok ? "ok" : "violated";
                }
                csv << spec.name() << ',' << value.to_string() << ',' << method << ',' << size << ',' << status
                    << ',' << upper << ',' << lower << '\n';
            }
        }
        output.emit("curve.csv", csv.str(), out);
        return kExitOk;
    }
};

// ---------------------------------------------------------------- generate

struct GenerateCommand {
    std::string kind;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t g = 0;
    std::uint64_t seed = 0;
    std::size_t budget = kDefaultAlternativeBudget;
    Output output;

    void add_to(CLI::App& app) {
        auto* cmd = app.add_subcommand("generate", "Generate a profile");
        cmd->add_option("kind", kind, "table2 | pr-lb | pp-lb | random")
            ->required()
            ->check(CLI::IsMember({"table2", "pr-lb", "pp-lb", "random"}));
        cmd->add_option("--n", n, "Number of metrics");
        cmd->add_option("--m", m, "Number of alternatives");
        cmd->add_option("--g", g, "Group size (pr-lb)");
        cmd->add_option("--seed", seed, "Seed (pp-lb, random)");
        cmd->add_option("--budget", budget, "Largest number of alternatives pr-lb may create");
        output.add_to(*cmd);
    }

    int run(std::ostream& out) const {
        auto need = [&](std::size_t value, const char* flag) {
            if (value == 0) throw UsageError("generate " + kind + " needs " + flag);
        };
        std::optional<PreferenceProfile> profile;
        if (kind == "table2") {
            profile = gen_table2();
        } else if (kind == "pr-lb") {
            need(n, "--n");
            need(g, "--g");
            profile = gen_pr_lower_bound(n, g, budget);
        } else if (kind == "pp-lb") {
            need(n, "--n");
            need(m, "--m");
            if (m % 2 != 0) throw UsageError("generate pp-lb needs an even --m");
            profile = gen_pp_lower_bound(n, m, seed);
        } else {
            need(n, "--n");
            need(m, "--m");
            profile = gen_random(n, m, seed);
        }
        std::ostringstream csv;
        write_profile_csv(*profile, csv);
        output.emit("profile.csv", csv.str(), out);
        return kExitOk;
    }
};

// ---------------------------------------------------------------- score

ScoreVector read_custom_rule(const std::string& path, std::size_t m) {
    auto in = open_input(path);
    std::vector<Rational> raw;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        for (const auto& token : split(line, ',')) {
            if (token.empty()) continue;
            try {
                raw.push_back(Rational::parse(token));
            } catch (const std::exception&) {
                throw Error(ErrorKind::ParseError, path + ": '" + token + "' is not a score");
            }
        }
    }
    if (raw.size() != m) {
        throw Error(ErrorKind::InvalidArgument, path + ": score vector has " + std::to_string(raw.size()) +
                                                    " entries, profile has " + std::to_string(m) + " alternatives");
    }
    return ScoreVector::normalize(raw);
}

struct ScoreCommand {
    std::string profile_path;
    std::string subset_path;
    std::string rule = "borda";
    Output output;

    void add_to(CLI::App& app) {
        auto* cmd = app.add_subcommand("score", "Positional scoring rule averages");
        cmd->add_option("profile", profile_path, "Rank-matrix CSV")->required();
        cmd->add_option("--subset", subset_path, "Subset file to compare against the full profile");
        cmd->add_option("--rule", rule, "borda, plurality, or a file of raw scores per position");
        output.add_to(*cmd);
    }

    int run(std::ostream& out) const {
        const auto profile = read_profile(profile_path);
        const std::size_t m = profile.num_alternatives();
        const ScoreVector s = rule == "borda"       ? ScoreVector::borda(m)
                              : rule == "plurality" ? ScoreVector::plurality(m)
                                                    : read_custom_rule(rule, m);
        const auto full = score_alternatives(profile, profile.all_metrics(), s);
        std::optional<MetricSet> subset;
        std::vector<Rational> partial;
        if (!subset_path.empty()) {
            auto in = open_input(subset_path);
            subset = parse_subset(in, profile);
            partial = score_alternatives(profile, *subset, s);
        }

        json vector = json::array();
        for (const auto& v : s.values()) vector.push_back(v.to_string());
        json alternatives = json::array();
        Rational worst;
        for (AltIndex a = 0; a < m; ++a) {
            json entry{{"alternative", profile.alt_names()[a]},
                       {"full", full[a].to_string()},
                       {"full_value", full[a].to_double()}};
            if (subset) {
                const Rational gap = abs(full[a] - partial[a]);
                worst = std::max(worst, gap);
                entry["subset"] = partial[a].to_string();
                entry["subset_value"] = partial[a].to_double();
                entry["discrepancy"] = gap.to_string();
            }
            alternatives.push_back(std::move(entry));
        }

        RunReport report;
        report.command = "score";
        report.inputs = json{{"profile", profile_path}, {"rule", rule}};
        if (subset) report.inputs["subset"] = subset_path;
        report.result = json{{"score_vector", vector}, {"alternatives", alternatives}};
        if (subset) {
            report.result["members"] = Names{&profile, nullptr}.metrics(*subset);
            report.result["max_discrepancy"] = worst.to_string();
            report.result["max_discrepancy_value"] = worst.to_double();
        }
        output.emit("scores.json", dump(to_json(report)), out);
        return kExitOk;
    }
};

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Exhausted:
        case ErrorKind::NoFeasibleAtCap: return kExitVerificationFailed;
        default: return kExitUsage;
    }
}

}  // namespace

MetricSet parse_subset(std::istream& in, const PreferenceProfile& profile) {
    MetricSet members;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string name = trim(line);
        if (name.empty()) continue;
        const auto index = profile.find_metric(name);
        if (!index) {
            throw Error(ErrorKind::UnknownMetricName,
                        "line " + std::to_string(line_no) + ": no metric named '" + name + "'");
        }
        members.push_back(*index);
    }
    return make_metric_set(std::move(members), profile.num_metrics());
}

GroupCollection parse_groups(std::istream& in, const PreferenceProfile& profile) {
    std::vector<Group> groups;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        const auto comma = text.find(',');
        if (comma == std::string::npos) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected 'label,members'");
        }
        Group group{trim(text.substr(0, comma)), {}};
        const std::string members = trim(text.substr(comma + 1));
        if (groups.empty() && group.label == "group" && members == "metrics") continue;
        for (const auto& name : split(members, ';')) {
            if (name.empty()) continue;
            const auto index = profile.find_metric(name);
            if (!index) {
                throw Error(ErrorKind::UnknownMetricName,
                            "line " + std::to_string(line_no) + ": no metric named '" + name + "'");
            }
            group.members.push_back(*index);
        }
        groups.push_back(std::move(group));
    }
    return GroupCollection(profile.num_metrics(), std::move(groups));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Select small metric subsets that keep positional representation or proportionality"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    RankCommand rank;
    SelectCommand select;
    CheckCommand check_cmd;
    CurveCommand curve;
    GenerateCommand generate;
    ScoreCommand score;
    rank.add_to(app);
    select.add_to(app);
    check_cmd.add_to(app);
    curve.add_to(app);
    generate.add_to(app);
    score.add_to(app);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolName << ' ' << kToolVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        if (name == "rank") return rank.run(out);
        if (name == "select") return select.run(out);
        if (name == "check") return check_cmd.run(out);
        if (name == "curve") return curve.run(out);
        if (name == "generate") return generate.run(out);
        return score.run(out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace rankrep::cli
