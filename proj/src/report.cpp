#include "rankrep/report.hpp"

namespace rankrep {

using nlohmann::json;

json Names::metric(MetricIndex i) const {
    if (profile != nullptr && i < profile->num_metrics()) return profile->metric_names()[i];
    return i;
}

json Names::metrics(const MetricSet& set) const {
    json out = json::array();
    for (const MetricIndex i : set) out.push_back(metric(i));
    return out;
}

json Names::alternative(AltIndex a) const {
    if (profile != nullptr && a < profile->num_alternatives()) return profile->alt_names()[a];
    return a;
}

json Names::group(std::size_t k) const {
    if (groups != nullptr && k < groups->size()) return (*groups)[k].label;
    return k;
}

json to_json(const Certificate& cert, const Names& names) {
    json violations = json::array();
    for (const auto& v : cert.violations) {
        json entry;
        if (v.alternative) {
            entry["alternative"] = names.alternative(*v.alternative);
            entry["position"] = v.position;
        }
        if (v.group) entry["group"] = names.group(*v.group);
        entry["bound"] = v.bound == Bound::Lower ? "lower" : "upper";
        entry["required"] = v.required.to_string();
        entry["achieved"] = v.achieved.to_string();
        violations.push_back(std::move(entry));
    }
    json out;
    out["property"] = cert.spec.name();
    out["parameter"] = cert.spec.parameter();
    out["verdict"] = cert.ok ? "ok" : "violated";
    out["constraints"] = cert.constraints;
    out["min_slack"] = cert.min_slack ? json(cert.min_slack->to_string()) : json(nullptr);
    out["violations"] = std::move(violations);
    return out;
}

json to_json(const Selection& selection, const Names& names) {
    json out;
    out["method"] = selection.method;
    out["property"] = selection.spec.name();
    out["parameter"] = selection.spec.parameter();
    out["status"] = to_string(selection.status);
    out["size"] = selection.members.size();
    out["members"] = names.metrics(selection.members);
    if (selection.seed) out["seed"] = *selection.seed;
    if (selection.attempts) out["attempts"] = *selection.attempts;
    out["certificate"] = to_json(selection.certificate, names);
    return out;
}

json to_json(const SolveResult& result, const Names& names, bool include_timing) {
    json out;
    out["property"] = result.spec.name();
    out["parameter"] = result.spec.parameter();
    out["status"] = to_string(result.status);
    out["objective"] = result.has_answer() ? json(result.objective()) : json(nullptr);
    out["members"] = names.metrics(result.members);
    out["lower_bound"] = result.lower_bound;
    out["nodes"] = result.nodes;
    if (include_timing) out["wall_time_seconds"] = std::chrono::duration<double>(result.wall_time).count();
    out["certificate"] = result.certificate ? to_json(*result.certificate, names) : json(nullptr);
    return out;
}

json to_json(const Coloring& coloring, const Names& names) {
    json colors = json::array();
    for (std::size_t c = 0; c < coloring.colors.size(); ++c) {
        const auto& color = coloring.colors[c];
        json entry;
        entry["color"] = c;
        if (color.alternative) {
            entry["alternative"] = names.alternative(*color.alternative);
            entry["positions"] = {color.first_position, color.last_position};
        }
        if (color.group) entry["group"] = names.group(*color.group);
        entry["block"] = color.block;
        entry["metrics"] = names.metrics(color.members);
        colors.push_back(std::move(entry));
    }
    return json{{"g", coloring.g}, {"color_count", coloring.color_count()}, {"colors", std::move(colors)}};
}

json to_json(const RunReport& report) {
    json out;
    out["tool"] = report.tool;
    out["version"] = report.version;
    out["command"] = report.command;
    out["inputs"] = report.inputs;
    out["result"] = report.result;
    if (report.wall_time_seconds) out["wall_time_seconds"] = *report.wall_time_seconds;
    return out;
}

RunReport run_report_from_json(const json& j) {
    RunReport report;
    report.tool = j.at("tool").get<std::string>();
    report.version = j.at("version").get<std::string>();
    report.command = j.at("command").get<std::string>();
    report.inputs = j.at("inputs");
    report.result = j.at("result");
    if (j.contains("wall_time_seconds")) report.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    return report;
}

}  // namespace rankrep
