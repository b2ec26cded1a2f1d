#include <doctest.h>

#include "rankrep/exact.hpp"
#include "rankrep/generators.hpp"
#include "rankrep/report.hpp"

using namespace rankrep;
using nlohmann::json;

TEST_SUITE("report") {

TEST_CASE("run reports round trip through json") {
    const auto p = gen_table2();
    const auto result = exact_min_pr(p, 2);
    RunReport report;
    report.command = "select";
    report.inputs = json{{"profile", "table2.csv"}, {"property", "pr"}, {"parameter", "2"}, {"seed", 7}};
    report.result = to_json(result, Names{&p, nullptr});
    const auto text = to_json(report).dump(2);
    CHECK(run_report_from_json(json::parse(text)) == report);

    report.wall_time_seconds = 0.25;
    CHECK(run_report_from_json(json::parse(to_json(report).dump())) == report);
}

TEST_CASE("names fall back to indices") {
    const Names none;
    CHECK(none.metric(3) == 3);
    CHECK(none.metrics(MetricSet{1, 2}) == json::array({1, 2}));
    const auto p = gen_table2();
    CHECK(Names{&p, nullptr}.metric(0) == "b1");
    CHECK(Names{&p, nullptr}.alternative(3) == "x");
}

TEST_CASE("certificate json lists every violation") {
    const auto p = gen_table2();
    const auto cert = check_pr(p, MetricSet{0, 1}, 2);
    const auto j = to_json(cert, Names{&p, nullptr});
    CHECK(j["verdict"] == "violated");
    CHECK(j["violations"].size() == cert.violations.size());
    CHECK(j["property"] == "pr");
    CHECK(j["parameter"] == "2");
}

}
