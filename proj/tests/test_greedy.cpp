#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "rankrep/error.hpp"
#include "rankrep/exact.hpp"
#include "rankrep/generators.hpp"
#include "rankrep/greedy.hpp"

using namespace rankrep;

TEST_SUITE("greedy") {

TEST_CASE("table 2 coloring") {
    const auto p = gen_table2();
    const auto coloring = color_profile(p, 2);
    // floor(4/2) blocks for each of the 6 alternatives.
    CHECK(coloring.color_count() == 12);
    std::map<std::string, std::set<MetricSet>> pairs;
    std::set<MetricSet> distinct;
    for (const auto& color : coloring.colors) {
        REQUIRE(color.alternative.has_value());
        CHECK(color.members.size() == 2);
        pairs[p.alt_names()[*color.alternative]].insert(color.members);
        distinct.insert(color.members);
    }
    CHECK(distinct.size() == 6);
    CHECK(pairs["x"].count(MetricSet{0, 1}) == 1);
    CHECK(pairs["w"].count(MetricSet{2, 3}) == 1);
    CHECK(pairs["y"].count(MetricSet{0, 2}) == 1);
    CHECK(pairs["z"].count(MetricSet{1, 3}) == 1);
    CHECK(pairs["u"].count(MetricSet{0, 3}) == 1);
    CHECK(pairs["v"].count(MetricSet{1, 2}) == 1);
}

TEST_CASE("coloring invariants") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t n = 3 + seed % 8;
        const std::size_t m = 2 + seed % 5;
        const auto p = gen_random(n, m, seed);
        for (std::size_t g = 1; g <= n; ++g) {
            const auto coloring = color_profile(p, g);
            CHECK(coloring.color_count() == m * (n / g));
            std::vector<std::size_t> per_alt(m, 0);
            for (const auto& color : coloring.colors) {
                CHECK(color.members.size() == g);
                ++per_alt[*color.alternative];
                CHECK(color.block == per_alt[*color.alternative]);
                for (const auto i : color.members) {
                    const auto r = p.rank(i, *color.alternative);
                    CHECK(r >= color.first_position);
                    CHECK(r <= color.last_position);
                }
            }
            for (const auto c : per_alt) CHECK(c == n / g);
        }
    }
}

TEST_CASE("coloring edge cases") {
    const auto p = gen_random(5, 4, 8);
    const auto full = color_profile(p, 5);
    CHECK(full.color_count() == 4);
    for (const auto& color : full.colors) CHECK(color.members == p.all_metrics());
    const auto odd = color_profile(p, 2);
    CHECK(odd.color_count() == 8);
    CHECK_THROWS_AS(color_profile(p, 0), Error);
    CHECK_THROWS_AS(color_profile(p, 6), Error);
}

TEST_CASE("any cover of all colors satisfies representation") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const auto p = gen_random(8, 5, seed + 40);
        for (std::size_t g = 2; g <= 4; ++g) {
            const auto coloring = color_profile(p, g);
            for (std::uint32_t mask = 1; mask < 256; mask += 7) {
                const auto k = oracle::from_mask(mask, 8);
                bool covers = true;
                for (const auto& color : coloring.colors) {
                    covers = covers && oracle::overlap(color.members, k) > 0;
                }
                if (covers) CHECK(oracle::pr_holds(p, k, g));
            }
        }
    }
}

TEST_CASE("greedy selection on table 2") {
    const auto p = gen_table2();
    const auto sel = greedy_select(p, 2);
    CHECK(sel.members.size() == 3);
    CHECK(sel.certificate.ok);
    CHECK(oracle::pr_holds(p, sel.members, 2));
    CHECK(sel.method == "greedy");
    CHECK(greedy_select(p, 4).members.size() == 1);
}

TEST_CASE("greedy guarantees on random profiles") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto p = gen_random(10, 8, seed);
        const auto sel = greedy_select(p, 3);
        CHECK(oracle::pr_holds(p, sel.members, 3));
        CHECK(sel.members.size() <= greedy_size_bound(10, 3, 8));
        CHECK(sel.members.size() >= 10 / 3);
    }
}

TEST_CASE("greedy is deterministic and honours existing members") {
    const auto p = gen_random(12, 7, 5);
    CHECK(greedy_select(p, 3).members == greedy_select(p, 3).members);
    const MetricSet existing{11};
    const auto sel = greedy_select(p, 3, existing);
    CHECK(std::find(sel.members.begin(), sel.members.end(), 11) != sel.members.end());
    CHECK(sel.method == "greedy-augment");
    CHECK(sel.certificate.ok);
}

TEST_CASE("generalized greedy") {
    const GroupCollection whole(4, {Group{"all", {0, 1, 2, 3}}});
    CHECK(generalized_greedy(whole, 4).members.size() == 1);

    const GroupCollection disjoint(6, {Group{"a", {0, 1}}, Group{"b", {2, 3}}, Group{"c", {4, 5}}});
    const auto sel = generalized_greedy(disjoint, 2);
    CHECK(sel.members.size() == 3);
    for (const auto& g : disjoint.groups()) CHECK(oracle::overlap(g.members, sel.members) == 1);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto p = gen_random(9, 5, seed + 500);
        const auto groups = groups_from_profile(p);
        for (std::size_t g = 2; g <= 4; ++g) {
            const auto k = generalized_greedy(groups, g).members;
            CHECK(oracle::pr_holds(p, k, g));
            CHECK(k.size() <= greedy_size_bound(9, g, std::max<std::size_t>(groups.size(), 2)));
        }
    }
}

TEST_CASE("group coloring restarts the block scan for every group") {
    // Two groups of size 3 with g=2: each yields one full block, leftovers never merge.
    const GroupCollection groups(6, {Group{"a", {0, 1, 2}}, Group{"b", {3, 4, 5}}});
    const auto coloring = color_groups(groups, 2);
    REQUIRE(coloring.color_count() == 2);
    CHECK(coloring.colors[0].members == MetricSet{0, 1});
    CHECK(coloring.colors[1].members == MetricSet{3, 4});
}

}
