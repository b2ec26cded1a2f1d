#include "rankrep/profile.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <ostream>
#include <set>

#include "csv.hpp"
#include "rankrep/error.hpp"

namespace rankrep {

namespace {

void check_names(const std::vector<std::string>& names, const char* what) {
    if (names.empty()) throw Error(ErrorKind::InvalidArgument, std::string("no ") + what);
    std::set<std::string_view> seen;
    for (const auto& name : names) {
        if (name.empty()) throw Error(ErrorKind::InvalidArgument, std::string("empty ") + what + " name");
        if (!seen.insert(name).second) {
            throw Error(ErrorKind::InvalidArgument, std::string("duplicate ") + what + " name '" + name + "'");
        }
    }
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::string where(const csv::Row& row, std::size_t field) {
    return "line " + std::to_string(row.line) + ", column " + std::to_string(row.columns[field]);
}

// Reads the "metric,<alt1>,...,<altm>" header.
std::vector<std::string> read_header(std::istream& in, std::size_t& line) {
    csv::Row row;
    if (!csv::read_row(in, line, row)) throw Error(ErrorKind::EmptyTable, "missing header row");
    if (row.fields.size() < 2) {
        throw Error(ErrorKind::ParseError, where(row, 0) + ": header needs 'metric' and at least one alternative");
    }
    if (trim(row.fields[0]) != "metric") {
        throw Error(ErrorKind::ParseError, where(row, 0) + ": header must start with 'metric'");
    }
    std::vector<std::string> alts;
    for (std::size_t f = 1; f < row.fields.size(); ++f) alts.push_back(trim(row.fields[f]));
    return alts;
}

}  // namespace

PreferenceProfile::PreferenceProfile(std::vector<std::string> metric_names, std::vector<std::string> alt_names,
                                     const std::vector<std::vector<Position>>& rankings) {
    check_names(metric_names, "metric");
    check_names(alt_names, "alternative");
    n_ = metric_names.size();
    m_ = alt_names.size();
    if (rankings.size() != n_) {
        throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(n_) + " rankings, got " +
                                                    std::to_string(rankings.size()));
    }
    rank_of_.assign(n_ * m_, 0);
    alt_at_.assign(n_ * m_, 0);
    for (MetricIndex i = 0; i < n_; ++i) {
        const auto& row = rankings[i];
        if (row.size() != m_) {
            throw Error(ErrorKind::NotAPermutation, "metric '" + metric_names[i] + "' ranks " +
                                                        std::to_string(row.size()) + " alternatives, expected " +
                                                        std::to_string(m_));
        }
        std::vector<bool> used(m_, false);
        for (AltIndex a = 0; a < m_; ++a) {
            const Position r = row[a];
            if (r < 1 || r > m_ || used[r - 1]) {
                throw Error(ErrorKind::NotAPermutation,
                            "metric '" + metric_names[i] + "' is not a permutation of 1.." + std::to_string(m_));
            }
            used[r - 1] = true;
            rank_of_[i * m_ + a] = r;
            alt_at_[i * m_ + (r - 1)] = a;
        }
    }
    metric_names_ = std::move(metric_names);
    alt_names_ = std::move(alt_names);
}

PreferenceProfile PreferenceProfile::from_orders(std::vector<std::string> metric_names,
                                                 std::vector<std::string> alt_names,
                                                 const std::vector<std::vector<AltIndex>>& orders) {
    const std::size_t m = alt_names.size();
    std::vector<std::vector<Position>> rankings;
    rankings.reserve(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        const auto& order = orders[i];
        // Out-of-range or repeated alternatives leave a 0 or a gap, which the
        // main constructor reports as NotAPermutation.
        std::vector<Position> row(m, 0);
        if (order.size() == m) {
            for (std::size_t r = 0; r < m; ++r) {
                if (order[r] < m && row[order[r]] == 0) row[order[r]] = r + 1;
            }
        } else {
            row.resize(order.size());
        }
        rankings.push_back(std::move(row));
    }
    return PreferenceProfile(std::move(metric_names), std::move(alt_names), rankings);
}

std::optional<MetricIndex> PreferenceProfile::find_metric(std::string_view name) const {
    const auto it = std::find(metric_names_.begin(), metric_names_.end(), name);
    if (it == metric_names_.end()) return std::nullopt;
    return static_cast<MetricIndex>(it - metric_names_.begin());
}

std::optional<AltIndex> PreferenceProfile::find_alternative(std::string_view name) const {
    const auto it = std::find(alt_names_.begin(), alt_names_.end(), name);
    if (it == alt_names_.end()) return std::nullopt;
    return static_cast<AltIndex>(it - alt_names_.begin());
}

MetricSet PreferenceProfile::all_metrics() const {
    MetricSet all(n_);
    std::iota(all.begin(), all.end(), MetricIndex{0});
    return all;
}

PreferenceProfile build_profile(const ScoreTable& table, TiePolicy ties, MissingPolicy missing) {
    const std::size_t n = table.metric_names.size();
    const std::size_t m = table.alt_names.size();
    if (n == 0 || m == 0) throw Error(ErrorKind::EmptyTable, "score table has no metrics or no alternatives");
    if (table.scores.size() != n) throw Error(ErrorKind::InvalidArgument, "score rows do not match metric names");

    std::vector<std::vector<AltIndex>> orders;
    orders.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = table.scores[i];
        if (row.size() != m) {
            throw Error(ErrorKind::InvalidArgument,
                        "metric '" + table.metric_names[i] + "' does not score every alternative");
        }
        std::vector<AltIndex> present;
        std::vector<AltIndex> absent;
        for (AltIndex a = 0; a < m; ++a) (row[a] ? present : absent).push_back(a);
        if (!absent.empty() && missing == MissingPolicy::Reject) {
            throw Error(ErrorKind::MissingScore, "metric '" + table.metric_names[i] + "' has no score for '" +
                                                     table.alt_names[absent.front()] + "'");
        }

        const bool higher = table.orientation == Orientation::HigherIsBetter;
        // present is already in ascending index order, so a stable sort breaks
        // ties by alternative id.
        std::stable_sort(present.begin(), present.end(), [&](AltIndex x, AltIndex y) {
            return higher ? *row[x] > *row[y] : *row[x] < *row[y];
        });
        if (ties == TiePolicy::Reject) {
            for (std::size_t k = 1; k < present.size(); ++k) {
                if (*row[present[k - 1]] == *row[present[k]]) {
                    throw Error(ErrorKind::RejectedTie, "metric '" + table.metric_names[i] + "' ties '" +
                                                            table.alt_names[present[k - 1]] + "' and '" +
                                                            table.alt_names[present[k]] + "'");
                }
            }
            if (absent.size() > 1) {
                throw Error(ErrorKind::RejectedTie, "metric '" + table.metric_names[i] +
                                                        "' has several missing scores tied for last");
            }
        }
        present.insert(present.end(), absent.begin(), absent.end());
        orders.push_back(std::move(present));
    }
    return PreferenceProfile::from_orders(table.metric_names, table.alt_names, orders);
}

PreferenceProfile parse_profile_csv(std::istream& in) {
    std::size_t line = 0;
    auto alts = read_header(in, line);
    const std::size_t m = alts.size();

    std::vector<std::string> metrics;
    std::vector<std::vector<Position>> rankings;
    csv::Row row;
    while (csv::read_row(in, line, row)) {
        if (row.fields.size() != m + 1) {
            throw Error(ErrorKind::ParseError, where(row, 0) + ": expected " + std::to_string(m + 1) +
                                                   " fields, got " + std::to_string(row.fields.size()));
        }
        metrics.push_back(trim(row.fields[0]));
        std::vector<Position> ranks(m);
        std::vector<bool> used(m, false);
        for (std::size_t a = 0; a < m; ++a) {
            const std::string cell = trim(row.fields[a + 1]);
            Position value = 0;
            const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
            if (ec != std::errc{} || ptr != cell.data() + cell.size() || cell.empty()) {
                throw Error(ErrorKind::ParseError, where(row, a + 1) + ": '" + cell + "' is not a position");
            }
            if (value < 1 || value > m || used[value - 1]) {
                throw Error(ErrorKind::NotAPermutation, where(row, a + 1) + ": metric '" + metrics.back() +
                                                            "' is not a permutation of 1.." + std::to_string(m));
            }
            used[value - 1] = true;
            ranks[a] = value;
        }
        rankings.push_back(std::move(ranks));
    }
    if (metrics.empty()) throw Error(ErrorKind::EmptyTable, "profile has no metric rows");
    return PreferenceProfile(std::move(metrics), std::move(alts), rankings);
}

void write_profile_csv(const PreferenceProfile& profile, std::ostream& out) {
    out << "metric";
    for (const auto& name : profile.alt_names()) out << ',' << csv::quote(name);
    out << '\n';
    for (MetricIndex i = 0; i < profile.num_metrics(); ++i) {
        out << csv::quote(profile.metric_names()[i]);
        for (AltIndex a = 0; a < profile.num_alternatives(); ++a) out << ',' << profile.rank(i, a);
        out << '\n';
    }
}

PreferenceProfile read_profile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
    try {
        return parse_profile_csv(in);
    } catch (const Error& e) {
        throw Error(e.kind(), path.string() + ": " + e.detail());
    }
}

void write_profile(const PreferenceProfile& profile, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path.string() + "'");
    write_profile_csv(profile, out);
}

ScoreTable parse_score_csv(std::istream& in, Orientation orientation) {
    std::size_t line = 0;
    ScoreTable table;
    table.orientation = orientation;
    table.alt_names = read_header(in, line);
    const std::size_t m = table.alt_names.size();
    csv::Row row;
    while (csv::read_row(in, line, row)) {
        if (row.fields.size() != m + 1) {
            throw Error(ErrorKind::ParseError, where(row, 0) + ": expected " + std::to_string(m + 1) +
                                                   " fields, got " + std::to_string(row.fields.size()));
        }
        table.metric_names.push_back(trim(row.fields[0]));
        std::vector<std::optional<Rational>> scores(m);
        for (std::size_t a = 0; a < m; ++a) {
            const std::string cell = trim(row.fields[a + 1]);
            if (cell.empty()) continue;
            try {
                scores[a] = Rational::parse(cell);
            } catch (const std::exception&) {
                throw Error(ErrorKind::ParseError, where(row, a + 1) + ": '" + cell + "' is not a decimal score");
            }
        }
        table.scores.push_back(std::move(scores));
    }
    if (table.metric_names.empty()) throw Error(ErrorKind::EmptyTable, "score table has no metric rows");
    check_names(table.metric_names, "metric");
    check_names(table.alt_names, "alternative");
    return table;
}

ScoreTable read_score_table(const std::filesystem::path& path, Orientation orientation) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
    try {
        return parse_score_csv(in, orientation);
    } catch (const Error& e) {
        throw Error(e.kind(), path.string() + ": " + e.detail());
    }
}

MetricSet make_metric_set(std::vector<MetricIndex> members, std::size_t universe) {
    std::sort(members.begin(), members.end());
    for (std::size_t k = 0; k < members.size(); ++k) {
        if (members[k] >= universe) {
            throw Error(ErrorKind::IndexOutOfRange, "metric index " + std::to_string(members[k]) +
                                                        " outside universe of " + std::to_string(universe));
        }
        if (k > 0 && members[k] == members[k - 1]) {
            throw Error(ErrorKind::InvalidArgument, "metric index " + std::to_string(members[k]) + " repeated");
        }
    }
    return members;
}

}  // namespace rankrep
