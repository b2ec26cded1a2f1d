#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and returns the process exit code; everything it prints goes to out/err.
//
//   rank      score CSV -> rank-matrix CSV
//   select    choose K with greedy, exact or sampling; emits a RunReport
//   check     verify a subset file; emits a certificate RunReport
//   curve     subset size per parameter and method, CSV
//   generate  table2 | pr-lb | pp-lb | random profiles
//   score     positional scoring rule averages for N and optionally K

#include <iosfwd>
#include <string>
#include <vector>

#include "rankrep/profile.hpp"
#include "rankrep/properties.hpp"

namespace rankrep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTimeout = 3;

// Environment variable holding the default solver time limit in seconds.
inline constexpr const char* kTimeLimitEnv = "RANKREP_TIME_LIMIT";

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Subset file: one metric name per line; '#' starts a comment. Throws
// Error(UnknownMetricName) for names not in the profile.
MetricSet parse_subset(std::istream& in, const PreferenceProfile& profile);

// Group file: CSV rows "label,name1;name2;..." with an optional
// "group,metrics" header and '#' comment lines.
GroupCollection parse_groups(std::istream& in, const PreferenceProfile& profile);

}  // namespace rankrep::cli
