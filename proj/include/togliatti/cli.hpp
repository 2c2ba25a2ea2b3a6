#pragma once

// Command-line front end. run_cli takes the arguments after the program
// name and returns the process exit code:
//   0 ok, 1 internal error, 2 input error, 3 budget refusal,
//   4 unknown target, 5 a reproduction target failed.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "togliatti/monomial.hpp"

namespace togliatti {

inline constexpr std::string_view kToolVersion = "0.3.0";

enum class Check { wlp, togliatti, smoothness, stability };

struct AnalyzeOptions {
  std::vector<Check> checks{Check::wlp, Check::togliatti, Check::smoothness, Check::stability};
  bool timing = false;
};

/// "all" or a comma-separated subset of wlp,togliatti,smoothness,stability.
std::vector<Check> parse_checks(std::string_view text);

/// The AnalysisReport. as_given is the input ideal in the order supplied.
nlohmann::json analysis_report(const MonomialIdeal& as_given, const AnalyzeOptions& options);

/// Reads TOGLIATTI_CACHE_DIR; empty when unset.
std::string cache_dir_from_env();

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::string& cache_dir = cache_dir_from_env());

}  // namespace togliatti
