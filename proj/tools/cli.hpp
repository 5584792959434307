#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace persym::cli {

/// Fully resolved options of one invocation; echoed verbatim in every report.
struct RunConfig {
    std::string subcommand;
    int n = 0;
    int k = 0;
    int k_min = 0;
    int k_max = 0;
    int i = -1;
    int q = 0;
    int workers = 1;
    std::uint64_t seed = 1;
    std::uint64_t samples = 0;
    std::string cache_dir;
    std::string format = "json";
    bool allow_huge = false;
    bool allow_below_validity = false;
    std::string family;
    std::vector<std::string> checks;
    std::string method;
};

/// Exit codes: 0 success / all checks passed, 1 a check failed, 2 usage or domain
/// error, 3 cache corruption.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace persym::cli
