#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace wcauchy::cli {

struct RunConfig {
    std::string weight = "const";
    std::string map = "identity";
    std::string series;                 // inline JSON or path
    std::optional<int> random_degree;   // seeded random series instead of --series
    bool pullback = false;              // --series holds g on G rather than h1
    std::vector<std::string> zeta;
    int kmax = -1;                      // -1: per-command default
    std::vector<std::string> n_list;
    std::optional<double> radius;
    int window = -1;
    std::string shape = "linear";
    std::string boundary;               // pair: Laurent coefficients c_{-1}, c_{-2}, ...
    std::optional<double> tol;
    std::uint64_t seed = 1;
};

Report run_moments(const RunConfig& cfg);
Report run_transform(const RunConfig& cfg);
Report run_isometry(const RunConfig& cfg);
Report run_approx(const RunConfig& cfg);
Report run_check_weight(const RunConfig& cfg);
Report run_dirichlet(const RunConfig& cfg);
Report run_pair(const RunConfig& cfg);

}  // namespace wcauchy::cli
