#pragma once

// The acceptance grid, shared by the acceptance test binary and
// `fisherpoly selftest`.

#include <optional>
#include <string>
#include <vector>

#include "fisherpoly/orthopoly.hpp"

namespace fisherpoly {

struct AcceptanceOptions
{
    bool quick = false;                  // n <= 4 only
    std::optional<double> tol_override;  // replaces every tolerance when set
    unsigned threads = 0;                // 0: hardware concurrency
};

struct CriterionResult
{
    int id = 0;
    std::string name;
    bool passed = false;
    long checks = 0;
    long failures = 0;
    double worst = 0.0;     // largest error seen, in the criterion's own measure
    double seconds = 0.0;
    std::string note;       // extra information, e.g. timing limits
    std::vector<std::string> failure_details;  // first few only
};

struct GridCase
{
    Family family;
    ParamTarget target;
    Params params;
};

/// Every (family, target) pair over its parameter grid.
std::vector<GridCase> acceptance_grid();

/// Reads FISHERPOLY_TOL_OVERRIDE. Throws std::invalid_argument when it is
/// set but not a positive real.
std::optional<double> tol_override_from_env();

inline constexpr int kCriterionCount = 9;

CriterionResult run_criterion(int id, const AcceptanceOptions& opts);

/// "AC3 PASS ..." line, followed by indented failure details.
std::string format_result(const CriterionResult& r);

}  // namespace fisherpoly
