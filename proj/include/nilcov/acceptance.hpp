#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nilcov {

struct CriterionResult {
    std::string id;
    bool pass = false;
    std::string detail;
    std::int64_t elapsed_ms = 0;
};

struct AcceptanceOptions {
    bool extended = false;      // include the long-running extended target
    bool extended_only = false; // run just the extended target
    std::function<void(const CriterionResult&)> on_result;
};

// Runs the full verification suite; one result per criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace nilcov
