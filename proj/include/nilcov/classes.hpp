#pragma once

#include "nilcov/group.hpp"
#include "nilcov/nilgraph.hpp"

#include <memory>
#include <vector>

namespace nilcov {

// Per-conjugacy-class analysis of non-nilpotent sets.
struct ClassReport {
    std::uint32_t rep = 0;          // least member
    std::uint64_t size = 0;
    std::uint64_t omega_lo = 0, omega_hi = 0; // omega_inf of the class
    bool exact = false;
    bool non_nilpotent_class = false; // the whole class is a non-nilpotent set
};

// Exact MIS on the subgraph of Gamma_inf induced on the class (exact up to
// exact_cap vertices, bounds beyond or on timeout).
ClassReport class_omega(const PairClassTable& table, const std::vector<std::uint32_t>& klass,
                        std::int64_t timeout_ms = -1, std::uint32_t exact_cap = 2000);

struct RatioCheck {
    bool simple = false;
    bool conjecture_holds = false;  // max omega_inf(C)/|C| <= 1/2
    bool all_exact = false;
    std::uint32_t witness_rep = 0;  // class attaining the max ratio
    std::uint64_t witness_omega = 0, witness_size = 0;
    std::vector<ClassReport> reports;
};

// Maximum of omega_inf(C)/|C| over nontrivial classes; requires a simple
// group unless allow_nonsimple is set.
RatioCheck ratio_conjecture_check(const PairClassTable& table, bool allow_nonsimple = false,
                                  std::int64_t timeout_ms = -1);

// Classes of order-t elements no two of whose members share a Sylow
// t-subgroup. Empty for simple groups (Z_p^* theorem consequence).
std::vector<std::vector<std::uint32_t>> isolated_classes(const FiniteGroup& g, std::uint32_t t);

} // namespace nilcov
