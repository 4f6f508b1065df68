#pragma once

#include "nilcov/group.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nilcov {

// Families with exact omega_c regimes.
enum class TheoremFamily { PGL2, SL2, SU3, PGU3, Sz, Ree };

TheoremFamily theorem_family_from_string(const std::string& s);
const char* theorem_family_name(TheoremFamily f);

// Exact omega_c value for an in-regime (family, q, c). Regimes are encoded
// per family including every small-q special case, so lookup never
// extrapolates. SL2 with even q routes to PGL2; PGU3 with q not congruent to
// -1 mod 3 routes to the SU3 delta=1 case. Throws std::domain_error outside
// all regimes.
std::uint64_t omega_formula(TheoremFamily f, std::uint32_t q, ClassBound c);

// Root system data for the classical families plus the two twisted rank-1
// types handled here. The A-series |Phi| is stored as r(r+1) (rank indexing),
// which is what the torus counts require for A1.
struct RootSystemRow {
    std::string label; // "A1", "B2", ...
    char series;
    std::uint32_t rank;
    std::uint64_t phi_size;
    std::uint64_t weyl_order;
    std::string isometry;
    std::uint32_t alpha;
};
const std::vector<RootSystemRow>& root_system_table();

// Number of F-stable maximal tori, level^{|Phi|}. For the twisted types
// ("2B2", "2G2") pass the squared-q convention value; the level is its square
// root, so the exponent halves.
std::uint64_t steinberg_count(const std::string& type, std::uint64_t q);

// Least primitive prime divisor of x^n - 1, or nullopt exactly in the
// Zsigmondy exceptions (x, n) = (2, 6) and n = 2 with x = 2^b - 1.
std::optional<std::uint64_t> zsigmondy(std::uint64_t x, std::uint32_t n);

// Existence test only; cheap even when the primitive part is astronomically
// large (no factorization involved).
bool zsigmondy_exists(std::uint64_t x, std::uint32_t n);

// All primitive prime divisors of x^n - 1, ascending.
std::vector<std::uint64_t> primitive_prime_divisors(std::uint64_t x, std::uint32_t n);

// A primitive prime divisor r of q^n - 1 with r > a*n, where q = p^a;
// nullopt when no such prime exists.
std::optional<std::uint64_t> fermat_ppd(std::uint64_t p, std::uint32_t a, std::uint32_t n);

// Prime selection for the classical families: exponent d, d-1 or d-2 by type,
// where d is the dimension; arithmetic level only.
enum class ClassicalType { A, B, C, D, TwistedA, TwistedD };
std::optional<std::uint64_t> classical_ppd(ClassicalType t, std::uint32_t d, std::uint64_t q);

} // namespace nilcov
