#pragma once

#include "nilcov/galois.hpp"
#include "nilcov/group.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace nilcov {

enum class Family { SL2, PGL2, PSL2, SU3, PGU3, PSU3, Sz, Ree3Full, ReeSylowP };

const char* family_name(Family f);
Family family_from_string(const std::string& s);

// Concrete group family instance. For Sz and the Ree families, q follows the
// squared convention q = 2^(2m+1) resp. 3^(2m+1).
struct FamilySpec {
    Family family;
    std::uint32_t q = 0;
    std::uint32_t p = 0, a = 0; // q = p^a
    std::uint32_t m = 0;        // twist parameter for Sz / Ree families
    std::uint32_t delta = 1;    // |Z(G)| where the paper uses delta

    static FamilySpec make(Family f, std::uint32_t q);
    std::string name() const; // e.g. "SU3(3)"
    std::uint64_t expected_order() const;
};

FamilySpec spec_from_name(const std::string& name); // parses "SU3(3)"

// Multiplication/inversion recipe for a family; used both to build groups and
// to reload dumped tables.
std::shared_ptr<const GroupOps> ops_for_spec(const FamilySpec& spec);

// Fully enumerated group with the family's order formula asserted.
std::shared_ptr<FiniteGroup> build_group(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Ree Sylow 3-subgroup coordinates
// ---------------------------------------------------------------------------

struct ReeTriple {
    std::uint32_t x = 0, y = 0, z = 0;
    bool operator==(const ReeTriple&) const = default;
};

// The displayed product on F_q^3 with s = 3^(m+1); identity (0,0,0).
ReeTriple ree_mul(const FiniteField& F, std::uint32_t m, const ReeTriple& a, const ReeTriple& b);
// Closed form (-x, -y, xy - z); cross-checked against brute-force search in tests.
ReeTriple ree_inv(const FiniteField& F, const ReeTriple& a);

// ---------------------------------------------------------------------------
// Maximal tori
// ---------------------------------------------------------------------------

// One conjugacy class of maximal tori: all conjugates of a representative
// found as the abelian centralizer, of the family's torus order, of a
// regular semisimple element (finite-level surrogate). A class whose torus
// order collapses to |Z(G)| is returned as the singleton {Z(G)}.
struct TorusClass {
    std::uint64_t order = 0;
    std::vector<Subgroup> tori;
    bool degenerate_central = false;
};

std::vector<std::uint64_t> torus_orders(const FamilySpec& spec);
std::vector<TorusClass> maximal_tori(const FiniteGroup& g, const FamilySpec& spec);

// Group table I/O, format NCGT1 (little-endian, versioned).
void dump_group_file(const FiniteGroup& g, const std::string& path);
std::shared_ptr<FiniteGroup> load_group_file(const std::string& path);

} // namespace nilcov
