#pragma once

#include "nilcov/families.hpp"
#include "nilcov/group.hpp"
#include "nilcov/nilgraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nilcov {

enum class MemberKind {
    torus,
    sylow_p,
    UZ,        // U x Z for the unitary groups
    U0Z,       // U_0 x Z
    M,         // Z(U) x C_{q+1}
    F_cent,    // order-6 centralizers in the Ree groups
    P_g,       // <g, Z_2(P)> inside a Ree Sylow 3-subgroup
    Q_h,       // <h, Z(P)>
    H_i,       // <g_i, Z(P)> inside a Suzuki Sylow 2-subgroup
    grown,     // greedily grown maximal c-nilpotent subgroup
    cyclic_filler,
};
const char* member_kind_name(MemberKind k);

struct CoverMember {
    MemberKind kind;
    Subgroup sub;
    std::optional<std::uint32_t> distinguished;
};

// A family of c-nilpotent subgroups with covering / 2-minimality certificates.
// A cover verified at bound c with non-nilpotent distinguished pairs certifies
// omega_b = |members| for every b >= max_member_class.
struct Cover {
    std::shared_ptr<const FiniteGroup> group;
    FamilySpec spec;
    ClassBound c = kInfiniteBound;
    std::vector<CoverMember> members;
    std::uint8_t max_member_class = 0;
    bool members_verified = false;
    bool covering_verified = false;
    bool two_minimal_verified = false;
    bool pairs_nonnilpotent = false; // distinguished pairs verified at c = infinity

    std::size_t size() const { return members.size(); }
};

struct PairWitness {
    std::uint32_t a = 0, b = 0;
};

// Checks every member is nilpotent of class <= c; fills max_member_class.
void verify_members(Cover& cv);
// Exact union test over the whole group.
bool verify_covering(Cover& cv);
// Pairwise distinguished check at the cover's bound (missing distinguished
// elements are searched as the least element lying in no other member).
// Returns a failing pair as witness, or nullopt on success.
std::optional<PairWitness> verify_2minimal(Cover& cv);
// All three; throws std::logic_error with detail on any failure.
void certify(Cover& cv);

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

// The Suzuki partition P_T u P_p: maximal tori plus Sylow p-subgroups.
// Families: PGL2 (q > 3), PSL2 (q > 5), Sz (m > 0), and SL2 for odd q > 5 via
// the central lift of the PSL2 partition (members are the full preimages,
// each containing Z(G)). Verified covers for every c >= max member class.
Cover partition_cover(std::shared_ptr<const FiniteGroup> g, const FamilySpec& spec);

// c = 1 refinement for Sz (m > 0): each Sylow 2-subgroup P is replaced by the
// q-1 abelian subgroups <g_i, Z(P)> over the nontrivial cosets of Z(P).
Cover sz_abelian_refinement(std::shared_ptr<const FiniteGroup> g, const FamilySpec& spec);

// Materialized unitary cover; implemented for enumerable q (= 3) at c = 1,
// where the construction applies. Other (q, c) route to brute force.
Cover su3_cover(std::shared_ptr<const FiniteGroup> g, const FamilySpec& spec, ClassBound c);

// Arithmetic component counts for the unitary and Ree covers (COUNT mode).
struct ComponentCount {
    std::string kind;
    std::uint64_t count = 0;
};
struct CoverCounts {
    std::vector<ComponentCount> components;
    std::uint64_t total = 0;
};
CoverCounts su3_cover_counts(const FamilySpec& spec, ClassBound c);
CoverCounts ree_cover_counts(const FamilySpec& spec, ClassBound c);

// Hybrid certification: greedy maximal-c-nilpotent cover matched against an
// equal-size independent set; on success the distinguished elements are the
// matched independent vertices. Used where the source computes values
// directly (Ree(3), the small unitary groups).
std::optional<Cover> hybrid_certified_cover(std::shared_ptr<const PairClassTable> table,
                                            const FamilySpec& spec, ClassBound c,
                                            std::int64_t timeout_ms = -1);

// Greedy cover of the group by maximal c-nilpotent subgroups.
std::vector<Subgroup> grown_cover(const PairClassTable& table, ClassBound c);

// One element per member lying in no other member, provided the resulting
// set is independent in Gamma_c; the algorithmic face of the
// distinguished-element argument. Empty optional when unavailable.
std::optional<std::vector<std::uint32_t>> cover_distinguished_set(
    const PairClassTable& table, const std::vector<Subgroup>& cover, ClassBound c);

// Sylow-local Ree checks inside P = ReeSylowP(q): the P_g family covers P with
// pairwise class-3 generation (c = 2), the Q_h family covers P minus
// (Z_2(P) \ Z(P)) with pairwise noncommuting representatives (c = 1).
struct ReeSylowLocal {
    ClassBound c = 1;
    std::uint64_t family_count = 0;
    std::uint64_t member_order = 0;
    bool covers_required_set = false;
    bool pairwise_ok = false;
};
ReeSylowLocal ree_sylow_local(const FiniteGroup& P, const FamilySpec& spec, ClassBound c);

// Theorem-4.3-style non-nilpotent set: one unique-Sylow element per Sylow
// p-subgroup and per Sylow t_i-subgroup.
struct SylowLowerBound {
    std::vector<std::uint32_t> elements;
    std::uint64_t nu_p = 0;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> nu_t;
    bool verified_nonnilpotent = false;
};
SylowLowerBound sylow_lower_bound_set(const FiniteGroup& g, const FamilySpec& spec,
                                      const std::vector<std::uint32_t>& tori_primes);

// Center of an explicitly known subgroup.
Subgroup subgroup_center(const Subgroup& h);

} // namespace nilcov
