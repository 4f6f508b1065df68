#pragma once

#include "nilcov/galois.hpp"
#include "nilcov/runtime.hpp"

#include <array>
#include <atomic>
#include <cstdint>
#include <cstring>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace nilcov {

// ---------------------------------------------------------------------------
// Canonical element encodings
// ---------------------------------------------------------------------------

// Variant tags for the canonical byte encoding of an element.
enum class EncTag : std::uint8_t {
    matrix = 1,      // dense matrix over a finite field
    proj_matrix = 2, // matrix scaled so the first nonzero entry (row-major) is 1
    ree_triple = 3,  // (x, y, z) in F_q^3
    mat_frob = 4,    // (projectivized 2x2 matrix over GF(8), frobenius power in {0,1,2})
};

// Fixed-capacity canonical byte string. Equality of encodings is equality of
// group elements.
struct Enc {
    static constexpr std::size_t cap = 23;
    std::uint8_t len = 0;
    std::array<std::uint8_t, cap> b{};

    bool operator==(const Enc& o) const {
        return len == o.len && std::memcmp(b.data(), o.b.data(), len) == 0;
    }
    bool operator<(const Enc& o) const {
        int c = std::memcmp(b.data(), o.b.data(), std::min(len, o.len));
        if (c) return c < 0;
        return len < o.len;
    }
    std::uint64_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint8_t i = 0; i < len; ++i) {
            h ^= b[i];
            h *= 1099511628211ull;
        }
        return h;
    }
    std::string hex() const;
};

// Raw multiplication/inversion on encodings. One instance per concrete group;
// immutable and thread-safe.
class GroupOps {
  public:
    virtual ~GroupOps() = default;
    virtual Enc mul(const Enc& a, const Enc& b) const = 0;
    virtual Enc inv(const Enc& a) const = 0;
    virtual Enc identity() const = 0;
};

// ---------------------------------------------------------------------------
// Nilpotency values
// ---------------------------------------------------------------------------

// Nilpotency class of a subgroup: 0 only for the trivial group, 1 iff
// nontrivial abelian, kNonNilpotent for non-nilpotent.
inline constexpr std::uint8_t kNonNilpotent = 0xFF;

struct NilClass {
    std::uint8_t v = 0;
    bool nonnilpotent() const { return v == kNonNilpotent; }
    bool at_most(std::uint16_t c) const { return v != kNonNilpotent && v <= c; }
};

// Class bound c in {1, 2, ...} union {infinity}; kInfiniteBound sorts above
// every finite bound.
using ClassBound = std::uint16_t;
inline constexpr ClassBound kInfiniteBound = 0xFFFF;

std::string bound_to_string(ClassBound c);
ClassBound bound_from_string(const std::string& s);

// ---------------------------------------------------------------------------
// FiniteGroup
// ---------------------------------------------------------------------------

class FiniteGroup;

// A subgroup is a sorted index set inside a parent group.
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<std::uint32_t> members; // sorted, contains the identity

    std::size_t size() const { return members.size(); }
    bool contains(std::uint32_t i) const;
    bool operator==(const Subgroup& o) const { return members == o.members; }
};

// Fully enumerated finite group. Elements are canonical encodings, indexed
// 0..n-1 in lexicographic encoding order (so indices are reproducible).
// Immutable after enumeration; lazily filled caches use idempotent writes.
class FiniteGroup {
  public:
    // Enumerates the closure of the generators. Asserts the expected order if
    // one is supplied.
    static std::shared_ptr<FiniteGroup> enumerate(std::shared_ptr<const GroupOps> ops,
                                                  const std::vector<Enc>& generators,
                                                  std::uint64_t expected_order = 0,
                                                  std::string name = {});
    // Builds from a complete, closed element list (skips BFS).
    static std::shared_ptr<FiniteGroup> from_elements(std::shared_ptr<const GroupOps> ops,
                                                      std::vector<Enc> elements, std::string name = {});

    std::uint32_t size() const { return n_; }
    std::uint32_t identity() const { return id_; }
    const std::string& name() const { return name_; }
    const Enc& encoding(std::uint32_t i) const { return elems_[i]; }
    const std::vector<Enc>& elements() const { return elems_; }
    const std::vector<std::uint32_t>& generator_indices() const { return gen_idx_; }
    const GroupOps& ops() const { return *ops_; }

    std::uint32_t index_of(const Enc& e) const; // throws if absent
    std::optional<std::uint32_t> find(const Enc& e) const;

    std::uint32_t mul(std::uint32_t i, std::uint32_t j) const {
        if (table_) return table_[std::size_t(i) * n_ + j];
        return mul_nocache(i, j);
    }
    std::uint32_t inv(std::uint32_t i) const { return inv_[i]; }
    // x^g = g^-1 x g
    std::uint32_t conjugate(std::uint32_t x, std::uint32_t g) const {
        return mul(mul(inv(g), x), g);
    }
    std::uint32_t commutator(std::uint32_t a, std::uint32_t b) const {
        return mul(mul(inv(a), inv(b)), mul(a, b));
    }
    std::uint32_t power(std::uint32_t x, std::uint64_t e) const;

    std::uint32_t element_order(std::uint32_t i) const;
    const std::vector<std::uint32_t>& element_orders() const; // fills cache
    const std::vector<std::uint32_t>& prime_factors() const { return primes_; }

    // Orbit partition under conjugation. Cached.
    const std::vector<std::vector<std::uint32_t>>& conjugacy_classes() const;
    std::uint32_t centralizer_order(std::uint32_t i) const;
    Subgroup centralizer(std::uint32_t i) const;
    Subgroup center() const;

    bool is_simple() const; // normal-closure probing of class representatives

    // Binary table dump (magic "NCGT1"): encodings only, mul is recomputable.
    void dump(std::ostream& os) const;

  private:
    friend std::shared_ptr<FiniteGroup> load_group_stream(std::istream&);
    FiniteGroup() = default;
    void finish_build();
    std::uint32_t mul_nocache(std::uint32_t i, std::uint32_t j) const;

    std::shared_ptr<const GroupOps> ops_;
    std::string name_;
    std::vector<Enc> elems_; // sorted by encoding
    std::vector<std::uint32_t> inv_;
    std::vector<std::uint32_t> gen_idx_;
    std::uint32_t n_ = 0, id_ = 0;

    // open-addressing hash: encoding -> index
    std::vector<std::uint32_t> slots_;
    std::uint64_t mask_ = 0;

    std::vector<std::uint32_t> primes_; // distinct primes dividing |G|
    std::unique_ptr<std::uint32_t[]> table_store_;
    const std::uint32_t* table_ = nullptr;

    mutable std::vector<std::uint32_t> orders_;
    mutable std::vector<std::vector<std::uint32_t>> classes_;
    mutable std::vector<std::uint32_t> class_of_;
    mutable std::once_flag orders_once_, classes_once_;
};

// Cap under which the full multiplication table is materialized.
inline constexpr std::uint32_t kMulTableCap = 7000;

// ---------------------------------------------------------------------------
// Subgroup algorithms
// ---------------------------------------------------------------------------

// Smallest subgroup containing the generators, by breadth-first closure.
// Throws closure_cap_exceeded past the configured cap.
Subgroup close(const FiniteGroup& g, const std::vector<std::uint32_t>& gens);

// Greedy small generating set for an explicitly known subgroup.
std::vector<std::uint32_t> generating_set(const Subgroup& h);

// Lower central series gamma_1 = H, gamma_{i+1} = [gamma_i, H] via commutator
// generator sets; stops when trivial (class = i) or stabilized (non-nilpotent).
NilClass nilpotency_class(const Subgroup& h);

// Nilpotency class of <x, y>, with fast paths that agree with the closure
// fallback (exhaustively cross-checked for |G| <= 360 in the test suite).
NilClass pair_class(const FiniteGroup& g, std::uint32_t x, std::uint32_t y);

// All Sylow t-subgroups: one by t-element closure ascent, the rest by
// conjugation. Count is asserted to be 1 mod t and to divide |G|.
std::vector<Subgroup> sylow_subgroups(const FiniteGroup& g, std::uint32_t t);

// Elements lying in exactly one Sylow t-subgroup.
std::vector<std::uint32_t> unique_sylow_members(const FiniteGroup& g, std::uint32_t t);
std::vector<std::uint32_t> unique_sylow_members(const FiniteGroup& g,
                                                const std::vector<Subgroup>& sylows);

// Normal closure of the seed set in g (conjugation by the group's generators).
Subgroup normal_closure(const FiniteGroup& g, const std::vector<std::uint32_t>& seeds);

// ---------------------------------------------------------------------------
// Pairwise classification table
// ---------------------------------------------------------------------------

// Upper-triangular matrix of pair_class values over the whole group; the
// backbone for every Gamma_c. Rows are classified in parallel blocks;
// the result is deterministic and independent of scheduling.
class PairClassTable {
  public:
    explicit PairClassTable(std::shared_ptr<const FiniteGroup> g);

    std::uint8_t at(std::uint32_t x, std::uint32_t y) const {
        if (x == y) return diag_[x];
        if (x > y) std::swap(x, y);
        return tri_[index(x, y)];
    }
    const FiniteGroup& group() const { return *g_; }
    std::shared_ptr<const FiniteGroup> group_ptr() const { return g_; }

  private:
    std::size_t index(std::uint32_t x, std::uint32_t y) const {
        // x < y; row-major upper triangle
        std::size_t n = g_->size();
        return (std::size_t(x) * (2 * n - x - 1)) / 2 + (y - x - 1);
    }
    std::shared_ptr<const FiniteGroup> g_;
    std::vector<std::uint8_t> tri_;
    std::vector<std::uint8_t> diag_;
};

// Group table I/O (format NCGT1, little-endian, versioned).
void dump_group(const FiniteGroup& g, const std::string& path);

} // namespace nilcov
