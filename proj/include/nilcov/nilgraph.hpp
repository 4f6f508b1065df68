#pragma once

#include "nilcov/families.hpp"
#include "nilcov/group.hpp"

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nilcov {

// Dense vertex cap for Gamma_c; larger groups fall back to a compressed
// adjacency representation that supports export and greedy bounds only.
inline constexpr std::uint32_t kGraphDenseCap = 8192;

// Gamma_c(G): vertices are all group elements, x != y adjacent iff <x, y> is
// c-nilpotent. Symmetric; the identity is adjacent to every other vertex;
// edge sets grow monotonically with c.
class NilGraph {
  public:
    static NilGraph build(std::shared_ptr<const PairClassTable> table, ClassBound c);

    std::uint32_t order() const { return n_; }
    ClassBound bound() const { return c_; }
    bool adjacent(std::uint32_t u, std::uint32_t v) const {
        return (rows_[std::size_t(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
    }
    const std::uint64_t* row(std::uint32_t u) const { return rows_.data() + std::size_t(u) * words_; }
    std::size_t words() const { return words_; }
    std::uint64_t edge_count() const;
    const PairClassTable& table() const { return *table_; }
    std::shared_ptr<const PairClassTable> table_ptr() const { return table_; }

  private:
    std::shared_ptr<const PairClassTable> table_;
    std::uint32_t n_ = 0;
    ClassBound c_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;
};

// DIMACS undirected export: "p edge n m" header, 1-based "e u v" lines.
void export_dimacs(const NilGraph& gr, std::ostream& os);

// ---------------------------------------------------------------------------
// Exact maximum independent set
// ---------------------------------------------------------------------------

struct MisOptions {
    std::int64_t timeout_ms = -1;      // <= 0: no limit
    std::uint64_t node_cap = 0;        // 0: no limit
    std::uint32_t stop_at = 0;         // stop as optimal once this size is reached
    std::vector<std::uint32_t> seed;   // known independent set to start from
};

struct MisResult {
    std::uint32_t lo = 0, hi = 0; // best found / proven upper bound
    bool exact = false;
    std::vector<std::uint32_t> witness; // independent set of size lo, verified
    std::uint64_t nodes = 0;
    bool timed_out = false;
};

// Branch and bound on bitset adjacency with a greedy clique-cover bound and
// deterministic tie-breaks; on budget expiry returns (best found, best bound).
MisResult independence_number(const NilGraph& gr, const MisOptions& opts = {});

// Same solver over a raw bitset adjacency view (rows of `words` 64-bit words
// per vertex); the caller verifies witnesses.
struct BitGraphView {
    std::uint32_t n = 0;
    std::size_t words = 0;
    const std::uint64_t* rows = nullptr;
};
MisResult mis_on_bits(const BitGraphView& view, const MisOptions& opts = {});

// Greedy clique cover of the graph (clique = c-nilpotent clique in Gamma_c);
// purely graph-theoretic, used as an upper bound and for metrics.
std::vector<std::vector<std::uint32_t>> greedy_clique_cover(const NilGraph& gr);

struct GraphMetrics {
    std::uint32_t independence_lo = 0, independence_hi = 0;
    bool independence_exact = false;
    std::uint32_t greedy_cover_size = 0;
    bool equality = false; // certificate that a 2-minimal cover exists
};
GraphMetrics graph_metrics(const NilGraph& gr, std::int64_t timeout_ms = -1);

// ---------------------------------------------------------------------------
// omega_c results
// ---------------------------------------------------------------------------

enum class OmegaMethod { formula, certified, brute };
enum class OmegaStrategy { automatic, mis, certify };

struct OmegaResult {
    std::string family;
    std::uint32_t q = 0;
    ClassBound c = 0;
    std::optional<std::uint64_t> value; // exact when present
    std::uint64_t lo = 0, hi = 0;       // bounds when inexact
    OmegaMethod method = OmegaMethod::brute;
    std::optional<std::uint64_t> cover_size;
    std::optional<std::uint64_t> independent_size;
    std::int64_t elapsed_ms = 0;
    std::string note;
};

const char* omega_method_name(OmegaMethod m);

// Exact omega_c via cover certification (when the family has a constructed
// cover at this q and c) or exact MIS on Gamma_c; "automatic" prefers the
// certified route. Implemented in omega.cpp on top of the covers module.
OmegaResult omega_exact(const FamilySpec& spec, ClassBound c,
                        OmegaStrategy strategy = OmegaStrategy::automatic,
                        std::int64_t timeout_ms = -1);

// Same, reusing an already-built pair table (several c values per group).
OmegaResult omega_exact_on(std::shared_ptr<const PairClassTable> table, const FamilySpec& spec,
                           ClassBound c, OmegaStrategy strategy = OmegaStrategy::automatic,
                           std::int64_t timeout_ms = -1);

} // namespace nilcov
