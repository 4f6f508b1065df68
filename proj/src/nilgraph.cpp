#include "nilcov/nilgraph.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>

namespace nilcov {

NilGraph NilGraph::build(std::shared_ptr<const PairClassTable> table, ClassBound c) {
    const FiniteGroup& g = table->group();
    std::uint32_t n = g.size();
    if (n > kGraphDenseCap)
        throw std::invalid_argument("group order " + std::to_string(n) +
                                    " exceeds the dense graph cap " + std::to_string(kGraphDenseCap));
    NilGraph gr;
    gr.table_ = table;
    gr.n_ = n;
    gr.c_ = c;
    gr.words_ = (n + 63) / 64;
    gr.rows_.assign(std::size_t(n) * gr.words_, 0);
    auto set_edge = [&](std::uint32_t u, std::uint32_t v) {
        gr.rows_[std::size_t(u) * gr.words_ + (v >> 6)] |= 1ull << (v & 63);
        gr.rows_[std::size_t(v) * gr.words_ + (u >> 6)] |= 1ull << (u & 63);
    };
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = x + 1; y < n; ++y) {
            std::uint8_t cls = table->at(x, y);
            if (cls != kNonNilpotent && (c == kInfiniteBound || cls <= c)) set_edge(x, y);
        }
    return gr;
}

std::uint64_t NilGraph::edge_count() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : rows_) total += std::uint64_t(std::popcount(w));
    return total / 2;
}

void export_dimacs(const NilGraph& gr, std::ostream& os) {
    os << "p edge " << gr.order() << ' ' << gr.edge_count() << '\n';
    for (std::uint32_t u = 0; u < gr.order(); ++u)
        for (std::uint32_t v = u + 1; v < gr.order(); ++v)
            if (gr.adjacent(u, v)) os << "e " << (u + 1) << ' ' << (v + 1) << '\n';
}

std::vector<std::vector<std::uint32_t>> greedy_clique_cover(const NilGraph& gr) {
    // repeatedly peel a maximal clique of the not-yet-covered vertices
    std::uint32_t n = gr.order();
    std::size_t words = gr.words();
    std::vector<std::uint64_t> left(words, 0);
    for (std::uint32_t v = 0; v < n; ++v) left[v >> 6] |= 1ull << (v & 63);
    if (n & 63) left[words - 1] &= (1ull << (n & 63)) - 1;

    std::vector<std::vector<std::uint32_t>> cover;
    std::vector<std::uint64_t> q(words);
    auto any = [&](const std::vector<std::uint64_t>& s) {
        for (std::uint64_t w : s)
            if (w) return true;
        return false;
    };
    while (any(left)) {
        q = left;
        std::vector<std::uint32_t> clique;
        while (true) {
            std::uint32_t v = n;
            for (std::size_t w = 0; w < words; ++w)
                if (q[w]) {
                    v = std::uint32_t(w * 64 + std::countr_zero(q[w]));
                    break;
                }
            if (v >= n) break;
            clique.push_back(v);
            left[v >> 6] &= ~(1ull << (v & 63));
            q[v >> 6] &= ~(1ull << (v & 63));
            const std::uint64_t* row = gr.row(v);
            for (std::size_t w = 0; w < words; ++w) q[w] &= row[w];
        }
        cover.push_back(std::move(clique));
    }
    return cover;
}

GraphMetrics graph_metrics(const NilGraph& gr, std::int64_t timeout_ms) {
    GraphMetrics m;
    m.greedy_cover_size = std::uint32_t(greedy_clique_cover(gr).size());
    MisOptions opts;
    opts.timeout_ms = timeout_ms;
    opts.stop_at = m.greedy_cover_size;
    MisResult r = independence_number(gr, opts);
    m.independence_lo = r.lo;
    m.independence_hi = r.hi;
    m.independence_exact = r.exact;
    m.equality = r.exact && r.lo == m.greedy_cover_size;
    return m;
}

const char* omega_method_name(OmegaMethod m) {
    switch (m) {
        case OmegaMethod::formula: return "formula";
        case OmegaMethod::certified: return "certified";
        case OmegaMethod::brute: return "brute";
    }
    return "?";
}

} // namespace nilcov
