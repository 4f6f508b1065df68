#include "nilcov/classes.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilcov {

ClassReport class_omega(const PairClassTable& table, const std::vector<std::uint32_t>& klass,
                        std::int64_t timeout_ms, std::uint32_t exact_cap) {
    if (klass.empty()) throw std::invalid_argument("empty conjugacy class");
    ClassReport rep;
    rep.rep = *std::min_element(klass.begin(), klass.end());
    rep.size = klass.size();

    std::uint32_t n = std::uint32_t(klass.size());
    std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> rows(std::size_t(n) * words, 0);
    bool any_edge = false;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) {
            if (table.at(klass[i], klass[j]) == kNonNilpotent) continue;
            rows[std::size_t(i) * words + (j >> 6)] |= 1ull << (j & 63);
            rows[std::size_t(j) * words + (i >> 6)] |= 1ull << (i & 63);
            any_edge = true;
        }
    rep.non_nilpotent_class = !any_edge;
    if (!any_edge) {
        rep.omega_lo = rep.omega_hi = n;
        rep.exact = true;
        return rep;
    }
    MisOptions opts;
    opts.timeout_ms = timeout_ms;
    if (n > exact_cap && opts.timeout_ms <= 0) opts.timeout_ms = 10000;
    MisResult mis = mis_on_bits(BitGraphView{n, words, rows.data()}, opts);
    // verify the witness against the table
    for (std::size_t i = 0; i < mis.witness.size(); ++i)
        for (std::size_t j = i + 1; j < mis.witness.size(); ++j)
            if (table.at(klass[mis.witness[i]], klass[mis.witness[j]]) != kNonNilpotent)
                throw std::logic_error("class MIS witness failed verification");
    rep.omega_lo = mis.lo;
    rep.omega_hi = mis.hi;
    rep.exact = mis.exact;
    return rep;
}

RatioCheck ratio_conjecture_check(const PairClassTable& table, bool allow_nonsimple,
                                  std::int64_t timeout_ms) {
    const FiniteGroup& g = table.group();
    RatioCheck out;
    out.simple = g.is_simple();
    if (!out.simple && !allow_nonsimple)
        throw std::invalid_argument(g.name() + " is not simple; pass the override to analyse anyway");

    out.all_exact = true;
    bool have = false;
    for (const auto& klass : g.conjugacy_classes()) {
        if (klass.size() == 1 && klass.front() == g.identity()) continue;
        if (klass.size() == 1) {
            // nontrivial central class: omega_inf = 1
            ClassReport r;
            r.rep = klass.front();
            r.size = 1;
            r.omega_lo = r.omega_hi = 1;
            r.exact = true;
            out.reports.push_back(r);
            continue;
        }
        ClassReport r = class_omega(table, klass, timeout_ms);
        out.reports.push_back(r);
        if (!r.exact) out.all_exact = false;
        // compare r.omega/r.size > best (cross multiply)
        if (!have || r.omega_lo * out.witness_size > out.witness_omega * r.size) {
            have = true;
            out.witness_rep = r.rep;
            out.witness_omega = r.omega_lo;
            out.witness_size = r.size;
        }
    }
    // conjecture: every class has omega_inf(C) <= |C| / 2
    out.conjecture_holds = true;
    for (const ClassReport& r : out.reports)
        if (2 * r.omega_hi > r.size) out.conjecture_holds = false;
    return out;
}

std::vector<std::vector<std::uint32_t>> isolated_classes(const FiniteGroup& g, std::uint32_t t) {
    if (g.size() % t != 0) throw std::invalid_argument("t does not divide the group order");
    auto sylows = sylow_subgroups(g, t);
    const auto& classes = g.conjugacy_classes();
    std::vector<std::uint32_t> class_id(g.size());
    for (std::uint32_t ci = 0; ci < classes.size(); ++ci)
        for (std::uint32_t x : classes[ci]) class_id[x] = ci;

    std::vector<bool> clash(classes.size(), false);
    std::vector<std::uint32_t> counter(classes.size(), 0);
    for (const Subgroup& P : sylows) {
        std::vector<std::uint32_t> touched;
        for (std::uint32_t x : P.members) {
            if (g.element_order(x) != t) continue;
            std::uint32_t ci = class_id[x];
            if (counter[ci]++) clash[ci] = true;
            touched.push_back(ci);
        }
        for (std::uint32_t ci : touched) counter[ci] = 0;
    }
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t ci = 0; ci < classes.size(); ++ci) {
        bool order_t = g.element_order(classes[ci].front()) == t;
        if (order_t && !clash[ci]) out.push_back(classes[ci]);
    }
    return out;
}

} // namespace nilcov
