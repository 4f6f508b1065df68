#include "nilcov/covers.hpp"
#include "nilcov/nilgraph.hpp"

#include <stdexcept>

namespace nilcov {

namespace {

enum class CertifyRoute { none, partition, sz_refined, su3_c1 };

CertifyRoute certify_route(const FamilySpec& spec, ClassBound c) {
    switch (spec.family) {
        case Family::PGL2: return spec.q >= 4 ? CertifyRoute::partition : CertifyRoute::none;
        case Family::PSL2: return spec.q > 5 ? CertifyRoute::partition : CertifyRoute::none;
        case Family::SL2:
            if (spec.q % 2 == 0) return spec.q >= 4 ? CertifyRoute::partition : CertifyRoute::none;
            return spec.q > 5 ? CertifyRoute::partition : CertifyRoute::none;
        case Family::Sz:
            if (spec.m == 0) return CertifyRoute::none;
            return c == 1 ? CertifyRoute::sz_refined : CertifyRoute::partition;
        case Family::SU3:
            return (spec.q == 3 && c == 1) ? CertifyRoute::su3_c1 : CertifyRoute::none;
        default: return CertifyRoute::none;
    }
}

// a certified cover pins omega_b = |N| for the bounds b it is valid at
bool cover_applies(const Cover& cv, ClassBound c) {
    if (cv.c == c) return true;
    if (!cv.pairs_nonnilpotent) return false;
    return c == kInfiniteBound || c >= cv.max_member_class;
}

OmegaResult certified_result(Cover&& cv, ClassBound c, stopwatch& sw) {
    certify(cv);
    if (!cover_applies(cv, c))
        throw std::logic_error("certified cover does not apply at bound " + bound_to_string(c));
    OmegaResult res;
    res.family = family_name(cv.spec.family);
    res.q = cv.spec.q;
    res.c = c;
    res.value = cv.size();
    res.lo = res.hi = cv.size();
    res.method = OmegaMethod::certified;
    res.cover_size = cv.size();
    res.independent_size = cv.size();
    res.elapsed_ms = sw.elapsed_ms();
    return res;
}

} // namespace

OmegaResult omega_exact_on(std::shared_ptr<const PairClassTable> table, const FamilySpec& spec,
                           ClassBound c, OmegaStrategy strategy, std::int64_t timeout_ms) {
    stopwatch sw;
    OmegaResult res;
    res.family = family_name(spec.family);
    res.q = spec.q;
    res.c = c;

    CertifyRoute route = certify_route(spec, c);
    if (strategy != OmegaStrategy::mis && route != CertifyRoute::none) {
        auto g = table->group_ptr();
        std::shared_ptr<const FiniteGroup> gg = g;
        switch (route) {
            case CertifyRoute::partition: return certified_result(partition_cover(gg, spec), c, sw);
            case CertifyRoute::sz_refined:
                return certified_result(sz_abelian_refinement(gg, spec), c, sw);
            case CertifyRoute::su3_c1: return certified_result(su3_cover(gg, spec, c), c, sw);
            default: break;
        }
    }
    if (strategy == OmegaStrategy::certify)
        res.note = "no certified construction for this family/q/c; fell back to exact MIS";

    // hybrid: greedy maximal-c-nilpotent cover caps the search; its
    // unique-membership elements, when independent, certify the optimum at
    // the root without expanding the tree
    std::vector<Subgroup> cover = grown_cover(*table, c);
    NilGraph gr = NilGraph::build(table, c);
    MisOptions opts;
    opts.timeout_ms = timeout_ms;
    opts.stop_at = std::uint32_t(cover.size());
    if (auto dist = cover_distinguished_set(*table, cover, c)) opts.seed = *dist;
    MisResult mis = independence_number(gr, opts);
    res.cover_size = cover.size();
    res.independent_size = mis.lo;
    res.lo = mis.lo;
    res.hi = std::min<std::uint64_t>(mis.hi, cover.size());
    if (mis.exact || res.lo == res.hi) {
        res.value = res.lo;
        res.hi = res.lo;
    }
    res.method = OmegaMethod::brute;
    res.elapsed_ms = sw.elapsed_ms();
    return res;
}

OmegaResult omega_exact(const FamilySpec& spec, ClassBound c, OmegaStrategy strategy,
                        std::int64_t timeout_ms) {
    stopwatch sw;
    CertifyRoute route = certify_route(spec, c);
    std::shared_ptr<FiniteGroup> g = build_group(spec);
    if (strategy != OmegaStrategy::mis && route != CertifyRoute::none) {
        std::shared_ptr<const FiniteGroup> gg = g;
        switch (route) {
            case CertifyRoute::partition: return certified_result(partition_cover(gg, spec), c, sw);
            case CertifyRoute::sz_refined:
                return certified_result(sz_abelian_refinement(gg, spec), c, sw);
            case CertifyRoute::su3_c1: return certified_result(su3_cover(gg, spec, c), c, sw);
            default: break;
        }
    }
    if (g->size() > kGraphDenseCap)
        throw std::invalid_argument(spec.name() + " exceeds the dense graph cap and has no certified cover");
    auto table = std::make_shared<PairClassTable>(g);
    OmegaResult res = omega_exact_on(table, spec, c, strategy, timeout_ms);
    res.elapsed_ms = sw.elapsed_ms();
    return res;
}

} // namespace nilcov
