#include "nilcov/covers.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace nilcov {

const char* member_kind_name(MemberKind k) {
    switch (k) {
        case MemberKind::torus: return "torus";
        case MemberKind::sylow_p: return "sylow-p";
        case MemberKind::UZ: return "UxZ";
        case MemberKind::U0Z: return "U0xZ";
        case MemberKind::M: return "M";
        case MemberKind::F_cent: return "F-centralizer";
        case MemberKind::P_g: return "P_g";
        case MemberKind::Q_h: return "Q_h";
        case MemberKind::H_i: return "H_i";
        case MemberKind::grown: return "grown";
        case MemberKind::cyclic_filler: return "cyclic-filler";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

void verify_members(Cover& cv) {
    std::uint8_t maxc = 0;
    for (const CoverMember& m : cv.members) {
        NilClass nc = nilpotency_class(m.sub);
        if (nc.nonnilpotent() || (cv.c != kInfiniteBound && nc.v > cv.c))
            throw std::logic_error("cover member of kind " + std::string(member_kind_name(m.kind)) +
                                   " is not " + bound_to_string(cv.c) + "-nilpotent");
        maxc = std::max(maxc, nc.v);
    }
    cv.max_member_class = maxc;
    cv.members_verified = true;
}

bool verify_covering(Cover& cv) {
    const FiniteGroup& g = *cv.group;
    std::vector<bool> hit(g.size(), false);
    for (const CoverMember& m : cv.members)
        for (std::uint32_t x : m.sub.members) hit[x] = true;
    cv.covering_verified = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    return cv.covering_verified;
}

namespace {

// least element of this member lying in no other member, if any
std::optional<std::uint32_t> search_distinguished(const Cover& cv, std::size_t idx) {
    const FiniteGroup& g = *cv.group;
    std::vector<std::uint16_t> count(g.size(), 0);
    for (const CoverMember& m : cv.members)
        for (std::uint32_t x : m.sub.members)
            if (count[x] < 0xFFFF) ++count[x];
    for (std::uint32_t x : cv.members[idx].sub.members)
        if (x != g.identity() && count[x] == 1) return x;
    return std::nullopt;
}

} // namespace

std::optional<PairWitness> verify_2minimal(Cover& cv) {
    const FiniteGroup& g = *cv.group;
    std::vector<std::uint32_t> d(cv.members.size());
    for (std::size_t i = 0; i < cv.members.size(); ++i) {
        if (cv.members[i].distinguished) {
            d[i] = *cv.members[i].distinguished;
        } else {
            auto found = search_distinguished(cv, i);
            if (!found) return PairWitness{std::uint32_t(i), std::uint32_t(i)};
            d[i] = *found;
            cv.members[i].distinguished = d[i];
        }
    }
    g.element_orders(); // warm before parallel classification

    std::atomic<bool> failed{false};
    std::atomic<std::uint64_t> fail_pair{0};
    std::atomic<bool> all_nonnil{true};
    std::size_t npairs = d.size() * (d.size() - 1) / 2;
    std::atomic<std::size_t> cursor{0};
    unsigned nt = global_config().effective_threads();
    auto work = [&] {
        constexpr std::size_t kChunk = 1024;
        while (!failed.load(std::memory_order_relaxed)) {
            std::size_t b = cursor.fetch_add(kChunk);
            if (b >= npairs) break;
            std::size_t e = std::min(npairs, b + kChunk);
            for (std::size_t t = b; t < e; ++t) {
                // unrank the upper-triangle pair index
                std::size_t i = 0, rem = t, row = d.size() - 1;
                while (rem >= row) {
                    rem -= row;
                    --row;
                    ++i;
                }
                std::size_t j = i + 1 + rem;
                std::uint8_t cls = pair_class(g, d[i], d[j]).v;
                bool ok = cls == kNonNilpotent || (cv.c != kInfiniteBound && cls > cv.c);
                if (cls != kNonNilpotent) all_nonnil.store(false, std::memory_order_relaxed);
                if (!ok) {
                    fail_pair.store((std::uint64_t(d[i]) << 32) | d[j], std::memory_order_relaxed);
                    failed.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        }
    };
    if (nt <= 1 || npairs < 4096) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nt; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) {
        std::uint64_t fp = fail_pair.load();
        return PairWitness{std::uint32_t(fp >> 32), std::uint32_t(fp & 0xFFFFFFFF)};
    }
    cv.two_minimal_verified = true;
    cv.pairs_nonnilpotent = all_nonnil.load();
    return std::nullopt;
}

void certify(Cover& cv) {
    verify_members(cv);
    if (!verify_covering(cv)) throw std::logic_error("cover does not cover the group");
    if (auto w = verify_2minimal(cv))
        throw std::logic_error("cover is not 2-minimal: failing pair (" + std::to_string(w->a) + ", " +
                               std::to_string(w->b) + ")");
}

// ---------------------------------------------------------------------------
// Partition covers
// ---------------------------------------------------------------------------

namespace {

std::uint32_t least_of_order_above(const FiniteGroup& g, const Subgroup& s, std::uint32_t bound) {
    for (std::uint32_t x : s.members)
        if (g.element_order(x) > bound) return x;
    throw std::logic_error("no element of order > " + std::to_string(bound) + " in member");
}

std::uint32_t least_nontrivial(const FiniteGroup& g, const Subgroup& s) {
    for (std::uint32_t x : s.members)
        if (x != g.identity()) return x;
    throw std::logic_error("trivial cover member");
}

} // namespace

Cover partition_cover(std::shared_ptr<const FiniteGroup> g, const FamilySpec& spec) {
    Cover cv;
    cv.group = g;
    cv.spec = spec;
    cv.c = kInfiniteBound;

    switch (spec.family) {
        case Family::PGL2:
        case Family::PSL2: {
            if ((spec.family == Family::PGL2 && spec.q <= 3) ||
                (spec.family == Family::PSL2 && spec.q <= 5))
                throw std::invalid_argument(spec.name() + ": partition cover needs larger q");
            for (const TorusClass& tc : maximal_tori(*g, spec))
                for (const Subgroup& t : tc.tori)
                    cv.members.push_back({MemberKind::torus, t, least_of_order_above(*g, t, 2)});
            for (const Subgroup& s : sylow_subgroups(*g, spec.p))
                cv.members.push_back({MemberKind::sylow_p, s, least_nontrivial(*g, s)});
            break;
        }
        case Family::SL2: {
            if (spec.q % 2 == 0 || spec.q <= 5)
                throw std::invalid_argument(spec.name() + ": central-lift cover needs odd q > 5");
            // the PSL2 partition, lifted to full preimages containing Z(G)
            FamilySpec pspec = FamilySpec::make(Family::PSL2, spec.q);
            auto h = build_group(pspec);
            auto proj_ops = ops_for_spec(pspec);
            std::vector<std::uint32_t> proj(g->size());
            Enc id = proj_ops->identity();
            for (std::uint32_t i = 0; i < g->size(); ++i) {
                // same matrix byte layout; multiplying by the identity through
                // the projectivizing ops canonicalizes the scaling
                Enc tmp = id;
                for (int k = 0; k < 4; ++k) tmp.b[1 + k] = g->encoding(i).b[1 + k];
                proj[i] = h->index_of(proj_ops->mul(tmp, id));
            }
            Cover base = partition_cover(h, pspec);
            for (const CoverMember& bm : base.members) {
                Subgroup lift;
                lift.parent = g.get();
                std::vector<bool> want(h->size(), false);
                for (std::uint32_t x : bm.sub.members) want[x] = true;
                for (std::uint32_t i = 0; i < g->size(); ++i)
                    if (want[proj[i]]) lift.members.push_back(i);
                // distinguished: least with image order > 2
                std::uint32_t dist = g->size();
                for (std::uint32_t i : lift.members)
                    if (h->element_order(proj[i]) > 2) {
                        dist = i;
                        break;
                    }
                if (dist == g->size()) throw std::logic_error("no lift with image order > 2");
                cv.members.push_back({bm.kind, std::move(lift), dist});
            }
            break;
        }
        case Family::Sz: {
            if (spec.m == 0) throw std::invalid_argument("Sz(2) has no partition cover; use brute force");
            for (const TorusClass& tc : maximal_tori(*g, spec))
                for (const Subgroup& t : tc.tori)
                    cv.members.push_back({MemberKind::torus, t, least_nontrivial(*g, t)});
            for (const Subgroup& s : sylow_subgroups(*g, 2))
                cv.members.push_back({MemberKind::sylow_p, s, least_nontrivial(*g, s)});
            break;
        }
        default: throw std::invalid_argument(spec.name() + ": no partition cover recipe");
    }
    return cv;
}

Subgroup subgroup_center(const Subgroup& h) {
    const FiniteGroup& g = *h.parent;
    std::vector<std::uint32_t> gens = generating_set(h);
    Subgroup z;
    z.parent = &g;
    for (std::uint32_t x : h.members) {
        bool central = true;
        for (std::uint32_t s : gens)
            if (g.mul(x, s) != g.mul(s, x)) {
                central = false;
                break;
            }
        if (central) z.members.push_back(x);
    }
    return z;
}

Cover sz_abelian_refinement(std::shared_ptr<const FiniteGroup> g, const FamilySpec& spec) {
    if (spec.family != Family::Sz || spec.m == 0)
        throw std::invalid_argument("abelian refinement applies to Sz with m > 0");
    Cover cv;
    cv.group = g;
    cv.spec = spec;
    cv.c = 1;
    for (const TorusClass& tc : maximal_tori(*g, spec))
        for (const Subgroup& t : tc.tori)
            cv.members.push_back({MemberKind::torus, t, least_nontrivial(*g, t)});
    for (const Subgroup& P : sylow_subgroups(*g, 2)) {
        Subgroup Z = subgroup_center(P);
        if (Z.size() != spec.q) throw std::logic_error("Z(P) order is not q");
        // one member <g_i, Z(P)> = Z(P) u g_i Z(P) per nontrivial coset
        std::vector<bool> seen(g->size(), false);
        for (std::uint32_t z : Z.members) seen[z] = true;
        for (std::uint32_t gi : P.members) {
            if (seen[gi]) continue;
            Subgroup H;
            H.parent = g.get();
            H.members = Z.members;
            for (std::uint32_t z : Z.members) {
                std::uint32_t w = g->mul(gi, z);
                H.members.push_back(w);
                seen[w] = true;
            }
            std::sort(H.members.begin(), H.members.end());
            if (H.members.size() != 2 * spec.q) throw std::logic_error("|<g_i, Z(P)>| != 2q");
            cv.members.push_back({MemberKind::H_i, std::move(H), gi});
        }
    }
    return cv;
}

// ---------------------------------------------------------------------------
// Unitary covers
// ---------------------------------------------------------------------------

namespace {

std::vector<Subgroup> conjugation_orbit(const FiniteGroup& g, const Subgroup& s) {
    std::vector<std::uint32_t> conjgens;
    for (std::uint32_t c : g.generator_indices()) {
        conjgens.push_back(c);
        conjgens.push_back(g.inv(c));
    }
    struct VecHash {
        std::size_t operator()(const std::vector<std::uint32_t>& v) const {
            std::uint64_t h = 1469598103934665603ull;
            for (std::uint32_t x : v) {
                h ^= x;
                h *= 1099511628211ull;
            }
            return std::size_t(h);
        }
    };
    std::unordered_set<std::vector<std::uint32_t>, VecHash> seen;
    std::vector<std::vector<std::uint32_t>> queue{s.members};
    seen.insert(s.members);
    while (!queue.empty()) {
        auto cur = std::move(queue.back());
        queue.pop_back();
        for (std::uint32_t c : conjgens) {
            std::vector<std::uint32_t> img(cur.size());
            for (std::size_t i = 0; i < cur.size(); ++i) img[i] = g.conjugate(cur[i], c);
            std::sort(img.begin(), img.end());
            if (seen.insert(img).second) queue.push_back(img);
        }
    }
    std::vector<Subgroup> out;
    for (const auto& v : seen) {
        Subgroup t;
        t.parent = &g;
        t.members = v;
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(),
              [](const Subgroup& a, const Subgroup& b) { return a.members < b.members; });
    return out;
}

bool is_abelian(const FiniteGroup& g, const Subgroup& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.mul(s.members[i], s.members[j]) != g.mul(s.members[j], s.members[i])) return false;
    return true;
}

} // namespace

Cover su3_cover(std::shared_ptr<const FiniteGroup> g, const FamilySpec& spec, ClassBound c) {
    if (spec.family != Family::SU3 && spec.family != Family::PGU3)
        throw std::invalid_argument("su3_cover applies to the unitary families");
    if (spec.q <= 2)
        throw std::invalid_argument(spec.name() + ": the source computes small q directly; use brute force");
    if (c != 1)
        throw std::invalid_argument(spec.name() +
                                    ": materialized unitary cover implemented for c = 1 only "
                                    "(the c >= 2 construction needs q > 3, beyond the enumeration cap)");
    // c = 1, q = 3: members (U_0 x Z)^G u M^G u all maximal tori
    Cover cv;
    cv.group = g;
    cv.spec = spec;
    cv.c = 1;
    const std::uint64_t q = spec.q;

    // non-central unipotent centralizers U_0 x Z
    auto sylows = sylow_subgroups(*g, spec.p);
    if (sylows.size() != q * q * q + 1) throw std::logic_error("nu_p != q^3 + 1");
    const Subgroup& U = sylows.front();
    Subgroup ZU = subgroup_center(U);
    std::uint32_t u_noncentral = g->size();
    for (std::uint32_t x : U.members)
        if (x != g->identity() && !ZU.contains(x)) {
            u_noncentral = x;
            break;
        }
    Subgroup U0 = g->centralizer(u_noncentral);
    if (U0.size() != q * q * spec.delta || !is_abelian(*g, U0))
        throw std::logic_error("C_G(noncentral unipotent) is not abelian of order q^2 delta");
    std::uint64_t expect_u0 = (q * q * q * q + q * q * q + q + 1) / spec.delta;
    auto u0_orbit = conjugation_orbit(*g, U0);
    if (u0_orbit.size() != expect_u0) throw std::logic_error("|(U0 x Z)^G| mismatch");
    for (Subgroup& s : u0_orbit) {
        // distinguished: least member whose centralizer is the member itself
        std::uint32_t dist = g->size();
        for (std::uint32_t x : s.members)
            if (x != g->identity() && g->centralizer_order(x) == s.size() &&
                g->centralizer(x).members == s.members) {
                dist = x;
                break;
            }
        if (dist == g->size()) throw std::logic_error("no regular element in U0 x Z member");
        cv.members.push_back({MemberKind::U0Z, std::move(s), dist});
    }

    // M = Z(U) x C_{q+1}: the centralizer of a mixed gh-type element
    std::uint32_t w_rep = g->size();
    for (std::uint32_t x = 0; x < g->size(); ++x) {
        std::uint32_t o = g->element_order(x);
        if (o % spec.p || o % (spec.q + 1)) continue;
        if (g->centralizer_order(x) != q * (q + 1)) continue;
        Subgroup C = g->centralizer(x);
        if (is_abelian(*g, C)) {
            w_rep = x;
            break;
        }
    }
    if (w_rep == g->size()) throw std::logic_error("no gh-type element found");
    Subgroup M = g->centralizer(w_rep);
    auto m_orbit = conjugation_orbit(*g, M);
    if (m_orbit.size() != q * q * (q * q * q + 1)) throw std::logic_error("|M^G| mismatch");
    for (Subgroup& s : m_orbit) {
        std::uint32_t dist = g->size();
        for (std::uint32_t x : s.members) {
            std::uint32_t o = g->element_order(x);
            if (o % spec.p == 0 && o % (spec.q + 1) == 0 && g->centralizer_order(x) == s.size() &&
                g->centralizer(x).members == s.members) {
                dist = x;
                break;
            }
        }
        if (dist == g->size()) throw std::logic_error("no gh element in M member");
        cv.members.push_back({MemberKind::M, std::move(s), dist});
    }

    // all maximal tori, with regular distinguished elements
    std::uint64_t tori_total = 0;
    for (const TorusClass& tc : maximal_tori(*g, spec)) {
        for (const Subgroup& t : tc.tori) {
            std::uint32_t dist = g->size();
            for (std::uint32_t x : t.members)
                if (x != g->identity() && g->centralizer_order(x) == t.size() &&
                    g->centralizer(x).members == t.members) {
                    dist = x;
                    break;
                }
            if (dist == g->size()) throw std::logic_error("torus without regular element");
            cv.members.push_back({MemberKind::torus, t, dist});
            ++tori_total;
        }
    }
    std::uint64_t q6 = 1;
    for (int i = 0; i < 6; ++i) q6 *= q;
    if (tori_total != q6) throw std::logic_error("maximal tori total != q^6");
    return cv;
}

CoverCounts su3_cover_counts(const FamilySpec& spec, ClassBound c) {
    if (spec.family != Family::SU3 && spec.family != Family::PGU3)
        throw std::invalid_argument("unitary counts need SU3 or PGU3");
    std::uint64_t q = spec.q;
    bool pgu = spec.family == Family::PGU3 && (q + 1) % 3 == 0;
    std::uint64_t delta = pgu ? 1 : spec.delta; // the hat-U_0 class in PGU3 is unquotiented
    if (c == 1) {
        if (q <= 2) throw std::invalid_argument("c = 1 counts need q > 2");
    } else if (q <= 3) {
        throw std::invalid_argument("c >= 2 counts need q > 3");
    }
    std::uint64_t q2 = q * q, q3 = q2 * q, q4 = q3 * q, q6 = q3 * q3;
    CoverCounts out;
    if (c == 1)
        out.components.push_back({pgu ? "U0hat" : "U0xZ", (q4 + q3 + q + 1) / delta});
    else
        out.components.push_back({pgu ? "Uhat" : "UxZ", q3 + 1});
    out.components.push_back({pgu ? "M0" : "M", q2 * (q3 + 1)});
    out.components.push_back({"tori", q6});
    for (const auto& comp : out.components) out.total += comp.count;
    return out;
}

CoverCounts ree_cover_counts(const FamilySpec& spec, ClassBound c) {
    std::uint64_t q = spec.q;
    if (q <= 3) throw std::invalid_argument("Ree counts need q > 3 (q = 3 is computed directly)");
    std::uint64_t q2 = q * q, q3 = q2 * q, q6 = q3 * q3;
    CoverCounts out;
    out.components.push_back({"tori", q6});
    out.components.push_back({"F-centralizer", q2 * (q3 + 1)});
    if (c == 1)
        out.components.push_back({"Q_h", (q * (q - 1) / 2) * (q3 + 1)});
    else if (c == 2)
        out.components.push_back({"P_g", ((q - 1) / 2) * (q3 + 1)});
    else
        out.components.push_back({"sylow-p", q3 + 1});
    for (const auto& comp : out.components) out.total += comp.count;
    return out;
}

// ---------------------------------------------------------------------------
// Grown covers and hybrid certification
// ---------------------------------------------------------------------------

namespace {

// Extends H to a maximal c-nilpotent subgroup by normalizer ascent: a proper
// c-nilpotent overgroup always meets N_G(H) outside H.
Subgroup grow_maximal(const FiniteGroup& g, std::uint32_t seed, ClassBound c) {
    Subgroup H = close(g, {seed});
    if (c == 1) {
        // abelian case: extend inside the centralizer of H
        while (true) {
            std::vector<std::uint32_t> gens = generating_set(H);
            std::uint32_t pick = g.size();
            for (std::uint32_t y = 0; y < g.size(); ++y) {
                if (H.contains(y)) continue;
                bool commutes = true;
                for (std::uint32_t s : gens)
                    if (g.mul(y, s) != g.mul(s, y)) {
                        commutes = false;
                        break;
                    }
                if (commutes) {
                    pick = y;
                    break;
                }
            }
            if (pick == g.size()) return H;
            std::vector<std::uint32_t> gens2 = generating_set(H);
            gens2.push_back(pick);
            H = close(g, gens2);
        }
    }
    while (true) {
        std::vector<std::uint32_t> gens = generating_set(H);
        bool extended = false;
        for (std::uint32_t y = 0; y < g.size() && !extended; ++y) {
            if (H.contains(y)) continue;
            bool normalizes = true;
            for (std::uint32_t s : gens)
                if (!H.contains(g.conjugate(s, y))) {
                    normalizes = false;
                    break;
                }
            if (!normalizes) continue;
            std::vector<std::uint32_t> gens2 = gens;
            gens2.push_back(y);
            Subgroup H2 = close(g, gens2);
            NilClass nc = nilpotency_class(H2);
            if (!nc.nonnilpotent() && (c == kInfiniteBound || nc.v <= c)) {
                H = std::move(H2);
                extended = true;
            }
        }
        if (!extended) return H;
    }
}

} // namespace

std::vector<Subgroup> grown_cover(const PairClassTable& table, ClassBound c) {
    const FiniteGroup& g = table.group();
    std::vector<bool> covered(g.size(), false);
    std::vector<Subgroup> out;

    if (c == 1) {
        // forced members first: when C_G(x) is abelian it is the unique
        // maximal abelian subgroup containing x, so any optimal abelian
        // cover contains it
        for (std::uint32_t x = 0; x < g.size(); ++x) {
            if (covered[x] || x == g.identity()) continue;
            Subgroup C = g.centralizer(x);
            if (!is_abelian(g, C)) continue;
            for (std::uint32_t m : C.members) covered[m] = true;
            out.push_back(std::move(C));
        }
    }
    for (std::uint32_t x = 0; x < g.size(); ++x) {
        if (covered[x] || x == g.identity()) continue;
        Subgroup H = grow_maximal(g, x, c);
        for (std::uint32_t m : H.members) covered[m] = true;
        out.push_back(std::move(H));
    }
    if (out.empty()) {
        // trivial group: cover by the trivial subgroup
        Subgroup t;
        t.parent = &g;
        t.members = {g.identity()};
        out.push_back(std::move(t));
    }

    // drop members made redundant by later picks (greedy often re-covers an
    // early member's elements while chasing its own leftovers)
    std::vector<std::uint16_t> count(g.size(), 0);
    for (const Subgroup& s : out)
        for (std::uint32_t m : s.members)
            if (count[m] < 0xFFFF) ++count[m];
    std::vector<Subgroup> kept;
    kept.reserve(out.size());
    for (Subgroup& s : out) {
        bool redundant = true;
        for (std::uint32_t m : s.members)
            if (m != g.identity() && count[m] == 1) {
                redundant = false;
                break;
            }
        if (redundant) {
            for (std::uint32_t m : s.members) --count[m];
        } else {
            kept.push_back(std::move(s));
        }
    }
    if (kept.empty()) return out; // trivial group
    return kept;
}

std::optional<std::vector<std::uint32_t>> cover_distinguished_set(
    const PairClassTable& table, const std::vector<Subgroup>& cover, ClassBound c) {
    const FiniteGroup& g = table.group();
    std::vector<std::uint16_t> count(g.size(), 0);
    for (const Subgroup& s : cover)
        for (std::uint32_t x : s.members)
            if (count[x] < 0xFFFF) ++count[x];
    std::vector<std::uint32_t> dist;
    dist.reserve(cover.size());
    for (const Subgroup& s : cover) {
        std::uint32_t pick = g.size();
        for (std::uint32_t x : s.members)
            if (x != g.identity() && count[x] == 1) {
                pick = x;
                break;
            }
        if (pick == g.size()) return std::nullopt;
        dist.push_back(pick);
    }
    for (std::size_t i = 0; i < dist.size(); ++i)
        for (std::size_t j = i + 1; j < dist.size(); ++j) {
            std::uint8_t cls = table.at(dist[i], dist[j]);
            if (cls != kNonNilpotent && (c == kInfiniteBound || cls <= c)) return std::nullopt;
        }
    return dist;
}

std::optional<Cover> hybrid_certified_cover(std::shared_ptr<const PairClassTable> table,
                                            const FamilySpec& spec, ClassBound c,
                                            std::int64_t timeout_ms) {
    std::vector<Subgroup> cover = grown_cover(*table, c);
    NilGraph gr = NilGraph::build(table, c);
    MisOptions opts;
    opts.timeout_ms = timeout_ms;
    opts.stop_at = std::uint32_t(cover.size());
    if (auto dist = cover_distinguished_set(*table, cover, c)) opts.seed = *dist;
    MisResult mis = independence_number(gr, opts);
    if (!mis.exact || mis.lo != cover.size()) return std::nullopt;

    // match each independent vertex to the member containing it; member-sets
    // of distinct independent vertices are disjoint, so with equal sizes the
    // assignment is a bijection
    Cover cv;
    cv.group = table->group_ptr();
    cv.spec = spec;
    cv.c = c;
    std::vector<std::optional<std::uint32_t>> dist(cover.size());
    for (std::uint32_t v : mis.witness) {
        bool placed = false;
        for (std::size_t i = 0; i < cover.size() && !placed; ++i)
            if (!dist[i] && cover[i].contains(v)) {
                dist[i] = v;
                placed = true;
            }
        if (!placed) return std::nullopt; // cannot happen for a true cover
    }
    for (std::size_t i = 0; i < cover.size(); ++i) {
        if (!dist[i]) return std::nullopt;
        cv.members.push_back({MemberKind::grown, std::move(cover[i]), dist[i]});
    }
    return cv;
}

// ---------------------------------------------------------------------------
// Ree Sylow-local families
// ---------------------------------------------------------------------------

ReeSylowLocal ree_sylow_local(const FiniteGroup& P, const FamilySpec& spec, ClassBound c) {
    if (spec.family != Family::ReeSylowP)
        throw std::invalid_argument("ree_sylow_local expects a ReeSylowP group");
    if (c != 1 && c != 2) throw std::invalid_argument("Sylow-local families exist for c = 1, 2");
    const std::uint32_t q = spec.q;
    FiniteField F = FiniteField::make(3, spec.a);

    // decode triples straight from the canonical encodings
    auto coords = [&](std::uint32_t i) {
        const Enc& e = P.encoding(i);
        return ReeTriple{e.b[1], e.b[2], e.b[3]};
    };
    auto find_index = [&](const ReeTriple& t) {
        Enc e;
        e.len = 4;
        e.b[0] = std::uint8_t(EncTag::ree_triple);
        e.b[1] = std::uint8_t(t.x);
        e.b[2] = std::uint8_t(t.y);
        e.b[3] = std::uint8_t(t.z);
        return P.index_of(e);
    };

    ReeSylowLocal out;
    out.c = c;
    std::vector<std::vector<std::uint32_t>> family;
    std::vector<std::uint32_t> reps;

    if (c == 2) {
        // P_g = <g, Z_2(P)> = {x in {0, x0, 2x0}} for spans of x0 over F_3
        std::vector<bool> span_seen(q, false);
        for (std::uint32_t x0 = 1; x0 < q; ++x0) {
            std::uint32_t alt = F.neg(x0);
            if (span_seen[x0] || span_seen[alt]) continue;
            span_seen[x0] = span_seen[alt] = true;
            std::vector<std::uint32_t> member;
            for (std::uint32_t xc : {0u, x0, alt})
                for (std::uint32_t y = 0; y < q; ++y)
                    for (std::uint32_t z = 0; z < q; ++z)
                        member.push_back(find_index(ReeTriple{xc, y, z}));
            std::sort(member.begin(), member.end());
            // distinguished: an order-9 element with this x-coordinate
            std::uint32_t rep = P.size();
            for (std::uint32_t i : member)
                if (coords(i).x == x0 && P.element_order(i) == 9) {
                    rep = i;
                    break;
                }
            if (rep == P.size()) throw std::logic_error("no order-9 representative in P_g");
            reps.push_back(rep);
            family.push_back(std::move(member));
        }
        out.member_order = 3ull * q * q;
    } else {
        // Q_h = <h, Z(P)> = {(x,y) in the span of (x0,y0), z free}, x0 != 0
        std::vector<std::vector<bool>> span_seen(q, std::vector<bool>(q, false));
        for (std::uint32_t x0 = 1; x0 < q; ++x0)
            for (std::uint32_t y0 = 0; y0 < q; ++y0) {
                std::uint32_t xa = F.neg(x0), ya = F.neg(y0);
                if (span_seen[x0][y0] || span_seen[xa][ya]) continue;
                span_seen[x0][y0] = span_seen[xa][ya] = true;
                std::vector<std::uint32_t> member;
                for (auto [xc, yc] : {std::pair<std::uint32_t, std::uint32_t>{0, 0}, {x0, y0}, {xa, ya}})
                    for (std::uint32_t z = 0; z < q; ++z)
                        member.push_back(find_index(ReeTriple{xc, yc, z}));
                std::sort(member.begin(), member.end());
                std::uint32_t rep = P.size();
                for (std::uint32_t i : member) {
                    ReeTriple t = coords(i);
                    if (t.x == x0 && t.y == y0 && P.element_order(i) == 9) {
                        rep = i;
                        break;
                    }
                }
                if (rep == P.size()) throw std::logic_error("no order-9 representative in Q_h");
                reps.push_back(rep);
                family.push_back(std::move(member));
            }
        out.member_order = 3ull * q;
    }
    out.family_count = family.size();

    // covering of the required set
    std::vector<bool> hit(P.size(), false);
    for (const auto& mem : family)
        for (std::uint32_t i : mem) hit[i] = true;
    bool covers = true;
    for (std::uint32_t i = 0; i < P.size(); ++i) {
        ReeTriple t = coords(i);
        bool required = (c == 2) || t.x != 0 || (t.x == 0 && t.y == 0); // c=1: P \ Z2 plus Z(P)
        if (required && !hit[i]) covers = false;
    }
    out.covers_required_set = covers;

    // pairwise: class 3 for c = 2 (distinct spans), noncommuting for c = 1
    bool ok = true;
    for (std::size_t i = 0; i < reps.size() && ok; ++i)
        for (std::size_t j = i + 1; j < reps.size() && ok; ++j) {
            if (c == 2) {
                NilClass nc = pair_class(P, reps[i], reps[j]);
                if (nc.nonnilpotent() || nc.v != 3) ok = false;
            } else {
                if (P.mul(reps[i], reps[j]) == P.mul(reps[j], reps[i])) ok = false;
            }
        }
    out.pairwise_ok = ok;
    return out;
}

// ---------------------------------------------------------------------------
// Theorem-4.3 lower-bound sets
// ---------------------------------------------------------------------------

SylowLowerBound sylow_lower_bound_set(const FiniteGroup& g, const FamilySpec& spec,
                                      const std::vector<std::uint32_t>& tori_primes) {
    if (spec.family != Family::SL2 && spec.family != Family::PGL2 && spec.family != Family::PSL2)
        throw std::invalid_argument("lower-bound sets are built for the A1 families (|W| = 2)");
    const std::uint64_t weyl_order = 2;

    SylowLowerBound out;
    auto add_unique_members = [&](std::uint32_t t) -> std::uint64_t {
        auto sylows = sylow_subgroups(g, t);
        auto uniq = unique_sylow_members(g, sylows);
        std::vector<bool> is_uniq(g.size(), false);
        for (std::uint32_t u : uniq) is_uniq[u] = true;
        std::uint64_t added = 0;
        for (const Subgroup& P : sylows) {
            std::uint32_t pick = g.size();
            for (std::uint32_t x : P.members)
                if (x != g.identity() && is_uniq[x]) {
                    pick = x;
                    break;
                }
            if (pick == g.size())
                throw std::logic_error("Sylow subgroup without unique-membership element for t = " +
                                       std::to_string(t));
            out.elements.push_back(pick);
            ++added;
        }
        return added;
    };

    out.nu_p = add_unique_members(spec.p);
    for (std::uint32_t t : tori_primes) {
        if (t % weyl_order == 0 || t == spec.p)
            throw std::invalid_argument("torus prime " + std::to_string(t) +
                                        " must be odd and different from p");
        out.nu_t.emplace_back(t, add_unique_members(t));
    }

    // pairwise verification
    g.element_orders();
    bool ok = true;
    for (std::size_t i = 0; i < out.elements.size() && ok; ++i)
        for (std::size_t j = i + 1; j < out.elements.size(); ++j)
            if (!pair_class(g, out.elements[i], out.elements[j]).nonnilpotent()) {
                ok = false;
                break;
            }
    out.verified_nonnilpotent = ok;
    return out;
}

} // namespace nilcov
