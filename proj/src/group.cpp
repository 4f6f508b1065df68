#include "nilcov/group.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace nilcov {

std::string Enc::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(2 * len);
    for (std::uint8_t i = 0; i < len; ++i) {
        s.push_back(digits[b[i] >> 4]);
        s.push_back(digits[b[i] & 15]);
    }
    return s;
}

std::string bound_to_string(ClassBound c) {
    return c == kInfiniteBound ? "inf" : std::to_string(c);
}

ClassBound bound_from_string(const std::string& s) {
    if (s == "inf" || s == "infinity" || s == "oo") return kInfiniteBound;
    int v = std::stoi(s);
    if (v < 1 || v >= kInfiniteBound) throw std::invalid_argument("class bound out of range: " + s);
    return ClassBound(v);
}

bool Subgroup::contains(std::uint32_t i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

// ---------------------------------------------------------------------------
// FiniteGroup construction
// ---------------------------------------------------------------------------

namespace {
struct EncHash {
    std::size_t operator()(const Enc& e) const { return std::size_t(e.hash()); }
};
constexpr std::uint32_t kEmptySlot = 0xFFFFFFFFu;
} // namespace

std::shared_ptr<FiniteGroup> FiniteGroup::enumerate(std::shared_ptr<const GroupOps> ops,
                                                    const std::vector<Enc>& generators,
                                                    std::uint64_t expected_order, std::string name) {
    std::unordered_set<Enc, EncHash> seen;
    std::vector<Enc> frontier;
    Enc id = ops->identity();
    seen.insert(id);
    frontier.push_back(id);
    const std::size_t cap = global_config().closure_cap;
    while (!frontier.empty()) {
        std::vector<Enc> next;
        for (const Enc& x : frontier)
            for (const Enc& g : generators) {
                Enc y = ops->mul(x, g);
                if (seen.insert(y).second) next.push_back(y);
            }
        if (seen.size() > cap) throw closure_cap_exceeded(cap);
        frontier = std::move(next);
    }
    if (expected_order && seen.size() != expected_order)
        throw std::logic_error(name + ": enumerated order " + std::to_string(seen.size()) +
                               " does not match expected " + std::to_string(expected_order));

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->ops_ = std::move(ops);
    g->name_ = std::move(name);
    g->elems_.assign(seen.begin(), seen.end());
    std::sort(g->elems_.begin(), g->elems_.end());
    g->finish_build();
    for (const Enc& e : generators) g->gen_idx_.push_back(g->index_of(e));
    std::sort(g->gen_idx_.begin(), g->gen_idx_.end());
    g->gen_idx_.erase(std::unique(g->gen_idx_.begin(), g->gen_idx_.end()), g->gen_idx_.end());
    return g;
}

std::shared_ptr<FiniteGroup> FiniteGroup::from_elements(std::shared_ptr<const GroupOps> ops,
                                                        std::vector<Enc> elements, std::string name) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->ops_ = std::move(ops);
    g->name_ = std::move(name);
    g->elems_ = std::move(elements);
    std::sort(g->elems_.begin(), g->elems_.end());
    g->elems_.erase(std::unique(g->elems_.begin(), g->elems_.end()), g->elems_.end());
    g->finish_build();
    // recover a small generating set so conjugation orbits stay cheap
    Subgroup whole;
    whole.parent = g.get();
    whole.members.resize(g->n_);
    for (std::uint32_t i = 0; i < g->n_; ++i) whole.members[i] = i;
    g->gen_idx_ = generating_set(whole);
    return g;
}

void FiniteGroup::finish_build() {
    n_ = std::uint32_t(elems_.size());
    // open-addressing index
    std::uint64_t slots = 16;
    while (slots < 2ull * n_) slots <<= 1;
    mask_ = slots - 1;
    slots_.assign(slots, kEmptySlot);
    for (std::uint32_t i = 0; i < n_; ++i) {
        std::uint64_t s = elems_[i].hash() & mask_;
        while (slots_[s] != kEmptySlot) s = (s + 1) & mask_;
        slots_[s] = i;
    }
    id_ = index_of(ops_->identity());
    inv_.resize(n_);
    for (std::uint32_t i = 0; i < n_; ++i) inv_[i] = index_of(ops_->inv(elems_[i]));

    std::uint64_t m = n_;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            primes_.push_back(std::uint32_t(d));
            while (m % d == 0) m /= d;
        }
    if (m > 1) primes_.push_back(std::uint32_t(m));

    if (n_ <= kMulTableCap && n_ > 1) {
        table_store_.reset(new std::uint32_t[std::size_t(n_) * n_]);
        std::uint32_t* tbl = table_store_.get();
        parallel_blocks(n_, [&](std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i)
                for (std::size_t j = 0; j < n_; ++j)
                    tbl[i * n_ + j] = index_of(ops_->mul(elems_[i], elems_[j]));
        });
        table_ = tbl;
    }
}

std::uint32_t FiniteGroup::mul_nocache(std::uint32_t i, std::uint32_t j) const {
    return index_of(ops_->mul(elems_[i], elems_[j]));
}

std::uint32_t FiniteGroup::index_of(const Enc& e) const {
    std::uint64_t s = e.hash() & mask_;
    while (true) {
        std::uint32_t idx = slots_[s];
        if (idx == kEmptySlot) throw std::logic_error("element not in group (set not closed?)");
        if (elems_[idx] == e) return idx;
        s = (s + 1) & mask_;
    }
}

std::optional<std::uint32_t> FiniteGroup::find(const Enc& e) const {
    std::uint64_t s = e.hash() & mask_;
    while (true) {
        std::uint32_t idx = slots_[s];
        if (idx == kEmptySlot) return std::nullopt;
        if (elems_[idx] == e) return idx;
        s = (s + 1) & mask_;
    }
}

std::uint32_t FiniteGroup::power(std::uint32_t x, std::uint64_t e) const {
    std::uint32_t r = id_;
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

const std::vector<std::uint32_t>& FiniteGroup::element_orders() const {
    std::call_once(orders_once_, [this] {
        std::vector<std::uint32_t> ord(n_);
        parallel_blocks(n_, [&](std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) {
                std::uint64_t o = n_;
                for (std::uint32_t p : primes_)
                    while (o % p == 0 && power(std::uint32_t(i), o / p) == id_) o /= p;
                ord[i] = std::uint32_t(o);
            }
        });
        orders_ = std::move(ord);
    });
    return orders_;
}

std::uint32_t FiniteGroup::element_order(std::uint32_t i) const { return element_orders()[i]; }

const std::vector<std::vector<std::uint32_t>>& FiniteGroup::conjugacy_classes() const {
    std::call_once(classes_once_, [this] {
        std::vector<std::uint32_t> cls(n_, kEmptySlot);
        std::vector<std::vector<std::uint32_t>> out;
        std::vector<std::uint32_t> conjgens;
        for (std::uint32_t g : gen_idx_) {
            conjgens.push_back(g);
            conjgens.push_back(inv_[g]);
        }
        for (std::uint32_t r = 0; r < n_; ++r) {
            if (cls[r] != kEmptySlot) continue;
            std::uint32_t cid = std::uint32_t(out.size());
            std::vector<std::uint32_t> orbit{r}, queue{r};
            cls[r] = cid;
            while (!queue.empty()) {
                std::uint32_t z = queue.back();
                queue.pop_back();
                for (std::uint32_t c : conjgens) {
                    std::uint32_t w = conjugate(z, c);
                    if (cls[w] == kEmptySlot) {
                        cls[w] = cid;
                        orbit.push_back(w);
                        queue.push_back(w);
                    }
                }
            }
            std::sort(orbit.begin(), orbit.end());
            out.push_back(std::move(orbit));
        }
        class_of_ = std::move(cls);
        classes_ = std::move(out);
    });
    return classes_;
}

std::uint32_t FiniteGroup::centralizer_order(std::uint32_t i) const {
    conjugacy_classes();
    return n_ / std::uint32_t(classes_[class_of_[i]].size());
}

Subgroup FiniteGroup::centralizer(std::uint32_t x) const {
    Subgroup s;
    s.parent = this;
    for (std::uint32_t h = 0; h < n_; ++h)
        if (mul(h, x) == mul(x, h)) s.members.push_back(h);
    return s;
}

Subgroup FiniteGroup::center() const {
    conjugacy_classes();
    Subgroup s;
    s.parent = this;
    for (std::uint32_t i = 0; i < n_; ++i)
        if (classes_[class_of_[i]].size() == 1) s.members.push_back(i);
    return s;
}

bool FiniteGroup::is_simple() const {
    if (n_ == 1) return false;
    const auto& cls = conjugacy_classes();
    for (const auto& c : cls) {
        std::uint32_t rep = c.front();
        if (rep == id_ && c.size() == 1) continue;
        Subgroup nc = normal_closure(*this, {rep});
        if (nc.size() != n_) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Subgroup algorithms
// ---------------------------------------------------------------------------

namespace {

// Bitset over group indices.
struct IndexSet {
    std::vector<std::uint64_t> w;
    explicit IndexSet(std::uint32_t n) : w((n + 63) / 64, 0) {}
    bool test(std::uint32_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(std::uint32_t i) { w[i >> 6] |= 1ull << (i & 63); }
};

std::vector<std::uint32_t> close_indices(const FiniteGroup& g, const std::vector<std::uint32_t>& gens,
                                         std::size_t cap) {
    IndexSet seen(g.size());
    std::vector<std::uint32_t> members{g.identity()}, queue{g.identity()};
    seen.set(g.identity());
    while (!queue.empty()) {
        std::uint32_t x = queue.back();
        queue.pop_back();
        for (std::uint32_t ge : gens) {
            std::uint32_t y = g.mul(x, ge);
            if (!seen.test(y)) {
                seen.set(y);
                members.push_back(y);
                queue.push_back(y);
                if (members.size() > cap) throw closure_cap_exceeded(cap);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

} // namespace

Subgroup close(const FiniteGroup& g, const std::vector<std::uint32_t>& gens) {
    if (gens.empty()) throw std::invalid_argument("close: empty generator list");
    for (std::uint32_t x : gens)
        if (x >= g.size()) throw std::invalid_argument("close: generator index out of range");
    Subgroup s;
    s.parent = &g;
    s.members = close_indices(g, gens, global_config().closure_cap);
    if (g.size() % s.members.size() != 0)
        throw std::logic_error("closure size does not divide group order"); // Lagrange sanity
    return s;
}

std::vector<std::uint32_t> generating_set(const Subgroup& h) {
    const FiniteGroup& g = *h.parent;
    std::vector<std::uint32_t> gens;
    if (h.size() == 1) return {g.identity()};
    std::vector<std::uint32_t> have{g.identity()};
    for (std::uint32_t m : h.members) {
        if (std::binary_search(have.begin(), have.end(), m)) continue;
        gens.push_back(m);
        have = close_indices(g, gens, h.size());
        if (have.size() == h.size()) break;
    }
    return gens;
}

Subgroup normal_closure(const FiniteGroup& g, const std::vector<std::uint32_t>& seeds) {
    std::vector<std::uint32_t> conjgens;
    for (std::uint32_t c : g.generator_indices()) {
        conjgens.push_back(c);
        conjgens.push_back(g.inv(c));
    }
    std::vector<std::uint32_t> gens = seeds;
    std::vector<std::uint32_t> members;
    while (true) {
        members = close_indices(g, gens, global_config().closure_cap);
        bool grew = false;
        for (std::uint32_t s : gens) {
            for (std::uint32_t c : conjgens) {
                std::uint32_t t = g.conjugate(s, c);
                if (!std::binary_search(members.begin(), members.end(), t)) {
                    gens.push_back(t);
                    grew = true;
                }
            }
            if (grew) break;
        }
        if (!grew) break;
    }
    Subgroup out;
    out.parent = &g;
    out.members = std::move(members);
    return out;
}

// Normal closure of seed elements inside the subgroup generated by hgens,
// conjugating by hgens only. Used for lower central series terms, which are
// normal in that subgroup.
static std::vector<std::uint32_t> normal_closure_in(const FiniteGroup& g,
                                                    std::vector<std::uint32_t> gens,
                                                    const std::vector<std::uint32_t>& hgens,
                                                    std::size_t cap) {
    std::vector<std::uint32_t> conjgens;
    for (std::uint32_t c : hgens) {
        conjgens.push_back(c);
        conjgens.push_back(g.inv(c));
    }
    gens.erase(std::remove(gens.begin(), gens.end(), g.identity()), gens.end());
    if (gens.empty()) return {g.identity()};
    std::vector<std::uint32_t> members;
    while (true) {
        members = close_indices(g, gens, cap);
        bool grew = false;
        for (std::size_t si = 0; si < gens.size() && !grew; ++si)
            for (std::uint32_t c : conjgens) {
                std::uint32_t t = g.conjugate(gens[si], c);
                if (!std::binary_search(members.begin(), members.end(), t)) {
                    gens.push_back(t);
                    grew = true;
                    break;
                }
            }
        if (!grew) break;
    }
    return members;
}

// gamma_{i+1} = [gamma_i, H] computed from generating sets; both arguments
// normal in H, so the commutators of generators normally generate the bracket.
static NilClass lcs_class(const FiniteGroup& g, const std::vector<std::uint32_t>& hmembers,
                          const std::vector<std::uint32_t>& hgens) {
    if (hmembers.size() == 1) return NilClass{0};
    std::vector<std::uint32_t> gamma_gens = hgens;
    std::size_t prev = hmembers.size();
    for (std::uint8_t cls = 1; cls <= 64; ++cls) {
        std::vector<std::uint32_t> seeds;
        for (std::uint32_t a : gamma_gens)
            for (std::uint32_t s : hgens) {
                std::uint32_t c = g.commutator(a, s);
                if (c != g.identity()) seeds.push_back(c);
            }
        if (seeds.empty()) return NilClass{cls};
        std::vector<std::uint32_t> nxt = normal_closure_in(g, seeds, hgens, prev);
        if (nxt.size() == 1) return NilClass{cls};
        if (nxt.size() >= prev) return NilClass{kNonNilpotent}; // series stabilized
        prev = nxt.size();
        // small term: its member list is an adequate generating set
        gamma_gens = std::move(nxt);
    }
    throw std::logic_error("lower central series exceeded iteration guard");
}

NilClass nilpotency_class(const Subgroup& h) {
    if (!h.parent) throw std::invalid_argument("nilpotency_class: detached subgroup");
    if (h.size() == 1) return NilClass{0};
    std::vector<std::uint32_t> gens = generating_set(h);
    return lcs_class(*h.parent, h.members, gens);
}

// ---------------------------------------------------------------------------
// pair_class
// ---------------------------------------------------------------------------

namespace {

// p such that n = p^a, else 0.
std::uint32_t prime_power_base(std::uint32_t n, const std::vector<std::uint32_t>& primes) {
    if (n <= 1) return 0;
    for (std::uint32_t p : primes) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        return n == 1 ? p : 0;
    }
    return 0;
}

// Closure of <x, y> that stops early with a sound non-nilpotency certificate:
// two noncommuting elements of coprime prime-power orders inside the closure.
struct PairClosure {
    bool nonnilpotent = false;
    std::vector<std::uint32_t> members; // sorted, only when !nonnilpotent
};

PairClosure close_pair(const FiniteGroup& g, std::uint32_t x, std::uint32_t y) {
    const auto& ord = g.element_orders();
    const auto& primes = g.prime_factors();
    // registry of prime-power parts seen so far, a few per prime
    std::vector<std::vector<std::uint32_t>> reps(primes.size());
    auto feed = [&](std::uint32_t z) -> bool { // true => certified non-nilpotent
        std::uint32_t oz = ord[z];
        if (oz == 1) return false;
        for (std::size_t pi = 0; pi < primes.size(); ++pi) {
            std::uint32_t p = primes[pi];
            if (oz % p) continue;
            std::uint32_t rest = oz;
            while (rest % p == 0) rest /= p;
            std::uint32_t zp = g.power(z, rest); // p-part of z, a power of z
            if (zp == g.identity()) continue;
            for (std::size_t qi = 0; qi < primes.size(); ++qi) {
                if (qi == pi) continue;
                for (std::uint32_t w : reps[qi])
                    if (g.commutator(zp, w) != g.identity()) return true;
            }
            auto& bucket = reps[pi];
            if (bucket.size() < 6 && std::find(bucket.begin(), bucket.end(), zp) == bucket.end())
                bucket.push_back(zp);
        }
        return false;
    };

    const std::size_t cap = global_config().closure_cap;
    IndexSet seen(g.size());
    std::vector<std::uint32_t> members{g.identity()}, queue;
    seen.set(g.identity());
    PairClosure out;
    for (std::uint32_t s : {x, y})
        if (!seen.test(s)) {
            seen.set(s);
            members.push_back(s);
            queue.push_back(s);
            if (feed(s)) {
                out.nonnilpotent = true;
                return out;
            }
        }
    const std::uint32_t gens[2] = {x, y};
    std::size_t head = 0;
    while (head < queue.size()) {
        std::uint32_t z = queue[head++];
        for (std::uint32_t ge : gens) {
            std::uint32_t w = g.mul(z, ge);
            if (seen.test(w)) continue;
            seen.set(w);
            members.push_back(w);
            queue.push_back(w);
            if (members.size() > cap) throw closure_cap_exceeded(cap);
            if (feed(w)) {
                out.nonnilpotent = true;
                return out;
            }
        }
    }
    std::sort(members.begin(), members.end());
    out.members = std::move(members);
    return out;
}

} // namespace

NilClass pair_class(const FiniteGroup& g, std::uint32_t x, std::uint32_t y) {
    if (x >= g.size() || y >= g.size()) throw std::invalid_argument("pair_class: index out of range");
    std::uint32_t id = g.identity();
    if (x == id && y == id) return NilClass{0};
    // <x> is cyclic, so nontrivial abelian
    if (x == y || x == id || y == id) return NilClass{1};
    // commuting pair: the closure is abelian, no need to form it
    if (g.mul(x, y) == g.mul(y, x)) return NilClass{1};

    const auto& ord = g.element_orders();
    std::uint32_t px = prime_power_base(ord[x], g.prime_factors());
    std::uint32_t py = prime_power_base(ord[y], g.prime_factors());
    // noncommuting elements of coprime prime-power orders never generate a
    // nilpotent subgroup
    if (px && py && px != py) return NilClass{kNonNilpotent};
    if (px && py && px == py) {
        // generated by two p-elements: nilpotent iff the closure is a p-group
        const std::size_t cap = global_config().closure_cap;
        IndexSet seen(g.size());
        std::vector<std::uint32_t> members{id}, queue{x};
        seen.set(id);
        if (!seen.test(x)) {
            seen.set(x);
            members.push_back(x);
        }
        if (!seen.test(y)) {
            seen.set(y);
            members.push_back(y);
            queue.push_back(y);
        }
        const std::uint32_t gens[2] = {x, y};
        std::size_t head = 0;
        while (head < queue.size()) {
            std::uint32_t z = queue[head++];
            for (std::uint32_t ge : gens) {
                std::uint32_t w = g.mul(z, ge);
                if (seen.test(w)) continue;
                std::uint32_t ow = ord[w];
                std::uint32_t r = ow;
                while (r % px == 0) r /= px;
                if (r != 1) return NilClass{kNonNilpotent}; // escaped the p-world
                seen.set(w);
                members.push_back(w);
                queue.push_back(w);
                if (members.size() > cap) throw closure_cap_exceeded(cap);
            }
        }
        std::sort(members.begin(), members.end());
        return lcs_class(g, members, {x, y});
    }

    PairClosure pc = close_pair(g, x, y);
    if (pc.nonnilpotent) return NilClass{kNonNilpotent};
    return lcs_class(g, pc.members, {x, y});
}

// ---------------------------------------------------------------------------
// Sylow machinery
// ---------------------------------------------------------------------------

std::vector<Subgroup> sylow_subgroups(const FiniteGroup& g, std::uint32_t t) {
    if (g.size() % t != 0) throw std::invalid_argument("sylow_subgroups: prime does not divide group order");
    std::uint64_t tpart = 1, m = g.size();
    while (m % t == 0) {
        m /= t;
        tpart *= t;
    }
    const auto& ord = g.element_orders();

    // seed: any maximal-order t-element's cyclic group
    std::uint32_t seed = g.identity();
    std::uint32_t best = 1;
    for (std::uint32_t i = 0; i < g.size(); ++i) {
        std::uint32_t o = ord[i], r = o;
        while (r % t == 0) r /= t;
        if (r == 1 && o > best) {
            best = o;
            seed = i;
        }
    }
    if (seed == g.identity() && tpart > 1) {
        // no pure t-element found directly; take the t-part of any element of
        // order divisible by t
        for (std::uint32_t i = 0; i < g.size(); ++i)
            if (ord[i] % t == 0) {
                std::uint32_t r = ord[i];
                while (r % t == 0) r /= t;
                seed = g.power(i, r);
                break;
            }
    }
    Subgroup P = close(g, {seed});

    // greedy ascent through normalizers
    while (P.size() < tpart) {
        std::vector<std::uint32_t> pgens = generating_set(P);
        std::uint32_t extend = kEmptySlot;
        for (std::uint32_t h = 0; h < g.size() && extend == kEmptySlot; ++h) {
            std::uint32_t o = ord[h], r = o;
            while (r % t == 0) r /= t;
            if (r != 1 || P.contains(h)) continue;
            bool normalizes = true;
            for (std::uint32_t pg : pgens)
                if (!P.contains(g.conjugate(pg, h))) {
                    normalizes = false;
                    break;
                }
            if (normalizes) extend = h;
        }
        if (extend == kEmptySlot)
            throw std::logic_error("sylow ascent stalled below full t-part");
        std::vector<std::uint32_t> gens = generating_set(P);
        gens.push_back(extend);
        P = close(g, gens);
    }

    // conjugation orbit
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
    std::vector<std::vector<std::uint32_t>> queue{P.members};
    seen.insert(P.members);
    while (!queue.empty()) {
        std::vector<std::uint32_t> cur = std::move(queue.back());
        queue.pop_back();
        for (std::uint32_t c : conjgens) {
            std::vector<std::uint32_t> img(cur.size());
            for (std::size_t i = 0; i < cur.size(); ++i) img[i] = g.conjugate(cur[i], c);
            std::sort(img.begin(), img.end());
            if (seen.insert(img).second) queue.push_back(img);
        }
    }
    std::vector<Subgroup> out;
    out.reserve(seen.size());
    for (const auto& v : seen) {
        Subgroup s;
        s.parent = &g;
        s.members = v;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(),
              [](const Subgroup& a, const Subgroup& b) { return a.members < b.members; });
    if (out.size() % t != 1) throw std::logic_error("Sylow count is not 1 mod t");
    if (g.size() % out.size() != 0) throw std::logic_error("Sylow count does not divide group order");
    return out;
}

std::vector<std::uint32_t> unique_sylow_members(const FiniteGroup& g,
                                                const std::vector<Subgroup>& sylows) {
    std::vector<std::uint16_t> count(g.size(), 0);
    for (const auto& s : sylows)
        for (std::uint32_t m : s.members)
            if (count[m] < 0xFFFF) ++count[m];
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < g.size(); ++i)
        if (count[i] == 1) out.push_back(i);
    return out;
}

std::vector<std::uint32_t> unique_sylow_members(const FiniteGroup& g, std::uint32_t t) {
    return unique_sylow_members(g, sylow_subgroups(g, t));
}

// ---------------------------------------------------------------------------
// PairClassTable
// ---------------------------------------------------------------------------

PairClassTable::PairClassTable(std::shared_ptr<const FiniteGroup> g) : g_(std::move(g)) {
    const FiniteGroup& G = *g_;
    std::uint32_t n = G.size();
    G.element_orders(); // warm the shared cache before going parallel
    diag_.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) diag_[i] = (i == G.identity()) ? 0 : 1;
    tri_.assign(std::size_t(n) * (n - 1) / 2, 0);

    std::atomic<std::uint32_t> next_row{0};
    unsigned nt = global_config().effective_threads();
    std::vector<std::thread> pool;
    auto work = [&] {
        while (true) {
            std::uint32_t x = next_row.fetch_add(1);
            if (x >= n) break;
            std::size_t base = (std::size_t(x) * (2 * n - x - 1)) / 2;
            for (std::uint32_t y = x + 1; y < n; ++y) tri_[base + (y - x - 1)] = pair_class(G, x, y).v;
        }
    };
    if (nt <= 1 || n < 64) {
        work();
    } else {
        for (unsigned i = 0; i < nt; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
}

// ---------------------------------------------------------------------------
// NCGT1 dump
// ---------------------------------------------------------------------------

void FiniteGroup::dump(std::ostream& os) const {
    const char magic[6] = {'N', 'C', 'G', 'T', '1', '\0'};
    os.write(magic, 6);
    auto w32 = [&](std::uint32_t v) {
        unsigned char b[4] = {(unsigned char)(v), (unsigned char)(v >> 8), (unsigned char)(v >> 16),
                              (unsigned char)(v >> 24)};
        os.write(reinterpret_cast<char*>(b), 4);
    };
    w32(1); // version
    w32(std::uint32_t(name_.size()));
    os.write(name_.data(), std::streamsize(name_.size()));
    w32(n_);
    for (const Enc& e : elems_) {
        os.put(char(e.len));
        os.write(reinterpret_cast<const char*>(e.b.data()), e.len);
    }
}

} // namespace nilcov
