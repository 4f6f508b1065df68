#include "nilcov/nilgraph.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

// Exact maximum independent set, run as a maximum clique search on the
// complement graph: branch and bound with a greedy colouring bound (colour
// classes of the complement are cliques of Gamma_c, i.e. a clique cover).
// Vertex order and tie-breaks are fixed, so results are deterministic.

namespace nilcov {

namespace {

using clock_type = std::chrono::steady_clock;

class MisSolver {
  public:
    MisSolver(const BitGraphView& view, const MisOptions& opts) : opts_(opts) {
        n_ = view.n;
        words_ = (n_ + 63) / 64;

        // static vertex order: descending compatibility degree (= ascending
        // conflict degree); tightens the greedy colouring substantially
        std::vector<std::uint32_t> degc(n_, 0);
        for (std::uint32_t v = 0; v < n_; ++v) {
            const std::uint64_t* arow = view.rows + std::size_t(v) * view.words;
            std::uint32_t adj = 0;
            for (std::size_t w = 0; w < view.words; ++w) adj += std::uint32_t(std::popcount(arow[w]));
            degc[v] = n_ - 1 - adj;
        }
        perm_.resize(n_);
        for (std::uint32_t v = 0; v < n_; ++v) perm_[v] = v;
        std::sort(perm_.begin(), perm_.end(), [&](std::uint32_t a, std::uint32_t b) {
            return degc[a] != degc[b] ? degc[a] > degc[b] : a < b;
        });
        iperm_.resize(n_);
        for (std::uint32_t v = 0; v < n_; ++v) iperm_[perm_[v]] = v;

        comp_.assign(std::size_t(n_) * words_, 0);
        for (std::uint32_t v = 0; v < n_; ++v) {
            std::uint64_t* row = comp_.data() + std::size_t(iperm_[v]) * words_;
            const std::uint64_t* arow = view.rows + std::size_t(v) * view.words;
            for (std::uint32_t u = 0; u < n_; ++u) {
                if (u == v) continue;
                bool conflict = (arow[u >> 6] >> (u & 63)) & 1;
                if (!conflict) {
                    std::uint32_t nu = iperm_[u];
                    row[nu >> 6] |= 1ull << (nu & 63);
                }
            }
        }
        if (opts_.timeout_ms > 0)
            deadline_ = clock_type::now() + std::chrono::milliseconds(opts_.timeout_ms);
    }

    MisResult run() {
        MisResult res;
        if (n_ == 0) {
            res.exact = true;
            return res;
        }
        // seed: supplied witness, else greedy by ascending complement-degree
        best_ = opts_.seed;
        for (std::uint32_t& v : best_) v = iperm_[v];
        if (best_.empty()) best_ = greedy_seed();

        // recursion depth never exceeds the independent set being built;
        // reserving keeps Frame references stable across recursive calls
        frames_.reserve(std::size_t(n_) + 2);

        std::vector<std::uint64_t> all(words_, 0);
        for (std::uint32_t v = 0; v < n_; ++v) all[v >> 6] |= 1ull << (v & 63);
        root_bound_ = colour_count(all);

        if (best_.size() < root_bound_ && !done()) {
            stack_.clear();
            expand(all, 0);
        }

        res.lo = std::uint32_t(best_.size());
        res.hi = stopped_ ? std::max(root_bound_, res.lo) : res.lo;
        res.exact = !stopped_ || (opts_.stop_at && res.lo >= opts_.stop_at);
        if (res.exact) res.hi = res.lo;
        res.witness = best_;
        for (std::uint32_t& v : res.witness) v = perm_[v]; // back to caller indices
        std::sort(res.witness.begin(), res.witness.end());
        res.nodes = nodes_;
        res.timed_out = timed_out_;
        return res;
    }

  private:
    const std::uint64_t* crow(std::uint32_t v) const { return comp_.data() + std::size_t(v) * words_; }

    bool done() {
        if (opts_.stop_at && best_.size() >= opts_.stop_at) {
            stopped_ = false; // reaching a certified upper bound is an exact finish
            return true;
        }
        if (opts_.node_cap && nodes_ > opts_.node_cap) {
            stopped_ = true;
            return true;
        }
        if (opts_.timeout_ms > 0 && (nodes_ & 1023) == 0 && clock_type::now() > deadline_) {
            stopped_ = timed_out_ = true;
            return true;
        }
        return false;
    }

    std::vector<std::uint32_t> greedy_seed() const {
        std::vector<std::uint32_t> degc(n_, 0);
        for (std::uint32_t v = 0; v < n_; ++v) {
            const std::uint64_t* row = crow(v);
            std::uint32_t d = 0;
            for (std::size_t w = 0; w < words_; ++w) d += std::uint32_t(std::popcount(row[w]));
            degc[v] = d;
        }
        std::vector<std::uint32_t> order(n_);
        for (std::uint32_t v = 0; v < n_; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return degc[a] != degc[b] ? degc[a] > degc[b] : a < b;
        });
        std::vector<std::uint64_t> ok(words_, ~0ull);
        if (n_ & 63) ok[words_ - 1] = (1ull << (n_ & 63)) - 1;
        std::vector<std::uint32_t> seed;
        for (std::uint32_t v : order) {
            if (!((ok[v >> 6] >> (v & 63)) & 1)) continue;
            seed.push_back(v);
            const std::uint64_t* row = crow(v);
            for (std::size_t w = 0; w < words_; ++w) ok[w] &= row[w];
        }
        return seed;
    }

    // number of greedy colour classes of P in the complement graph
    std::uint32_t colour_count(const std::vector<std::uint64_t>& P) const {
        std::vector<std::uint64_t> Q = P, C(words_);
        std::uint32_t colours = 0;
        while (true) {
            std::uint32_t v = first_bit(Q);
            if (v >= n_) break;
            ++colours;
            C = Q;
            while (v < n_) {
                clear_bit(Q, v);
                clear_bit(C, v);
                const std::uint64_t* row = crow(v);
                for (std::size_t w = 0; w < words_; ++w) C[w] &= ~row[w];
                v = first_bit(C);
            }
        }
        return colours;
    }

    std::uint32_t first_bit(const std::vector<std::uint64_t>& s) const {
        for (std::size_t w = 0; w < words_; ++w)
            if (s[w]) return std::uint32_t(w * 64 + std::countr_zero(s[w]));
        return n_;
    }
    static void clear_bit(std::vector<std::uint64_t>& s, std::uint32_t v) {
        s[v >> 6] &= ~(1ull << (v & 63));
    }

    struct Frame {
        std::vector<std::uint64_t> child;
        std::vector<std::uint32_t> vs, cs;
    };

    void expand(const std::vector<std::uint64_t>& P, std::size_t depth) {
        ++nodes_;
        if (done()) return;
        if (depth >= frames_.size()) frames_.emplace_back();
        Frame& fr = frames_[depth];
        fr.vs.clear();
        fr.cs.clear();

        // greedy colouring; vertices listed colour class by colour class
        {
            std::vector<std::uint64_t>& C = colour_buf_;
            std::vector<std::uint64_t>& Q = queue_buf_;
            Q = P;
            C.resize(words_);
            std::uint32_t colour = 0;
            while (true) {
                std::uint32_t v = first_bit(Q);
                if (v >= n_) break;
                ++colour;
                C = Q;
                while (v < n_) {
                    clear_bit(Q, v);
                    clear_bit(C, v);
                    const std::uint64_t* row = crow(v);
                    for (std::size_t w = 0; w < words_; ++w) C[w] &= ~row[w];
                    fr.vs.push_back(v);
                    fr.cs.push_back(colour);
                    v = first_bit(C);
                }
            }
        }

        std::vector<std::uint64_t> live = P;
        for (std::size_t i = fr.vs.size(); i-- > 0;) {
            if (stack_.size() + fr.cs[i] <= best_.size()) return; // colour bound
            std::uint32_t v = fr.vs[i];
            stack_.push_back(v);
            fr.child.resize(words_);
            const std::uint64_t* row = crow(v);
            bool empty = true;
            for (std::size_t w = 0; w < words_; ++w) {
                fr.child[w] = live[w] & row[w];
                empty &= fr.child[w] == 0;
            }
            if (empty) {
                if (stack_.size() > best_.size()) best_ = stack_;
            } else {
                expand(fr.child, depth + 1);
            }
            stack_.pop_back();
            clear_bit(live, v);
            if (done()) return;
        }
    }

    MisOptions opts_;
    std::uint32_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint32_t> perm_, iperm_; // solver order <-> caller order
    std::vector<std::uint64_t> comp_;
    std::vector<std::uint32_t> best_, stack_;
    std::vector<Frame> frames_;
    std::vector<std::uint64_t> colour_buf_, queue_buf_;
    std::uint64_t nodes_ = 0;
    std::uint32_t root_bound_ = 0;
    bool stopped_ = false, timed_out_ = false;
    clock_type::time_point deadline_{};
};

} // namespace

MisResult mis_on_bits(const BitGraphView& view, const MisOptions& opts) {
    return MisSolver(view, opts).run();
}

MisResult independence_number(const NilGraph& gr, const MisOptions& opts) {
    BitGraphView view{gr.order(), gr.words(), gr.row(0)};
    MisResult res = MisSolver(view, opts).run();
    // mandatory witness verification against the pair table
    const PairClassTable& t = gr.table();
    for (std::size_t i = 0; i < res.witness.size(); ++i)
        for (std::size_t j = i + 1; j < res.witness.size(); ++j) {
            std::uint8_t c = t.at(res.witness[i], res.witness[j]);
            bool edge = c != kNonNilpotent && (gr.bound() == kInfiniteBound || c <= gr.bound());
            if (edge) throw std::logic_error("MIS witness failed verification");
        }
    return res;
}

} // namespace nilcov
