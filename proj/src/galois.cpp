#include "nilcov/galois.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nilcov {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

using poly = std::vector<std::uint32_t>; // low degree first, may carry trailing zeros

int degree(const poly& a) {
    for (int i = int(a.size()) - 1; i >= 0; --i)
        if (a[std::size_t(i)]) return i;
    return -1;
}

// a mod b over GF(p), b monic.
poly poly_mod(poly a, const poly& b, std::uint32_t p) {
    int db = degree(b);
    for (int da = degree(a); da >= db; da = degree(a)) {
        std::uint32_t c = a[std::size_t(da)];
        for (int i = 0; i <= db; ++i) {
            std::uint64_t t = a[std::size_t(da - db + i)] + std::uint64_t(c) * (p - b[std::size_t(i)] % p);
            a[std::size_t(da - db + i)] = std::uint32_t(t % p);
        }
    }
    return a;
}

bool divides(const poly& g, const poly& f, std::uint32_t p) {
    return degree(poly_mod(f, g, p)) < 0;
}

// Trial division by every monic polynomial of degree 1..k/2.
bool is_irreducible(const poly& f, std::uint32_t p, std::uint32_t k) {
    for (std::uint32_t d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            poly g(d + 1, 0);
            std::uint64_t c = code;
            for (std::uint32_t i = 0; i < d; ++i) {
                g[i] = std::uint32_t(c % p);
                c /= p;
            }
            g[d] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

} // namespace

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kFieldOrderCap) throw std::invalid_argument("field order exceeds cap 2^31");
    }

    FiniteField F;
    F.p_ = p;
    F.k_ = k;
    F.q_ = std::uint32_t(q);

    // Lexicographically least monic irreducible of degree k, low-degree
    // coefficients compared first: rank digits are read most-significant
    // = lowest-degree coefficient. Deterministic, no external tables.
    if (k == 1) {
        F.modulus_ = {0}; // x
    } else {
        bool found = false;
        for (std::uint64_t rank = 0; rank < q && !found; ++rank) {
            poly f(k + 1, 0);
            std::uint64_t r = rank;
            for (std::uint32_t i = 0; i < k; ++i) { // c0 is the most significant digit of the rank
                std::uint64_t place = 1;
                for (std::uint32_t j = 0; j < k - 1 - i; ++j) place *= p;
                f[i] = std::uint32_t(r / place);
                r %= place;
            }
            f[k] = 1;
            if (is_irreducible(f, p, k)) {
                F.modulus_.assign(f.begin(), f.end() - 1);
                found = true;
            }
        }
        if (!found) throw std::logic_error("no irreducible polynomial found"); // unreachable
    }

    F.neg_table_.resize(F.q_);
    for (std::uint32_t a = 0; a < F.q_; ++a) {
        // negate digitwise
        std::uint32_t r = 0, mult = 1, x = a;
        for (std::uint32_t i = 0; i < k; ++i) {
            std::uint32_t d = x % p;
            r += ((p - d) % p) * mult;
            mult *= p;
            x /= p;
        }
        F.neg_table_[a] = r;
    }
    F.build_tables();
    return F;
}

std::uint32_t FiniteField::add_slow(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        r += ((a % p_) + (b % p_)) % p_ * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

std::uint32_t FiniteField::mul_slow(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return std::uint32_t((std::uint64_t(a) * b) % p_);
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    std::uint32_t x = a;
    for (std::uint32_t i = 0; i < k_; ++i, x /= p_) {
        std::uint32_t xi = x % p_;
        if (!xi) continue;
        std::uint32_t y = b;
        for (std::uint32_t j = 0; j < k_; ++j, y /= p_) prod[i + j] += std::uint64_t(xi) * (y % p_);
    }
    // reduce x^k = -modulus
    for (int d = int(2 * k_ - 2); d >= int(k_); --d) {
        std::uint64_t c = prod[std::size_t(d)] % p_;
        prod[std::size_t(d)] = 0;
        if (!c) continue;
        for (std::uint32_t j = 0; j < k_; ++j)
            prod[std::size_t(d) - k_ + j] += c * ((p_ - modulus_[j] % p_) % p_);
    }
    std::uint32_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        r += std::uint32_t(prod[i] % p_) * mult;
        mult *= p_;
    }
    return r;
}

void FiniteField::build_tables() {
    if (q_ > 4096) return; // slow path stays correct; only desk-scale fields sit in hot loops
    add_store_ = std::shared_ptr<std::uint32_t[]>(new std::uint32_t[std::size_t(q_) * q_]);
    mul_store_ = std::shared_ptr<std::uint32_t[]>(new std::uint32_t[std::size_t(q_) * q_]);
    for (std::uint32_t a = 0; a < q_; ++a)
        for (std::uint32_t b = 0; b < q_; ++b) {
            add_store_[std::size_t(a) * q_ + b] = add_slow(a, b);
            mul_store_[std::size_t(a) * q_ + b] = mul_slow(a, b);
        }
    add_ = add_store_.get();
    mul_ = mul_store_.get();
    inv_table_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a) {
        if (inv_table_[a]) continue;
        for (std::uint32_t b = 1; b < q_; ++b)
            if (mul(a, b) == 1) {
                inv_table_[a] = b;
                inv_table_[b] = a;
                break;
            }
    }
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t FiniteField::frobenius(std::uint32_t a, std::uint32_t e) const {
    // frobenius^k is the identity on GF(p^k)
    std::uint32_t r = a;
    for (std::uint32_t i = 0, n = e % k_; i < n; ++i) r = pow(r, p_);
    return r;
}

std::uint32_t FiniteField::element_order(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("order of zero");
    std::uint32_t n = q_ - 1, o = n;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        while (o % d == 0 && pow(a, o / d) == 1) o /= d;
        while (n % d == 0) n /= d;
    }
    if (n > 1 && o % n == 0 && pow(a, o / n) == 1) o /= n;
    return o;
}

std::vector<std::uint32_t> FiniteField::coeffs(std::uint32_t a) const {
    std::vector<std::uint32_t> c(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

std::uint32_t FiniteField::from_coeffs(const std::vector<std::uint32_t>& c) const {
    std::uint32_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        r += (i < c.size() ? c[i] % p_ : 0) * mult;
        mult *= p_;
    }
    return r;
}

} // namespace nilcov
