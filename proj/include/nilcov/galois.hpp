#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace nilcov {

// GF(p^k) with a fixed monic irreducible modulus: the lexicographically least
// one of degree k over GF(p), coefficients compared low-degree first. Elements
// are integer codes in [0, p^k): base-p digit strings, low degree first, so
// code equality is element equality. Immutable after construction; all
// operations are pure and safe to share across threads.
class FiniteField {
  public:
    static FiniteField make(std::uint32_t p, std::uint32_t k);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        return add_ ? add_[std::size_t(a) * q_ + b] : add_slow(a, b);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return mul_ ? mul_[std::size_t(a) * q_ + b] : mul_slow(a, b);
    }
    std::uint32_t neg(std::uint32_t a) const { return neg_table_[a]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t inv(std::uint32_t a) const; // a != 0
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    // x -> x^(p^e), the e-th power of the Frobenius automorphism.
    std::uint32_t frobenius(std::uint32_t a, std::uint32_t e) const;

    // Multiplicative order of a nonzero element.
    std::uint32_t element_order(std::uint32_t a) const;

    // Digit views (low degree first, length k).
    std::vector<std::uint32_t> coeffs(std::uint32_t a) const;
    std::uint32_t from_coeffs(const std::vector<std::uint32_t>& c) const;

  private:
    FiniteField() = default;
    std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
    void build_tables();

    std::uint32_t p_ = 0, k_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;   // k coefficients, low -> high
    std::vector<std::uint32_t> neg_table_; // q entries
    // Full tables when q is small enough for them to be cheap; hot paths
    // assume tabled fields.
    std::shared_ptr<std::uint32_t[]> add_store_, mul_store_;
    const std::uint32_t* add_ = nullptr;
    const std::uint32_t* mul_ = nullptr;
    std::vector<std::uint32_t> inv_table_;
};

bool is_prime(std::uint64_t n);

// Largest prime power cap accepted by make(); a desk-scale guard.
inline constexpr std::uint64_t kFieldOrderCap = (1ull << 31);

} // namespace nilcov
