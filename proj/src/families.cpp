#include "nilcov/families.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace nilcov {

const char* family_name(Family f) {
    switch (f) {
        case Family::SL2: return "SL2";
        case Family::PGL2: return "PGL2";
        case Family::PSL2: return "PSL2";
        case Family::SU3: return "SU3";
        case Family::PGU3: return "PGU3";
        case Family::PSU3: return "PSU3";
        case Family::Sz: return "Sz";
        case Family::Ree3Full: return "Ree3Full";
        case Family::ReeSylowP: return "ReeSylowP";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    for (Family f : {Family::SL2, Family::PGL2, Family::PSL2, Family::SU3, Family::PGU3,
                     Family::PSU3, Family::Sz, Family::Ree3Full, Family::ReeSylowP})
        if (s == family_name(f)) return f;
    if (s == "Ree") return Family::Ree3Full;
    throw std::invalid_argument("unknown family: " + s);
}

namespace {
std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint32_t q) {
    for (std::uint32_t p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p) continue;
        std::uint32_t a = 0, m = q;
        while (m % p == 0) {
            m /= p;
            ++a;
        }
        if (m != 1) break;
        return {p, a};
    }
    throw std::invalid_argument("q is not a prime power: " + std::to_string(q));
}
} // namespace

FamilySpec FamilySpec::make(Family f, std::uint32_t q) {
    FamilySpec s;
    s.family = f;
    s.q = q;
    auto [p, a] = factor_prime_power(q);
    s.p = p;
    s.a = a;
    switch (f) {
        case Family::SL2:
        case Family::PGL2:
        case Family::PSL2:
            s.delta = (q % 2) ? 2 : 1; // |Z(SL2)| = gcd(2, q-1)
            break;
        case Family::SU3:
        case Family::PGU3:
        case Family::PSU3:
            s.delta = ((q + 1) % 3 == 0) ? 3 : 1; // gcd(3, q+1)
            break;
        case Family::Sz:
            if (p != 2 || a % 2 == 0) throw std::invalid_argument("Sz requires q = 2^(2m+1)");
            s.m = (a - 1) / 2;
            break;
        case Family::Ree3Full:
            if (q != 3) throw std::invalid_argument("Ree3Full is the q = 3 group");
            s.m = 0;
            break;
        case Family::ReeSylowP:
            if (p != 3 || a % 2 == 0) throw std::invalid_argument("ReeSylowP requires q = 3^(2m+1)");
            s.m = (a - 1) / 2;
            break;
    }
    return s;
}

std::string FamilySpec::name() const {
    return std::string(family_name(family)) + "(" + std::to_string(q) + ")";
}

std::uint64_t FamilySpec::expected_order() const {
    std::uint64_t Q = q;
    switch (family) {
        case Family::SL2:
        case Family::PGL2: return Q * (Q * Q - 1);
        case Family::PSL2: return Q * (Q * Q - 1) / ((q % 2) ? 2 : 1);
        case Family::SU3:
        case Family::PGU3: return Q * Q * Q * (Q * Q - 1) * (Q * Q * Q + 1);
        case Family::PSU3: return Q * Q * Q * (Q * Q - 1) * (Q * Q * Q + 1) / delta;
        case Family::Sz: return Q * Q * (Q * Q + 1) * (Q - 1);
        case Family::Ree3Full: return 1512; // PSL2(8).3
        case Family::ReeSylowP: return Q * Q * Q;
    }
    return 0;
}

FamilySpec spec_from_name(const std::string& name) {
    auto lp = name.find('(');
    auto rp = name.find(')');
    if (lp == std::string::npos || rp == std::string::npos || rp < lp)
        throw std::invalid_argument("bad group name: " + name);
    Family f = family_from_string(name.substr(0, lp));
    std::uint32_t q = std::uint32_t(std::stoul(name.substr(lp + 1, rp - lp - 1)));
    return FamilySpec::make(f, q);
}

// ---------------------------------------------------------------------------
// Matrix ops
// ---------------------------------------------------------------------------

namespace {

// Dense n x n matrices over a tabled field, one byte per entry, optionally
// canonicalized by scaling the first nonzero entry (row-major) to 1.
class MatrixOps final : public GroupOps {
  public:
    MatrixOps(FiniteField F, std::uint32_t n, bool projectivize)
        : F_(std::move(F)), n_(n), proj_(projectivize) {
        if (F_.q() > 256) throw std::invalid_argument("matrix groups need q <= 256 for byte encodings");
        if (1 + n_ * n_ > Enc::cap) throw std::invalid_argument("matrix dimension too large");
    }

    Enc encode(const std::uint32_t* m) const {
        std::uint32_t buf[16];
        std::copy(m, m + n_ * n_, buf);
        if (proj_) canonicalize(buf);
        Enc e;
        e.len = std::uint8_t(1 + n_ * n_);
        e.b[0] = std::uint8_t(proj_ ? EncTag::proj_matrix : EncTag::matrix);
        for (std::uint32_t i = 0; i < n_ * n_; ++i) e.b[1 + i] = std::uint8_t(buf[i]);
        return e;
    }
    void decode(const Enc& e, std::uint32_t* m) const {
        for (std::uint32_t i = 0; i < n_ * n_; ++i) m[i] = e.b[1 + i];
    }

    Enc mul(const Enc& a, const Enc& b) const override {
        std::uint32_t A[16], B[16], C[16];
        decode(a, A);
        decode(b, B);
        matmul(A, B, C);
        return encode(C);
    }
    Enc inv(const Enc& a) const override {
        std::uint32_t A[16], B[16];
        decode(a, A);
        invert(A, B);
        return encode(B);
    }
    Enc identity() const override {
        std::uint32_t I[16] = {0};
        for (std::uint32_t i = 0; i < n_; ++i) I[i * n_ + i] = 1;
        return encode(I);
    }

    void matmul(const std::uint32_t* A, const std::uint32_t* B, std::uint32_t* C) const {
        for (std::uint32_t i = 0; i < n_; ++i)
            for (std::uint32_t j = 0; j < n_; ++j) {
                std::uint32_t s = 0;
                for (std::uint32_t t = 0; t < n_; ++t) s = F_.add(s, F_.mul(A[i * n_ + t], B[t * n_ + j]));
                C[i * n_ + j] = s;
            }
    }

    // Gauss-Jordan over the field; elements are invertible by construction.
    void invert(const std::uint32_t* A, std::uint32_t* out) const {
        std::uint32_t M[16], I[16] = {0};
        std::copy(A, A + n_ * n_, M);
        for (std::uint32_t i = 0; i < n_; ++i) I[i * n_ + i] = 1;
        for (std::uint32_t col = 0; col < n_; ++col) {
            std::uint32_t piv = col;
            while (piv < n_ && M[piv * n_ + col] == 0) ++piv;
            if (piv == n_) throw std::logic_error("singular matrix in group");
            if (piv != col)
                for (std::uint32_t j = 0; j < n_; ++j) {
                    std::swap(M[piv * n_ + j], M[col * n_ + j]);
                    std::swap(I[piv * n_ + j], I[col * n_ + j]);
                }
            std::uint32_t s = F_.inv(M[col * n_ + col]);
            for (std::uint32_t j = 0; j < n_; ++j) {
                M[col * n_ + j] = F_.mul(s, M[col * n_ + j]);
                I[col * n_ + j] = F_.mul(s, I[col * n_ + j]);
            }
            for (std::uint32_t r = 0; r < n_; ++r) {
                if (r == col || M[r * n_ + col] == 0) continue;
                std::uint32_t f = M[r * n_ + col];
                for (std::uint32_t j = 0; j < n_; ++j) {
                    M[r * n_ + j] = F_.sub(M[r * n_ + j], F_.mul(f, M[col * n_ + j]));
                    I[r * n_ + j] = F_.sub(I[r * n_ + j], F_.mul(f, I[col * n_ + j]));
                }
            }
        }
        std::copy(I, I + n_ * n_, out);
    }

    void canonicalize(std::uint32_t* m) const {
        for (std::uint32_t i = 0; i < n_ * n_; ++i)
            if (m[i]) {
                if (m[i] == 1) return;
                std::uint32_t s = F_.inv(m[i]);
                for (std::uint32_t j = i; j < n_ * n_; ++j) m[j] = F_.mul(s, m[j]);
                return;
            }
        throw std::logic_error("zero matrix");
    }

    const FiniteField& field() const { return F_; }
    std::uint32_t dim() const { return n_; }

  private:
    FiniteField F_;
    std::uint32_t n_;
    bool proj_;
};

// Elements (x, y, z) of the Ree Sylow 3-subgroup with the displayed product.
class ReeTripleOps final : public GroupOps {
  public:
    ReeTripleOps(FiniteField F, std::uint32_t m) : F_(std::move(F)), m_(m) {
        if (F_.q() > 256) throw std::invalid_argument("ReeSylowP needs q <= 256 byte encodings");
    }
    Enc encode(const ReeTriple& t) const {
        Enc e;
        e.len = 4;
        e.b[0] = std::uint8_t(EncTag::ree_triple);
        e.b[1] = std::uint8_t(t.x);
        e.b[2] = std::uint8_t(t.y);
        e.b[3] = std::uint8_t(t.z);
        return e;
    }
    ReeTriple decode(const Enc& e) const { return ReeTriple{e.b[1], e.b[2], e.b[3]}; }
    Enc mul(const Enc& a, const Enc& b) const override {
        return encode(ree_mul(F_, m_, decode(a), decode(b)));
    }
    Enc inv(const Enc& a) const override { return encode(ree_inv(F_, decode(a))); }
    Enc identity() const override { return encode(ReeTriple{0, 0, 0}); }
    const FiniteField& field() const { return F_; }

  private:
    FiniteField F_;
    std::uint32_t m_;
};

// Pairs (projectivized 2x2 matrix over GF(8), frobenius power e in {0,1,2})
// with (A, e)(B, f) = (A * sigma^e(B), e + f mod 3), sigma = entrywise squaring.
// This realizes PSL2(8).3, the q = 3 Ree group.
class PSL28ExtOps final : public GroupOps {
  public:
    PSL28ExtOps() : mat_(FiniteField::make(2, 3), 2, true) {}

    Enc encode(const std::uint32_t* m, std::uint32_t e) const {
        Enc enc = mat_.encode(m);
        enc.b[0] = std::uint8_t(EncTag::mat_frob);
        enc.b[enc.len] = std::uint8_t(e);
        enc.len += 1;
        return enc;
    }
    Enc mul(const Enc& a, const Enc& b) const override {
        std::uint32_t A[4], B[4], C[4];
        mat_.decode(a, A);
        mat_.decode(b, B);
        std::uint32_t e = a.b[5], f = b.b[5];
        for (int i = 0; i < 4; ++i) B[i] = mat_.field().frobenius(B[i], e);
        mat_.matmul(A, B, C);
        return encode(C, (e + f) % 3);
    }
    Enc inv(const Enc& a) const override {
        // (A, e)^-1 = (sigma^(3-e)(A^-1), 3-e)
        std::uint32_t A[4], B[4];
        mat_.decode(a, A);
        mat_.invert(A, B);
        std::uint32_t e = a.b[5], einv = (3 - e) % 3;
        for (int i = 0; i < 4; ++i) B[i] = mat_.field().frobenius(B[i], einv);
        return encode(B, einv);
    }
    Enc identity() const override {
        std::uint32_t I[4] = {1, 0, 0, 1};
        return encode(I, 0);
    }
    const MatrixOps& mat() const { return mat_; }

  private:
    MatrixOps mat_;
};

// matrix helpers for generator assembly
struct Mat {
    std::uint32_t v[16] = {0};
};

Mat identity_mat(std::uint32_t n) {
    Mat m;
    for (std::uint32_t i = 0; i < n; ++i) m.v[i * n + i] = 1;
    return m;
}

} // namespace

ReeTriple ree_mul(const FiniteField& F, std::uint32_t m, const ReeTriple& a, const ReeTriple& b) {
    // s = 3^(m+1); x^s is the (m+1)-st Frobenius power
    auto s = [&](std::uint32_t v) { return F.frobenius(v, m + 1); };
    std::uint32_t x1 = a.x, y1 = a.y, z1 = a.z, x2 = b.x, y2 = b.y, z2 = b.z;
    std::uint32_t x = F.add(x1, x2);
    std::uint32_t y = F.add(F.add(y1, y2), F.sub(F.mul(x1, s(x2)), F.mul(s(x1), x2)));
    std::uint32_t z = F.add(F.add(z1, z2), F.mul(y1, x2));
    z = F.add(z, F.mul(s(x1), F.mul(x2, x2)));
    z = F.add(z, F.mul(x1, F.mul(s(x2), x2)));
    z = F.sub(z, F.mul(F.mul(x1, x1), s(x2)));
    return ReeTriple{x, y, z};
}

ReeTriple ree_inv(const FiniteField& F, const ReeTriple& a) {
    return ReeTriple{F.neg(a.x), F.neg(a.y), F.sub(F.mul(a.x, a.y), a.z)};
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

namespace {

std::uint32_t primitive_element(const FiniteField& F) {
    for (std::uint32_t a = 1; a < F.q(); ++a)
        if (F.element_order(a) == F.q() - 1) return a;
    throw std::logic_error("no primitive element");
}

std::vector<Enc> sl2_generators(const MatrixOps& ops) {
    const FiniteField& F = ops.field();
    std::vector<Enc> gens;
    // unipotents over a field basis generate U and its opposite; together they
    // generate SL2
    std::uint32_t basis = 1;
    for (std::uint32_t i = 0; i < F.k(); ++i) {
        Mat u = identity_mat(2), l = identity_mat(2);
        u.v[1] = basis;
        l.v[2] = basis;
        gens.push_back(ops.encode(u.v));
        gens.push_back(ops.encode(l.v));
        basis = F.mul(basis, F.p()); // p^i as field codes: shift digits
    }
    return gens;
}

// The standard Suzuki generators: lower unitriangular S(a,b) with the twist
// theta: x -> x^(2^(m+1)), the diagonal torus, and the antidiagonal involution.
std::vector<Enc> sz_generators(const MatrixOps& ops, std::uint32_t m) {
    const FiniteField& F = ops.field();
    auto theta = [&](std::uint32_t x) { return F.frobenius(x, m + 1); };
    auto S = [&](std::uint32_t a, std::uint32_t b) {
        Mat s = identity_mat(4);
        std::uint32_t ath = theta(a);
        s.v[4] = a;
        s.v[8] = F.add(F.mul(a, ath), b); // a^(theta+1) + b
        s.v[9] = ath;
        s.v[12] = F.add(F.add(F.mul(F.mul(a, a), ath), F.mul(a, b)), theta(b)); // a^(theta+2)+ab+b^theta
        s.v[13] = b;
        s.v[14] = a;
        return ops.encode(s.v);
    };
    std::vector<Enc> gens{S(1, 0), S(0, 1)};
    if (F.q() > 2) {
        std::uint32_t lam = primitive_element(F);
        std::uint32_t l1 = F.pow(lam, 1 + (1u << m)), l2 = F.pow(lam, 1u << m);
        Mat t;
        t.v[0] = l1;
        t.v[5] = l2;
        t.v[10] = F.inv(l2);
        t.v[15] = F.inv(l1);
        gens.push_back(ops.encode(t.v));
    }
    Mat tau;
    tau.v[3] = tau.v[6] = tau.v[9] = tau.v[12] = 1;
    gens.push_back(ops.encode(tau.v));
    return gens;
}

// Unitary groups for the Hermitian form given by the antidiagonal identity J;
// unitarity is A^T J A^sigma = J with sigma the entrywise q-power map.
struct UnitaryContext {
    FiniteField F; // GF(q^2)
    std::uint32_t qa;

    std::uint32_t bar(std::uint32_t x) const { return F.frobenius(x, qa); } // x^q

    bool unitary(const std::uint32_t* A) const {
        // (A^T J A^sigma)[i][j] = sum_t A[t*3+i] * conj(A)[(2-t)*3+j]
        for (std::uint32_t i = 0; i < 3; ++i)
            for (std::uint32_t j = 0; j < 3; ++j) {
                std::uint32_t s = 0;
                for (std::uint32_t t = 0; t < 3; ++t)
                    s = F.add(s, F.mul(A[t * 3 + i], bar(A[(2 - t) * 3 + j])));
                std::uint32_t want = (i + j == 2) ? 1u : 0u;
                if (s != want) return false;
            }
        return true;
    }
    std::uint32_t det3(const std::uint32_t* A) const {
        std::uint32_t d = 0;
        d = F.add(d, F.mul(A[0], F.sub(F.mul(A[4], A[8]), F.mul(A[5], A[7]))));
        d = F.sub(d, F.mul(A[1], F.sub(F.mul(A[3], A[8]), F.mul(A[5], A[6]))));
        d = F.add(d, F.mul(A[2], F.sub(F.mul(A[3], A[7]), F.mul(A[4], A[6]))));
        return d;
    }
};

// All unitary unitriangular matrices (upper when upper=true): the Sylow
// p-subgroup U of SU3(q) and its opposite. Small scan over the three free
// entries; unitarity forces the usual gamma = -alpha^q and trace constraint.
std::vector<Enc> su3_unipotents(const MatrixOps& ops, const UnitaryContext& ctx, bool upper) {
    std::vector<Enc> out;
    const FiniteField& F = ctx.F;
    for (std::uint32_t al = 0; al < F.q(); ++al)
        for (std::uint32_t be = 0; be < F.q(); ++be)
            for (std::uint32_t ga = 0; ga < F.q(); ++ga) {
                Mat mres = identity_mat(3);
                if (upper) {
                    mres.v[1] = al;
                    mres.v[2] = be;
                    mres.v[5] = ga;
                } else {
                    mres.v[3] = al;
                    mres.v[6] = be;
                    mres.v[7] = ga;
                }
                if (ctx.unitary(mres.v)) out.push_back(ops.encode(mres.v));
            }
    return out;
}

std::vector<Enc> su3_generators(const MatrixOps& ops, const UnitaryContext& ctx, bool gu) {
    std::vector<Enc> gens = su3_unipotents(ops, ctx, true);
    auto lower = su3_unipotents(ops, ctx, false);
    gens.insert(gens.end(), lower.begin(), lower.end());
    const FiniteField& F = ctx.F;
    std::uint32_t th = primitive_element(F);
    std::uint32_t qq = 1;
    for (std::uint32_t i = 0; i < ctx.qa; ++i) qq *= F.p(); // q
    // diag(t, t^(q-1), t^-q) is unitary with det 1
    Mat d = identity_mat(3);
    d.v[0] = th;
    d.v[4] = F.pow(th, qq - 1);
    d.v[8] = F.inv(F.pow(th, qq));
    if (!ctx.unitary(d.v) || ctx.det3(d.v) != 1) throw std::logic_error("SU3 torus generator not unitary");
    gens.push_back(ops.encode(d.v));
    if (gu) {
        Mat e = identity_mat(3);
        e.v[0] = th;
        e.v[4] = 1;
        e.v[8] = F.inv(F.pow(th, qq));
        if (!ctx.unitary(e.v)) throw std::logic_error("GU3 torus generator not unitary");
        gens.push_back(ops.encode(e.v));
    }
    return gens;
}

std::vector<Enc> pgl2_extra(const MatrixOps& ops) {
    const FiniteField& F = ops.field();
    Mat d = identity_mat(2);
    d.v[0] = primitive_element(F);
    return {ops.encode(d.v)};
}

} // namespace

std::shared_ptr<const GroupOps> ops_for_spec(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::SL2:
            return std::make_shared<MatrixOps>(FiniteField::make(spec.p, spec.a), 2, false);
        case Family::PGL2:
        case Family::PSL2:
            return std::make_shared<MatrixOps>(FiniteField::make(spec.p, spec.a), 2, true);
        case Family::SU3:
            return std::make_shared<MatrixOps>(FiniteField::make(spec.p, 2 * spec.a), 3, false);
        case Family::PGU3:
        case Family::PSU3:
            return std::make_shared<MatrixOps>(FiniteField::make(spec.p, 2 * spec.a), 3, true);
        case Family::Sz:
            return std::make_shared<MatrixOps>(FiniteField::make(spec.p, spec.a), 4, false);
        case Family::Ree3Full: return std::make_shared<PSL28ExtOps>();
        case Family::ReeSylowP:
            return std::make_shared<ReeTripleOps>(FiniteField::make(3, spec.a), spec.m);
    }
    throw std::logic_error("unreachable");
}

std::shared_ptr<FiniteGroup> build_group(const FamilySpec& spec) {
    auto ops = ops_for_spec(spec);
    std::uint64_t order = spec.expected_order();
    if (order > global_config().closure_cap)
        throw std::invalid_argument(spec.name() + ": order " + std::to_string(order) +
                                    " exceeds enumeration cap");
    switch (spec.family) {
        case Family::SL2:
        case Family::PGL2:
        case Family::PSL2: {
            auto* mops = static_cast<const MatrixOps*>(ops.get());
            std::vector<Enc> gens = sl2_generators(*mops);
            if (spec.family == Family::PGL2)
                for (const Enc& e : pgl2_extra(*mops)) gens.push_back(e);
            return FiniteGroup::enumerate(ops, gens, order, spec.name());
        }
        case Family::SU3:
        case Family::PGU3:
        case Family::PSU3: {
            auto* mops = static_cast<const MatrixOps*>(ops.get());
            UnitaryContext ctx{FiniteField::make(spec.p, 2 * spec.a), spec.a};
            std::vector<Enc> gens = su3_generators(*mops, ctx, spec.family == Family::PGU3);
            return FiniteGroup::enumerate(ops, gens, order, spec.name());
        }
        case Family::Sz: {
            auto* mops = static_cast<const MatrixOps*>(ops.get());
            return FiniteGroup::enumerate(ops, sz_generators(*mops, spec.m), order, spec.name());
        }
        case Family::Ree3Full: {
            auto* eops = static_cast<const PSL28ExtOps*>(ops.get());
            std::vector<Enc> gens;
            // PGL2(8) part
            const MatrixOps& m2 = eops->mat();
            for (const Enc& e : sl2_generators(m2)) {
                Enc g = e;
                g.b[0] = std::uint8_t(EncTag::mat_frob);
                g.b[g.len] = 0;
                g.len += 1;
                gens.push_back(g);
            }
            // the field automorphism coset
            std::uint32_t I[4] = {1, 0, 0, 1};
            gens.push_back(eops->encode(I, 1));
            return FiniteGroup::enumerate(ops, gens, order, spec.name());
        }
        case Family::ReeSylowP: {
            auto* rops = static_cast<const ReeTripleOps*>(ops.get());
            std::vector<Enc> elems;
            elems.reserve(order);
            for (std::uint32_t x = 0; x < spec.q; ++x)
                for (std::uint32_t y = 0; y < spec.q; ++y)
                    for (std::uint32_t z = 0; z < spec.q; ++z)
                        elems.push_back(rops->encode(ReeTriple{x, y, z}));
            return FiniteGroup::from_elements(ops, std::move(elems), spec.name());
        }
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Maximal tori
// ---------------------------------------------------------------------------

std::vector<std::uint64_t> torus_orders(const FamilySpec& spec) {
    std::uint64_t q = spec.q;
    switch (spec.family) {
        case Family::SL2:
        case Family::PGL2: return {q - 1, q + 1};
        case Family::PSL2: {
            std::uint64_t d = (q % 2) ? 2 : 1;
            return {(q - 1) / d, (q + 1) / d};
        }
        case Family::SU3:
        case Family::PGU3: return {q * q - 1, (q + 1) * (q + 1), q * q - q + 1};
        case Family::PSU3:
            return {(q * q - 1) / spec.delta, (q + 1) * (q + 1) / spec.delta,
                    (q * q - q + 1) / spec.delta};
        case Family::Sz: {
            std::uint64_t rt = 1ull << (spec.m + 1); // sqrt(2q)
            return {q - 1, q + rt + 1, q - rt + 1};
        }
        default: throw std::invalid_argument("no torus recipe for family " + spec.name());
    }
}

std::vector<TorusClass> maximal_tori(const FiniteGroup& g, const FamilySpec& spec) {
    std::vector<std::uint64_t> orders = torus_orders(spec);
    const auto& ord = g.element_orders();
    Subgroup Z = g.center();

    std::vector<std::uint32_t> conjgens;
    for (std::uint32_t c : g.generator_indices()) {
        conjgens.push_back(c);
        conjgens.push_back(g.inv(c));
    }

    std::vector<TorusClass> out;
    for (std::uint64_t m : orders) {
        TorusClass tc;
        tc.order = m;
        if (m <= Z.size()) {
            // the class collapses onto the centre at this q
            tc.degenerate_central = true;
            tc.tori.push_back(Z);
            out.push_back(std::move(tc));
            continue;
        }
        // representative: regular semisimple surrogate, i.e. an element of
        // order coprime to p whose centralizer is abelian of the torus order
        std::uint32_t rep = g.size();
        for (std::uint32_t x = 0; x < g.size() && rep == g.size(); ++x) {
            if (x == g.identity() || ord[x] % spec.p == 0) continue;
            if (ord[x] == 1 || g.centralizer_order(x) != m) continue;
            Subgroup C = g.centralizer(x);
            bool abelian = true;
            for (std::size_t i = 0; i < C.size() && abelian; ++i)
                for (std::size_t j = i + 1; j < C.size(); ++j)
                    if (g.mul(C.members[i], C.members[j]) != g.mul(C.members[j], C.members[i])) {
                        abelian = false;
                        break;
                    }
            if (abelian) rep = x;
        }
        if (rep == g.size())
            throw std::logic_error(spec.name() + ": no regular semisimple element for torus order " +
                                   std::to_string(m));
        Subgroup T = g.centralizer(rep);

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
        std::vector<std::vector<std::uint32_t>> queue{T.members};
        seen.insert(T.members);
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
        for (const auto& v : seen) {
            Subgroup s;
            s.parent = &g;
            s.members = v;
            tc.tori.push_back(std::move(s));
        }
        std::sort(tc.tori.begin(), tc.tori.end(),
                  [](const Subgroup& x, const Subgroup& y) { return x.members < y.members; });
        out.push_back(std::move(tc));
    }
    return out;
}

// ---------------------------------------------------------------------------
// NCGT1 file I/O
// ---------------------------------------------------------------------------

void dump_group_file(const FiniteGroup& g, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for write: " + path);
    g.dump(os);
}

std::shared_ptr<FiniteGroup> load_group_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open: " + path);
    char magic[6];
    is.read(magic, 6);
    if (std::string(magic, 5) != "NCGT1") throw std::runtime_error("bad magic in " + path);
    auto r32 = [&]() {
        unsigned char b[4];
        is.read(reinterpret_cast<char*>(b), 4);
        return std::uint32_t(b[0]) | (std::uint32_t(b[1]) << 8) | (std::uint32_t(b[2]) << 16) |
               (std::uint32_t(b[3]) << 24);
    };
    std::uint32_t version = r32();
    if (version != 1) throw std::runtime_error("unsupported NCGT1 version");
    std::uint32_t namelen = r32();
    std::string name(namelen, '\0');
    is.read(name.data(), namelen);
    std::uint32_t n = r32();
    std::vector<Enc> elems(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        int len = is.get();
        if (len < 0 || std::size_t(len) > Enc::cap) throw std::runtime_error("corrupt element record");
        elems[i].len = std::uint8_t(len);
        is.read(reinterpret_cast<char*>(elems[i].b.data()), len);
    }
    if (!is) throw std::runtime_error("truncated NCGT1 file");
    FamilySpec spec = spec_from_name(name);
    auto g = FiniteGroup::from_elements(ops_for_spec(spec), std::move(elems), name);
    if (g->size() != spec.expected_order())
        throw std::runtime_error("loaded table has wrong order for " + name);
    return g;
}

} // namespace nilcov
