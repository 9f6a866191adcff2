#include "adsig/gf.hpp"

#include <stdexcept>

namespace adsig {

namespace {

// Dense polynomials over GF(p), little-endian, possibly with high zero
// coefficients; used only for modulus search and element arithmetic.
using PolyP = std::vector<unsigned>;

int poly_degree(const PolyP& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return static_cast<int>(i);
    return -1;
}

PolyP poly_mul(const PolyP& a, const PolyP& b, unsigned p) {
    PolyP out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * static_cast<std::uint64_t>(b[j])) % p;
    }
    return out;
}

unsigned mod_inverse(unsigned a, unsigned p) {
    // Fermat: a^(p-2) mod p.
    std::uint64_t result = 1, base = a % p;
    for (unsigned e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<unsigned>(result);
}

// In-place remainder of a modulo monic divisor m.
void poly_mod(PolyP& a, const PolyP& m, unsigned p) {
    int dm = poly_degree(m);
    for (int i = poly_degree(a); i >= dm; --i) {
        unsigned c = a[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) {
            auto idx = static_cast<std::size_t>(i - dm + j);
            std::uint64_t sub = static_cast<std::uint64_t>(c) * m[static_cast<std::size_t>(j)] % p;
            a[idx] = static_cast<unsigned>((a[idx] + p - sub) % p);
        }
    }
}

PolyP poly_rem(PolyP a, PolyP b, unsigned p) {
    // Make b monic, then reduce.
    int db = poly_degree(b);
    unsigned lead_inv = mod_inverse(b[static_cast<std::size_t>(db)], p);
    for (auto& c : b) c = static_cast<unsigned>(static_cast<std::uint64_t>(c) * lead_inv % p);
    b.resize(static_cast<std::size_t>(db) + 1);
    poly_mod(a, b, p);
    a.resize(static_cast<std::size_t>(db));
    if (a.empty()) a.push_back(0);
    return a;
}

bool poly_is_zero(const PolyP& a) { return poly_degree(a) < 0; }

// Exhaustive trial division by all monic polynomials of degree 1..k/2.
bool is_irreducible(const PolyP& candidate, unsigned k, unsigned p) {
    for (unsigned d = 1; 2 * d <= k; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PolyP divisor(d + 1, 0);
            std::uint64_t rest = idx;
            for (unsigned i = 0; i < d; ++i) {
                divisor[i] = static_cast<unsigned>(rest % p);
                rest /= p;
            }
            divisor[d] = 1;
            if (poly_is_zero(poly_rem(candidate, divisor, p))) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field::Field(unsigned p, unsigned k, std::vector<unsigned> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    size_ = 1;
    for (unsigned i = 0; i < k_; ++i) size_ *= p_;
}

FieldElement Field::zero() const { return {std::vector<unsigned>(k_, 0)}; }

FieldElement Field::one() const {
    auto e = zero();
    e.coeffs[0] = 1;
    return e;
}

bool Field::is_zero(const FieldElement& a) const {
    for (unsigned c : a.coeffs)
        if (c != 0) return false;
    return true;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement out = zero();
    for (unsigned i = 0; i < k_; ++i) out.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
    return out;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement out = zero();
    for (unsigned i = 0; i < k_; ++i) out.coeffs[i] = (a.coeffs[i] + p_ - b.coeffs[i]) % p_;
    return out;
}

FieldElement Field::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    PolyP prod = poly_mul(a.coeffs, b.coeffs, p_);
    poly_mod(prod, modulus_, p_);
    FieldElement out = zero();
    for (unsigned i = 0; i < k_ && i < prod.size(); ++i) out.coeffs[i] = prod[i];
    return out;
}

FieldElement Field::inv(const FieldElement& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero");
    // Extended Euclid on (modulus, a) over GF(p)[x].
    PolyP r0 = modulus_, r1 = a.coeffs;
    PolyP t0 = {0}, t1 = {1};
    while (!poly_is_zero(r1)) {
        int d0 = poly_degree(r0), d1 = poly_degree(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(t0, t1);
            continue;
        }
        // One long-division step: r0 -= q * r1 with q = lead(r0)/lead(r1) x^(d0-d1).
        unsigned q = static_cast<unsigned>(
            static_cast<std::uint64_t>(r0[static_cast<std::size_t>(d0)]) *
            mod_inverse(r1[static_cast<std::size_t>(d1)], p_) % p_);
        int shift = d0 - d1;
        auto subtract_scaled = [&](PolyP& dst, const PolyP& src) {
            if (dst.size() < src.size() + static_cast<std::size_t>(shift))
                dst.resize(src.size() + static_cast<std::size_t>(shift), 0);
            for (std::size_t i = 0; i < src.size(); ++i) {
                std::uint64_t sub = static_cast<std::uint64_t>(q) * src[i] % p_;
                auto idx = i + static_cast<std::size_t>(shift);
                dst[idx] = static_cast<unsigned>((dst[idx] + p_ - sub) % p_);
            }
        };
        subtract_scaled(r0, r1);
        subtract_scaled(t0, t1);
        if (poly_degree(r0) < poly_degree(r1)) {
            std::swap(r0, r1);
            std::swap(t0, t1);
        }
    }
    // r0 = gcd is a nonzero constant; scale t0 by its inverse.
    unsigned scale = mod_inverse(r0[0], p_);
    PolyP t = t0;
    poly_mod(t, modulus_, p_);
    FieldElement out = zero();
    for (unsigned i = 0; i < k_ && i < t.size(); ++i)
        out.coeffs[i] = static_cast<unsigned>(static_cast<std::uint64_t>(t[i]) * scale % p_);
    return out;
}

FieldElement Field::element(std::uint64_t index) const {
    if (index >= size_) throw std::out_of_range("element index out of range");
    FieldElement out = zero();
    for (unsigned i = 0; i < k_; ++i) {
        out.coeffs[i] = static_cast<unsigned>(index % p_);
        index /= p_;
    }
    return out;
}

std::uint64_t Field::index(const FieldElement& a) const {
    std::uint64_t idx = 0;
    for (unsigned i = k_; i-- > 0;) idx = idx * p_ + a.coeffs[i];
    return idx;
}

std::vector<FieldElement> Field::enumerate() const {
    std::vector<FieldElement> out;
    out.reserve(size_);
    for (std::uint64_t i = 0; i < size_; ++i) out.push_back(element(i));
    return out;
}

Field make_field(unsigned p, unsigned k) {
    if (!is_prime(p)) throw std::invalid_argument("not prime");
    if (k < 1) throw std::invalid_argument("bad degree");
    std::uint64_t size = 1;
    for (unsigned i = 0; i < k; ++i) {
        size *= p;
        if (size > (1u << 20)) throw std::invalid_argument("field too large (> 2^20 elements)");
    }
    if (k == 1) return Field(p, 1, {0, 1});

    // Candidates x^k + c_{k-1} x^{k-1} + ... + c_0 ordered lexicographically
    // from the constant term upward; the first irreducible one wins.
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        PolyP candidate(k + 1, 0);
        candidate[k] = 1;
        std::uint64_t rest = code;
        for (unsigned i = k; i-- > 0;) {  // c_{k-1} varies fastest
            candidate[i] = static_cast<unsigned>(rest % p);
            rest /= p;
        }
        if (is_irreducible(candidate, k, p)) return Field(p, k, std::move(candidate));
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace adsig
