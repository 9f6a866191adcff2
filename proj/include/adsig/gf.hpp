#pragma once

#include <cstdint>
#include <vector>

namespace adsig {

// Element of GF(p^k): length-k coefficient vector over GF(p), little-endian
// in the modulus polynomial's residue ring.
struct FieldElement {
    std::vector<unsigned> coeffs;

    bool operator==(const FieldElement&) const = default;
};

// GF(p^k) with a fixed monic irreducible modulus of degree k over GF(p).
// Scope is desk-scale fields (p^k <= 2^20); see make_field.
class Field {
public:
    Field(unsigned p, unsigned k, std::vector<unsigned> modulus);

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint64_t size() const { return size_; }
    // Little-endian coefficients of the modulus, length k+1, monic.
    const std::vector<unsigned>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;  // throws "division by zero" on 0

    bool is_zero(const FieldElement& a) const;

    // Element <-> dense index; index 0 is the zero element, index 1 is one.
    FieldElement element(std::uint64_t index) const;
    std::uint64_t index(const FieldElement& a) const;

    // All p^k elements in index order (0 first, 1 second).
    std::vector<FieldElement> enumerate() const;

private:
    unsigned p_;
    unsigned k_;
    std::vector<unsigned> modulus_;
    std::uint64_t size_;
};

// Constructs GF(p^k) with the lexicographically smallest monic irreducible
// modulus of degree k (coefficients compared from the constant term upward).
// Deterministic. Errors: "not prime", "bad degree"; p^k must not exceed 2^20.
Field make_field(unsigned p, unsigned k);

bool is_prime(unsigned n);

}  // namespace adsig
