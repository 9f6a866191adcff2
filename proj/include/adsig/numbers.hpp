#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace adsig {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer, Rat an arbitrary-precision rational kept in canonical form
// (reduced, positive denominator). Floating point is never used.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("division by zero");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) {
    return make_rat(Int(num), Int(den));
}

// gmpxx has no long long constructors; desk-scale values fit in long.
inline Int int_from(long long v) { return Int(static_cast<long>(v)); }
inline Rat rat_from(long long v) { return Rat(static_cast<long>(v)); }

// Parses "n" or "n/d" with optional sign, canonicalizing the result.
inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat out(1);
    Rat b = base;
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

// -1, 0 or +1.
inline int sign_of(const Int& z) { return mpz_sgn(z.get_mpz_t()); }
inline int sign_of(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

}  // namespace adsig
